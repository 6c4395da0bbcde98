#pragma once

// Subcommand pipelines shared by the C API and the tests. Each returns a
// report holding a JSON document (keys sorted, so output is byte-stable) and
// a human-readable rendering.

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

namespace comtrans {

struct RunReport {
  std::string subcommand;
  nlohmann::json doc;  // schema 1, without timing
  std::string text;
  double seconds = 0;
  std::map<std::string, std::string> attachments;  // "dump", "presentation"

  std::string json(bool with_timing) const;
};

RunReport run_ct_groebner();
// method: "auto" (enumerate up to weight 3 plus structural), "enumerate", "structural".
RunReport run_ct_dim(std::size_t w, const std::string& method);
// ops: com, tra, both, wac, qdef2, assoc.
RunReport run_identities(std::size_t degree, const std::string& ops);
// ops: com, tra, mixed; partition may be empty for all.
RunReport run_degree7(const std::string& ops, const std::string& partition);
// kind: C, T, CT. If `presentation` is given, its polynomials replace the
// generated relations. `cap` bounds the degree of Groebner completion.
RunReport run_envelope(const std::string& kind, std::size_t max_degree,
                       const std::optional<std::string>& presentation, std::size_t cap = 12);
// op: rank, rcf, kernel (integer kernel, Hermite form, LLL).
RunReport run_matrix(const std::string& op, const std::string& dump_text);

}  // namespace comtrans
