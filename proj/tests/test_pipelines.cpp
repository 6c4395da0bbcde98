#include "comtrans/errors.hpp"
#include "comtrans/pipelines.hpp"
#include "doctest.h"

using namespace comtrans;

TEST_CASE("reports follow the JSON schema") {
  const RunReport r = run_ct_dim(3, "auto");
  CHECK(r.doc["schema"] == 1);
  CHECK(r.doc["subcommand"] == "ct-dim");
  CHECK(r.doc["results"]["enumerate"] == 35000);
  CHECK(r.doc["results"]["agree"] == true);
  CHECK(r.json(false).find("timing") == std::string::npos);
  CHECK(r.json(true).find("\"timing\"") != std::string::npos);
}

TEST_CASE("JSON output is byte-stable") {
  CHECK(run_ct_groebner().json(false) == run_ct_groebner().json(false));
  CHECK(run_envelope("C", 12, std::nullopt).json(false) == run_envelope("C", 12, std::nullopt).json(false));
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(run_identities(4, "com"), UsageError);
  CHECK_THROWS_AS(run_identities(3, "nope"), UsageError);
  CHECK_THROWS_AS(run_degree7("com", "52x"), UsageError);
  CHECK_THROWS_AS(run_degree7("com", "6"), UsageError);
  CHECK_THROWS_AS(run_degree7("both", ""), UsageError);
  CHECK_THROWS_AS(run_ct_dim(2, "guess"), UsageError);
  CHECK_THROWS_AS(run_envelope("X", 6, std::nullopt), UsageError);
  CHECK_THROWS_AS(run_matrix("det", "1 1\n1\n"), UsageError);
}

TEST_CASE("matrix subcommand") {
  const RunReport r = run_matrix("rank", "2 3\n1 2 3\n2 4 6\n");
  CHECK(r.doc["results"]["rank"] == 1);
  const RunReport k = run_matrix("kernel", "1 3\n1 1 1\n");
  CHECK(k.doc["results"]["nullity"] == 2);
  CHECK(k.attachments.count("dump") == 1);
}
