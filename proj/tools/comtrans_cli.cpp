// Command-line front end. Talks to the library through comtrans.h only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "comtrans.h"

namespace {

struct Common {
  std::string format = "text";
  bool timing = false;
  bool dump_matrix = false;
};

void add_common(CLI::App* sub, Common& c, bool dump) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--timing", c.timing, "Report wall-clock time");
  if (dump) sub->add_flag("--dump-matrix,--dump", c.dump_matrix, "Print the matrices in dump format instead");
}

bool read_file(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream s;
  s << in.rdbuf();
  out = s.str();
  return true;
}

int fail(int code, const std::string& msg) {
  std::fprintf(stderr, "comtrans: %s\n", msg.c_str());
  return code;
}

// Prints the report and returns the exit code.
int emit(comtrans_status st, comtrans_report* r, const Common& c, const std::string& save = {}) {
  if (st != COMTRANS_OK) return fail(st, comtrans_last_error());
  int code = 0;
  if (!save.empty()) {
    const char* p = comtrans_report_attachment(r, "presentation");
    std::ofstream out(save);
    if (!p || !out || !(out << p)) code = fail(COMTRANS_USAGE, "cannot write " + save);
  }
  if (c.dump_matrix) {
    const char* d = comtrans_report_attachment(r, "dump");
    if (d)
      std::fputs(d, stdout);
    else
      code = fail(COMTRANS_USAGE, "this subcommand has no matrix to dump");
  } else if (c.format == "json") {
    std::fputs(comtrans_report_json(r, c.timing), stdout);
  } else {
    std::fputs(comtrans_report_text(r), stdout);
    if (c.timing) std::printf("time: %.3f s\n", comtrans_report_seconds(r));
  }
  comtrans_report_free(r);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comtrans algebras: identities, operad rewriting and enveloping algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(comtrans_version()));

  Common common;

  auto* gb = app.add_subcommand("ct-groebner", "Groebner basis of the comtrans operad in degree 3");
  add_common(gb, common, true);

  std::size_t weight = 0;
  std::string method = "auto";
  auto* dim = app.add_subcommand("ct-dim", "Count normal forms of weight w and compare with the conjecture");
  dim->add_option("w", weight, "Weight (number of operations)")->required();
  dim->add_option("--method", method, "Counting method")->check(CLI::IsMember({"auto", "enumerate", "structural"}));
  add_common(dim, common, false);

  std::size_t degree = 3;
  std::string ops;
  auto* ids = app.add_subcommand("identities", "Polynomial identities of degree 3 or 5");
  ids->add_option("--degree", degree, "Degree (3 or 5)");
  ids->add_option("--ops", ops, "com, tra, both, wac, qdef2 or assoc")->required();
  add_common(ids, common, true);

  std::string d7ops, partition;
  auto* d7 = app.add_subcommand("degree7", "Multiplicity tables in degree 7");
  d7->add_option("--ops", d7ops, "com, tra or mixed")->required();
  d7->add_option("--partition", partition, "A single partition of 7, e.g. 52 or 31^4");
  add_common(d7, common, false);

  std::string kind, load, save;
  std::size_t max_degree = 12, cap = 12;
  auto* env = app.add_subcommand("envelope", "Universal associative envelopes of the 2x2 matrix triple systems");
  env->add_option("kind", kind, "C, T or CT")->required();
  env->add_option("--max-degree", max_degree, "Largest degree of basis words");
  env->add_option("--cap", cap, "Degree cap for Groebner completion");
  env->add_option("--load", load, "Read the generating polynomials from a file");
  env->add_option("--save", save, "Write the Groebner basis to a file");
  add_common(env, common, false);

  std::string mop, mfile;
  auto* mat = app.add_subcommand("matrix", "Exact rank, RCF or integer kernel of a dumped matrix");
  mat->add_option("op", mop, "rank, rcf or kernel")->required();
  mat->add_option("file", mfile, "Matrix in dump format ('-' for stdin)")->required();
  add_common(mat, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return COMTRANS_USAGE;
  }

  comtrans_report* r = nullptr;
  comtrans_status st = COMTRANS_USAGE;
  if (*gb) {
    st = comtrans_run_ct_groebner(&r);
  } else if (*dim) {
    st = comtrans_run_ct_dim(weight, method.c_str(), &r);
  } else if (*ids) {
    st = comtrans_run_identities(degree, ops.c_str(), &r);
  } else if (*d7) {
    st = comtrans_run_degree7(d7ops.c_str(), partition.c_str(), &r);
  } else if (*env) {
    std::string text;
    if (!load.empty() && !read_file(load, text)) return fail(COMTRANS_USAGE, "cannot read " + load);
    if (cap == 0) return fail(COMTRANS_USAGE, "--cap must be positive");
    st = comtrans_run_envelope(kind.c_str(), max_degree, load.empty() ? nullptr : text.c_str(), cap, &r);
    return emit(st, r, common, save);
  } else if (*mat) {
    std::string text;
    if (!read_file(mfile, text)) return fail(COMTRANS_USAGE, "cannot read " + mfile);
    st = comtrans_run_matrix(mop.c_str(), text.c_str(), &r);
  }
  return emit(st, r, common);
}
