#include "comtrans.h"

#include <memory>
#include <string>

#include "comtrans/errors.hpp"
#include "comtrans/exact_linalg.hpp"
#include "comtrans/pipelines.hpp"

struct comtrans_report {
  comtrans::RunReport report;
  std::string json_cache;
};

struct comtrans_matrix {
  comtrans::ExactMatrix m;
  std::string dump_cache;
};

namespace {

thread_local std::string last_error;

template <class F>
comtrans_status guard(F&& f) {
  last_error.clear();
  try {
    f();
    return COMTRANS_OK;
  } catch (const comtrans::UsageError& e) {
    last_error = e.what();
    return COMTRANS_USAGE;
  } catch (const comtrans::CapExceeded& e) {
    last_error = e.what();
    return COMTRANS_CAP_EXCEEDED;
  } catch (const comtrans::ResourceError& e) {
    last_error = e.what();
    return COMTRANS_RESOURCE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return COMTRANS_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return COMTRANS_INTERNAL;
  }
}

std::string str(const char* s) { return s ? s : ""; }

template <class F>
comtrans_status run(comtrans_report** out, F&& f) {
  if (!out) {
    last_error = "null output pointer";
    return COMTRANS_USAGE;
  }
  *out = nullptr;
  return guard([&] { *out = new comtrans_report{f(), {}}; });
}

}  // namespace

extern "C" {

const char* comtrans_version(void) { return "1.0.0"; }
const char* comtrans_last_error(void) { return last_error.c_str(); }

comtrans_status comtrans_run_ct_groebner(comtrans_report** out) {
  return run(out, [] { return comtrans::run_ct_groebner(); });
}

comtrans_status comtrans_run_ct_dim(size_t weight, const char* method, comtrans_report** out) {
  return run(out, [&] { return comtrans::run_ct_dim(weight, method ? method : "auto"); });
}

comtrans_status comtrans_run_identities(size_t degree, const char* ops, comtrans_report** out) {
  return run(out, [&] { return comtrans::run_identities(degree, str(ops)); });
}

comtrans_status comtrans_run_degree7(const char* ops, const char* partition, comtrans_report** out) {
  return run(out, [&] { return comtrans::run_degree7(str(ops), str(partition)); });
}

comtrans_status comtrans_run_envelope(const char* kind, size_t max_degree, const char* presentation, size_t cap,
                                      comtrans_report** out) {
  return run(out, [&] {
    std::optional<std::string> p;
    if (presentation) p = presentation;
    return comtrans::run_envelope(str(kind), max_degree, p, cap ? cap : 12);
  });
}

comtrans_status comtrans_run_matrix(const char* op, const char* dump, comtrans_report** out) {
  return run(out, [&] { return comtrans::run_matrix(str(op), str(dump)); });
}

const char* comtrans_report_json(comtrans_report* r, int with_timing) {
  if (!r) return "";
  r->json_cache = r->report.json(with_timing != 0);
  return r->json_cache.c_str();
}

const char* comtrans_report_text(const comtrans_report* r) { return r ? r->report.text.c_str() : ""; }
double comtrans_report_seconds(const comtrans_report* r) { return r ? r->report.seconds : 0.0; }

const char* comtrans_report_attachment(const comtrans_report* r, const char* name) {
  if (!r || !name) return nullptr;
  auto it = r->report.attachments.find(name);
  return it == r->report.attachments.end() ? nullptr : it->second.c_str();
}

void comtrans_report_free(comtrans_report* r) { delete r; }

comtrans_status comtrans_matrix_parse(const char* dump, comtrans_matrix** out) {
  if (!out) return COMTRANS_USAGE;
  *out = nullptr;
  return guard([&] { *out = new comtrans_matrix{comtrans::parse_dump(str(dump)), {}}; });
}

size_t comtrans_matrix_rows(const comtrans_matrix* m) { return m ? m->m.rows() : 0; }
size_t comtrans_matrix_cols(const comtrans_matrix* m) { return m ? m->m.cols() : 0; }

comtrans_status comtrans_matrix_rank(const comtrans_matrix* m, size_t* rank) {
  if (!m || !rank) return COMTRANS_USAGE;
  return guard([&] { *rank = comtrans::rank(m->m); });
}

comtrans_status comtrans_matrix_rcf(const comtrans_matrix* m, comtrans_matrix** out) {
  if (!m || !out) return COMTRANS_USAGE;
  *out = nullptr;
  return guard([&] { *out = new comtrans_matrix{comtrans::row_basis(m->m), {}}; });
}

const char* comtrans_matrix_dump(comtrans_matrix* m) {
  if (!m) return "";
  m->dump_cache = comtrans::dump(m->m);
  return m->dump_cache.c_str();
}

void comtrans_matrix_free(comtrans_matrix* m) { delete m; }

}  // extern "C"
