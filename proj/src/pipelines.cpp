#include "comtrans/pipelines.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "comtrans/comtrans_rewrite.hpp"
#include "comtrans/identity_catalog.hpp"
#include "comtrans/identity_search.hpp"
#include "comtrans/modular.hpp"
#include "comtrans/nc_envelope.hpp"

namespace comtrans {

using nlohmann::json;

std::string RunReport::json(bool with_timing) const {
  nlohmann::json d = doc;
  if (with_timing) d["timing"] = {{"seconds", seconds}};
  return d.dump(2) + "\n";
}

namespace {

json number(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(r);
  }
  return rows;
}

json lengths_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(number(x));
  return a;
}

std::string pretty(const ExactMatrix& m) {
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w = std::max(w, m(i, j) == 0 ? 1 : m(i, j).get_str().size());
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? " " : "  ") << std::setw(static_cast<int>(w)) << (m(i, j) == 0 ? "." : m(i, j).get_str());
    out << "\n";
  }
  return out.str();
}

RunReport start(const std::string& name, json params, const std::string& arithmetic) {
  RunReport r;
  r.subcommand = name;
  r.doc = {{"schema", 1},
           {"subcommand", name},
           {"params", std::move(params)},
           {"arithmetic", arithmetic},
           {"tables", json::array()},
           {"identities", json::array()},
           {"results", json::object()}};
  return r;
}

template <class F>
RunReport timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r = f();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

OpList ops_from_tag(const std::string& tag) {
  if (tag == "both") return {OpId::Commutator, OpId::Translator};
  return {operation_by_tag(tag).id};
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// Exact equality of the S_n-module spans of two identity lists.
bool same_module(const std::vector<MultilinearPoly>& a, const std::vector<MultilinearPoly>& b, std::size_t w,
                 const OpList& ops) {
  const MonomialIndex idx(w, ops);
  IntegerEchelon ea(idx.size()), eb(idx.size());
  for (const auto& f : a)
    for (const auto& row : orbit_rows(f, idx)) ea.add_row(std::span<const Integer>(row));
  for (const auto& f : b)
    for (const auto& row : orbit_rows(f, idx)) eb.add_row(std::span<const Integer>(row));
  if (ea.rank() != eb.rank()) return false;
  for (const auto& f : b)
    for (const auto& row : orbit_rows(f, idx))
      if (!ea.contains(row)) return false;
  return true;
}

std::string signature_string(const std::vector<ExactMatrix>& sig) {
  std::string out;
  for (std::size_t k = 0; k < sig.size(); ++k) {
    if (k) out += ", ";
    out += "[";
    for (std::size_t i = 0; i < sig[k].rows(); ++i) {
      if (i) out += "; ";
      for (std::size_t j = 0; j < sig[k].cols(); ++j) out += (j ? " " : "") + sig[k](i, j).get_str();
    }
    out += "]";
  }
  return out;
}

json signature_json(const std::vector<ExactMatrix>& sig) {
  json a = json::array();
  for (const auto& m : sig) a.push_back(matrix_json(m));
  return a;
}

void identities_degree3(RunReport& r, const OpList& ops) {
  const KernelReport k = kernel_pipeline(1, ops);
  const MonomialIndex idx(1, ops);
  const auto gens = minimal_module_generators(k);
  json& res = r.doc["results"];
  res["expansion_rows"] = k.rows;
  res["expansion_cols"] = k.cols;
  res["expansion_rank"] = k.expansion_rank;
  res["nullity"] = k.nullity;
  res["lll_applied"] = k.lll_applied;
  res["squared_lengths"] = lengths_json(k.lengths);
  res["generator_rows"] = gens;
  std::ostringstream t;
  t << "expansion matrix " << k.rows << " x " << k.cols << ", rank " << k.expansion_rank << ", nullity "
    << k.nullity << "\n";
  t << "reduced kernel squared lengths:";
  for (const auto& l : k.lengths) t << " " << l;
  t << "\n";
  std::vector<MultilinearPoly> gen_polys;
  for (std::size_t i : gens) {
    gen_polys.push_back(idx.poly(k.reduced.vectors[i]));
    r.doc["identities"].push_back(to_string(gen_polys.back()));
    t << "generator (row " << i + 1 << "): " << to_string(gen_polys.back()) << "\n";
  }
  res["generator_count"] = gens.size();
  if (ops.size() == 2) {
    const bool same = same_module(gen_polys, {relation_alternating(), relation_jacobi(), relation_comtrans()}, 1, ops);
    res["generators_span_defining_relations"] = same;
    t << "generators span the same module as the defining relations: " << yes(same) << "\n";
  } else {
    const auto sig = operation_signature(operation(ops[0]).word_element());
    const auto com = operation_signature(commutator().word_element());
    res["signature"] = signature_json(sig);
    res["equivalent_to_commutator"] = sig == com;
    t << "signature: " << signature_string(sig) << "\n";
    t << "equivalent to the commutator: " << yes(sig == com) << "\n";
  }
  r.attachments["dump"] = dump(expansion_matrix(1, ops)) + dump(k.reduced.as_matrix());
  r.text = t.str();
}

void identities_degree5_single(RunReport& r, OpId op) {
  const KernelReport k = kernel_pipeline(2, {op});
  const MonomialIndex idx(2, {op});
  json& res = r.doc["results"];
  std::ostringstream t;
  res["expansion_rows"] = k.rows;
  res["expansion_cols"] = k.cols;
  res["expansion_rank"] = k.expansion_rank;
  res["nullity"] = k.nullity;
  res["lll_applied"] = k.lll_applied;
  Integer maxlen = 0;
  for (const auto& l : k.lengths) maxlen = std::max(maxlen, l);
  res["max_squared_length"] = number(maxlen);
  t << "expansion matrix " << k.rows << " x " << k.cols << ", rank " << k.expansion_rank << ", nullity "
    << k.nullity << "\n";
  t << "max squared length after reduction: " << maxlen << "\n";
  std::optional<MultilinearPoly> lower, known;
  if (op == OpId::Commutator) {
    lower = relation_alternating();
    known = identity_commutator5();
  } else if (op == OpId::Translator) {
    lower = relation_jacobi();
    known = identity_translator5();
  }
  if (!lower) {
    r.text = t.str();
    return;
  }
  const NewGeneratorReport g = find_new_generators(k, {*lower});
  res["consequences"] = g.consequences;
  res["consequence_rows"] = g.consequence_rows;
  res["consequence_rank"] = g.consequence_rank;
  res["new_module_dimension"] = k.nullity - g.consequence_rank;
  res["new_generator_rows"] = g.new_rows;
  res["final_rank"] = g.final_rank;
  for (const auto& f : g.new_identities) r.doc["identities"].push_back(to_string(f));
  const bool known_ok = verify_identity(*known);
  const std::size_t closed = consequence_rank(2, {op}, {*lower}, {*known});
  res["known_identity"] = to_string(*known);
  res["known_identity_verified"] = known_ok;
  res["known_identity_closes_gap"] = closed == k.nullity;
  t << g.consequences << " consequences, " << g.consequence_rows << " rows, rank " << g.consequence_rank << "\n";
  t << "new module dimension: " << k.nullity - g.consequence_rank << "\n";
  for (std::size_t i = 0; i < g.new_rows.size(); ++i)
    t << "new generator (row " << g.new_rows[i] + 1 << "): " << to_string(g.new_identities[i]) << "\n";
  t << "rank after the new generators: " << g.final_rank << "\n";
  t << "known identity " << to_string(*known) << "\n  expands to zero: " << yes(known_ok)
    << ", rank with consequences: " << closed << "\n";
  r.text = t.str();
}

void identities_degree5_both(RunReport& r) {
  const OpList ops = {OpId::Commutator, OpId::Translator};
  const IntegerMatrix m = expansion_matrix(2, ops);
  const std::size_t rk = rank(m), nullity = m.cols() - rk;
  const std::vector<MultilinearPoly> rel = {relation_alternating(), relation_jacobi(), relation_comtrans()};
  const std::vector<MultilinearPoly> single = {identity_commutator5(), identity_translator5()};
  const std::vector<MultilinearPoly> mixed = {identity_mixed5a(), identity_mixed5b(), identity_mixed5c()};
  const std::size_t r0 = consequence_rank(2, ops, rel);
  const std::size_t r1 = consequence_rank(2, ops, rel, single);
  std::vector<MultilinearPoly> all = single;
  all.insert(all.end(), mixed.begin(), mixed.end());
  const std::size_t r2 = consequence_rank(2, ops, rel, all);
  bool verified = true;
  json& res = r.doc["results"];
  json checks = json::array();
  for (const auto& f : all) {
    const bool ok = verify_identity(f);
    verified = verified && ok;
    checks.push_back({{"identity", to_string(f)}, {"expands_to_zero", ok}});
    r.doc["identities"].push_back(to_string(f));
  }
  res["expansion_rows"] = m.rows();
  res["expansion_cols"] = m.cols();
  res["expansion_rank"] = rk;
  res["nullity"] = nullity;
  res["consequences"] = consequence_set(rel, 2, ops).size();
  res["rank_relations"] = r0;
  res["rank_with_single_operation_identities"] = r1;
  res["rank_with_mixed_identities"] = r2;
  res["closes_kernel"] = r2 == nullity;
  res["identity_checks"] = checks;
  res["all_verified"] = verified;
  std::ostringstream t;
  t << "expansion matrix " << m.rows() << " x " << m.cols() << ", rank " << rk << ", nullity " << nullity << "\n";
  t << "rank of consequences of the defining relations: " << r0 << "\n";
  t << "  with the single-operation identities: " << r1 << "\n";
  t << "  with the mixed identities: " << r2 << (r2 == nullity ? " (the whole kernel)" : "") << "\n";
  for (const auto& f : all) t << "  " << (verify_identity(f) ? "ok " : "BAD ") << to_string(f) << "\n";
  r.text = t.str();
}

void identities_wac(RunReport& r) {
  const WacReport w = wac_analysis();
  json& res = r.doc["results"];
  res["kernel_rank"] = w.kernel_rank;
  res["consequence_rank"] = w.consequence_rank;
  res["new_module_dimension"] = w.new_module_dimension;
  res["derivation_identity"] = to_string(wac_derivation_identity());
  res["derivation_identity_in_kernel"] = w.derivation_identity_in_kernel;
  res["derivation_orbit_dimension"] = w.derivation_orbit_dimension;
  res["as_printed_in_kernel"] = w.misprinted_identity_in_kernel;
  r.doc["identities"].push_back(to_string(wac_derivation_identity()));
  std::ostringstream t;
  t << "kernel rank " << w.kernel_rank << ", consequence rank " << w.consequence_rank
    << ", new module dimension " << w.new_module_dimension << "\n";
  t << "derivation-style identity " << to_string(wac_derivation_identity()) << "\n  in kernel: "
    << yes(w.derivation_identity_in_kernel) << ", orbit dimension modulo consequences: "
    << w.derivation_orbit_dimension << "\n";
  r.text = t.str();
}

std::string table_text(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size(), 0);
  for (std::size_t j = 0; j < head.size(); ++j) {
    w[j] = head[j].size();
    for (const auto& r : rows) w[j] = std::max(w[j], r[j].size());
  }
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::ostringstream l;
    for (std::size_t j = 0; j < cells.size(); ++j) l << (j ? "  " : "") << std::setw(static_cast<int>(w[j])) << cells[j];
    std::string s = l.str();
    s.erase(s.find_last_not_of(' ') + 1);
    out += s + "\n";
  };
  line(head);
  for (const auto& r : rows) line(r);
  return out;
}

// Partitions as rows, quantities as columns; 15 rows fit a terminal better
// than 15 columns.
void degree7_single(RunReport& r, OpId op, const std::vector<Partition>& only) {
  TableOptions o;
  o.only = only;
  const Partition spot = parse_partition("43");
  if (only.empty() || std::find(only.begin(), only.end(), spot) != only.end())
    o.exact_partitions = {spot};
  else
    o.exact_partitions = {only.front()};
  const MultiplicityTable t = degree7_table(op, o);
  json rows = json::array();
  std::vector<std::vector<std::string>> text_rows;
  bool agree = true, contained = true;
  for (const auto& row : t.rows) {
    rows.push_back({{"lambda", row.lambda.to_string()},
                    {"d", row.d},
                    {"c", row.c},
                    {"a", row.a},
                    {"n", row.n},
                    {"e", row.e},
                    {"c_mod_p1", row.c_prime_a},
                    {"c_mod_p2", row.c_prime_b},
                    {"primes_agree", row.primes_agree},
                    {"exact_checked", row.exact_checked},
                    {"contained", row.contained}});
    agree = agree && row.primes_agree;
    contained = contained && row.contained;
    text_rows.push_back({row.lambda.to_string(), std::to_string(row.d), std::to_string(row.c), std::to_string(row.a),
                         std::to_string(row.n), row.exact_checked ? "exact" : ""});
  }
  r.doc["tables"].push_back({{"name", "multiplicities"}, {"types", t.types}, {"rows", rows}});
  r.doc["results"] = {{"consequences", t.consequences},
                      {"types", t.types},
                      {"primes", {kPrimeA, kPrimeB}},
                      {"primes_agree", agree},
                      {"consequences_in_nullspace", contained}};
  std::ostringstream out;
  out << (op == OpId::Commutator ? "commutator" : "translator") << ", degree 7: " << t.consequences << " consequences, " << t.types
      << " association types\n";
  out << table_text({"lambda", "d", "c", "a", "n", ""}, text_rows);
  out << "ranks agree modulo " << kPrimeA << " and " << kPrimeB << ": " << yes(agree) << "\n";
  out << "consequences lie in the nullspace: " << yes(contained) << "\n";
  r.text = out.str();
}

void degree7_mixed(RunReport& r, const std::vector<Partition>& only) {
  MixedOptions o;
  o.only = only;
  const auto rows = degree7_mixed_check(o);
  json jr = json::array();
  std::vector<std::vector<std::string>> text_rows;
  bool all = true;
  for (const auto& row : rows) {
    jr.push_back({{"lambda", row.lambda.to_string()},
                  {"d", row.d},
                  {"a", row.a},
                  {"e", row.e},
                  {"c", row.c},
                  {"c_mod_p1", row.c_prime_a},
                  {"c_mod_p2", row.c_prime_b},
                  {"single_operation_rank", row.single_op_rank},
                  {"rcf_equal", row.rcf_equal},
                  {"consequences_verified", row.consequences_verified},
                  {"ok", row.ok}});
    all = all && row.ok;
    text_rows.push_back({row.lambda.to_string(), std::to_string(row.d), std::to_string(row.c), std::to_string(row.a),
                         row.rcf_equal ? "equal" : "DIFFER", row.ok ? "ok" : "FAIL"});
  }
  r.doc["tables"].push_back({{"name", "mixed"}, {"types", 96}, {"rows", jr}});
  r.doc["results"] = {{"consequences", 656}, {"primes", {kPrimeA, kPrimeB}}, {"all_ok", all}};
  std::ostringstream out;
  out << "commutator and translator, degree 7: 656 consequences, 96 association types\n";
  out << table_text({"lambda", "d", "c", "a", "rcf", ""}, text_rows);
  out << "no new identities with both operations: " << yes(all) << "\n";
  r.text = out.str();
}

}  // namespace

RunReport run_ct_groebner() {
  return timed([] {
    RunReport r = start("ct-groebner", json::object(), "exact");
    const ComtransGroebner gb = comtrans_groebner();
    json rules = json::array(), irr = json::array();
    std::ostringstream t;
    t << "Groebner basis (" << gb.rules.size() << " rules):\n";
    for (const auto& rule : gb.rules) {
      rules.push_back(to_string(rule));
      t << "  " << to_string(rule) << "\n";
    }
    t << "irreducible:";
    for (std::size_t j : gb.irreducible) {
      irr.push_back(to_string(basis12()[j]));
      t << " " << to_string(basis12()[j]);
    }
    t << "\n\nrelation matrix:\n" << pretty(gb.relations) << "\nRCF:\n" << pretty(gb.rcf);
    json& res = r.doc["results"];
    res["rules"] = rules;
    res["irreducible"] = irr;
    res["relation_matrix"] = matrix_json(gb.relations);
    res["rcf"] = matrix_json(gb.rcf);
    res["rank"] = gb.rules.size();
    r.text = t.str();
    r.attachments["dump"] = dump(gb.relations) + dump(gb.rcf);
    return r;
  });
}

RunReport run_ct_dim(std::size_t w, const std::string& method) {
  if (method != "auto" && method != "enumerate" && method != "structural")
    throw UsageError("unknown method \"" + method + "\" (expected auto, enumerate or structural)");
  return timed([&] {
    RunReport r = start("ct-dim", {{"weight", w}, {"method", method}}, "exact");
    const bool enumerate = method == "enumerate" || (method == "auto" && w <= 3);
    const bool structural = method != "enumerate";
    const Integer conj = conjecture_value(w);
    json& res = r.doc["results"];
    res["weight"] = w;
    res["conjecture"] = number(conj);
    bool agree = true;
    std::ostringstream t;
    if (enumerate) {
      const Integer e = count_normal_forms(w, CountMethod::Enumerate);
      res["enumerate"] = number(e);
      agree = agree && e == conj;
      t << "normal forms (enumerated): " << e << "\n";
    }
    if (structural) {
      const Integer s = count_normal_forms(w, CountMethod::Structural);
      res["structural"] = number(s);
      agree = agree && s == conj;
      t << "normal forms (structural): " << s << "\n";
    }
    res["agree"] = agree;
    t << "conjectured dimension: " << conj << "\n" << "agree: " << yes(agree) << "\n";
    r.text = t.str();
    return r;
  });
}

RunReport run_identities(std::size_t degree, const std::string& ops) {
  if (degree != 3 && degree != 5) throw UsageError("degree must be 3 or 5");
  const OpList list = ops_from_tag(ops);
  return timed([&] {
    RunReport r = start("identities", {{"degree", degree}, {"ops", ops}}, "exact");
    if (degree == 3) {
      identities_degree3(r, list);
    } else if (ops == "both") {
      identities_degree5_both(r);
    } else if (ops == "wac") {
      identities_wac(r);
    } else {
      identities_degree5_single(r, list[0]);
    }
    return r;
  });
}

RunReport run_degree7(const std::string& ops, const std::string& partition) {
  std::vector<Partition> only;
  if (!partition.empty()) {
    only.push_back(parse_partition(partition));
    if (only.back().weight() != 7) throw UsageError("partition " + partition + " is not a partition of 7");
  }
  if (ops != "com" && ops != "tra" && ops != "mixed")
    throw UsageError("unknown ops \"" + ops + "\" for degree 7 (expected com, tra or mixed)");
  return timed([&] {
    RunReport r = start("degree7", {{"ops", ops}, {"partition", partition}},
                        ops == "mixed" ? "modular (two primes)" : "modular (two primes) + exact spot check");
    if (ops == "mixed")
      degree7_mixed(r, only);
    else
      degree7_single(r, ops == "com" ? OpId::Commutator : OpId::Translator, only);
    return r;
  });
}

RunReport run_envelope(const std::string& kind_text, std::size_t max_degree,
                       const std::optional<std::string>& presentation, std::size_t cap) {
  const EnvelopeKind kind = parse_envelope_kind(kind_text);
  return timed([&] {
    RunReport r = start("envelope",
                        {{"kind", to_string(kind)}, {"max_degree", max_degree}, {"loaded", presentation.has_value()}, {"cap", cap}},
                        "exact");
    json& res = r.doc["results"];
    std::ostringstream t;
    std::vector<NCPoly> gb;
    if (presentation) {
      const auto gens = load_presentation(*presentation);
      res["loaded_polynomials"] = gens.size();
      gb = groebner_completion(gens, cap);
      t << "loaded " << gens.size() << " polynomials\n";
    } else {
      const auto raw = triple_relations(kind);
      const auto std_forms = standard_forms(raw);
      const auto comps = compositions(std_forms);
      res["raw_generators"] = raw.size();
      res["standard_generators"] = std_forms.size();
      res["overlaps"] = comps.all.size();
      res["compositions"] = comps.distinct_monic.size();
      t << raw.size() << " nonzero generators, " << std_forms.size() << " after standard forms, "
        << comps.distinct_monic.size() << " distinct composition normal forms\n";
      gb = groebner_completion(raw, cap);
    }
    json g = json::array();
    t << "Groebner basis (" << gb.size() << "):\n";
    for (const auto& p : gb) {
      g.push_back(to_string(p));
      t << "  " << to_string(p) << "\n";
    }
    res["groebner_basis"] = g;
    res["is_groebner_basis"] = is_groebner_basis(gb);
    const AlgebraPresentation pres = make_presentation(gb, max_degree);
    const NormalWords nw = normal_words(gb, max_degree);
    json basis = json::array();
    for (const auto& w : pres.basis) basis.push_back(to_string(NCPoly::word(w)));
    res["basis"] = basis;
    res["basis_per_degree"] = nw.per_degree;
    res["finite"] = pres.finite;
    t << "normal words per degree:";
    for (auto c : nw.per_degree) t << " " << c;
    t << (pres.finite ? " (finite, dimension " + std::to_string(pres.basis.size()) + ")"
                      : " (no empty degree up to " + std::to_string(max_degree) + ")")
      << "\n";
    if (kind == EnvelopeKind::CT && !presentation) {
      const bool same = gb == groebner_completion(triple_relations(EnvelopeKind::C), cap);
      res["equals_C"] = same;
      t << "Groebner basis equals that of C: " << yes(same) << "\n";
    }
    if (pres.finite) {
      const auto table = structure_constants(pres);
      json sc = json::array();
      for (std::size_t i = 0; i < pres.basis.size(); ++i)
        for (std::size_t j = 0; j < pres.basis.size(); ++j) {
          if (pres.basis[i].empty() || pres.basis[j].empty()) continue;
          const NCPoly p = element(pres, table[i][j]);
          if (p.is_zero()) continue;
          sc.push_back(to_string(NCPoly::word(pres.basis[i])) + " * " + to_string(NCPoly::word(pres.basis[j])) +
                       " = " + to_string(p));
        }
      r.doc["tables"].push_back({{"name", "structure_constants"}, {"nonzero", sc}});
      t << "nonzero structure constants: " << sc.size() << "\n";
      const WedderburnReport wr = wedderburn(pres);
      json center = json::array(), idem = json::array();
      for (const auto& z : wr.center_basis) center.push_back(to_string(z));
      for (const auto& e : wr.idempotents) idem.push_back(to_string(e));
      res["wedderburn"] = {{"dimension", wr.dimension},
                           {"radical_dimension", wr.radical_dim},
                           {"center", center},
                           {"idempotents", idem},
                           {"ideal_dimensions", wr.ideal_dims},
                           {"split", wr.split}};
      t << "radical dimension " << wr.radical_dim << "\ncenter:";
      for (const auto& z : wr.center_basis) t << "  " << to_string(z) << ";";
      t << "\nidempotents (ideal dimension):\n";
      for (std::size_t i = 0; i < wr.idempotents.size(); ++i)
        t << "  " << to_string(wr.idempotents[i]) << "  (" << wr.ideal_dims[i] << ")\n";
    }
    if (!presentation && kind != EnvelopeKind::CT) {
      const DiscrepancyReport d = kind == EnvelopeKind::C ? [&] {
        DiscrepancyReport x = check_table(reference_table_c(), gb);
        x.missing = structure_discrepancies(4).missing;
        return x;
      }()
                                                          : verify_AT_formulas(12);
      json flagged = d.flagged, missing = d.missing;
      std::size_t matched = 0;
      for (const auto& c : d.checks) matched += c.match;
      res["table_check"] = {{"entries", d.checks.size()}, {"matching", matched}, {"flagged", flagged},
                            {"missing", missing}};
      t << "reference table: " << matched << "/" << d.checks.size() << " expanded entries agree\n";
      for (const auto& f : d.flagged) t << "  suspected typo: " << f << "\n";
      for (const auto& m : d.missing) t << "  not listed: " << m << "\n";
    }
    r.attachments["presentation"] = save_presentation(gb);
    r.text = t.str();
    return r;
  });
}

RunReport run_matrix(const std::string& op, const std::string& dump_text) {
  if (op != "rank" && op != "rcf" && op != "kernel")
    throw UsageError("unknown matrix operation \"" + op + "\" (expected rank, rcf or kernel)");
  const ExactMatrix m = parse_dump(dump_text);
  return timed([&] {
    RunReport r = start("matrix", {{"op", op}, {"rows", m.rows()}, {"cols", m.cols()}}, "exact");
    json& res = r.doc["results"];
    std::ostringstream t;
    if (op == "rank") {
      const std::size_t k = rank(m);
      res["rank"] = k;
      t << "rank " << k << "\n";
    } else if (op == "rcf") {
      const ExactMatrix f = row_basis(m);
      res["rank"] = f.rows();
      res["rcf"] = matrix_json(f);
      r.attachments["dump"] = dump(f);
      t << pretty(f);
    } else {
      const LatticeBasis k = sort_and_normalize(lll_reduce(hermite_basis(integer_kernel_basis(to_integer(m)))));
      res["nullity"] = k.size();
      res["squared_lengths"] = lengths_json(squared_lengths(k));
      const ExactMatrix km = to_rational(k.as_matrix());
      res["kernel"] = matrix_json(km);
      r.attachments["dump"] = dump(km);
      t << "integer kernel, " << k.size() << " vectors after LLL:\n" << pretty(km);
    }
    r.text = t.str();
    return r;
  });
}

}  // namespace comtrans
