#include "modlie/scenario.hpp"

#include <fstream>

namespace modlie {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error("invalid_scenario", where + ": " + what);
}

IntVec int_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an integer array");
  IntVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad(where, "expected an integer array");
    v.push_back(x.get<int>());
  }
  return v;
}

std::vector<IntVec> root_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of roots");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_list(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<TermList> element_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of elements");
  std::vector<TermList> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].empty()) bad(w, "expected a nonempty term list");
    for (const auto& t : j[i]) {
      if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_number_integer()) bad(w, "term needs an integer coeff");
      if (t.contains("root") == t.contains("h")) bad(w, "term needs exactly one of root, h");
    }
    out.push_back(j[i].get<TermList>());
  }
  return out;
}

int basis_index_of(const ModularLieAlgebra& alg, const json& term) {
  if (term.contains("h")) {
    const int i = term["h"].get<int>();
    if (i < 1 || i > alg.rank()) throw Error("invalid_scenario", "h index out of range: " + std::to_string(i));
    return alg.h_index(i - 1);
  }
  const Root r{term["root"].get<IntVec>()};
  if (static_cast<int>(r.coords.size()) != alg.rank())
    throw Error("invalid_scenario", "root has wrong length: " + format_root(r));
  const auto id = alg.system().find(r);
  if (!id) throw Error("invalid_scenario", "not a root: " + format_root(r));
  return alg.root_index(*id);
}

ScenarioCheck check(std::string name, json expected, json actual) {
  ScenarioCheck c{std::move(name), std::move(expected), std::move(actual), false};
  c.ok = c.expected == c.actual;
  return c;
}

}  // namespace

ScenarioFile parse_scenarios(const json& j) {
  ScenarioFile f;
  if (!j.is_object() || !j.contains("scenarios") || !j["scenarios"].is_array()) bad("$", "missing scenarios array");
  f.version = j.value("version", 0);
  f.corrections = j.value("corrections", json::array());
  for (std::size_t k = 0; k < j["scenarios"].size(); ++k) {
    const json& s = j["scenarios"][k];
    const std::string at = "scenarios[" + std::to_string(k) + "]";
    Scenario sc;
    if (!s.is_object()) bad(at, "expected an object");
    for (const char* key : {"id", "type", "p", "chi", "expected"})
      if (!s.contains(key)) bad(at, std::string("missing ") + key);
    sc.id = s["id"].get<std::string>();
    sc.type = s["type"].get<std::string>();
    if (!s["p"].is_number_integer()) bad(at + ".p", "expected an integer");
    sc.p = s["p"].get<int>();
    const json& chi = s["chi"];
    if (!chi.contains("levi_subset")) bad(at + ".chi", "missing levi_subset");
    if (chi["levi_subset"].is_string()) {
      if (chi["levi_subset"] != "all") bad(at + ".chi.levi_subset", "expected \"all\" or a list");
    } else {
      IntVec v = int_list(chi["levi_subset"], at + ".chi.levi_subset");
      for (int& i : v) --i;
      sc.levi_subset = v;
    }
    if (s.contains("psi")) sc.psi_exclude = root_list(s["psi"].value("exclude", json::array()), at + ".psi.exclude");
    if (s.contains("subalgebra")) {
      const json& sub = s["subalgebra"];
      sc.subalgebra_except =
          root_list(sub.value("positive_root_vectors_except", json::array()), at + ".subalgebra.positive_root_vectors_except");
      sc.subalgebra_elements = element_list(sub.value("elements", json::array()), at + ".subalgebra.elements");
    }
    if (s.contains("centralizer_basis")) {
      sc.centralizer_basis = element_list(s["centralizer_basis"], at + ".centralizer_basis");
      const std::string signs = s.value("centralizer_basis_signs", "exact");
      if (signs != "exact" && signs != "up_to_term_signs") bad(at + ".centralizer_basis_signs", "unknown value " + signs);
      sc.exact_signs = signs == "exact";
    }
    sc.expected = s["expected"];
    sc.provenance = s.value("provenance", json::object());
    for (const auto& [key, _] : sc.expected.items())
      if (!sc.provenance.contains(key)) bad(at + ".provenance", "no label for expected." + key);
    f.scenarios.push_back(std::move(sc));
  }
  return f;
}

ScenarioFile load_scenarios(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("invalid_scenario", "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("invalid_scenario", path + ": " + e.what());
  }
  return parse_scenarios(j);
}

std::string default_scenario_path() { return std::string(MODLIE_DATA_DIR) + "/appendix_scenarios.json"; }

AlgebraElement element_from_terms(const ModularLieAlgebra& alg, const TermList& terms) {
  AlgebraElement x = alg.zero();
  const PrimeField& F = alg.field();
  for (const auto& t : terms) {
    const int idx = basis_index_of(alg, t);
    x.coeffs[idx] = F.add(x.coeffs[idx], F.reduce(t["coeff"].get<long long>()));
  }
  return x;
}

LinearForm scenario_form(std::shared_ptr<const ModularLieAlgebra> alg, const Scenario& s) {
  if (!s.levi_subset) return regular_levi_form(std::move(alg));
  for (int i : *s.levi_subset)
    if (i < 0 || i >= alg->rank()) throw Error("invalid_scenario", s.id + ": levi index out of range");
  return standard_levi_form(std::move(alg), *s.levi_subset);
}

SubalgebraCandidate scenario_subalgebra(const ModularLieAlgebra& alg, const Scenario& s) {
  if (!s.subalgebra_except) throw Error("invalid_scenario", s.id + ": no subalgebra");
  const RootSystem& rs = alg.system();
  std::vector<int> skip;
  for (const auto& c : *s.subalgebra_except) {
    const auto id = rs.find(Root{c});
    if (!id || *id >= rs.num_positive()) throw Error("invalid_scenario", s.id + ": not a positive root " + format_root(Root{c}));
    skip.push_back(*id);
  }
  std::vector<AlgebraElement> gens;
  for (int a = 0; a < rs.num_positive(); ++a)
    if (std::find(skip.begin(), skip.end(), a) == skip.end()) gens.push_back(alg.basis(alg.root_index(a)));
  for (const auto& t : s.subalgebra_elements) gens.push_back(element_from_terms(alg, t));
  return SubalgebraCandidate::from_generators(alg, std::move(gens));
}

CentralizerVectorCheck check_centralizer_vector(const LinearForm& chi, const TermList& terms, bool exact) {
  const ModularLieAlgebra& alg = *chi.alg;
  const PrimeField& F = alg.field();
  const int n = alg.dim();
  // x lies in c_g(chi) iff chi([x, b_j]) = 0 for every j; the rows of the
  // pairing matrix at the term indices give those values.
  std::vector<int> idx;
  std::vector<Fp> coeff;
  for (const auto& t : terms) {
    idx.push_back(basis_index_of(alg, t));
    coeff.push_back(F.reduce(t["coeff"].get<long long>()));
  }
  std::vector<Vec> rows;
  for (int i : idx) {
    Vec r(n, 0);
    for (int j = 0; j < n; ++j) r[j] = F.dot(chi.values, alg.bracket(alg.basis(i), alg.basis(j)).coeffs);
    rows.push_back(std::move(r));
  }
  const std::size_t t = terms.size();
  const std::uint64_t patterns = (exact || F.p() == 2 || t == 0) ? 1 : (std::uint64_t{1} << (t - 1));
  CentralizerVectorCheck out;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    Vec acc(n, 0);
    std::vector<int> signs(t, 1);
    for (std::size_t k = 0; k < t; ++k) {
      if (k > 0 && ((mask >> (k - 1)) & 1)) signs[k] = -1;
      F.axpy(acc, signs[k] > 0 ? coeff[k] : F.neg(coeff[k]), rows[k]);
    }
    if (std::all_of(acc.begin(), acc.end(), [](Fp v) { return v == 0; })) {
      out.ok = true;
      out.signs = signs;
      out.element = alg.zero();
      for (std::size_t k = 0; k < t; ++k)
        out.element.coeffs[idx[k]] = F.add(out.element.coeffs[idx[k]], signs[k] > 0 ? coeff[k] : F.neg(coeff[k]));
      return out;
    }
  }
  return out;
}

json ScenarioResult::to_json() const {
  json j;
  j["id"] = id;
  j["ok"] = ok;
  json arr = json::array();
  for (const auto& c : checks) arr.push_back({{"check", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
  j["checks"] = arr;
  return j;
}

ScenarioResult run_scenario(const Scenario& s, std::shared_ptr<const ModularLieAlgebra> alg) {
  if (alg->type_label() != s.type || alg->p() != s.p) throw Error("invalid_scenario", s.id + ": algebra does not match");
  ScenarioResult res;
  res.id = s.id;
  const json& ex = s.expected;
  const LinearForm chi = scenario_form(alg, s);
  const CentralizerReport cent = centralizer(chi);

  if (ex.contains("dim_ce"))
    res.checks.push_back(check("dim_ce", ex["dim_ce"], element_centralizer(*alg, regular_nilpotent_element(*alg)).dim));
  if (ex.contains("dim_c")) res.checks.push_back(check("dim_c", ex["dim_c"], cent.dim));
  if (ex.contains("d_chi"))
    res.checks.push_back(check("d_chi", ex["d_chi"], cent.d_chi ? json(*cent.d_chi) : json(nullptr)));
  if (ex.contains("exponent") || ex.contains("method")) {
    const BoundReport b = best_bound(chi);
    if (ex.contains("exponent")) res.checks.push_back(check("exponent", ex["exponent"], b.ok ? json(b.exponent) : json(nullptr)));
    if (ex.contains("method")) res.checks.push_back(check("method", ex["method"], method_label(b.method)));
  }
  if (s.psi_exclude) {
    std::vector<int> removed;
    for (const auto& c : *s.psi_exclude) {
      const auto id = alg->system().find(Root{c});
      if (!id || *id >= alg->system().num_positive())
        throw Error("invalid_scenario", s.id + ": not a positive root " + format_root(Root{c}));
      removed.push_back(*id);
    }
    const BoundReport b = bound_p_closed(PsiSubset::complement_of(alg->system(), removed), chi);
    res.checks.push_back(check("psi_certified", true, b.ok ? json(true) : json(b.failure)));
    if (ex.contains("psi_size")) res.checks.push_back(check("psi_size", ex["psi_size"], b.ok ? json(b.exponent) : json(nullptr)));
  }
  if (s.subalgebra_except) {
    const BoundReport b = verify_induction_subalgebra(scenario_subalgebra(*alg, s), chi);
    res.checks.push_back(check("subalgebra_certified", true, b.ok ? json(true) : json(b.failure)));
    if (ex.contains("subalgebra_dim")) res.checks.push_back(check("subalgebra_dim", ex["subalgebra_dim"], b.subalgebra_dim));
    if (ex.contains("induced_exponent"))
      res.checks.push_back(check("induced_exponent", ex["induced_exponent"], b.ok ? json(b.exponent) : json(nullptr)));
    if (b.ok && cent.d_chi && b.exponent > *cent.d_chi)
      res.checks.push_back(check("induced_exceeds_d_chi", true, true));
  }
  if (!s.centralizer_basis.empty()) {
    std::vector<AlgebraElement> found;
    json bad_vectors = json::array();
    for (std::size_t k = 0; k < s.centralizer_basis.size(); ++k) {
      const auto c = check_centralizer_vector(chi, s.centralizer_basis[k], s.exact_signs);
      if (c.ok)
        found.push_back(c.element);
      else
        bad_vectors.push_back(k + 1);
    }
    res.checks.push_back(check("centralizer_vectors_in_c", json::array(), bad_vectors));
    Matrix m(found.size(), alg->dim());
    for (std::size_t r = 0; r < found.size(); ++r)
      for (int c = 0; c < alg->dim(); ++c) m(r, c) = found[r].coeffs[c];
    res.checks.push_back(check("centralizer_vectors_span", cent.dim, static_cast<int>(found.empty() ? 0 : rank(alg->field(), m))));
  }
  for (const auto& c : res.checks) res.ok = res.ok && c.ok;
  return res;
}

}  // namespace modlie
