#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "modlie/scenario.hpp"

using namespace modlie;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kInconclusive = 3 };

struct Common {
  std::uint64_t seed = 1;
  std::string convention = "extraspecial";
  std::string format = "json";
  int budget = 64;
};

struct Target {
  std::string type;
  int p = 0;
  bool regular = false;
  bool zero = false;
  std::string levi;
};

std::shared_ptr<const ModularLieAlgebra> algebra(const std::string& type, int p, const Common& c) {
  auto rs = std::make_shared<const RootSystem>(CartanDatum::parse(type));
  const Convention conv = parse_convention(c.convention);
  std::shared_ptr<const StructureConstants> sc;
  if (const char* dir = std::getenv("MODLIE_CACHE_DIR"); dir && *dir)
    sc = cached_structure_constants(rs, conv, dir);
  else
    sc = std::make_shared<const StructureConstants>(rs, conv);
  return std::make_shared<const ModularLieAlgebra>(sc, p);
}

std::vector<int> int_csv(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error("invalid_argument", what + ": cannot parse '" + tok + "'");
    }
  }
  return out;
}

LinearForm form(std::shared_ptr<const ModularLieAlgebra> alg, const Target& t) {
  if (int(t.regular) + int(t.zero) + int(!t.levi.empty()) > 1)
    throw Error("invalid_argument", "choose at most one of --regular, --zero, --levi");
  if (t.zero) return zero_form(alg);
  if (!t.levi.empty()) {
    std::vector<int> subset = int_csv(t.levi, "--levi");
    for (int& i : subset) {
      if (i < 1 || i > alg->rank()) throw Error("invalid_argument", "--levi index out of range: " + std::to_string(i));
      --i;
    }
    return standard_levi_form(alg, subset);
  }
  return regular_levi_form(alg);
}

void add_target(CLI::App* cmd, Target& t, bool with_chi = true) {
  cmd->add_option("--type", t.type, "Root system type, e.g. G2, F4, E8, A2")->required();
  cmd->add_option("--p", t.p, "Characteristic")->required();
  if (!with_chi) return;
  cmd->add_flag("--regular", t.regular, "Regular nilpotent character (default)");
  cmd->add_flag("--zero", t.zero, "Zero character");
  cmd->add_option("--levi", t.levi, "Standard Levi character on the listed simple roots, 1-based, comma separated");
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int expect_int(const std::optional<long long>& expected, long long actual) {
  return expected && *expected != actual ? kMismatch : kOk;
}

// ---------------------------------------------------------------- commands

int cmd_centralizer(const Common& c, const Target& t, const std::optional<long long>& expect) {
  auto alg = algebra(t.type, t.p, c);
  const LinearForm chi = form(alg, t);
  const CentralizerReport rep = centralizer(chi);
  json j = to_json(chi, rep);
  std::ostringstream text;
  text << alg->type_label() << " p=" << alg->p() << "  dim c_g(chi) = " << rep.dim;
  if (rep.d_chi) text << "  d(chi) = " << *rep.d_chi;
  text << '\n';
  for (const auto& b : rep.basis) text << "  " << format_element(*alg, b) << '\n';
  emit(c, j, text.str());
  return expect_int(expect, rep.dim);
}

int cmd_table1(const Common& c, const std::string& file) {
  const ScenarioFile f = load_scenarios(file.empty() ? default_scenario_path() : file);
  json rows = json::array();
  std::ostringstream text;
  text << "type  p   dim c(e)        dim c(chi)\n";
  bool ok = true;
  for (const auto& s : f.scenarios) {
    if (!s.expected.contains("dim_ce") || !s.expected.contains("dim_c")) continue;
    auto alg = algebra(s.type, s.p, c);
    const int ce = element_centralizer(*alg, regular_nilpotent_element(*alg)).dim;
    const int cc = centralizer(scenario_form(alg, s)).dim;
    const int xe = s.expected["dim_ce"].get<int>(), xc = s.expected["dim_c"].get<int>();
    ok = ok && ce == xe && cc == xc;
    rows.push_back({{"type", s.type},
                    {"p", s.p},
                    {"dim_ce", ce},
                    {"dim_ce_expected", xe},
                    {"dim_ce_ok", ce == xe},
                    {"dim_c", cc},
                    {"dim_c_expected", xc},
                    {"dim_c_ok", cc == xc}});
    char line[96];
    std::snprintf(line, sizeof line, "%-4s  %d   %3d (%3d) %-4s  %3d (%3d) %s\n", s.type.c_str(), s.p, ce, xe,
                  ce == xe ? "ok" : "FAIL", cc, xc, cc == xc ? "ok" : "FAIL");
    text << line;
  }
  text << (ok ? "all rows match\n" : "MISMATCH\n");
  emit(c, {{"rows", rows}, {"ok", ok}}, text.str());
  return ok ? kOk : kMismatch;
}

Root parse_root(const std::string& s, int rank) {
  const std::vector<int> v = int_csv(s, "--psi-exclude");
  if (static_cast<int>(v.size()) != rank) throw Error("invalid_argument", "root '" + s + "' needs " + std::to_string(rank) + " coordinates");
  return Root{v};
}

int cmd_bound(const Common& c, const Target& t, const std::vector<std::string>& psi_exclude, bool psi_all,
              int max_removed, const std::optional<long long>& expect) {
  auto alg = algebra(t.type, t.p, c);
  const LinearForm chi = form(alg, t);
  BoundReport rep;
  if (psi_all || !psi_exclude.empty()) {
    std::vector<int> removed;
    for (const auto& s : psi_exclude) {
      const Root r = parse_root(s, alg->rank());
      const auto id = alg->system().find(r);
      if (!id || *id >= alg->system().num_positive())
        throw Error("invalid_root", format_root(r) + " is not a positive root");
      removed.push_back(*id);
    }
    rep = bound_p_closed(PsiSubset::complement_of(alg->system(), removed), chi);
  } else {
    rep = best_bound(chi, max_removed);
  }
  std::ostringstream text;
  text << alg->type_label() << " p=" << alg->p() << "  ";
  if (rep.ok)
    text << "dim divisible by " << alg->p() << "^" << rep.exponent << " (" << method_label(rep.method) << ")\n";
  else
    text << "certificate failed: " << rep.failure << '\n';
  for (const auto& w : rep.witnesses) text << "  " << w << '\n';
  emit(c, to_json(chi, rep), text.str());
  if (!rep.ok) return kMismatch;
  return expect_int(expect, rep.exponent);
}

int cmd_orbits(const Common& c, const Target& t, const std::optional<long long>& expect) {
  const CartanDatum d = CartanDatum::parse(t.type);
  if (t.p < 2) throw Error("invalid_argument", "--p must be a prime");
  PrimeField check(t.p);
  const OrbitReport rep = orbit_count(d, t.p);
  std::ostringstream text;
  text << d.label() << " p=" << t.p << "  " << rep.orbit_count << " dot orbits\n";
  for (std::size_t i = 0; i < rep.representatives.size(); ++i) {
    text << "  (";
    for (std::size_t k = 0; k < rep.representatives[i].coords.size(); ++k)
      text << (k ? "," : "") << int(rep.representatives[i].coords[k]);
    text << ")  size " << rep.orbit_sizes[i] << '\n';
  }
  emit(c, to_json(d, t.p, rep), text.str());
  return expect_int(expect, rep.orbit_count);
}

std::string weight_text(const WeightModP& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.coords.size(); ++k) s += (k ? "," : "") + std::to_string(int(w.coords[k]));
  return s + ")";
}

int cmd_verma(const Common& c, const Target& t, const std::string& lambda, bool all, bool irreducible, bool factors,
              bool relations, bool linkage, const std::optional<long long>& expect) {
  auto alg = algebra(t.type, t.p, c);
  const LinearForm chi = form(alg, t);
  std::vector<WeightModP> weights;
  if (all == !lambda.empty()) throw Error("invalid_argument", "give exactly one of --lambda, --all-lambda");
  if (all) {
    for (std::uint64_t code = 0; code < weight_count(alg->rank(), alg->p()); ++code)
      weights.push_back(decode_weight(static_cast<std::uint32_t>(code), alg->rank(), alg->p()));
  } else {
    const std::vector<int> v = int_csv(lambda, "--lambda");
    if (static_cast<int>(v.size()) != alg->rank())
      throw Error("invalid_weight", "--lambda needs " + std::to_string(alg->rank()) + " coordinates");
    WeightModP w;
    for (int x : v) w.coords.push_back(alg->field().reduce(x));
    weights.push_back(w);
  }
  json modules = json::array();
  std::ostringstream text;
  int irreducible_count = 0;
  bool inconclusive = false, relations_ok = true;
  for (const auto& w : weights) {
    const VermaModule z = build_baby_verma(alg, chi, w);
    const std::uint64_t seed = c.seed + encode_weight(w, alg->p());
    IrreducibilityCertificate cert;
    std::vector<std::size_t> dims;
    if (irreducible || factors) cert = is_irreducible(z, seed, c.budget);
    if (factors) {
      const CompositionResult comp = composition_factor_dims(z, seed, c.budget);
      dims = comp.dims();
      inconclusive = inconclusive || comp.inconclusive;
    } else if (cert.status == IrreducibleStatus::Irreducible) {
      dims = {z.dim};
    }
    inconclusive = inconclusive || ((irreducible || factors) && cert.status == IrreducibleStatus::Inconclusive);
    if (cert.status == IrreducibleStatus::Irreducible) ++irreducible_count;
    json m = module_certificate(z, cert, dims);
    if (!irreducible && !factors) {
      m.erase("irreducible");
      m.erase("status");
      m.erase("witness");
    }
    text << "Z" << weight_text(w) << "  dim " << z.dim;
    if (irreducible || factors) text << "  " << status_label(cert.status);
    if (factors) {
      text << "  factors";
      for (auto d : dims) text << ' ' << d;
    }
    if (relations) {
      const RelationReport r = check_relations(z);
      relations_ok = relations_ok && r.ok;
      m["relations"] = {{"ok", r.ok}, {"pairs_checked", r.pairs_checked}, {"failures", r.failures}};
      text << "  relations " << (r.ok ? "ok" : "FAIL");
    }
    text << '\n';
    modules.push_back(std::move(m));
  }
  json j{{"type", alg->type_label()}, {"p", alg->p()}, {"modules", modules}};
  if (irreducible || factors) {
    j["irreducible_count"] = irreducible_count;
    text << irreducible_count << "/" << weights.size() << " irreducible\n";
  }
  if (linkage) {
    const LinkageReport lr = linkage_components(alg, chi, c.seed, c.budget);
    json comps = json::array();
    text << lr.components.size() << " linkage components\n";
    for (const auto& comp : lr.components) {
      json cj = json::array();
      text << " ";
      for (const auto& w : comp) {
        cj.push_back(to_json(w));
        text << ' ' << weight_text(w);
      }
      text << '\n';
      comps.push_back(cj);
    }
    j["linkage"] = {{"component_count", lr.components.size()}, {"components", comps},
                    {"simple_classes", lr.class_count}, {"partial", lr.partial}};
    inconclusive = inconclusive || lr.partial;
  }
  emit(c, j, text.str());
  if (!relations_ok) return kMismatch;
  if (inconclusive) return kInconclusive;
  return expect_int(expect, irreducible_count);
}

int cmd_verify_appendix(const Common& c, const std::string& file, unsigned jobs) {
  const ScenarioFile f = load_scenarios(file.empty() ? default_scenario_path() : file);
  const std::size_t n = f.scenarios.size();
  std::vector<ScenarioResult> results(n);
  std::vector<std::string> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        const Scenario& s = f.scenarios[i];
        results[i] = run_scenario(s, algebra(s.type, s.p, c));
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::min<std::size_t>(jobs, n); ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  bool ok = true, invalid = false;
  json arr = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      invalid = true;
      arr.push_back({{"id", f.scenarios[i].id}, {"ok", false}, {"error", errors[i]}});
      text << f.scenarios[i].id << "  ERROR " << errors[i] << '\n';
      continue;
    }
    ok = ok && results[i].ok;
    arr.push_back(results[i].to_json());
    text << results[i].id << "  " << (results[i].ok ? "ok" : "MISMATCH") << '\n';
    for (const auto& ch : results[i].checks)
      text << "  " << (ch.ok ? "ok  " : "FAIL") << ' ' << ch.name << " expected " << ch.expected.dump() << " got "
           << ch.actual.dump() << '\n';
  }
  emit(c, {{"version", f.version}, {"corrections", f.corrections}, {"scenarios", arr}, {"ok", ok && !invalid}}, text.str());
  if (invalid) return kInvalid;
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular Lie algebra toolkit: centralisers, divisibility bounds, dot orbits, baby Verma modules"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--seed", common.seed, "Seed for randomised algorithms")->capture_default_str();
  app.add_option("--convention", common.convention, "Sign convention on extraspecial pairs")
      ->check(CLI::IsMember({"extraspecial", "extraspecial-negative", "extraspecial-alternating"}))
      ->capture_default_str();
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--budget", common.budget, "MeatAxe attempts per module")->check(CLI::PositiveNumber)->capture_default_str();

  Target t;
  std::optional<long long> expect;
  std::string file, lambda;
  std::vector<std::string> psi_exclude;
  bool psi_all = false, all = false, irr = false, factors = false, relations = false, linkage = false;
  int max_removed = 1;
  unsigned jobs = 0;

  auto* cen = app.add_subcommand("centralizer", "Centraliser c_g(chi) of a standard Levi character");
  add_target(cen, t);
  cen->add_option("--expect", expect, "Exit 1 unless the dimension equals this");

  auto* tab = app.add_subcommand("table1", "Centraliser dimensions of regular nilpotent elements and characters");
  tab->add_option("--file", file, "Scenario file with the expected dimensions");

  auto* bnd = app.add_subcommand("bound", "Divisibility exponent for dimensions of U_chi(g)-modules");
  add_target(bnd, t);
  bnd->add_option("--psi-exclude", psi_exclude, "Certify Psi = positive roots minus these (comma separated coordinates)");
  bnd->add_flag("--psi-all", psi_all, "Certify Psi = all positive roots");
  bnd->add_option("--max-removed", max_removed, "Search depth for p-closed subsets")->check(CLI::Range(0, 2));
  bnd->add_option("--expect", expect, "Exit 1 unless the exponent equals this");

  auto* orb = app.add_subcommand("orbits", "Dot-action orbits of W on X(T)/pX(T)");
  add_target(orb, t, false);
  orb->add_option("--expect", expect, "Exit 1 unless the orbit count equals this");

  auto* ver = app.add_subcommand("verma", "Baby Verma modules Z_chi(lambda)");
  add_target(ver, t);
  ver->add_option("--lambda", lambda, "Highest weight in fundamental-weight coordinates, comma separated");
  ver->add_flag("--all-lambda", all, "Every lambda in X(T)/pX(T)");
  ver->add_flag("--check-irreducible", irr, "Run the MeatAxe on each module");
  ver->add_flag("--factors", factors, "Composition factor dimensions");
  ver->add_flag("--relations", relations, "Check bracket and p-power relations");
  ver->add_flag("--linkage", linkage, "Join weights whose modules share a composition factor");
  ver->add_option("--expect", expect, "Exit 1 unless this many modules are certified irreducible");

  auto* app_verify = app.add_subcommand("verify-appendix", "Run every scenario in the scenario file");
  app_verify->add_option("--file", file, "Scenario file")->capture_default_str();
  app_verify->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }
  try {
    if (*cen) return cmd_centralizer(common, t, expect);
    if (*tab) return cmd_table1(common, file);
    if (*bnd) return cmd_bound(common, t, psi_exclude, psi_all, max_removed, expect);
    if (*orb) return cmd_orbits(common, t, expect);
    if (*ver) return cmd_verma(common, t, lambda, all, irr, factors, relations, linkage, expect);
    if (*app_verify) return cmd_verify_appendix(common, file, jobs);
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
