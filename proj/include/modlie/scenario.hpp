#ifndef MODLIE_SCENARIO_HPP
#define MODLIE_SCENARIO_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modlie/serialize.hpp"

namespace modlie {

/// A linear combination of Chevalley basis elements as listed in a scenario
/// file: each term is {"coeff", "root": [coords]} or {"coeff", "h": i} with i
/// 1-based.
using TermList = std::vector<json>;

struct Scenario {
  std::string id;
  std::string type;
  int p = 0;
  std::optional<std::vector<int>> levi_subset;  // 0-based; empty optional = all simple roots
  std::optional<std::vector<IntVec>> psi_exclude;
  std::optional<std::vector<IntVec>> subalgebra_except;  // positive root vectors not included
  std::vector<TermList> subalgebra_elements;
  std::vector<TermList> centralizer_basis;
  bool exact_signs = true;
  json expected;
  json provenance;
};

struct ScenarioFile {
  int version = 0;
  json corrections;
  std::vector<Scenario> scenarios;
};

/// Throws Error("invalid_scenario") with the offending path.
ScenarioFile parse_scenarios(const json& j);
ScenarioFile load_scenarios(const std::string& path);
std::string default_scenario_path();

AlgebraElement element_from_terms(const ModularLieAlgebra& alg, const TermList& terms);
LinearForm scenario_form(std::shared_ptr<const ModularLieAlgebra> alg, const Scenario& s);
SubalgebraCandidate scenario_subalgebra(const ModularLieAlgebra& alg, const Scenario& s);

struct CentralizerVectorCheck {
  bool ok = false;
  std::vector<int> signs;  // per term, +1 or -1
  AlgebraElement element;  // with the signs applied
};
/// Whether the listed vector lies in c_g(chi). With exact = false every term
/// may have its sign flipped; the first working sign pattern is returned.
CentralizerVectorCheck check_centralizer_vector(const LinearForm& chi, const TermList& terms, bool exact);

struct ScenarioCheck {
  std::string name;
  json expected;
  json actual;
  bool ok = false;
};

struct ScenarioResult {
  std::string id;
  std::vector<ScenarioCheck> checks;
  bool ok = true;
  json to_json() const;
};

ScenarioResult run_scenario(const Scenario& s, std::shared_ptr<const ModularLieAlgebra> alg);

}  // namespace modlie

#endif
