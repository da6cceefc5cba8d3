#include "modlie/serialize.hpp"

#include <filesystem>
#include <fstream>

namespace modlie {

json to_json(const Root& r) { return json(r.coords); }

json to_json(const AlgebraElement& x) {
  json arr = json::array();
  for (auto c : x.coeffs) arr.push_back(int(c));
  return arr;
}

json to_json(const WeightModP& w) {
  json arr = json::array();
  for (auto c : w.coords) arr.push_back(int(c));
  return arr;
}

namespace {

json chi_support(const LinearForm& chi) {
  json arr = json::array();
  const auto& alg = *chi.alg;
  for (int i = 0; i < alg.dim(); ++i)
    if (chi.at(i)) arr.push_back({{"element", alg.basis_name(i)}, {"value", int(chi.at(i))}});
  return arr;
}

}  // namespace

json to_json(const LinearForm& chi, const CentralizerReport& report) {
  json j;
  j["type"] = chi.alg->type_label();
  j["p"] = chi.alg->p();
  j["chi_support"] = chi_support(chi);
  j["dim"] = report.dim;
  j["d_chi"] = report.d_chi ? json(*report.d_chi) : json(nullptr);
  json basis = json::array();
  for (const auto& b : report.basis) basis.push_back(to_json(b));
  j["basis"] = basis;
  return j;
}

json to_json(const CartanDatum& d, int p, const OrbitReport& report) {
  json j;
  j["type"] = d.label();
  j["p"] = p;
  j["orbit_count"] = report.orbit_count;
  j["orbit_sizes"] = report.orbit_sizes;
  json reps = json::array();
  for (const auto& w : report.representatives) reps.push_back(to_json(w));
  j["representatives"] = reps;
  return j;
}

json to_json(const LinearForm& chi, const BoundReport& report) {
  json j;
  j["type"] = chi.alg->type_label();
  j["p"] = chi.alg->p();
  j["ok"] = report.ok;
  j["method"] = method_label(report.method);
  j["exponent"] = report.ok ? json(report.exponent) : json(nullptr);
  if (report.method == BoundMethod::Induction && report.ok) j["subalgebra_dim"] = report.subalgebra_dim;
  j["witnesses"] = report.witnesses;
  if (!report.ok) j["failure"] = report.failure;
  return j;
}

json module_certificate(const VermaModule& z, const IrreducibilityCertificate& cert,
                        const std::vector<std::size_t>& factor_dims) {
  json j;
  j["type"] = z.alg->type_label();
  j["p"] = z.alg->p();
  j["lambda"] = to_json(z.lambda);
  j["chi"] = chi_support(z.chi);
  j["dim"] = z.dim;
  j["irreducible"] = cert.status == IrreducibleStatus::Irreducible   ? json(true)
                     : cert.status == IrreducibleStatus::Reducible ? json(false)
                                                                   : json(nullptr);
  j["status"] = status_label(cert.status);
  j["seed"] = cert.seed;
  j["factor_dims"] = factor_dims;
  j["witness"] = cert.witness;
  return j;
}

json to_json(const RootSystem& rs) {
  json j;
  j["type"] = rs.datum().label();
  j["rank"] = rs.rank();
  j["cartan_matrix"] = rs.datum().matrix;
  json roots = json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(to_json(r));
  j["positive_roots"] = roots;
  return j;
}

json to_json(const StructureConstants& sc) {
  json j;
  j["type"] = sc.system().datum().label();
  j["convention"] = convention_label(sc.convention());
  json roots = json::array();
  for (const auto& r : sc.system().positive_roots()) roots.push_back(to_json(r));
  j["positive_roots"] = roots;
  json pairs = json::array();
  for (const auto& [ab, v] : sc.positive_pairs()) pairs.push_back({ab.first, ab.second, v});
  j["pairs"] = pairs;
  return j;
}

std::shared_ptr<const StructureConstants> structure_constants_from_json(const json& j) {
  try {
    auto rs = std::make_shared<const RootSystem>(CartanDatum::parse(j.at("type").get<std::string>()));
    const Convention conv = parse_convention(j.at("convention").get<std::string>());
    const auto& roots = j.at("positive_roots");
    if (static_cast<int>(roots.size()) != rs->num_positive())
      throw Error("invalid_cache", "positive root count does not match " + rs->datum().label());
    for (int k = 0; k < rs->num_positive(); ++k)
      if (roots[k].get<IntVec>() != rs->positive_roots()[k].coords)
        throw Error("invalid_cache", "positive root order differs from this build");
    std::vector<std::pair<std::pair<int, int>, int>> pairs;
    for (const auto& e : j.at("pairs")) pairs.push_back({{e.at(0).get<int>(), e.at(1).get<int>()}, e.at(2).get<int>()});
    return std::make_shared<const StructureConstants>(rs, conv, pairs);
  } catch (const json::exception& e) {
    throw Error("invalid_cache", std::string("malformed structure-constant file: ") + e.what());
  }
}

std::shared_ptr<const StructureConstants> cached_structure_constants(std::shared_ptr<const RootSystem> rs,
                                                                    Convention convention, const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path file = fs::path(dir) / (rs->datum().label() + "-" + convention_label(convention) + ".json");
  if (fs::exists(file)) {
    try {
      std::ifstream in(file);
      auto sc = structure_constants_from_json(json::parse(in));
      if (sc->convention() == convention) return sc;
    } catch (const std::exception&) {
      // stale or corrupt cache: recompute below
    }
  }
  auto sc = std::make_shared<const StructureConstants>(rs, convention);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!ec) {
    std::ofstream out(file);
    if (out) out << to_json(*sc).dump() << '\n';
  }
  return sc;
}

}  // namespace modlie
