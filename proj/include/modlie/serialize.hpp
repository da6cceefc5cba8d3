#ifndef MODLIE_SERIALIZE_HPP
#define MODLIE_SERIALIZE_HPP

#include <memory>
#include <string>

#include <json.hpp>

#include "modlie/chevalley.hpp"
#include "modlie/divisibility.hpp"
#include "modlie/linform.hpp"
#include "modlie/rootsystem.hpp"
#include "modlie/verma.hpp"
#include "modlie/weights.hpp"

namespace modlie {

using json = nlohmann::ordered_json;

json to_json(const RootSystem& rs);

/// {"type", "convention", "positive_roots", "pairs": [[a, b, N(a,b)], ...]}
json to_json(const StructureConstants& sc);
std::shared_ptr<const StructureConstants> structure_constants_from_json(const json& j);

/// Loads `<dir>/<type>-<convention>.json` if present and consistent with the
/// root system, otherwise computes the table and writes it there.
std::shared_ptr<const StructureConstants> cached_structure_constants(std::shared_ptr<const RootSystem> rs,
                                                                    Convention convention, const std::string& dir);

json to_json(const Root& r);
json to_json(const AlgebraElement& x);
json to_json(const WeightModP& w);

/// {type, p, chi_support, dim, d_chi, basis}
json to_json(const LinearForm& chi, const CentralizerReport& report);
/// {type, p, orbit_count, orbit_sizes, representatives}
json to_json(const CartanDatum& d, int p, const OrbitReport& report);
/// {type, p, ok, method, exponent, witnesses, failure?}
json to_json(const LinearForm& chi, const BoundReport& report);
/// {type, p, lambda, chi, dim, irreducible, seed, factor_dims, witness}
json module_certificate(const VermaModule& z, const IrreducibilityCertificate& cert,
                        const std::vector<std::size_t>& factor_dims);

}  // namespace modlie

#endif
