#ifndef MODLIE_TESTS_PROPERTIES_HPP
#define MODLIE_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "modlie/chevalley.hpp"

namespace modlie::testing {

struct PropertyResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;  // first few only
  std::size_t failure_count = 0;
  bool ok() const { return failure_count == 0; }
};

/// Jacobi identity on all basis triples of the integral Chevalley basis.
PropertyResult jacobi_integral(const StructureConstants& sc);
/// Jacobi identity on all basis triples of the reduction mod p.
PropertyResult jacobi_mod_p(const ModularLieAlgebra& alg);
/// Antisymmetry and |N(r, s)| = C_{r,s} on every pair with r + s a root.
PropertyResult structure_constant_bounds(const StructureConstants& sc);
/// ad(x^[p]) = ad(x)^p for `samples` seeded random x.
PropertyResult p_power_compatibility(const ModularLieAlgebra& alg, std::uint64_t seed, int samples);

}  // namespace modlie::testing

#endif
