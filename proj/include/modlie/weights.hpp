#ifndef MODLIE_WEIGHTS_HPP
#define MODLIE_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "modlie/field.hpp"
#include "modlie/rootsystem.hpp"

namespace modlie {

/// Element of X(T)/pX(T) in fundamental-weight coordinates.
struct WeightModP {
  Vec coords;

  friend bool operator==(const WeightModP& a, const WeightModP& b) { return a.coords == b.coords; }
};

/// Base-p code of a weight; coordinate 0 is least significant.
std::uint32_t encode_weight(const WeightModP& w, int p);
WeightModP decode_weight(std::uint32_t code, int rank, int p);
std::uint64_t weight_count(int rank, int p);

/// a_i expressed in fundamental weights: column i of the Cartan matrix.
IntVec simple_root_in_weights(const CartanDatum& d, int i);

/// s_i . lambda = s_i(lambda + rho) - rho, rho = (1, ..., 1).
WeightModP dot_reflect(const CartanDatum& d, int p, int i, const WeightModP& lambda);

struct OrbitReport {
  int orbit_count = 0;
  std::vector<std::uint64_t> orbit_sizes;     // aligned with representatives
  std::vector<WeightModP> representatives;    // smallest code in each orbit
  std::vector<std::uint32_t> orbit_of;        // weight code -> orbit index
};

/// Orbits of the dot action of W on F_p^rank, found by breadth-first closure
/// under simple reflections.
OrbitReport orbit_count(const CartanDatum& d, int p);

}  // namespace modlie

#endif
