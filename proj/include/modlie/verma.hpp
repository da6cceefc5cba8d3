#ifndef MODLIE_VERMA_HPP
#define MODLIE_VERMA_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modlie/linform.hpp"
#include "modlie/meataxe.hpp"
#include "modlie/weights.hpp"

namespace modlie {

/// Largest module built explicitly.
inline constexpr std::size_t kMaxVermaDim = 4096;

/// Baby Verma module Z_chi(lambda) on the PBW basis
/// f_1^{a_1} ... f_N^{a_N} v, f_k = e_{-gamma_k} in ascending root order.
/// Monomial index is sum a_k p^(k-1).
struct VermaModule {
  std::shared_ptr<const ModularLieAlgebra> alg;
  LinearForm chi;
  WeightModP lambda;
  std::size_t dim = 0;
  std::vector<SparseMatrix> action;  // one per Chevalley basis element

  std::vector<int> exponents(std::size_t monomial) const;
  std::size_t monomial(const std::vector<int>& exponents) const;
  MatrixModule as_module() const;
};

/// Requires chi(n+) = 0 and lambda in Lambda_chi. The actions of all
/// 2N + rank basis elements are computed by PBW straightening.
VermaModule build_baby_verma(std::shared_ptr<const ModularLieAlgebra> alg, const LinearForm& chi,
                             const WeightModP& lambda);

struct RelationReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
};
/// A_x A_y - A_y A_x = A_[x,y] on all basis pairs, and
/// A_x^p - A_{x^[p]} = chi(x)^p on every basis element.
RelationReport check_relations(const VermaModule& z);

/// h-weight space dimensions by reading the diagonal h actions, keyed by
/// weight code; empty when some h_i is not diagonal.
std::vector<std::size_t> weight_space_dims(const VermaModule& z);

IrreducibilityCertificate is_irreducible(const VermaModule& z, std::uint64_t seed, int budget = 64);
CompositionResult composition_factor_dims(const VermaModule& z, std::uint64_t seed, int budget = 64);

struct ModuleMap {
  Matrix matrix;  // column m is the image of monomial m
  bool equivariant = false;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
};
/// The map v_lambda -> w extended by U(n-). Throws Error("not_highest_weight")
/// naming the violated condition when w is not a maximal vector of weight
/// lambda of the source.
ModuleMap verma_hom_from_vector(const VermaModule& source, const VermaModule& target, const Vec& w);

struct LinkageReport {
  std::vector<std::vector<WeightModP>> components;
  std::vector<std::vector<std::size_t>> factor_dims;   // per weight, in code order
  std::vector<std::vector<int>> factor_classes;        // isomorphism class of each factor
  int class_count = 0;
  bool partial = false;
};
/// Builds all p^rank baby Vermas, splits them into simple factors, matches
/// factors by isomorphism testing and joins weights sharing a factor.
LinkageReport linkage_components(std::shared_ptr<const ModularLieAlgebra> alg, const LinearForm& chi,
                                 std::uint64_t seed, int budget = 64);

}  // namespace modlie

#endif
