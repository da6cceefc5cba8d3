#ifndef MODLIE_DIVISIBILITY_HPP
#define MODLIE_DIVISIBILITY_HPP

#include <string>
#include <vector>

#include "modlie/linform.hpp"

namespace modlie {

/// A subset of the positive roots, as sorted root ids in [0, N).
struct PsiSubset {
  std::vector<int> roots;

  std::size_t size() const noexcept { return roots.size(); }
  bool contains(int id) const;
  static PsiSubset all_positive(const RootSystem& rs);
  /// All positive roots except the listed ones.
  static PsiSubset complement_of(const RootSystem& rs, const std::vector<int>& removed);
};

struct SubalgebraCandidate {
  std::vector<AlgebraElement> generators;
  std::vector<AlgebraElement> closure_basis;  // reduced echelon basis of the span
  int dim = 0;

  static SubalgebraCandidate from_generators(const ModularLieAlgebra& alg, std::vector<AlgebraElement> generators);
  /// b = h + n+.
  static SubalgebraCandidate borel(const ModularLieAlgebra& alg);
};

enum class BoundMethod { Nonspecial, PClosed, Unipotent, Induction };
std::string method_label(BoundMethod m);

/// Outcome of a divisibility certificate. `ok` is false when a check failed;
/// `failure` then names the violated condition and `witnesses` the evidence.
struct BoundReport {
  bool ok = true;
  int exponent = 0;
  BoundMethod method = BoundMethod::Nonspecial;
  std::vector<std::string> witnesses;
  std::string failure;
  int subalgebra_dim = 0;  // induction route only
};

/// p != 2 for B, C, F4 and p != 3 for G2.
bool is_nonspecial(LieType type, int p);

/// exponent = d(chi). Throws Error("special_prime") when p is special.
BoundReport bound_nonspecial(const LinearForm& chi);

/// For alpha, beta in Psi with alpha+beta a root: alpha+beta in Psi, or p
/// divides C_{gamma,delta} for every gamma, delta in Psi summing to it.
bool is_p_closed(const RootSystem& rs, const PsiSubset& psi, int p);

/// Certifies p^|Psi| divisibility through the unipotent subalgebra spanned by
/// e_{-alpha}, alpha in Psi.
BoundReport bound_p_closed(const PsiSubset& psi, const LinearForm& chi);

/// Checks bracket closure, chi([r,r]) = 0, closure under [p] and
/// chi(r^[p]) = 0; on success exponent = dim g - dim r.
BoundReport verify_induction_subalgebra(const SubalgebraCandidate& cand, const LinearForm& chi);

/// Largest exponent over the nonspecial route and p-closed subsets of the
/// form Phi+ minus at most `max_removed` roots. Ties go to nonspecial.
BoundReport best_bound(const LinearForm& chi, int max_removed = 1);

}  // namespace modlie

#endif
