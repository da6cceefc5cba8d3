#ifndef MODLIE_LINFORM_HPP
#define MODLIE_LINFORM_HPP

#include <memory>
#include <optional>
#include <vector>

#include "modlie/chevalley.hpp"

namespace modlie {

/// A p-character: a linear form on g given by its values on the Chevalley
/// basis.
struct LinearForm {
  std::shared_ptr<const ModularLieAlgebra> alg;
  Vec values;

  Fp operator()(const AlgebraElement& x) const { return alg->evaluate(values, x); }
  Fp at(int basis_index) const { return values[basis_index]; }
  /// chi(h) = 0 and chi(n+) = 0.
  bool in_b_perp() const;
  bool vanishes_on_positive() const;
};

/// chi(e_{-alpha}) = 1 for alpha in `simple_subset` (0-based simple
/// indices), zero on every other basis element.
LinearForm standard_levi_form(std::shared_ptr<const ModularLieAlgebra> alg, const std::vector<int>& simple_subset);
LinearForm regular_levi_form(std::shared_ptr<const ModularLieAlgebra> alg);
LinearForm zero_form(std::shared_ptr<const ModularLieAlgebra> alg);

struct CentralizerReport {
  std::vector<AlgebraElement> basis;  // reduced echelon form
  int dim = 0;
  std::optional<int> d_chi;           // half the codimension, when it is even
};

/// The pairing matrix M(i, j) = chi([b_i, b_j]).
Matrix pairing_matrix(const LinearForm& chi);

/// c_g(chi) = {x : chi([x, g]) = 0}.
CentralizerReport centralizer(const LinearForm& chi);
/// Kernel of ad(e).
CentralizerReport element_centralizer(const ModularLieAlgebra& alg, const AlgebraElement& e);

/// Half the codimension of c_g(chi). Throws Error("odd_codimension") when the
/// codimension is odd.
int d_chi(const LinearForm& chi);
int d_chi(const ModularLieAlgebra& alg, const CentralizerReport& report);

/// Negative roots (as root ids) on whose root vectors chi is nonzero.
std::vector<int> delta_support(const LinearForm& chi);

}  // namespace modlie

#endif
