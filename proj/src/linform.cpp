#include "modlie/linform.hpp"

#include <algorithm>

namespace modlie {

bool LinearForm::vanishes_on_positive() const {
  const int N = alg->system().num_positive();
  for (int k = 0; k < N; ++k)
    if (values[alg->root_index(k)] != 0) return false;
  return true;
}

bool LinearForm::in_b_perp() const {
  for (int i = 0; i < alg->rank(); ++i)
    if (values[alg->h_index(i)] != 0) return false;
  return vanishes_on_positive();
}

LinearForm standard_levi_form(std::shared_ptr<const ModularLieAlgebra> alg, const std::vector<int>& simple_subset) {
  LinearForm chi{alg, Vec(alg->dim(), 0)};
  for (int i : simple_subset) {
    if (i < 0 || i >= alg->rank())
      throw Error("invalid_index", "simple root index " + std::to_string(i + 1) + " out of range for " + alg->type_label());
    const int neg = alg->system().negate(alg->system().simple(i));
    chi.values[alg->root_index(neg)] = 1;
  }
  return chi;
}

LinearForm regular_levi_form(std::shared_ptr<const ModularLieAlgebra> alg) {
  std::vector<int> all(alg->rank());
  for (int i = 0; i < alg->rank(); ++i) all[i] = i;
  return standard_levi_form(std::move(alg), all);
}

LinearForm zero_form(std::shared_ptr<const ModularLieAlgebra> alg) {
  const int n = alg->dim();
  return LinearForm{std::move(alg), Vec(n, 0)};
}

Matrix pairing_matrix(const LinearForm& chi) {
  const ModularLieAlgebra& alg = *chi.alg;
  const PrimeField& F = alg.field();
  const int n = alg.dim();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Fp s = 0;
      for (const auto& t : alg.bracket_basis(i, j))
        if (chi.values[t.index]) s = F.add(s, F.mul(t.coeff, chi.values[t.index]));
      m(i, j) = s;
    }
  return m;
}

namespace {

CentralizerReport report_from_kernel(const ModularLieAlgebra& alg, const Matrix& kernel) {
  CentralizerReport r;
  for (std::size_t i = 0; i < kernel.rows(); ++i) r.basis.push_back(AlgebraElement{kernel.row_vec(i)});
  r.dim = static_cast<int>(kernel.rows());
  if ((alg.dim() - r.dim) % 2 == 0) r.d_chi = (alg.dim() - r.dim) / 2;
  return r;
}

}  // namespace

CentralizerReport centralizer(const LinearForm& chi) {
  // x in c_g(chi) iff sum_i x_i M(i, j) = 0 for all j, i.e. M^T x = 0.
  const Matrix m = pairing_matrix(chi);
  return report_from_kernel(*chi.alg, nullspace(chi.alg->field(), m.transpose()));
}

CentralizerReport element_centralizer(const ModularLieAlgebra& alg, const AlgebraElement& e) {
  // [x, e] = 0 iff ad(e) x = 0.
  return report_from_kernel(alg, nullspace(alg.field(), alg.ad_matrix(e)));
}

int d_chi(const ModularLieAlgebra& alg, const CentralizerReport& report) {
  const int codim = alg.dim() - report.dim;
  if (codim % 2 != 0)
    throw Error("odd_codimension", "centraliser has odd codimension " + std::to_string(codim) +
                                       " in " + alg.type_label() + " (p=" + std::to_string(alg.p()) +
                                       "); the pairing chi([x,y]) is not behaving as a symplectic form");
  return codim / 2;
}

int d_chi(const LinearForm& chi) { return d_chi(*chi.alg, centralizer(chi)); }

std::vector<int> delta_support(const LinearForm& chi) {
  const ModularLieAlgebra& alg = *chi.alg;
  const int N = alg.system().num_positive();
  std::vector<int> out;
  for (int k = 0; k < N; ++k) {
    const int neg = N + k;
    if (chi.values[alg.root_index(neg)] != 0) out.push_back(neg);
  }
  return out;
}

}  // namespace modlie
