#ifndef MODLIE_CHEVALLEY_HPP
#define MODLIE_CHEVALLEY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modlie/field.hpp"
#include "modlie/rootsystem.hpp"

namespace modlie {

/// Sign assignment on extraspecial pairs. Every choice yields a Chevalley
/// basis; the resulting tables differ by signs only.
enum class Convention {
  Extraspecial,             // +(q+1) on every extraspecial pair
  ExtraspecialNegative,     // -(q+1) on every extraspecial pair
  ExtraspecialAlternating,  // sign (-1)^(height+1) of the root the pair sums to
};

std::string convention_label(Convention c);
Convention parse_convention(const std::string& label);

/// Integral structure constants N(r, s) of a Chevalley basis:
/// [e_r, e_s] = N(r, s) e_{r+s}, [e_a, e_{-a}] = h_a.
class StructureConstants {
 public:
  StructureConstants(std::shared_ptr<const RootSystem> system, Convention convention);
  /// Rebuilds from a serialised table (positive-pair entries only).
  StructureConstants(std::shared_ptr<const RootSystem> system, Convention convention,
                     const std::vector<std::pair<std::pair<int, int>, int>>& positive_pairs);

  const RootSystem& system() const noexcept { return *system_; }
  std::shared_ptr<const RootSystem> system_ptr() const noexcept { return system_; }
  Convention convention() const noexcept { return convention_; }

  /// N(r, s) for root ids r, s; zero when r + s is not a root.
  int N(int r, int s) const { return table_[static_cast<std::size_t>(r) * num_roots_ + s]; }
  /// Expansion of h_a (root id a) in h_1..h_rank.
  const IntVec& coroot(int a) const { return coroots_[a]; }

  /// Entries N(a, b) for positive a < b with a + b a root.
  std::vector<std::pair<std::pair<int, int>, int>> positive_pairs() const;

 private:
  void fill_from_positive(const std::vector<std::vector<int>>& pos);

  std::shared_ptr<const RootSystem> system_;
  Convention convention_;
  int num_roots_;
  std::vector<int> table_;
  std::vector<IntVec> coroots_;
};

/// Extraspecial pair (a, b) of each non-simple positive root, by root id.
std::vector<std::pair<int, int>> extraspecial_pairs(const RootSystem& rs);

struct Term {
  std::uint32_t index;
  Fp coeff;
};

class ModularLieAlgebra;

/// Coefficient vector on the Chevalley basis of a ModularLieAlgebra.
struct AlgebraElement {
  Vec coeffs;

  bool is_zero() const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.coeffs == b.coeffs; }
};

/// Chevalley Lie algebra reduced mod p, with its restricted structure.
///
/// Basis order: e_{-gamma} for positive gamma in descending root order,
/// then h_1..h_rank, then e_gamma in ascending root order. So basis index
/// grows with the height of the weight.
class ModularLieAlgebra {
 public:
  ModularLieAlgebra(std::shared_ptr<const StructureConstants> sc, int p);

  const PrimeField& field() const noexcept { return field_; }
  int p() const noexcept { return field_.p(); }
  int dim() const noexcept { return dim_; }
  int rank() const noexcept { return system().rank(); }
  const RootSystem& system() const noexcept { return sc_->system(); }
  const StructureConstants& constants() const noexcept { return *sc_; }
  std::string type_label() const { return system().datum().label(); }

  /// Basis index of e_r for root id r.
  int root_index(int root_id) const;
  /// Basis index of h_i (0-based simple index).
  int h_index(int i) const { return system().num_positive() + i; }
  /// Root id of a root-vector basis index, or -1 for toral elements.
  int root_of_index(int idx) const;
  bool is_toral(int idx) const { return idx >= h_index(0) && idx < h_index(0) + rank(); }
  std::string basis_name(int idx) const;

  AlgebraElement zero() const { return AlgebraElement{Vec(dim_, 0)}; }
  AlgebraElement basis(int idx) const;
  AlgebraElement root_vector(const Root& r) const;

  /// [b_i, b_j] as a sparse list of terms.
  const std::vector<Term>& bracket_basis(int i, int j) const {
    const std::size_t k = static_cast<std::size_t>(i) * dim_ + j;
    return table_[k];
  }
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  /// Column j is [x, b_j].
  Matrix ad_matrix(const AlgebraElement& x) const;

  /// Basis-element p-power: e_r -> 0, h_i -> h_i.
  AlgebraElement basis_p_power(int idx) const;

  struct PowerResult {
    AlgebraElement value;
    bool ambiguous = false;         // centre is nonzero
    std::vector<AlgebraElement> centre;  // attached when ambiguous
  };
  /// Solves ad(z) = ad(x)^p. Unique modulo the centre.
  PowerResult restricted_power(const AlgebraElement& x) const;

  /// Basis of {z : [z, g] = 0}, in reduced echelon form.
  const std::vector<AlgebraElement>& center() const;

  /// Evaluation of a linear functional given by values on the basis.
  Fp evaluate(const Vec& functional, const AlgebraElement& x) const { return field_.dot(functional, x.coeffs); }

 private:
  struct PowerSolver;
  const PowerSolver& power_solver() const;

  std::shared_ptr<const StructureConstants> sc_;
  PrimeField field_;
  int dim_;
  std::vector<std::vector<Term>> table_;
  mutable std::vector<AlgebraElement> centre_;
  mutable bool centre_ready_ = false;
  mutable std::shared_ptr<const PowerSolver> solver_;
};

/// Readable form like "e[-a1]+2e[a1+a2]+h1".
std::string format_element(const ModularLieAlgebra& alg, const AlgebraElement& x);

/// Sum of the simple positive root vectors.
AlgebraElement regular_nilpotent_element(const ModularLieAlgebra& alg);

/// Convenience constructors.
std::shared_ptr<const StructureConstants> make_structure_constants(const std::string& type_label,
                                                                  Convention convention = Convention::Extraspecial);
std::shared_ptr<const ModularLieAlgebra> make_algebra(const std::string& type_label, int p,
                                                       Convention convention = Convention::Extraspecial);

}  // namespace modlie

#endif
