#ifndef MODLIE_ROOTSYSTEM_HPP
#define MODLIE_ROOTSYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modlie/field.hpp"

namespace modlie {

enum class LieType { A, B, C, D, E, F, G };

char type_letter(LieType t);
LieType parse_type_letter(char c);

using IntVec = std::vector<int>;

/// Cartan datum for an irreducible reduced root system.
///
/// `cartan(i, j)` is the pairing <alpha_i^vee, alpha_j>. The simple roots of
/// the exceptional types are numbered as follows (edges of the Dynkin diagram):
///   G2: 1 short, 2 long.
///   F4: 1-2=>3-4, with 1, 2 long and 3, 4 short.
///   E6: chain 1-2-3-4-5, node 6 attached to 3.
///   E7: chain 1-2-3-4-5-6, node 7 attached to 4.
///   E8: chain 1-2-3-4-5-6-7, node 8 attached to 5.
/// Classical types use the Bourbaki numbering (B_n: alpha_n short,
/// C_n: alpha_n long, D_n: n-1 and n attached to n-2).
struct CartanDatum {
  LieType type = LieType::A;
  int rank = 0;
  std::vector<IntVec> matrix;

  int cartan(int i, int j) const { return matrix[i][j]; }
  std::string label() const;

  static CartanDatum of(LieType type, int rank);
  /// Parses labels like "G2", "E8", "A1".
  static CartanDatum parse(const std::string& label);
};

/// Throws Error("invalid_cartan", ...) with a diagnostic if `d` is not a
/// valid Cartan matrix for its declared type.
void validate(const CartanDatum& d);

/// Number of positive roots for the classical count of a type.
int positive_root_count(LieType type, int rank);
/// Order of the Weyl group.
unsigned long long weyl_group_order(LieType type, int rank);

/// A root as a signed coordinate vector in the simple-root basis.
struct Root {
  IntVec coords;

  bool positive() const;
  int height() const;
  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
  friend bool operator<(const Root& a, const Root& b) { return a.coords < b.coords; }
};

/// All roots of one irreducible type. Positive roots are ordered by height,
/// then by descending lexicographic order of coordinates, so that the simple
/// roots come first as alpha_1, ..., alpha_rank. Root ids: positive root k has
/// id k, its negative has id N + k.
class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const noexcept { return datum_; }
  int rank() const noexcept { return datum_.rank; }
  int num_positive() const noexcept { return static_cast<int>(positive_.size()); }
  int num_roots() const noexcept { return 2 * num_positive(); }

  const std::vector<Root>& positive_roots() const noexcept { return positive_; }
  Root root(int id) const;
  /// Root id of `r`, if it is a root.
  std::optional<int> find(const Root& r) const;
  bool is_root(const Root& r) const { return find(r).has_value(); }
  int negate(int id) const { return id < num_positive() ? id + num_positive() : id - num_positive(); }
  /// Id of alpha_i (0-based).
  int simple(int i) const { return simple_ids_[i]; }

  /// Symmetric invariant form on the root lattice, normalised so that
  /// short roots have squared length 2.
  int inner(const Root& a, const Root& b) const;
  int norm(const Root& a) const { return inner(a, a); }
  /// <a, alpha_i^vee>
  int pairing_with_coroot(const Root& a, int i) const;
  /// Coefficients of alpha^vee in the simple coroots (for alpha a root).
  IntVec coroot_coords(const Root& alpha) const;

  /// C_{alpha,beta} = q + 1 with q maximal such that beta - q alpha is a
  /// root. Rejects alpha = +-beta.
  int root_string_bound(const Root& alpha, const Root& beta) const;

  /// Simple reflection on the root lattice: v - <v, alpha_i^vee> alpha_i.
  Root reflect(int i, const Root& v) const;
  /// Simple reflection on weights in fundamental-weight coordinates.
  IntVec reflect_weight(int i, const IntVec& lambda) const;
  /// alpha_i in fundamental-weight coordinates.
  IntVec simple_root_as_weight(int i) const;

 private:
  CartanDatum datum_;
  std::vector<Root> positive_;
  std::map<IntVec, int> index_;
  std::vector<int> simple_ids_;
  std::vector<IntVec> gram_;  // (alpha_i, alpha_j)
};

/// Human-readable form like "a1+2a2".
std::string format_root(const Root& r);

}  // namespace modlie

#endif
