#ifndef MODLIE_MEATAXE_HPP
#define MODLIE_MEATAXE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "modlie/field.hpp"

namespace modlie {

/// A finite-dimensional module for a finitely generated algebra, given by
/// one matrix per generator acting on column vectors.
struct MatrixModule {
  PrimeField field;
  std::size_t dim = 0;
  std::vector<SparseMatrix> gens;
};

/// Random algebra element theta = sum coeffs[k] * (product of words[k]),
/// where a word indexes `elements`, each a linear combination of the
/// generators. `eigenvalue` is a c with 1-dimensional kernel of theta - c.
struct WordRecipe {
  std::vector<Vec> elements;
  std::vector<std::vector<int>> words;
  std::vector<Fp> coeffs;
  Fp eigenvalue = 0;
};

enum class IrreducibleStatus { Irreducible, Reducible, Inconclusive };
std::string status_label(IrreducibleStatus s);

struct IrreducibilityCertificate {
  IrreducibleStatus status = IrreducibleStatus::Inconclusive;
  std::uint64_t seed = 0;
  int attempts = 0;
  WordRecipe recipe;    // irreducible: Norton witness, nullity(theta - c) = 1
  Matrix submodule;     // reducible: reduced echelon basis of a proper submodule
  std::string witness;
};

/// Holt-Rees MeatAxe restricted to linear factors, with Norton's criterion.
/// A nullity-1 eigenvalue also certifies absolute irreducibility.
IrreducibilityCertificate meataxe(const MatrixModule& m, std::uint64_t seed, int budget = 64);

/// Smallest submodule containing v, as a reduced echelon basis.
Matrix spin(const MatrixModule& m, const Vec& v);

Matrix evaluate_recipe(const MatrixModule& m, const WordRecipe& r);

struct SplitModules {
  MatrixModule sub;
  MatrixModule quotient;
};
/// Action on a submodule (given by a reduced echelon basis) and on the quotient.
SplitModules split(const MatrixModule& m, const Matrix& submodule);

struct CompositionResult {
  std::vector<MatrixModule> factors;
  std::vector<IrreducibilityCertificate> certificates;  // aligned with factors
  bool inconclusive = false;
  std::vector<std::size_t> dims() const;
};
CompositionResult composition_factors(const MatrixModule& m, std::uint64_t seed, int budget = 64);

/// Standard-basis isomorphism test between simple modules. `ca` must be an
/// irreducibility certificate of `a`.
bool modules_isomorphic(const MatrixModule& a, const IrreducibilityCertificate& ca, const MatrixModule& b);

}  // namespace modlie

#endif
