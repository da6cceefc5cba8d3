#include "modlie/meataxe.hpp"

#include <algorithm>
#include <numeric>

namespace modlie {

std::string status_label(IrreducibleStatus s) {
  switch (s) {
    case IrreducibleStatus::Irreducible: return "irreducible";
    case IrreducibleStatus::Reducible: return "reducible";
    case IrreducibleStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<std::size_t> CompositionResult::dims() const {
  std::vector<std::size_t> d;
  for (const auto& f : factors) d.push_back(f.dim);
  return d;
}

namespace {

Matrix spin_with(const PrimeField& F, std::size_t dim, const std::vector<SparseMatrix>& gens, const Vec& v) {
  EchelonSpace space(F, dim);
  std::vector<Vec> queue;
  Vec stored;
  if (space.add(v, &stored)) queue.push_back(stored);
  for (std::size_t i = 0; i < queue.size() && space.dim() < dim; ++i)
    for (const auto& g : gens) {
      if (space.add(g.apply(F, queue[i]), &stored)) queue.push_back(stored);
      if (space.dim() == dim) break;
    }
  if (space.dim() == dim) return Matrix::identity(dim);
  return space.rref_basis();
}

Matrix shifted(const PrimeField& F, Matrix a, Fp c) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) = F.sub(a(i, i), c);
  return a;
}

std::vector<SparseMatrix> transposes(const MatrixModule& m) {
  std::vector<SparseMatrix> t;
  t.reserve(m.gens.size());
  for (const auto& g : m.gens) t.push_back(g.transpose());
  return t;
}

}  // namespace

Matrix spin(const MatrixModule& m, const Vec& v) { return spin_with(m.field, m.dim, m.gens, v); }

Matrix evaluate_recipe(const MatrixModule& m, const WordRecipe& r) {
  const PrimeField& F = m.field;
  std::vector<SparseMatrix> elems;
  for (const auto& c : r.elements) {
    if (c.size() != m.gens.size()) throw Error("dimension_mismatch", "recipe does not match the generator count");
    SparseMatrix e(m.dim, m.dim);
    for (std::size_t g = 0; g < c.size(); ++g)
      if (c[g]) e = combine(F, 1, e, c[g], m.gens[g]);
    elems.push_back(std::move(e));
  }
  Matrix theta(m.dim, m.dim);
  for (std::size_t k = 0; k < r.words.size(); ++k) {
    const auto& w = r.words[k];
    if (w.empty()) continue;
    Matrix prod = elems.at(w[0]).to_dense();
    for (std::size_t i = 1; i < w.size(); ++i) prod = multiply(F, prod, elems.at(w[i]));
    for (std::size_t i = 0; i < m.dim; ++i) {
      Fp* dst = theta.row(i);
      const Fp* src = prod.row(i);
      for (std::size_t j = 0; j < m.dim; ++j) dst[j] = F.add(dst[j], F.mul(r.coeffs[k], src[j]));
    }
  }
  return theta;
}

IrreducibilityCertificate meataxe(const MatrixModule& m, std::uint64_t seed, int budget) {
  const PrimeField& F = m.field;
  IrreducibilityCertificate cert;
  cert.seed = seed;
  if (m.dim == 0) throw Error("empty_module", "zero-dimensional module");
  if (m.gens.empty()) throw Error("empty_module", "module without generators");
  Rng rng(seed);
  std::vector<SparseMatrix> gens_t;
  const auto reducible = [&](Matrix sub, std::string why) {
    cert.status = IrreducibleStatus::Reducible;
    cert.submodule = std::move(sub);
    cert.witness = std::move(why) + ", submodule of dimension " + std::to_string(cert.submodule.rows());
    return cert;
  };
  for (int attempt = 1; attempt <= budget; ++attempt) {
    cert.attempts = attempt;
    // theta = x y + z for random x, y, z in the span of the generators
    WordRecipe recipe;
    for (int k = 0; k < 3; ++k) recipe.elements.push_back(rng.vector(F, m.gens.size()));
    recipe.words = {{0, 1}, {2}};
    recipe.coeffs = {1, 1};
    const Matrix theta = evaluate_recipe(m, recipe);
    std::vector<Fp> order(F.p());
    std::iota(order.begin(), order.end(), Fp{0});
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    for (Fp c : order) {
      const Matrix a = shifted(F, theta, c);
      const Matrix null = nullspace(F, a);
      if (null.rows() == 0) continue;
      for (std::size_t r = 0; r < std::min<std::size_t>(null.rows(), 2); ++r) {
        Matrix s = spin(m, null.row_vec(r));
        if (s.rows() < m.dim) return reducible(std::move(s), "spin of a kernel vector of theta - " + std::to_string(int(c)));
      }
      if (gens_t.empty()) gens_t = transposes(m);
      const Matrix null_t = nullspace(F, a.transpose());
      Matrix dual = spin_with(F, m.dim, gens_t, null_t.row_vec(0));
      if (dual.rows() < m.dim)
        return reducible(nullspace(F, dual), "annihilator of a proper dual submodule from theta - " + std::to_string(int(c)));
      if (null.rows() == 1) {
        recipe.eigenvalue = c;
        cert.status = IrreducibleStatus::Irreducible;
        cert.recipe = std::move(recipe);
        cert.witness = "Norton: nullity(theta - " + std::to_string(int(c)) +
                       ") = 1, kernel vector and dual kernel vector both generate (attempt " + std::to_string(attempt) + ")";
        return cert;
      }
    }
  }
  cert.status = IrreducibleStatus::Inconclusive;
  cert.witness = "budget of " + std::to_string(budget) + " random elements exhausted";
  return cert;
}

SplitModules split(const MatrixModule& m, const Matrix& sub) {
  const PrimeField& F = m.field;
  const std::size_t n = m.dim, k = sub.rows();
  if (sub.cols() != n || k == 0 || k >= n) throw Error("invalid_submodule", "submodule must be proper and nonzero");
  std::vector<std::size_t> piv(k);
  std::vector<bool> is_piv(n, false);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t c = 0;
    while (sub(i, c) == 0) ++c;
    piv[i] = c;
    is_piv[c] = true;
  }
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_piv[c]) free.push_back(c);
  SplitModules out{MatrixModule{F, k, {}}, MatrixModule{F, n - k, {}}};
  for (const auto& g : m.gens) {
    SparseMatrix s(k, k), q(n - k, n - k);
    Vec col(k), qcol(n - k);
    for (std::size_t i = 0; i < k; ++i) {
      const Vec w = g.apply(F, sub.row_vec(i));
      for (std::size_t j = 0; j < k; ++j) col[j] = w[piv[j]];
      s.set_column(i, col);
    }
    for (std::size_t i = 0; i < free.size(); ++i) {
      Vec w = g.column_dense(free[i]);
      for (std::size_t j = 0; j < k; ++j) {
        const Fp c = w[piv[j]];
        if (!c) continue;
        const Fp nc = F.neg(c);
        const Fp* row = sub.row(j);
        for (std::size_t t = 0; t < n; ++t)
          if (row[t]) w[t] = F.add(w[t], F.mul(nc, row[t]));
      }
      for (std::size_t j = 0; j < free.size(); ++j) qcol[j] = w[free[j]];
      q.set_column(i, qcol);
    }
    out.sub.gens.push_back(std::move(s));
    out.quotient.gens.push_back(std::move(q));
  }
  return out;
}

CompositionResult composition_factors(const MatrixModule& m, std::uint64_t seed, int budget) {
  CompositionResult res;
  std::uint64_t calls = 0;
  // Depth-first, submodule before quotient, so factors come out bottom-up.
  std::vector<MatrixModule> stack{m};
  while (!stack.empty()) {
    MatrixModule cur = std::move(stack.back());
    stack.pop_back();
    auto cert = meataxe(cur, seed + 0x9E3779B97F4A7C15ULL * calls++, budget);
    if (cert.status == IrreducibleStatus::Reducible) {
      auto parts = split(cur, cert.submodule);
      stack.push_back(std::move(parts.quotient));
      stack.push_back(std::move(parts.sub));
      continue;
    }
    if (cert.status == IrreducibleStatus::Inconclusive) res.inconclusive = true;
    res.factors.push_back(std::move(cur));
    res.certificates.push_back(std::move(cert));
  }
  return res;
}

bool modules_isomorphic(const MatrixModule& a, const IrreducibilityCertificate& ca, const MatrixModule& b) {
  if (ca.status != IrreducibleStatus::Irreducible) throw Error("not_certified", "isomorphism test needs an irreducibility certificate");
  if (a.dim != b.dim || a.gens.size() != b.gens.size()) return false;
  const PrimeField& F = a.field;
  const std::size_t n = a.dim;
  const Fp c = ca.recipe.eigenvalue;
  const Matrix na = nullspace(F, shifted(F, evaluate_recipe(a, ca.recipe), c));
  const Matrix nb = nullspace(F, shifted(F, evaluate_recipe(b, ca.recipe), c));
  if (na.rows() != 1 || nb.rows() != 1) return false;

  // Standard basis of a from its kernel vector, then the same script in b.
  std::vector<Vec> ua{na.row_vec(0)}, ub{nb.row_vec(0)};
  std::vector<std::pair<std::size_t, std::size_t>> script;
  EchelonSpace sa(F, n), sb(F, n);
  sa.add(ua[0]);
  sb.add(ub[0]);
  for (std::size_t i = 0; i < ua.size() && ua.size() < n; ++i)
    for (std::size_t g = 0; g < a.gens.size() && ua.size() < n; ++g) {
      Vec w = a.gens[g].apply(F, ua[i]);
      if (sa.add(w)) {
        ua.push_back(std::move(w));
        script.push_back({i, g});
      }
    }
  if (ua.size() != n) return false;
  for (const auto& [i, g] : script) {
    Vec w = b.gens[g].apply(F, ub[i]);
    if (!sb.add(w)) return false;
    ub.push_back(std::move(w));
  }
  Matrix pa(n, n), pb(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      pa(i, j) = ua[j][i];
      pb(i, j) = ub[j][i];
    }
  const Matrix phi = multiply(F, pb, inverse(F, pa));
  for (std::size_t g = 0; g < a.gens.size(); ++g)
    if (!(multiply(F, b.gens[g], phi) == multiply(F, phi, a.gens[g]))) return false;
  return true;
}

}  // namespace modlie
