#include "modlie/verma.hpp"

#include <algorithm>
#include <numeric>

namespace modlie {

namespace {

using SparseVec = std::vector<std::pair<std::uint32_t, Fp>>;

class Straightener {
 public:
  Straightener(const ModularLieAlgebra& alg, const LinearForm& chi, const WeightModP& lambda)
      : alg_(alg), F_(alg.field()), p_(alg.p()), N_(alg.system().num_positive()), lambda_(lambda.coords) {
    place_.assign(N_ + 1, 1);
    for (int k = 1; k <= N_; ++k) place_[k] = place_[k - 1] * p_;
    dim_ = place_[N_];
    neg_of_index_.assign(alg.dim(), -1);
    for (int k = 0; k < N_; ++k) {
      const int idx = alg.root_index(alg.system().negate(k));
      f_index_.push_back(idx);
      neg_of_index_[idx] = k;
      chi_f_.push_back(F_.pow(chi.at(idx), p_));
    }
    const auto& d = alg.system().datum();
    pair_.assign(N_, IntVec(d.rank, 0));
    for (int k = 0; k < N_; ++k)
      for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) pair_[k][i] += alg.system().positive_roots()[k].coords[j] * d.cartan(i, j);
    memo_f_.assign(N_, std::vector<SparseVec>(dim_));
    have_f_.assign(N_, std::vector<char>(dim_, 0));
    memo_e_.assign(N_, std::vector<SparseVec>(dim_));
    have_e_.assign(N_, std::vector<char>(dim_, 0));
  }

  std::size_t dim() const { return dim_; }

  SparseVec act(int idx, std::size_t m) {
    if (neg_of_index_[idx] >= 0) return left_f(neg_of_index_[idx], m);
    if (alg_.is_toral(idx)) {
      const Fp c = weight(idx - alg_.h_index(0), m);
      return c ? SparseVec{{static_cast<std::uint32_t>(m), c}} : SparseVec{};
    }
    return left_e(alg_.root_of_index(idx), m);
  }

 private:
  int digit(std::size_t m, int k) const { return static_cast<int>((m / place_[k]) % p_); }
  int first(std::size_t m) const {
    for (int k = 0; k < N_; ++k)
      if (digit(m, k)) return k;
    return N_;
  }

  Fp weight(int i, std::size_t m) const {
    long long v = lambda_[i];
    for (int k = 0; k < N_; ++k) v -= static_cast<long long>(digit(m, k)) * pair_[k][i];
    return F_.reduce(v);
  }

  void accumulate(Vec& acc, Fp c, const SparseVec& v) const {
    for (const auto& [i, x] : v) acc[i] = F_.add(acc[i], F_.mul(c, x));
  }
  static SparseVec compress(const Vec& acc) {
    SparseVec out;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (acc[i]) out.push_back({static_cast<std::uint32_t>(i), acc[i]});
    return out;
  }

  // Straightened form of f_j * m.
  const SparseVec& left_f(int j, std::size_t m) {
    if (have_f_[j][m]) return memo_f_[j][m];
    SparseVec out;
    const int k = first(m);
    if (j < k) {
      out = {{static_cast<std::uint32_t>(m + place_[j]), 1}};
    } else if (j == k) {
      const int a = digit(m, j);
      if (a + 1 < p_)
        out = {{static_cast<std::uint32_t>(m + place_[j]), 1}};
      else if (chi_f_[j])
        out = {{static_cast<std::uint32_t>(m - a * place_[j]), chi_f_[j]}};
    } else {
      // f_j f_k m' = f_k (f_j m') + [f_j, f_k] m'
      const std::size_t rest = m - place_[k];
      Vec acc(dim_, 0);
      const SparseVec inner = left_f(j, rest);
      for (const auto& [n, c] : inner) accumulate(acc, c, left_f(k, n));
      for (const auto& t : alg_.bracket_basis(f_index_[j], f_index_[k])) accumulate(acc, t.coeff, act(t.index, rest));
      out = compress(acc);
    }
    have_f_[j][m] = 1;
    return memo_f_[j][m] = std::move(out);
  }

  // Straightened form of e_r * m for positive root id r.
  const SparseVec& left_e(int r, std::size_t m) {
    if (have_e_[r][m]) return memo_e_[r][m];
    SparseVec out;
    if (m != 0) {
      const int k = first(m);
      const std::size_t rest = m - place_[k];
      Vec acc(dim_, 0);
      const SparseVec inner = left_e(r, rest);
      for (const auto& [n, c] : inner) accumulate(acc, c, left_f(k, n));
      for (const auto& t : alg_.bracket_basis(alg_.root_index(r), f_index_[k])) accumulate(acc, t.coeff, act(t.index, rest));
      out = compress(acc);
    }
    have_e_[r][m] = 1;
    return memo_e_[r][m] = std::move(out);
  }

  const ModularLieAlgebra& alg_;
  const PrimeField& F_;
  int p_, N_;
  Vec lambda_;
  std::vector<std::size_t> place_;
  std::size_t dim_ = 0;
  std::vector<int> f_index_, neg_of_index_;
  Vec chi_f_;
  std::vector<IntVec> pair_;  // <gamma_k, alpha_i^vee>
  std::vector<std::vector<SparseVec>> memo_f_, memo_e_;
  std::vector<std::vector<char>> have_f_, have_e_;
};

SparseMatrix combination(const VermaModule& z, const std::vector<Term>& terms) {
  const PrimeField& F = z.alg->field();
  SparseMatrix out(z.dim, z.dim);
  for (const auto& t : terms) out = combine(F, 1, out, t.coeff, z.action[t.index]);
  return out;
}

std::size_t place(int p, int k) {
  std::size_t v = 1;
  while (k-- > 0) v *= p;
  return v;
}

}  // namespace

std::vector<int> VermaModule::exponents(std::size_t m) const {
  const int p = alg->p();
  std::vector<int> a(alg->system().num_positive());
  for (auto& x : a) {
    x = static_cast<int>(m % p);
    m /= p;
  }
  return a;
}

std::size_t VermaModule::monomial(const std::vector<int>& a) const {
  std::size_t m = 0;
  for (std::size_t k = a.size(); k-- > 0;) m = m * alg->p() + a[k];
  return m;
}

MatrixModule VermaModule::as_module() const { return MatrixModule{alg->field(), dim, action}; }

VermaModule build_baby_verma(std::shared_ptr<const ModularLieAlgebra> alg, const LinearForm& chi,
                             const WeightModP& lambda) {
  const int rank = alg->rank();
  const int N = alg->system().num_positive();
  if (chi.values.size() != static_cast<std::size_t>(alg->dim()))
    throw Error("dimension_mismatch", "chi belongs to a different algebra");
  if (static_cast<int>(lambda.coords.size()) != rank) throw Error("dimension_mismatch", "lambda has the wrong length");
  for (auto c : lambda.coords)
    if (c >= alg->p()) throw Error("invalid_weight", "lambda coordinates must lie in [0, p)");
  for (int k = 0; k < N; ++k)
    if (chi.at(alg->root_index(k)) != 0)
      throw Error("chi_not_in_nplus_perp", "chi(" + alg->basis_name(alg->root_index(k)) + ") != 0");
  const PrimeField& F = alg->field();
  for (int i = 0; i < rank; ++i) {
    const Fp l = lambda.coords[i];
    const Fp lhs = F.sub(F.pow(l, alg->p()), l);
    const Fp rhs = F.pow(chi.at(alg->h_index(i)), alg->p());
    if (lhs != rhs)
      throw Error("lambda_not_in_lambda_chi", "lambda(h_" + std::to_string(i + 1) + ")^p - lambda(h_" + std::to_string(i + 1) +
                                                  ") = " + std::to_string(int(lhs)) + " but chi(h_" + std::to_string(i + 1) +
                                                  ")^p = " + std::to_string(int(rhs)));
  }
  if (place(alg->p(), N) > kMaxVermaDim)
    throw Error("too_large", "p^N = " + std::to_string(alg->p()) + "^" + std::to_string(N) + " exceeds the explicit module limit");

  Straightener s(*alg, chi, lambda);
  VermaModule z;
  z.alg = alg;
  z.chi = chi;
  z.lambda = lambda;
  z.dim = s.dim();
  Vec col(z.dim);
  for (int idx = 0; idx < alg->dim(); ++idx) {
    SparseMatrix a(z.dim, z.dim);
    for (std::size_t m = 0; m < z.dim; ++m) {
      std::fill(col.begin(), col.end(), 0);
      for (const auto& [i, c] : s.act(idx, m)) col[i] = c;
      a.set_column(m, col);
    }
    z.action.push_back(std::move(a));
  }
  return z;
}

RelationReport check_relations(const VermaModule& z) {
  const ModularLieAlgebra& alg = *z.alg;
  const PrimeField& F = alg.field();
  const Fp minus1 = F.neg(1);
  RelationReport rep;
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i + 1; j < alg.dim(); ++j) {
      ++rep.pairs_checked;
      const SparseMatrix lhs =
          combine(F, 1, multiply(F, z.action[i], z.action[j]), minus1, multiply(F, z.action[j], z.action[i]));
      if (!equal(lhs, combination(z, alg.bracket_basis(i, j)))) {
        rep.ok = false;
        rep.failures.push_back("[" + alg.basis_name(i) + ", " + alg.basis_name(j) + "]");
      }
    }
  for (int i = 0; i < alg.dim(); ++i) {
    SparseMatrix pw = z.action[i];
    for (int k = 1; k < alg.p(); ++k) pw = multiply(F, pw, z.action[i]);
    const AlgebraElement xp = alg.basis_p_power(i);
    std::vector<Term> terms;
    for (int t = 0; t < alg.dim(); ++t)
      if (xp.coeffs[t]) terms.push_back({static_cast<std::uint32_t>(t), xp.coeffs[t]});
    const SparseMatrix lhs = combine(F, 1, pw, minus1, combination(z, terms));
    const Fp c = F.pow(z.chi.at(i), alg.p());
    SparseMatrix rhs = SparseMatrix::identity(z.dim);
    rhs = combine(F, c, rhs, 0, rhs);
    if (!equal(lhs, rhs)) {
      rep.ok = false;
      rep.failures.push_back("p-power of " + alg.basis_name(i));
    }
  }
  return rep;
}

std::vector<std::size_t> weight_space_dims(const VermaModule& z) {
  const ModularLieAlgebra& alg = *z.alg;
  const int rank = alg.rank(), p = alg.p();
  std::vector<std::size_t> dims(weight_count(rank, p), 0);
  for (std::size_t m = 0; m < z.dim; ++m) {
    WeightModP w{Vec(rank, 0)};
    for (int i = 0; i < rank; ++i) {
      const auto& col = z.action[alg.h_index(i)].column(m);
      if (col.size() > 1 || (col.size() == 1 && col[0].row != m)) return {};
      w.coords[i] = col.empty() ? 0 : col[0].value;
    }
    ++dims[encode_weight(w, p)];
  }
  return dims;
}

IrreducibilityCertificate is_irreducible(const VermaModule& z, std::uint64_t seed, int budget) {
  return meataxe(z.as_module(), seed, budget);
}

CompositionResult composition_factor_dims(const VermaModule& z, std::uint64_t seed, int budget) {
  return composition_factors(z.as_module(), seed, budget);
}

ModuleMap verma_hom_from_vector(const VermaModule& source, const VermaModule& target, const Vec& w) {
  const ModularLieAlgebra& alg = *source.alg;
  const PrimeField& F = alg.field();
  if (target.alg->dim() != alg.dim() || target.alg->p() != alg.p()) throw Error("dimension_mismatch", "modules over different algebras");
  if (source.chi.values != target.chi.values) throw Error("dimension_mismatch", "modules with different p-characters");
  if (w.size() != target.dim) throw Error("dimension_mismatch", "target vector has the wrong length");
  for (int k = 0; k < alg.system().num_positive(); ++k) {
    const int idx = alg.root_index(k);
    const Vec ew = target.action[idx].apply(F, w);
    if (std::any_of(ew.begin(), ew.end(), [](Fp x) { return x != 0; }))
      throw Error("not_highest_weight", alg.basis_name(idx) + " does not annihilate w");
  }
  for (int i = 0; i < alg.rank(); ++i) {
    Vec hw = target.action[alg.h_index(i)].apply(F, w);
    Vec lw = w;
    F.scale(lw, source.lambda.coords[i]);
    if (hw != lw)
      throw Error("not_highest_weight", "w is not of weight lambda: h_" + std::to_string(i + 1) + " w != " +
                                            std::to_string(int(source.lambda.coords[i])) + " w");
  }
  const int p = alg.p();
  ModuleMap map;
  map.matrix = Matrix(target.dim, source.dim);
  std::vector<Vec> image(source.dim);
  image[0] = w;
  for (std::size_t m = 1; m < source.dim; ++m) {
    int k = 0;
    std::size_t pk = 1;
    while ((m / pk) % p == 0) {
      pk *= p;
      ++k;
    }
    const int f = alg.root_index(alg.system().negate(k));
    image[m] = target.action[f].apply(F, image[m - pk]);
  }
  for (std::size_t m = 0; m < source.dim; ++m)
    for (std::size_t i = 0; i < target.dim; ++i) map.matrix(i, m) = image[m][i];
  map.equivariant = true;
  for (int x = 0; x < alg.dim() && map.equivariant; ++x)
    map.equivariant = multiply(F, target.action[x], map.matrix) == multiply(F, map.matrix, source.action[x]);
  map.rank = rank(F, map.matrix);
  map.kernel_dim = source.dim - map.rank;
  return map;
}

LinkageReport linkage_components(std::shared_ptr<const ModularLieAlgebra> alg, const LinearForm& chi,
                                 std::uint64_t seed, int budget) {
  const int rank = alg->rank(), p = alg->p();
  if (rank > 2) throw Error("rank_too_large", "linkage is computed explicitly for rank <= 2 only");
  const auto total = static_cast<std::uint32_t>(weight_count(rank, p));
  LinkageReport rep;
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  const auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  struct ClassRep {
    MatrixModule module;
    IrreducibilityCertificate cert;
    std::uint32_t owner;
  };
  std::vector<ClassRep> reps;
  for (std::uint32_t code = 0; code < total; ++code) {
    const auto z = build_baby_verma(alg, chi, decode_weight(code, rank, p));
    auto comp = composition_factors(z.as_module(), seed + code, budget);
    if (comp.inconclusive) rep.partial = true;
    rep.factor_dims.push_back(comp.dims());
    std::vector<int> classes;
    for (std::size_t f = 0; f < comp.factors.size(); ++f) {
      int cls = -1;
      if (comp.certificates[f].status == IrreducibleStatus::Irreducible)
        for (std::size_t r = 0; r < reps.size() && cls < 0; ++r)
          if (reps[r].module.dim == comp.factors[f].dim &&
              modules_isomorphic(reps[r].module, reps[r].cert, comp.factors[f]))
            cls = static_cast<int>(r);
      if (cls < 0) {
        cls = static_cast<int>(reps.size());
        if (comp.certificates[f].status == IrreducibleStatus::Irreducible)
          reps.push_back({comp.factors[f], comp.certificates[f], code});
        else
          reps.push_back({MatrixModule{alg->field(), 0, {}}, comp.certificates[f], code});
      } else {
        parent[find(code)] = find(reps[cls].owner);
      }
      classes.push_back(cls);
    }
    rep.factor_classes.push_back(std::move(classes));
  }
  rep.class_count = static_cast<int>(reps.size());
  std::vector<int> comp_of(total, -1);
  for (std::uint32_t code = 0; code < total; ++code) {
    const auto root = find(code);
    if (comp_of[root] < 0) {
      comp_of[root] = static_cast<int>(rep.components.size());
      rep.components.emplace_back();
    }
    rep.components[comp_of[root]].push_back(decode_weight(code, rank, p));
  }
  return rep;
}

}  // namespace modlie
