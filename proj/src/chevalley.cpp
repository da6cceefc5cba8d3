#include "modlie/chevalley.hpp"

#include <algorithm>
#include <cstdlib>

#include "modlie/serialize.hpp"

namespace modlie {

std::string convention_label(Convention c) {
  switch (c) {
    case Convention::Extraspecial: return "extraspecial";
    case Convention::ExtraspecialNegative: return "extraspecial-negative";
    case Convention::ExtraspecialAlternating: return "extraspecial-alternating";
  }
  return "extraspecial";
}

Convention parse_convention(const std::string& label) {
  if (label == "extraspecial") return Convention::Extraspecial;
  if (label == "extraspecial-negative") return Convention::ExtraspecialNegative;
  if (label == "extraspecial-alternating") return Convention::ExtraspecialAlternating;
  throw Error("invalid_convention", "unknown sign convention '" + label +
                                        "' (expected extraspecial, extraspecial-negative or extraspecial-alternating)");
}

std::vector<std::pair<int, int>> extraspecial_pairs(const RootSystem& rs) {
  const int N = rs.num_positive();
  std::vector<std::pair<int, int>> out(N, {-1, -1});
  for (int xi = 0; xi < N; ++xi) {
    const Root r = rs.root(xi);
    for (int a = 0; a < xi; ++a) {
      const auto b = rs.find(r - rs.root(a));
      if (b && *b < N) {
        out[xi] = {a, *b};
        break;
      }
    }
  }
  return out;
}

namespace {

int extraspecial_sign(Convention c, const Root& xi) {
  switch (c) {
    case Convention::Extraspecial: return 1;
    case Convention::ExtraspecialNegative: return -1;
    case Convention::ExtraspecialAlternating: return xi.height() % 2 == 0 ? 1 : -1;
  }
  return 1;
}

// N(r, s) for arbitrary root ids, derived from the table of positive pairs.
class MixedLookup {
 public:
  MixedLookup(const RootSystem& rs, const std::vector<std::vector<int>>& pos) : rs_(rs), pos_(pos) {}

  int operator()(int r, int s) const {
    const int N = rs_.num_positive();
    const Root rr = rs_.root(r), sr = rs_.root(s);
    const auto sum = rs_.find(rr + sr);
    if (!sum) return 0;
    const bool rp = r < N, sp = s < N;
    if (rp && sp) return pos_[r][s];
    if (!rp && !sp) return -pos_[r - N][s - N];
    if (!rp) return -(*this)(s, r);
    // r positive, s negative; t = -(r + s)
    const Root t = -(rr + sr);
    const int t_id = *rs_.find(t);
    int num, den;
    if (*sum < N) {
      // N(r,s) = (t,t)/(r,r) N(s,t), with s, t negative
      num = -rs_.norm(t) * pos_[s - N][t_id - N];
      den = rs_.norm(rr);
    } else {
      // N(r,s) = (t,t)/(s,s) N(t,r), with t, r positive
      num = rs_.norm(t) * pos_[t_id][r];
      den = rs_.norm(sr);
    }
    if (num % den != 0) throw Error("internal", "non-integral structure constant");
    return num / den;
  }

 private:
  const RootSystem& rs_;
  const std::vector<std::vector<int>>& pos_;
};

}  // namespace

StructureConstants::StructureConstants(std::shared_ptr<const RootSystem> system, Convention convention)
    : system_(std::move(system)), convention_(convention), num_roots_(system_->num_roots()) {
  const RootSystem& rs = *system_;
  const int N = rs.num_positive();
  std::vector<std::vector<int>> pos(N, std::vector<int>(N, 0));
  const auto extra = extraspecial_pairs(rs);
  MixedLookup lookup(rs, pos);
  for (int xi = 0; xi < N; ++xi) {
    if (extra[xi].first < 0) continue;  // simple
    const Root xr = rs.root(xi);
    const auto [a, b] = extra[xi];
    const Root ar = rs.root(a), br = rs.root(b);
    const int nab = extraspecial_sign(convention_, xr) * rs.root_string_bound(ar, br);
    pos[a][b] = nab;
    pos[b][a] = -nab;
    for (int c = a + 1; c < N; ++c) {
      const auto d = rs.find(xr - rs.root(c));
      if (!d || *d >= N || *d <= c || c == b) continue;
      const Root cr = rs.root(c);
      const int neg_c = rs.negate(c), neg_d = rs.negate(*d);
      long long acc_num = 0;
      // Two terms of the four-root relation, each over a common denominator.
      long long t1 = 0, t2 = 0;
      int d1 = 1, d2 = 1;
      if (rs.is_root(br - cr)) {
        t1 = static_cast<long long>(lookup(b, neg_c)) * lookup(a, neg_d);
        d1 = rs.norm(br - cr);
      }
      if (rs.is_root(ar - cr)) {
        t2 = static_cast<long long>(lookup(neg_c, a)) * lookup(b, neg_d);
        d2 = rs.norm(ar - cr);
      }
      acc_num = (t1 * d2 + t2 * d1) * rs.norm(xr);
      const long long den = static_cast<long long>(d1) * d2 * nab;
      if (acc_num % den != 0) throw Error("internal", "non-integral structure constant for " + format_root(xr));
      const int ncd = static_cast<int>(acc_num / den);
      pos[c][*d] = ncd;
      pos[*d][c] = -ncd;
    }
  }
  fill_from_positive(pos);
}

StructureConstants::StructureConstants(std::shared_ptr<const RootSystem> system, Convention convention,
                                       const std::vector<std::pair<std::pair<int, int>, int>>& positive_pairs)
    : system_(std::move(system)), convention_(convention), num_roots_(system_->num_roots()) {
  const int N = system_->num_positive();
  std::vector<std::vector<int>> pos(N, std::vector<int>(N, 0));
  for (const auto& [ab, v] : positive_pairs) {
    const auto [a, b] = ab;
    if (a < 0 || b < 0 || a >= N || b >= N) throw Error("invalid_cache", "structure constant index out of range");
    pos[a][b] = v;
    pos[b][a] = -v;
  }
  fill_from_positive(pos);
}

void StructureConstants::fill_from_positive(const std::vector<std::vector<int>>& pos) {
  const RootSystem& rs = *system_;
  MixedLookup lookup(rs, pos);
  table_.assign(static_cast<std::size_t>(num_roots_) * num_roots_, 0);
  for (int r = 0; r < num_roots_; ++r)
    for (int s = 0; s < num_roots_; ++s) {
      if (r == rs.negate(s) || r == s) continue;
      table_[static_cast<std::size_t>(r) * num_roots_ + s] = lookup(r, s);
    }
  coroots_.resize(num_roots_);
  for (int r = 0; r < num_roots_; ++r) coroots_[r] = rs.coroot_coords(rs.root(r));
}

std::vector<std::pair<std::pair<int, int>, int>> StructureConstants::positive_pairs() const {
  std::vector<std::pair<std::pair<int, int>, int>> out;
  const int N = system_->num_positive();
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (const int v = this->N(a, b); v != 0) out.push_back({{a, b}, v});
  return out;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Fp c) { return c == 0; });
}

ModularLieAlgebra::ModularLieAlgebra(std::shared_ptr<const StructureConstants> sc, int p)
    : sc_(std::move(sc)), field_(p), dim_(sc_->system().num_roots() + sc_->system().rank()) {
  const RootSystem& rs = system();
  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      std::vector<Term> terms;
      const int ri = root_of_index(i), rj = root_of_index(j);
      if (ri >= 0 && rj >= 0) {
        if (ri == rs.negate(rj)) {
          const IntVec& h = sc_->coroot(ri);
          for (int k = 0; k < rank(); ++k)
            if (Fp c = field_.reduce(h[k]); c != 0) terms.push_back({static_cast<std::uint32_t>(h_index(k)), c});
        } else if (const int n = sc_->N(ri, rj); n != 0) {
          const int sum = *rs.find(rs.root(ri) + rs.root(rj));
          if (Fp c = field_.reduce(n); c != 0) terms.push_back({static_cast<std::uint32_t>(root_index(sum)), c});
        }
      } else if (ri >= 0 && rj < 0) {
        const int k = j - h_index(0);
        if (Fp c = field_.reduce(-rs.pairing_with_coroot(rs.root(ri), k)); c != 0)
          terms.push_back({static_cast<std::uint32_t>(i), c});
      } else if (ri < 0 && rj >= 0) {
        const int k = i - h_index(0);
        if (Fp c = field_.reduce(rs.pairing_with_coroot(rs.root(rj), k)); c != 0)
          terms.push_back({static_cast<std::uint32_t>(j), c});
      }
      table_[static_cast<std::size_t>(i) * dim_ + j] = std::move(terms);
    }
  }
}

int ModularLieAlgebra::root_index(int root_id) const {
  const int N = system().num_positive();
  if (root_id < N) return N + rank() + root_id;
  return N - 1 - (root_id - N);
}

int ModularLieAlgebra::root_of_index(int idx) const {
  const int N = system().num_positive();
  if (idx < N) return N + (N - 1 - idx);
  if (idx >= N + rank()) return idx - N - rank();
  return -1;
}

std::string ModularLieAlgebra::basis_name(int idx) const {
  const int r = root_of_index(idx);
  if (r < 0) return "h" + std::to_string(idx - h_index(0) + 1);
  return "e[" + format_root(system().root(r)) + "]";
}

AlgebraElement ModularLieAlgebra::basis(int idx) const {
  AlgebraElement x = zero();
  x.coeffs.at(idx) = 1;
  return x;
}

AlgebraElement ModularLieAlgebra::root_vector(const Root& r) const {
  const auto id = system().find(r);
  if (!id) throw Error("invalid_root", format_root(r) + " is not a root of " + type_label());
  return basis(root_index(*id));
}

AlgebraElement ModularLieAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  if (static_cast<int>(x.coeffs.size()) != dim_ || static_cast<int>(y.coeffs.size()) != dim_)
    throw Error("dimension_mismatch", "bracket operands do not belong to this algebra");
  std::vector<unsigned> acc(dim_, 0);
  std::vector<int> ynz;
  for (int j = 0; j < dim_; ++j)
    if (y.coeffs[j]) ynz.push_back(j);
  const unsigned p = unsigned(field_.p());
  for (int i = 0; i < dim_; ++i) {
    const unsigned xi = x.coeffs[i];
    if (!xi) continue;
    for (int j : ynz) {
      const unsigned c = (xi * y.coeffs[j]) % p;
      for (const auto& t : bracket_basis(i, j)) acc[t.index] += c * t.coeff;
    }
  }
  AlgebraElement z = zero();
  for (int k = 0; k < dim_; ++k) z.coeffs[k] = static_cast<Fp>(acc[k] % p);
  return z;
}

Matrix ModularLieAlgebra::ad_matrix(const AlgebraElement& x) const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    const Fp xi = x.coeffs[i];
    if (!xi) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& t : bracket_basis(i, j)) m(t.index, j) = field_.add(m(t.index, j), field_.mul(xi, t.coeff));
  }
  return m;
}

AlgebraElement ModularLieAlgebra::basis_p_power(int idx) const {
  if (is_toral(idx)) return basis(idx);
  return zero();
}

struct ModularLieAlgebra::PowerSolver {
  // Selected equations: (basis column j, component k) of [z, b_j].
  std::vector<std::pair<int, int>> equations;
  Matrix transform;  // T with T * S = rref(S)
  std::vector<std::size_t> pivots;
  std::vector<AlgebraElement> centre;
};

const ModularLieAlgebra::PowerSolver& ModularLieAlgebra::power_solver() const {
  if (solver_) return *solver_;
  auto solver = std::make_shared<PowerSolver>();
  EchelonSpace rowspace(field_, dim_);
  std::vector<Vec> selected;
  // Simple root vectors first: they usually pin z down after a few columns.
  std::vector<int> order;
  for (int i = 0; i < rank(); ++i) {
    order.push_back(root_index(system().simple(i)));
    order.push_back(root_index(system().negate(system().simple(i))));
  }
  for (int j = 0; j < dim_; ++j)
    if (std::find(order.begin(), order.end(), j) == order.end()) order.push_back(j);
  for (int j : order) {
    if (static_cast<int>(rowspace.dim()) == dim_) break;
    // Row k of the map z -> [z, b_j]: coefficient of z_i is ([b_i, b_j])_k.
    std::vector<Vec> rows(dim_, Vec(dim_, 0));
    for (int i = 0; i < dim_; ++i)
      for (const auto& t : bracket_basis(i, j)) rows[t.index][i] = t.coeff;
    for (int k = 0; k < dim_; ++k) {
      if (std::all_of(rows[k].begin(), rows[k].end(), [](Fp c) { return c == 0; })) continue;
      if (rowspace.add(rows[k])) {
        solver->equations.push_back({j, k});
        selected.push_back(rows[k]);
      }
    }
  }
  const std::size_t r = selected.size();
  Matrix aug(r, dim_ + r);
  for (std::size_t e = 0; e < r; ++e) {
    std::copy(selected[e].begin(), selected[e].end(), aug.row(e));
    aug(e, dim_ + e) = 1;
  }
  auto piv = rref(field_, aug);
  solver->pivots.assign(piv.begin(), piv.begin() + static_cast<long>(r));
  solver->transform = Matrix(r, r);
  for (std::size_t e = 0; e < r; ++e) std::copy(aug.row(e) + dim_, aug.row(e) + dim_ + r, solver->transform.row(e));
  Matrix s(0, dim_);
  for (const auto& v : selected) s.append_row(v);
  if (r == 0) s = Matrix(0, dim_);
  const Matrix ns = nullspace(field_, s);
  for (std::size_t i = 0; i < ns.rows(); ++i) solver->centre.push_back(AlgebraElement{ns.row_vec(i)});
  solver_ = solver;
  return *solver_;
}

const std::vector<AlgebraElement>& ModularLieAlgebra::center() const {
  if (!centre_ready_) {
    centre_ = power_solver().centre;
    centre_ready_ = true;
  }
  return centre_;
}

ModularLieAlgebra::PowerResult ModularLieAlgebra::restricted_power(const AlgebraElement& x) const {
  if (static_cast<int>(x.coeffs.size()) != dim_) throw Error("dimension_mismatch", "element does not belong to this algebra");
  const PowerSolver& solver = power_solver();
  const Matrix target = matrix_power(field_, ad_matrix(x), p());
  const std::size_t r = solver.equations.size();
  Vec rhs(r);
  for (std::size_t e = 0; e < r; ++e) rhs[e] = target(solver.equations[e].second, solver.equations[e].first);
  const Vec y = apply(field_, solver.transform, rhs);
  PowerResult out;
  out.value = zero();
  for (std::size_t e = 0; e < r; ++e) out.value.coeffs[solver.pivots[e]] = y[e];
  if (!(ad_matrix(out.value) == target))
    throw Error("internal", "ad(x)^p is not inner: restricted structure is inconsistent");
  if (!solver.centre.empty()) {
    out.ambiguous = true;
    out.centre = solver.centre;
  }
  return out;
}

std::string format_element(const ModularLieAlgebra& alg, const AlgebraElement& x) {
  std::string out;
  for (int i = 0; i < alg.dim(); ++i) {
    const Fp c = x.coeffs[i];
    if (!c) continue;
    if (!out.empty()) out += '+';
    if (c != 1) out += std::to_string(int(c));
    out += alg.basis_name(i);
  }
  return out.empty() ? "0" : out;
}

AlgebraElement regular_nilpotent_element(const ModularLieAlgebra& alg) {
  AlgebraElement e = alg.zero();
  for (int i = 0; i < alg.rank(); ++i) e.coeffs[alg.root_index(alg.system().simple(i))] = 1;
  return e;
}

std::shared_ptr<const StructureConstants> make_structure_constants(const std::string& type_label, Convention convention) {
  auto rs = std::make_shared<const RootSystem>(CartanDatum::parse(type_label));
  if (const char* dir = std::getenv("MODLIE_CACHE_DIR"); dir && *dir) return cached_structure_constants(rs, convention, dir);
  return std::make_shared<const StructureConstants>(rs, convention);
}

std::shared_ptr<const ModularLieAlgebra> make_algebra(const std::string& type_label, int p, Convention convention) {
  return std::make_shared<const ModularLieAlgebra>(make_structure_constants(type_label, convention), p);
}

}  // namespace modlie
