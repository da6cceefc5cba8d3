#include "modlie/divisibility.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace modlie {

bool PsiSubset::contains(int id) const { return std::binary_search(roots.begin(), roots.end(), id); }

PsiSubset PsiSubset::all_positive(const RootSystem& rs) { return complement_of(rs, {}); }

PsiSubset PsiSubset::complement_of(const RootSystem& rs, const std::vector<int>& removed) {
  PsiSubset s;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (std::find(removed.begin(), removed.end(), k) == removed.end()) s.roots.push_back(k);
  return s;
}

SubalgebraCandidate SubalgebraCandidate::from_generators(const ModularLieAlgebra& alg,
                                                         std::vector<AlgebraElement> generators) {
  SubalgebraCandidate c;
  Matrix m(0, alg.dim());
  for (const auto& g : generators) {
    if (static_cast<int>(g.coeffs.size()) != alg.dim())
      throw Error("dimension_mismatch", "subalgebra generator has the wrong length");
    m.append_row(g.coeffs);
  }
  if (generators.empty()) m = Matrix(0, alg.dim());
  rref(alg.field(), m);
  for (std::size_t i = 0; i < m.rows(); ++i) c.closure_basis.push_back(AlgebraElement{m.row_vec(i)});
  c.dim = static_cast<int>(m.rows());
  c.generators = std::move(generators);
  return c;
}

SubalgebraCandidate SubalgebraCandidate::borel(const ModularLieAlgebra& alg) {
  std::vector<AlgebraElement> gens;
  for (int i = 0; i < alg.rank(); ++i) gens.push_back(alg.basis(alg.h_index(i)));
  for (int k = 0; k < alg.system().num_positive(); ++k) gens.push_back(alg.basis(alg.root_index(k)));
  return from_generators(alg, std::move(gens));
}

std::string method_label(BoundMethod m) {
  switch (m) {
    case BoundMethod::Nonspecial: return "nonspecial";
    case BoundMethod::PClosed: return "p-closed";
    case BoundMethod::Unipotent: return "unipotent";
    case BoundMethod::Induction: return "induction";
  }
  return "nonspecial";
}

bool is_nonspecial(LieType type, int p) {
  if (p == 2 && (type == LieType::B || type == LieType::C || type == LieType::F)) return false;
  if (p == 3 && type == LieType::G) return false;
  return true;
}

BoundReport bound_nonspecial(const LinearForm& chi) {
  const ModularLieAlgebra& alg = *chi.alg;
  if (!is_nonspecial(alg.system().datum().type, alg.p()))
    throw Error("special_prime", "p=" + std::to_string(alg.p()) + " is special for " + alg.type_label() +
                                     "; use the p-closed route (bound --psi ...) instead");
  const auto c = centralizer(chi);
  BoundReport r;
  r.method = BoundMethod::Nonspecial;
  r.exponent = d_chi(alg, c);
  r.witnesses.push_back("dim c_g(chi) = " + std::to_string(c.dim) + ", d(chi) = (" + std::to_string(alg.dim()) +
                        " - " + std::to_string(c.dim) + ")/2 = " + std::to_string(r.exponent));
  return r;
}

namespace {

// First pair (alpha, beta) breaking p-closedness, if any.
std::optional<std::pair<int, int>> p_closed_violation(const RootSystem& rs, const PsiSubset& psi, int p) {
  for (int a : psi.roots)
    for (int b : psi.roots) {
      if (b <= a) continue;
      const auto sum = rs.find(rs.root(a) + rs.root(b));
      if (!sum || psi.contains(*sum)) continue;
      const Root target = rs.root(*sum);
      for (int g : psi.roots) {
        const auto d = rs.find(target - rs.root(g));
        if (!d || !psi.contains(*d)) continue;
        if (rs.root_string_bound(rs.root(g), rs.root(*d)) % p != 0) return std::make_pair(a, b);
      }
    }
  return std::nullopt;
}

// Whether `target` is a sum of exactly `count` roots from psi (with repetition).
bool is_sum_of(const RootSystem& rs, const PsiSubset& psi, const IntVec& target, int count, std::size_t start) {
  const int h = std::accumulate(target.begin(), target.end(), 0);
  if (count == 0) return h == 0;
  if (h < count) return false;
  for (std::size_t k = start; k < psi.roots.size(); ++k) {
    const Root& r = rs.positive_roots()[psi.roots[k]];
    IntVec rest = target;
    bool ok = true;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      rest[i] -= r.coords[i];
      if (rest[i] < 0) ok = false;
    }
    if (ok && is_sum_of(rs, psi, rest, count - 1, k)) return true;
  }
  return false;
}

BoundReport fail(BoundMethod m, std::string why, std::vector<std::string> witnesses = {}) {
  BoundReport r;
  r.ok = false;
  r.method = m;
  r.failure = std::move(why);
  r.witnesses = std::move(witnesses);
  return r;
}

BoundReport p_closed_with(const PsiSubset& psi, const LinearForm& chi, const CentralizerReport& cent) {
  const ModularLieAlgebra& alg = *chi.alg;
  const RootSystem& rs = alg.system();
  const int p = alg.p();
  if (!chi.in_b_perp()) return fail(BoundMethod::PClosed, "chi is not in b-perp");
  if (auto v = p_closed_violation(rs, psi, p))
    return fail(BoundMethod::PClosed, "Psi is not " + std::to_string(p) + "-closed",
                {"pair " + format_root(rs.root(v->first)) + ", " + format_root(rs.root(v->second))});
  for (int a : psi.roots)
    for (int b : psi.roots) {
      if (b < a) continue;
      const auto sum = rs.find(rs.root(a) + rs.root(b));
      if (!sum || !psi.contains(*sum)) continue;
      if (chi.at(alg.root_index(rs.negate(*sum))) != 0)
        return fail(BoundMethod::PClosed, "chi([m,m]) != 0", {"chi(e[" + format_root(-rs.root(*sum)) + "]) != 0"});
    }
  // chi(m^[p]) = 0 reduces to chi vanishing on root vectors of p-fold sums.
  for (int neg : delta_support(chi)) {
    const Root target = -rs.root(neg);
    if (is_sum_of(rs, psi, target.coords, p, 0))
      return fail(BoundMethod::PClosed, "chi(m^[p]) may be nonzero",
                  {format_root(target) + " is a sum of " + std::to_string(p) + " roots of Psi"});
  }
  // m cap c_g(chi): combinations of the centraliser basis vanishing off m.
  std::vector<bool> in_m(alg.dim(), false);
  for (int a : psi.roots) in_m[alg.root_index(rs.negate(a))] = true;
  std::vector<int> off;
  for (int i = 0; i < alg.dim(); ++i)
    if (!in_m[i]) off.push_back(i);
  Matrix proj(off.size(), cent.basis.size());
  for (std::size_t r = 0; r < off.size(); ++r)
    for (std::size_t k = 0; k < cent.basis.size(); ++k) proj(r, k) = cent.basis[k].coeffs[off[r]];
  const Matrix combos = cent.basis.empty() ? Matrix(0, 0) : nullspace(alg.field(), proj);
  if (combos.rows() > 0) {
    AlgebraElement w = alg.zero();
    for (std::size_t k = 0; k < cent.basis.size(); ++k) {
      Vec tmp = cent.basis[k].coeffs;
      alg.field().axpy(w.coeffs, combos(0, k), tmp);
    }
    return fail(BoundMethod::PClosed, "m intersects c_g(chi) nontrivially",
                {"dim(m cap c_g(chi)) = " + std::to_string(combos.rows()), "witness " + format_element(alg, w)});
  }
  BoundReport r;
  r.method = BoundMethod::PClosed;
  r.exponent = static_cast<int>(psi.size());
  r.witnesses.push_back("|Psi| = " + std::to_string(psi.size()) + ", Psi is " + std::to_string(p) +
                        "-closed, m cap c_g(chi) = 0 (dim c_g(chi) = " + std::to_string(cent.dim) + ")");
  return r;
}

}  // namespace

bool is_p_closed(const RootSystem& rs, const PsiSubset& psi, int p) { return !p_closed_violation(rs, psi, p); }

BoundReport bound_p_closed(const PsiSubset& psi, const LinearForm& chi) {
  for (int a : psi.roots)
    if (a < 0 || a >= chi.alg->system().num_positive()) throw Error("invalid_root", "Psi contains a non-positive root id");
  return p_closed_with(psi, chi, centralizer(chi));
}

BoundReport verify_induction_subalgebra(const SubalgebraCandidate& cand, const LinearForm& chi) {
  const ModularLieAlgebra& alg = *chi.alg;
  const PrimeField& F = alg.field();
  const auto& basis = cand.closure_basis;
  EchelonSpace span(F, alg.dim());
  for (const auto& b : basis) span.add(b.coeffs);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const AlgebraElement z = alg.bracket(basis[i], basis[j]);
      if (!span.contains(z.coeffs))
        return fail(BoundMethod::Induction, "not closed under the bracket",
                    {"[" + format_element(alg, basis[i]) + ", " + format_element(alg, basis[j]) + "] = " + format_element(alg, z)});
      if (chi(z) != 0)
        return fail(BoundMethod::Induction, "chi([r,r]) != 0",
                    {"chi([" + format_element(alg, basis[i]) + ", " + format_element(alg, basis[j]) + "]) = " + std::to_string(int(chi(z)))});
    }
  // Basis p-powers. For a general element the Jacobson cross terms are
  // iterated brackets of basis elements, already covered above.
  EchelonSpace span_with_centre = span;
  for (const auto& z : alg.center()) {
    for (int i = 0; i < alg.dim(); ++i)
      if (z.coeffs[i] && !alg.is_toral(i))
        return fail(BoundMethod::Induction, "centre is not toral; r^[p] is ambiguous", {format_element(alg, z)});
    if (chi(z) != 0)
      return fail(BoundMethod::Induction, "chi does not vanish on the centre; chi(r^[p]) is ambiguous", {format_element(alg, z)});
    span_with_centre.add(z.coeffs);
  }
  for (const auto& b : basis) {
    const auto pw = alg.restricted_power(b);
    if (!span_with_centre.contains(pw.value.coeffs))
      return fail(BoundMethod::Induction, "not closed under the p-map",
                  {format_element(alg, b) + "^[p] = " + format_element(alg, pw.value)});
    if (chi(pw.value) != 0)
      return fail(BoundMethod::Induction, "chi(r^[p]) != 0",
                  {"chi(" + format_element(alg, b) + "^[p]) = " + std::to_string(int(chi(pw.value)))});
  }
  BoundReport r;
  r.method = BoundMethod::Induction;
  r.subalgebra_dim = cand.dim;
  r.exponent = alg.dim() - cand.dim;
  r.witnesses.push_back("dim r = " + std::to_string(cand.dim) + ", closed under bracket and [p], chi([r,r]) = 0, chi(r^[p]) = 0");
  r.witnesses.push_back("induced module dimension p^" + std::to_string(r.exponent));
  return r;
}

BoundReport best_bound(const LinearForm& chi, int max_removed) {
  const ModularLieAlgebra& alg = *chi.alg;
  const RootSystem& rs = alg.system();
  const auto cent = centralizer(chi);
  std::vector<std::string> trail;
  BoundReport best;
  best.exponent = 0;
  best.method = BoundMethod::Nonspecial;
  bool have = false;
  if (is_nonspecial(rs.datum().type, alg.p())) {
    if (cent.d_chi) {
      best.exponent = *cent.d_chi;
      best.witnesses.push_back("nonspecial: d(chi) = " + std::to_string(*cent.d_chi) + " (dim c_g(chi) = " + std::to_string(cent.dim) + ")");
      have = true;
    } else {
      trail.push_back("nonspecial: skipped, odd codimension");
    }
  } else {
    trail.push_back("nonspecial: skipped, p is special for " + alg.type_label());
  }
  if (chi.in_b_perp()) {
    const int N = rs.num_positive();
    bool found = false;
    for (int k = 0; k <= max_removed && !found; ++k) {
      if (N - k < best.exponent || (have && N - k == best.exponent)) break;
      std::vector<int> removed(k);
      std::function<void(int, int)> search = [&](int pos, int start) {
        if (found) return;
        if (pos == k) {
          const PsiSubset psi = PsiSubset::complement_of(rs, removed);
          BoundReport r = p_closed_with(psi, chi, cent);
          if (r.ok) {
            found = true;
            std::string desc = "p-closed: Psi = Phi+";
            for (int id : removed) desc += " \\ {" + format_root(rs.root(id)) + "}";
            r.witnesses.insert(r.witnesses.begin(), desc);
            for (auto& w : trail) r.witnesses.push_back(w);
            for (auto& w : best.witnesses) r.witnesses.push_back("superseded " + w);
            best = r;
          }
          return;
        }
        for (int id = start; id < N; ++id) {
          removed[pos] = id;
          search(pos + 1, id + 1);
        }
      };
      search(0, 0);
      if (!found) trail.push_back("p-closed: no admissible Psi with " + std::to_string(k) + " roots removed");
    }
    if (found) return best;
  } else {
    trail.push_back("p-closed: skipped, chi not in b-perp");
  }
  for (auto& w : trail) best.witnesses.push_back(w);
  return best;
}

}  // namespace modlie
