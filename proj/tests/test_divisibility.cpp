#include <doctest.h>

#include "modlie/divisibility.hpp"
#include "modlie/scenario.hpp"

using namespace modlie;

namespace {

int root_id(const ModularLieAlgebra& g, IntVec c) { return *g.system().find(Root{std::move(c)}); }

const Scenario& scenario(const std::string& id) {
  static const ScenarioFile f = load_scenarios(default_scenario_path());
  for (const auto& s : f.scenarios)
    if (s.id == id) return s;
  throw Error("missing", id);
}

}  // namespace

TEST_SUITE("divisibility") {
  TEST_CASE("non-special primes") {
    CHECK(is_nonspecial(LieType::G, 2));
    CHECK_FALSE(is_nonspecial(LieType::G, 3));
    CHECK_FALSE(is_nonspecial(LieType::F, 2));
    CHECK(is_nonspecial(LieType::F, 3));
    CHECK_FALSE(is_nonspecial(LieType::B, 2));
    CHECK_FALSE(is_nonspecial(LieType::C, 2));
    for (int p : {2, 3, 5, 7}) {
      CHECK(is_nonspecial(LieType::E, p));
      CHECK(is_nonspecial(LieType::A, p));
    }
  }

  TEST_CASE("non-special bound") {
    const BoundReport e6 = bound_nonspecial(regular_levi_form(make_algebra("E6", 2)));
    CHECK(e6.ok);
    CHECK(e6.exponent == 35);
    CHECK(e6.method == BoundMethod::Nonspecial);
    CHECK(bound_nonspecial(regular_levi_form(make_algebra("F4", 3))).exponent == 23);
    CHECK(bound_nonspecial(zero_form(make_algebra("E6", 2))).exponent == 0);
    CHECK_THROWS_WITH_AS(bound_nonspecial(regular_levi_form(make_algebra("F4", 2))), doctest::Contains("p-closed"), Error);
    CHECK_THROWS_AS(bound_nonspecial(regular_levi_form(make_algebra("G2", 3))), Error);
  }

  TEST_CASE("p-closed subsets") {
    auto f4 = make_algebra("F4", 2);
    const PsiSubset psi = PsiSubset::complement_of(f4->system(), {root_id(*f4, {0, 1, 2, 0})});
    CHECK(psi.size() == 23);
    CHECK(is_p_closed(f4->system(), psi, 2));
    CHECK_FALSE(is_p_closed(f4->system(), psi, 3));
    for (const auto& t : {"G2", "F4", "E6"})
      for (int p : {2, 3, 5}) {
        auto g = make_algebra(t, p);
        CHECK(is_p_closed(g->system(), PsiSubset::all_positive(g->system()), p));
      }
    auto g2 = make_algebra("G2", 3);
    PsiSubset ab{{root_id(*g2, {1, 0}), root_id(*g2, {0, 1})}};
    std::sort(ab.roots.begin(), ab.roots.end());
    CHECK_FALSE(is_p_closed(g2->system(), ab, 3));
    CHECK(ab.contains(root_id(*g2, {0, 1})));
    CHECK_FALSE(ab.contains(root_id(*g2, {1, 1})));
  }

  TEST_CASE("p-closed bound") {
    auto f4 = make_algebra("F4", 2);
    const LinearForm chi = regular_levi_form(f4);
    const BoundReport r = bound_p_closed(PsiSubset::complement_of(f4->system(), {root_id(*f4, {0, 1, 2, 0})}), chi);
    CHECK(r.ok);
    CHECK(r.exponent == 23);
    CHECK(r.method == BoundMethod::PClosed);
    const BoundReport full = bound_p_closed(PsiSubset::all_positive(f4->system()), chi);
    CHECK_FALSE(full.ok);
    CHECK(full.failure.find("c_g(chi)") != std::string::npos);
    CHECK_FALSE(full.witnesses.empty());

    auto g2 = make_algebra("G2", 3);
    const BoundReport g = bound_p_closed(PsiSubset::all_positive(g2->system()), regular_levi_form(g2));
    CHECK(g.ok);
    CHECK(g.exponent == 6);
    CHECK(bound_p_closed(PsiSubset{}, regular_levi_form(g2)).exponent == 0);
    CHECK_THROWS_AS(bound_p_closed(PsiSubset{{100}}, regular_levi_form(g2)), Error);
  }

  TEST_CASE("p-closed certificates name the violated condition") {
    auto g2 = make_algebra("G2", 3);
    PsiSubset ab{{root_id(*g2, {1, 0}), root_id(*g2, {0, 1})}};
    std::sort(ab.roots.begin(), ab.roots.end());
    const BoundReport r = bound_p_closed(ab, regular_levi_form(g2));
    CHECK_FALSE(r.ok);
    CHECK(r.failure.find("closed") != std::string::npos);
    // chi(e_-a-b) != 0 for a Levi form supported on a non-simple root
    auto a2 = make_algebra("A2", 3);
    LinearForm chi = zero_form(a2);
    chi.values[a2->root_index(root_id(*a2, {-1, -1}))] = 1;
    const BoundReport s = bound_p_closed(PsiSubset::all_positive(a2->system()), chi);
    CHECK_FALSE(s.ok);
    CHECK(s.failure.find("chi([m,m])") != std::string::npos);
  }

  TEST_CASE("A1 p=2 regular form is central") {
    auto a1 = make_algebra("A1", 2);
    const LinearForm chi = regular_levi_form(a1);
    CHECK(centralizer(chi).basis.size() == 3);
    CHECK_FALSE(bound_p_closed(PsiSubset::all_positive(a1->system()), chi).ok);
    CHECK(best_bound(chi).exponent == 0);
  }

  TEST_CASE("full n- meets the centraliser trivially exactly when the route gives N") {
    for (const auto& [t, p] : std::vector<std::pair<std::string, int>>{
             {"G2", 2}, {"G2", 3}, {"F4", 2}, {"F4", 3}, {"E6", 2}, {"E6", 3}, {"A2", 3}, {"B2", 3}}) {
      auto g = make_algebra(t, p);
      const LinearForm chi = regular_levi_form(g);
      const CentralizerReport c = centralizer(chi);
      // span(n-) + c_g(chi) is direct iff the combined rank is N + dim c
      const int N = g->system().num_positive();
      Matrix m(N + c.dim, g->dim());
      for (int a = 0; a < N; ++a) m(a, g->root_index(g->system().negate(a))) = 1;
      for (int k = 0; k < c.dim; ++k) m.set_row(N + k, c.basis[k].coeffs);
      const bool direct = static_cast<int>(rank(g->field(), m)) == N + c.dim;
      const BoundReport r = bound_p_closed(PsiSubset::all_positive(g->system()), chi);
      CHECK_MESSAGE(r.ok == direct, t << " p=" << p);
      if (r.ok) CHECK(r.exponent == N);
    }
  }

  TEST_CASE("best bounds") {
    const std::vector<std::tuple<std::string, int, int, BoundMethod>> rows = {
        {"G2", 2, 5, BoundMethod::Nonspecial},    {"G2", 3, 6, BoundMethod::PClosed},
        {"F4", 2, 23, BoundMethod::PClosed},      {"F4", 3, 23, BoundMethod::Nonspecial},
        {"E6", 2, 35, BoundMethod::Nonspecial},   {"E6", 3, 34, BoundMethod::Nonspecial},
        {"E7", 2, 59, BoundMethod::Nonspecial},   {"E7", 3, 62, BoundMethod::Nonspecial},
        {"E8", 2, 116, BoundMethod::Nonspecial},  {"E8", 3, 118, BoundMethod::Nonspecial},
        {"E8", 5, 119, BoundMethod::Nonspecial}};
    for (const auto& [t, p, k, m] : rows) {
      const BoundReport r = best_bound(regular_levi_form(make_algebra(t, p)));
      CHECK_MESSAGE(r.ok, t << " p=" << p);
      CHECK_MESSAGE(r.exponent == k, t << " p=" << p);
      CHECK_MESSAGE(r.method == m, t << " p=" << p);
      CHECK(r.exponent <= make_algebra(t, p)->system().num_positive());
      CHECK_FALSE(r.witnesses.empty());
    }
    CHECK(method_label(BoundMethod::PClosed) == "p-closed");
    CHECK(best_bound(zero_form(make_algebra("G2", 2))).exponent == 0);
  }

  TEST_CASE("F4 p=2 induction subalgebra") {
    auto g = make_algebra("F4", 2);
    const SubalgebraCandidate r = scenario_subalgebra(*g, scenario("F4-p2"));
    CHECK(r.dim == 29);
    const BoundReport b = verify_induction_subalgebra(r, regular_levi_form(g));
    CHECK(b.ok);
    CHECK(b.method == BoundMethod::Induction);
    CHECK(b.subalgebra_dim == 29);
    CHECK(b.exponent == 23);
    CHECK(b.exponent + b.subalgebra_dim == g->dim());
  }

  TEST_CASE("E6 p=3 induction subalgebra exceeds d(chi)") {
    auto g = make_algebra("E6", 3);
    const LinearForm chi = regular_levi_form(g);
    const BoundReport b = verify_induction_subalgebra(scenario_subalgebra(*g, scenario("E6-p3")), chi);
    CHECK(b.ok);
    CHECK(b.subalgebra_dim == 43);
    CHECK(b.exponent == 35);
    CHECK(b.exponent > d_chi(chi));
    CHECK(d_chi(chi) == 34);
  }

  TEST_CASE("the Borel subalgebra induces baby Vermas") {
    for (const auto& [t, p] : std::vector<std::pair<std::string, int>>{{"G2", 3}, {"F4", 2}, {"E6", 2}}) {
      auto g = make_algebra(t, p);
      const BoundReport b = verify_induction_subalgebra(SubalgebraCandidate::borel(*g), regular_levi_form(g));
      CHECK(b.ok);
      CHECK(b.exponent == g->system().num_positive());
      CHECK(b.exponent + b.subalgebra_dim == g->dim());
    }
  }

  TEST_CASE("induction verifier rejects bad candidates") {
    auto g = make_algebra("G2", 3);
    const LinearForm chi = regular_levi_form(g);
    // whole algebra: chi([g, g]) != 0
    std::vector<AlgebraElement> all;
    for (int i = 0; i < g->dim(); ++i) all.push_back(g->basis(i));
    const BoundReport whole = verify_induction_subalgebra(SubalgebraCandidate::from_generators(*g, all), chi);
    CHECK_FALSE(whole.ok);
    CHECK(whole.failure.find("chi([r,r])") != std::string::npos);
    // e_a1 and e_a2 alone do not span a subalgebra
    const auto ea = g->root_vector(Root{{1, 0}}), eb = g->root_vector(Root{{0, 1}});
    const BoundReport open = verify_induction_subalgebra(SubalgebraCandidate::from_generators(*g, {ea, eb}), chi);
    CHECK_FALSE(open.ok);
    CHECK(open.failure.find("closed") != std::string::npos);
    CHECK_FALSE(open.witnesses.empty());
    // a toral element with chi(h^[p]) = chi(h) != 0 for a form that is nonzero on h
    LinearForm bad = zero_form(g);
    bad.values[g->h_index(0)] = 1;
    const BoundReport tor = verify_induction_subalgebra(SubalgebraCandidate::from_generators(*g, {g->basis(g->h_index(0))}), bad);
    CHECK_FALSE(tor.ok);
  }
}
