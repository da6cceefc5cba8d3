#include <doctest.h>

#include <set>

#include "modlie/rootsystem.hpp"
#include "modlie/serialize.hpp"

using namespace modlie;

namespace {

RootSystem rs_of(const std::string& label) { return RootSystem(CartanDatum::parse(label)); }

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"};

}  // namespace

TEST_SUITE("rootsystem") {
  TEST_CASE("positive root counts") {
    // counts from tests/oracle/derive_values.py (reflection closure)
    CHECK(rs_of("G2").num_positive() == 6);
    CHECK(rs_of("F4").num_positive() == 24);
    CHECK(rs_of("E6").num_positive() == 36);
    CHECK(rs_of("E7").num_positive() == 63);
    CHECK(rs_of("E8").num_positive() == 120);
    for (const auto& t : kTypes) {
      const RootSystem rs = rs_of(t);
      CHECK(rs.num_roots() == 2 * rs.num_positive());
      CHECK(rs.num_positive() == positive_root_count(rs.datum().type, rs.rank()));
    }
  }

  TEST_CASE("cartan data are valid and labelled") {
    for (const auto& t : kTypes) {
      const CartanDatum d = CartanDatum::parse(t);
      CHECK_NOTHROW(validate(d));
      CHECK(d.label() == t);
      for (int i = 0; i < d.rank; ++i) {
        CHECK(d.cartan(i, i) == 2);
        for (int j = 0; j < d.rank; ++j)
          if (i != j) CHECK((d.cartan(i, j) <= 0 && d.cartan(i, j) >= -3));
      }
    }
    const CartanDatum g2 = CartanDatum::parse("G2");
    CHECK(g2.cartan(0, 1) == -3);  // alpha_1 short
    CHECK(g2.cartan(1, 0) == -1);
  }

  TEST_CASE("invalid cartan matrices are rejected") {
    CartanDatum d = CartanDatum::parse("G2");
    d.matrix[0][1] = -2;
    CHECK_THROWS_WITH_AS(validate(d), doctest::Contains("G2"), Error);
    CartanDatum e = CartanDatum::parse("A2");
    e.matrix[0][0] = 1;
    CHECK_THROWS_AS(validate(e), Error);
    CHECK_THROWS_AS(CartanDatum::parse("G3"), Error);
    CHECK_THROWS_AS(CartanDatum::parse("Q2"), Error);
  }

  TEST_CASE("root ordering is by height then descending coordinates") {
    for (const auto& t : kTypes) {
      const RootSystem rs = rs_of(t);
      const auto& pos = rs.positive_roots();
      for (int i = 0; i < rs.rank(); ++i) CHECK(rs.simple(i) == i);
      for (std::size_t k = 1; k < pos.size(); ++k) {
        const bool height_up = pos[k - 1].height() < pos[k].height();
        const bool same_height_desc = pos[k - 1].height() == pos[k].height() && pos[k].coords < pos[k - 1].coords;
        CHECK((height_up || same_height_desc));
      }
      for (int id = 0; id < rs.num_roots(); ++id) CHECK(rs.find(rs.root(id)) == id);
    }
  }

  TEST_CASE("roots have constant sign and come from simple roots by reflections") {
    for (const auto& t : kTypes) {
      const RootSystem rs = rs_of(t);
      std::set<IntVec> reached;
      std::vector<Root> todo;
      for (int i = 0; i < rs.rank(); ++i) {
        todo.push_back(rs.root(rs.simple(i)));
        reached.insert(todo.back().coords);
      }
      while (!todo.empty()) {
        const Root r = todo.back();
        todo.pop_back();
        for (int i = 0; i < rs.rank(); ++i) {
          const Root s = rs.reflect(i, r);
          if (reached.insert(s.coords).second) todo.push_back(s);
        }
      }
      CHECK(static_cast<int>(reached.size()) == rs.num_roots());
      for (int id = 0; id < rs.num_roots(); ++id) {
        const Root r = rs.root(id);
        CHECK(reached.count(r.coords) == 1);
        const bool nonneg = std::all_of(r.coords.begin(), r.coords.end(), [](int c) { return c >= 0; });
        const bool nonpos = std::all_of(r.coords.begin(), r.coords.end(), [](int c) { return c <= 0; });
        CHECK((nonneg || nonpos));
      }
    }
  }

  TEST_CASE("G2 root string bounds") {
    // values from tests/oracle/derive_values.py
    const RootSystem rs = rs_of("G2");
    const Root a{{1, 0}}, b{{0, 1}};
    CHECK(rs.root_string_bound(a, b) == 1);
    CHECK(rs.root_string_bound(a + b, a) == 2);
    CHECK(rs.root_string_bound(Root{{-2, -1}}, a + b) == 2);
    CHECK(rs.root_string_bound(a, Root{{-1, -1}}) == 3);
    CHECK(rs.root_string_bound(a, Root{{2, 1}}) == 3);
  }

  TEST_CASE("root string bound is 1 when beta - alpha is not a root") {
    const RootSystem rs = rs_of("A2");
    CHECK(rs.root_string_bound(Root{{1, 0}}, Root{{0, 1}}) == 1);
  }

  TEST_CASE("degenerate root strings are rejected") {
    const RootSystem rs = rs_of("G2");
    CHECK_THROWS_AS(rs.root_string_bound(Root{{1, 0}}, Root{{1, 0}}), Error);
    CHECK_THROWS_AS(rs.root_string_bound(Root{{1, 1}}, Root{{-1, -1}}), Error);
    CHECK_THROWS_AS(rs.root_string_bound(Root{{1, 0}}, Root{{1, 5}}), Error);
  }

  TEST_CASE("root strings are unbroken") {
    for (const auto& t : {"G2", "F4", "B3", "C3", "E6"}) {
      const RootSystem rs = rs_of(t);
      for (int x = 0; x < rs.num_roots(); ++x)
        for (int y = 0; y < rs.num_roots(); ++y) {
          if (y == x || y == rs.negate(x)) continue;
          const Root a = rs.root(x), b = rs.root(y);
          std::vector<int> ks;
          Root s = b;
          for (int k = 0; k <= 4; ++k, s = s + a)
            if (rs.is_root(s)) ks.push_back(k);
          s = b - a;
          for (int k = -1; k >= -4; --k, s = s - a)
            if (rs.is_root(s)) ks.push_back(k);
          std::sort(ks.begin(), ks.end());
          CHECK(ks.back() - ks.front() + 1 == static_cast<int>(ks.size()));
          CHECK(-ks.front() + 1 == rs.root_string_bound(a, b));
        }
    }
  }

  TEST_CASE("simple reflections") {
    for (const auto& t : kTypes) {
      const RootSystem rs = rs_of(t);
      for (int i = 0; i < rs.rank(); ++i) {
        const Root ai = rs.root(rs.simple(i));
        CHECK(rs.reflect(i, ai) == -ai);
        for (int id = 0; id < rs.num_roots(); ++id) {
          const Root r = rs.root(id);
          const Root s = rs.reflect(i, r);
          CHECK(rs.is_root(s));
          CHECK(rs.reflect(i, s) == r);
          if (r.positive() && !(r == ai)) CHECK(s.positive());
        }
      }
    }
  }

  TEST_CASE("G2 short simple root has an orbit of size 6") {
    const RootSystem rs = rs_of("G2");
    std::set<IntVec> orbit{{1, 0}};
    std::vector<Root> todo{Root{{1, 0}}};
    while (!todo.empty()) {
      const Root r = todo.back();
      todo.pop_back();
      for (int i = 0; i < 2; ++i) {
        const Root s = rs.reflect(i, r);
        if (orbit.insert(s.coords).second) todo.push_back(s);
      }
    }
    CHECK(orbit.size() == 6);
  }

  TEST_CASE("weight reflections match root reflections") {
    for (const auto& t : {"G2", "F4", "B3"}) {
      const RootSystem rs = rs_of(t);
      for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) {
          const IntVec w = rs.simple_root_as_weight(j);
          const Root r = rs.reflect(i, rs.root(rs.simple(j)));
          IntVec expect(rs.rank(), 0);
          for (int k = 0; k < rs.rank(); ++k)
            for (int m = 0; m < rs.rank(); ++m) expect[k] += r.coords[m] * rs.simple_root_as_weight(m)[k];
          CHECK(rs.reflect_weight(i, w) == expect);
        }
    }
  }

  TEST_CASE("root system JSON") {
    const RootSystem rs = rs_of("G2");
    const json j = to_json(rs);
    CHECK(j["type"] == "G2");
    CHECK(j["rank"] == 2);
    CHECK(j["positive_roots"].size() == 6);
    CHECK(j["positive_roots"][5] == json::array({3, 2}));
    CHECK(j["cartan_matrix"][0] == json::array({2, -3}));
  }
}
