#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cnchar/crystal.hpp"
#include "cnchar/verify.hpp"

using namespace cnchar;

namespace {

CrystalVertex v(int a, int b) { return CrystalVertex::pair(Letter{a}, Letter{b}); }

using Edge = std::tuple<int, CrystalVertex, CrystalVertex>;

// Hand transcription of the n = 2 crystal graph.  Ranks: 1, 2, 2̄ = 3, 1̄ = 4.
std::set<Edge> drawn_graph_n2() {
  const auto E = CrystalVertex::empty();
  return {
      {0, E, v(1, 1)},       {0, v(2, 4), v(1, 2)}, {0, v(3, 4), v(1, 3)}, {0, v(4, 4), E},
      {1, v(1, 1), v(1, 2)}, {1, v(1, 2), v(2, 2)}, {1, v(1, 3), v(1, 4)}, {1, v(1, 4), v(2, 4)},
      {1, v(3, 3), v(3, 4)}, {1, v(3, 4), v(4, 4)}, {2, v(1, 2), v(1, 3)}, {2, v(2, 2), v(2, 3)},
      {2, v(2, 3), v(3, 3)}, {2, v(2, 4), v(3, 4)},
  };
}

}  // namespace

TEST_CASE("vertex set size and order") {
  for (int n = 2; n <= 6; ++n) {
    auto vs = vertices(n);
    CHECK(static_cast<int>(vs.size()) == 2 * n * n + n + 1);
    CHECK(vs.front().is_empty());
    for (std::size_t j = 2; j < vs.size(); ++j) CHECK(vs[j - 1] < vs[j]);
    Crystal c(n);
    for (int id = 0; id < c.size(); ++id) CHECK(c.index_of(c.vertex(id)) == id);
  }
  CHECK(vertices(2).size() == 11);
  CHECK_THROWS_AS(vertices(1), std::domain_error);
  CHECK_THROWS_AS(Crystal(1), std::domain_error);
}

TEST_CASE("coordinates have total zero or two") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& b : vertices(n)) {
      auto c = b.coordinates(n);
      int total = 0;
      for (int x : c) total += x;
      CHECK((total == 0 || total == 2));
      CHECK(CrystalVertex::from_coordinates(c) == b);
    }
}

TEST_CASE("vertex colours") {
  CHECK(colour_of(CrystalVertex::empty()).is_empty());
  CHECK(monomial_of_vertex(CrystalVertex::empty(), 2) == ColourMonomial::zero(2));
  CHECK(monomial_of_vertex(v(1, 3), 2).exponents == std::vector<int>{1, -1});
  CHECK(CrystalVertex::empty().name(2) == "∅");
  CHECK(v(1, 3).name(2) == "1,2̅");
}

TEST_CASE("Kashiwara operator examples") {
  CHECK(kashiwara_f(2, 0, CrystalVertex::empty()) == v(1, 1));
  CHECK(kashiwara_f(2, 2, v(1, 2)) == v(1, 3));
  CHECK_FALSE(kashiwara_f(2, 1, v(2, 2)).has_value());
  CHECK_THROWS_AS(kashiwara_f(2, 3, v(1, 1)), std::invalid_argument);
}

TEST_CASE("e and f are mutually inverse where defined") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& b : vertices(n))
      for (int i = 0; i <= n; ++i) {
        if (auto f = kashiwara_f(n, i, b)) CHECK(kashiwara_e(n, i, *f) == b);
        if (auto e = kashiwara_e(n, i, b)) CHECK(kashiwara_f(n, i, *e) == b);
      }
}

TEST_CASE("f-arrows reproduce the drawn graph for n = 2") {
  std::set<Edge> got;
  for (const auto& b : vertices(2))
    for (int i = 0; i <= 2; ++i)
      if (auto t = kashiwara_f(2, i, b)) got.insert({i, b, *t});
  CHECK(got == drawn_graph_n2());
}

TEST_CASE("DOT export lists every vertex and arrow") {
  auto dot = Crystal(2).to_dot();
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("label=\"∅\"") != std::string::npos);
  std::size_t arrows = 0;
  for (auto pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++arrows;
  CHECK(arrows == drawn_graph_n2().size());
  CHECK(dot.find("style=dotted") != std::string::npos);
}

TEST_CASE("energy examples") {
  const auto E = CrystalVertex::empty();
  for (int n = 2; n <= 4; ++n) {
    CHECK(energy_kkm(n, E, E).value() == 0);
    CHECK(energy_simple(n, E, E).value() == 0);
    for (const auto& b : vertices(n)) {
      if (b.is_empty()) continue;
      CHECK(energy_kkm(n, b, E).value() == 1);
      CHECK(energy_kkm(n, E, b).value() == 1);
      CHECK(energy_simple(n, b, E).value() == 1);
      CHECK(energy_simple(n, E, b).value() == 1);
    }
  }
  CHECK(energy_kkm(2, v(4, 4), v(1, 1)).value() == 2);
  CHECK(energy_simple(2, v(4, 4), v(1, 1)).value() == 2);
  CHECK(energy_simple(2, v(1, 4), v(1, 4)).value() == 0);
  CHECK(energy_simple(2, v(1, 4), v(2, 3)).value() == 1);
  CHECK(energy_simple(2, v(2, 3), v(1, 2)) == energy_kkm(2, v(2, 3), v(1, 2)));
}

TEST_CASE("energy values are range checked") {
  CHECK_THROWS_AS(EnergyValue(3), std::out_of_range);
  CHECK_THROWS_AS(EnergyValue(-1), std::out_of_range);
  CHECK(EnergyValue(2).value() == 2);
}

TEST_CASE("both energy formulas agree on every ordered pair") {
  for (int n = 2; n <= 5; ++n) {
    auto r = verify_energy(n);
    CHECK(r.pairs_checked == static_cast<long>((2 * n * n + n + 1) * (2 * n * n + n + 1)));
    CHECK(r.mismatches == 0);
  }
}

TEST_CASE("indicator form agrees with the coordinate form") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& b : vertices(n))
      for (const auto& b2 : vertices(n)) CHECK(energy_kkm(n, b, b2).value() == energy_kkm_coordinates(n, b, b2));
}

TEST_CASE("energy trichotomy on pairs") {
  for (int n = 2; n <= 4; ++n) {
    auto r = verify_trichotomy(n);
    CHECK(r.pairs_checked == static_cast<long>(n * (2 * n + 1) * n * (2 * n + 1)));
    CHECK(r.mismatches == 0);
  }
}

TEST_CASE("grounds have zero self-energy") {
  for (int n = 2; n <= 6; ++n) {
    Crystal c(n);
    for (int i = 0; i <= n; ++i) {
      CHECK(c.energy(c.ground_index(i), c.ground_index(i)) == 0);
      if (i > 0) CHECK(ground_vertex(n, i) == v(i, 2 * n + 1 - i));
    }
    CHECK(ground_vertex(n, 0).is_empty());
  }
}

TEST_CASE("min_diff is the energy with the smaller part first") {
  Crystal c(3);
  for (int a = 0; a < c.size(); ++a)
    for (int b = 0; b < c.size(); ++b)
      CHECK(c.min_diff(a, b) == energy_simple(3, c.vertex(b), c.vertex(a)).value());
}
