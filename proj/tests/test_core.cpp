#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cnchar/letters.hpp"
#include "cnchar/series.hpp"

using namespace cnchar;

namespace {

ColouredInt prim(int size, int rank) { return {size, Colour::primary(Letter{rank})}; }

// Partition counts p(0..N) by direct recursion over the largest part.
long count_partitions(int total, int largest) {
  if (total == 0) return 1;
  long c = 0;
  for (int p = std::min(total, largest); p >= 1; --p) c += count_partitions(total - p, p);
  return c;
}

TruncatedSeries random_series(std::mt19937& rng, int N, int colours) {
  std::uniform_int_distribution<int> deg(0, N), ex(-2, 2), coeff(-3, 3), terms(0, 6);
  TruncatedSeries s(N, colours);
  for (int t = terms(rng); t > 0; --t) {
    auto mono = ColourMonomial::zero(colours);
    for (auto& e : mono.exponents) e = ex(rng);
    s.add_term(deg(rng), mono, coeff(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("bar reverses ranks") {
  CHECK(bar(Letter{1}, 4) == Letter{4});
  CHECK(bar(Letter{3}, 4) == Letter{2});
  CHECK(bar(Letter{3}, 5) == Letter{3});
  for (int m = 1; m <= 9; ++m)
    for (int r = 1; r <= m; ++r) CHECK(bar(bar(Letter{r}, m), m) == Letter{r});
}

TEST_CASE("letter names in the crystal alphabet") {
  CHECK(letter_name(Letter{2}, 2) == "2");
  CHECK(letter_name(Letter{4}, 2) == "1̅");
  CHECK_THROWS_AS(letter_name(Letter{5}, 2), std::invalid_argument);
}

TEST_CASE("primary comparison examples") {
  CHECK(primary_ge(prim(0, 2), prim(0, 1)));
  CHECK_FALSE(primary_ge(prim(0, 1), prim(0, 2)));
  CHECK(primary_ge(prim(1, 1), prim(0, 4)));
  CHECK(primary_ge(prim(0, 3), prim(0, 3)));
  CHECK_FALSE(primary_gt(prim(0, 3), prim(0, 3)));
  CHECK_THROWS_AS(primary_ge({0, Colour::empty()}, prim(0, 1)), std::invalid_argument);
}

TEST_CASE("primary comparison is a total order matching the key") {
  const int m = 5;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(-3, 3), rank(1, m);
  for (int t = 0; t < 2000; ++t) {
    PrimaryInt a{size(rng), Letter{rank(rng)}}, b{size(rng), Letter{rank(rng)}};
    const bool gt = primary_gt(to_coloured(a), to_coloured(b));
    const bool lt = primary_gt(to_coloured(b), to_coloured(a));
    CHECK(int(gt) + int(lt) + int(a == b) == 1);
    CHECK(gt == (key(a, m) > key(b, m)));
    CHECK(primary_ge(to_coloured(a), to_coloured(b)) == (key(a, m) >= key(b, m)));
  }
}

TEST_CASE("succ walks the primary chain") {
  const int m = 4;
  CHECK(succ(PrimaryInt{0, Letter{2}}, m) == PrimaryInt{0, Letter{3}});
  CHECK(succ(PrimaryInt{0, Letter{4}}, m) == PrimaryInt{1, Letter{1}});
  PrimaryInt p{0, Letter{2}};
  for (int j = 0; j < m; ++j) p = succ(p, m);
  CHECK(p == PrimaryInt{1, Letter{2}});
  for (int mm = 1; mm <= 7; ++mm)
    for (int s = -3; s <= 3; ++s)
      for (int r = 1; r <= mm; ++r) {
        PrimaryInt a{s, Letter{r}};
        CHECK(pred(succ(a, mm), mm) == a);
        CHECK(from_key(key(a, mm), mm) == a);
        CHECK(primary_gt(to_coloured(succ(a, mm)), to_coloured(a)));
      }
}

TEST_CASE("colour monomials") {
  for (int n = 2; n <= 6; ++n)
    for (int x = 1; x <= n; ++x) CHECK(monomial(Colour::secondary(Letter{x}, bar(Letter{x}, 2 * n)), n) == ColourMonomial::zero(n));
  CHECK(monomial(Colour::empty(), 3) == ColourMonomial::zero(3));
  CHECK(monomial(Colour::secondary(Letter{1}, Letter{3}), 2).exponents == std::vector<int>{1, -1});
  CHECK(monomial(Colour::secondary(Letter{1}, Letter{2}), 2).exponents == std::vector<int>{1, 1});
  CHECK(monomial(Colour::primary(Letter{6}), 3).exponents == std::vector<int>{-1, 0, 0});
  CHECK_THROWS(monomial(Colour::infinity(), 2));
}

TEST_CASE("secondary split and compose") {
  const int m = 4;
  auto ez = eta_zeta(SecondaryInt{0, Letter{1}, Letter{3}});
  CHECK(ez.eta == PrimaryInt{0, Letter{3}});
  CHECK(ez.zeta == PrimaryInt{0, Letter{1}});
  ez = eta_zeta(SecondaryInt{1, Letter{1}, Letter{3}});
  CHECK(ez.eta == PrimaryInt{1, Letter{1}});
  CHECK(ez.zeta == PrimaryInt{0, Letter{3}});
  CHECK(compose(PrimaryInt{1, Letter{1}}, PrimaryInt{0, Letter{4}}, m) == SecondaryInt{1, Letter{1}, Letter{4}});
  CHECK_THROWS_AS(compose(PrimaryInt{2, Letter{1}}, PrimaryInt{0, Letter{1}}, m), std::domain_error);
  CHECK(floor_div(-3, 2) == -2);
  CHECK(floor_div(3, 2) == 1);
}

TEST_CASE("pochhammer and the partition generating function") {
  auto e = pochhammer(1, 1, 3);
  CHECK(e.q_coefficients() == std::vector<Integer>{1, -1, -1, 0});
  CHECK(inverse_euler(4).q_coefficients() == std::vector<Integer>{1, 1, 2, 3, 5});
  const int N = 30;
  auto pe = inverse_euler(N).q_coefficients();
  for (int k = 0; k <= N; ++k) CHECK(pe[static_cast<std::size_t>(k)] == count_partitions(k, k));
  CHECK(inverse_euler(N) * pochhammer(1, 1, N) == TruncatedSeries::one(N, 0));
  CHECK(inverse_pochhammer(3, 5, N) * pochhammer(3, 5, N) == TruncatedSeries::one(N, 0));
}

TEST_CASE("pentagonal expansion of (q;q)") {
  const int N = 40;
  std::vector<Integer> expected(N + 1, 0);
  for (int k = -10; k <= 10; ++k) {
    const int e = k * (3 * k - 1) / 2;
    if (e <= N) expected[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
  }
  CHECK(pochhammer(1, 1, N).q_coefficients() == expected);
}

TEST_CASE("series arithmetic laws on random inputs") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int N = 6, n = 2;
    auto a = random_series(rng, N, n), b = random_series(rng, N, n), c = random_series(rng, N, n);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
    CHECK(a.scaled(2) == a + a);
    const auto ab = a * b;
    for (const auto& [term, coeff] : ab.terms()) {
      CHECK(coeff != 0);
      CHECK(term.first <= N);
    }
  }
}

TEST_CASE("mismatched series are rejected") {
  TruncatedSeries a(4, 2), b(5, 2), c(4, 3);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("terms above the truncation and zero coefficients are dropped") {
  TruncatedSeries s(3, 1);
  s.add_term(4, ColourMonomial{{1}}, 5);
  s.add_term(2, ColourMonomial{{1}}, 0);
  CHECK(s.is_zero());
  s.add_term(2, ColourMonomial{{1}}, 3);
  s.add_term(2, ColourMonomial{{1}}, -3);
  CHECK(s.is_zero());
}

TEST_CASE("series json is sorted and round-trips") {
  TruncatedSeries s(5, 2);
  s.add_term(3, ColourMonomial{{1, -1}}, 2);
  s.add_term(0, ColourMonomial{{0, 0}}, 1);
  s.add_term(3, ColourMonomial{{-1, 0}}, Integer("123456789012345678901234567890"));
  auto j = s.to_json();
  REQUIRE(j.size() == 3);
  CHECK(j[0]["q"] == 0);
  CHECK(j[1]["colour"] == std::vector<int>{-1, 0});
  CHECK(j[1]["coeff"] == "123456789012345678901234567890");
  CHECK(j[2]["colour"] == std::vector<int>{1, -1});
  CHECK(TruncatedSeries::from_json(j, 5, 2) == s);
}

TEST_CASE("first mismatch reports the lowest degree") {
  auto a = inverse_euler(6), b = inverse_euler(6);
  CHECK_FALSE(first_mismatch(a, b).has_value());
  b.add_term(4, ColourMonomial{}, 1);
  b.add_term(5, ColourMonomial{}, 1);
  auto mm = first_mismatch(a, b);
  REQUIRE(mm.has_value());
  CHECK(mm->degree == 4);
  CHECK(mm->lhs == 5);
  CHECK(mm->rhs == 6);
  CHECK(mismatch_json(mm)["status"] == "mismatch");
}

TEST_CASE("forgetting colours sums coefficients per degree") {
  TruncatedSeries s(2, 2);
  s.add_term(1, ColourMonomial{{1, 0}}, 2);
  s.add_term(1, ColourMonomial{{0, -1}}, 3);
  CHECK(s.forget_colours().q_coefficients() == std::vector<Integer>{0, 5, 0});
  CHECK(inverse_euler(3).lift(2).coefficient(2, ColourMonomial::zero(2)) == 2);
}
