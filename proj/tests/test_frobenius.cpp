#include <doctest.h>

#include <set>
#include <stdexcept>

#include "cnchar/frobenius.hpp"
#include "cnchar/verify.hpp"

using namespace cnchar;

namespace {

ColouredInt sec(int size, int a, int b) { return {size, Colour::secondary(Letter{a}, Letter{b})}; }
ColouredInt prim(int size, int r) { return {size, Colour::primary(Letter{r})}; }

bool prim_gt(PrimaryInt a, PrimaryInt b, int m) { return key(a, m) > key(b, m); }

}  // namespace

TEST_CASE("eta and zeta of small parts") {
  // m = 6, so 1̄ has rank 6.
  CHECK(eta_zeta(sec(0, 2, 5)) == std::pair{prim(0, 5), prim(0, 2)});
  CHECK(eta_zeta(sec(1, 2, 5)) == std::pair{prim(1, 2), prim(0, 5)});
  CHECK(compose(prim(0, 5), prim(0, 2), 6) == sec(0, 2, 5));
  CHECK(compose(prim(1, 1), prim(0, 6), 6) == sec(1, 1, 6));
  CHECK_THROWS_AS(compose(prim(2, 1), prim(0, 1), 6), std::domain_error);
  CHECK_THROWS_AS(eta_zeta(prim(0, 1)), std::invalid_argument);
}

TEST_CASE("compose inverts eta_zeta") {
  const int m = 6;
  for (int s = -6; s <= 6; ++s)
    for (int x = 1; x <= m; ++x)
      for (int y = x; y <= m; ++y) {
        auto [eta, zeta] = eta_zeta(sec(s, x, y));
        CHECK(compose(eta, zeta, m) == sec(s, x, y));
      }
}

TEST_CASE("succession and interlacing laws") {
  const int m = 4;
  for (int s = -4; s <= 8; ++s)
    for (int x = 1; x <= m; ++x)
      for (int y = x; y <= m; ++y) {
        const SecondaryInt a{s, Letter{x}, Letter{y}}, a1{s + 1, Letter{x}, Letter{y}};
        auto ez = eta_zeta(a), ez1 = eta_zeta(a1);
        CHECK(ez1.eta.size == ez.zeta.size + 1);
        CHECK(ez1.eta.letter == ez.zeta.letter);
        CHECK(ez1.zeta == ez.eta);
        CHECK(key(ez.zeta, m) <= key(ez.eta, m));
        CHECK(key(ez.eta, m) <= key(ez.zeta, m) + m);
      }
}

TEST_CASE("rho dominance is strict growth of both components") {
  const int m = 4;
  for (int s = -2; s <= 6; ++s)
    for (int t = -2; t <= 6; ++t)
      for (int x = 1; x <= m; ++x)
        for (int y = x; y <= m; ++y)
          for (int x2 = 1; x2 <= m; ++x2)
            for (int y2 = x2; y2 <= m; ++y2) {
              const SecondaryInt a{s, Letter{x}, Letter{y}}, b{t, Letter{x2}, Letter{y2}};
              auto ea = eta_zeta(a), eb = eta_zeta(b);
              CHECK(rho_dominates(a, b) == (prim_gt(ea.eta, eb.eta, m) && prim_gt(ea.zeta, eb.zeta, m)));
            }
}

TEST_CASE("ground columns") {
  auto g0 = frobenius_ground(2, 0);
  CHECK(g0.top == std::vector<PrimaryInt>{{0, Letter{4}}});
  CHECK(g0.bottom == std::vector<PrimaryInt>{{-1, Letter{4}}});
  auto g1 = frobenius_ground(2, 1);
  CHECK(g1.top == std::vector<PrimaryInt>{{0, Letter{3}}});
  CHECK(g1.bottom == std::vector<PrimaryInt>{{0, Letter{1}}});
  auto g2 = frobenius_ground(2, 2);
  CHECK(g2.top == std::vector<PrimaryInt>{{0, Letter{2}}});
  CHECK(g2.bottom == std::vector<PrimaryInt>{{0, Letter{2}}});
  CHECK(omega(4, 2) == SecondaryInt{0, Letter{2}, Letter{2}});
  CHECK_THROWS_AS(omega(4, 3), std::invalid_argument);
}

TEST_CASE("bare grounds map to the ground column") {
  for (int n = 2; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      auto p = to_frobenius(n, i, {ground_part(n, i)});
      CHECK(p == frobenius_ground(n, i));
      CHECK(frobenius_size(p) == 0);
      CHECK(from_frobenius(n, i, p) == PartList{ground_part(n, i)});
    }
}

TEST_CASE("invalid pairs are rejected") {
  FrobeniusPair bad{{{0, Letter{1}}, {0, Letter{3}}}, {{0, Letter{1}}, {0, Letter{1}}}};
  CHECK_FALSE(is_valid_frobenius(4, bad));
  FrobeniusPair gap{{{2, Letter{1}}, {0, Letter{3}}}, {{0, Letter{2}}, {0, Letter{1}}}};
  CHECK_FALSE(is_valid_frobenius(4, gap));
  CHECK_THROWS_AS(from_frobenius(2, 1, gap), std::invalid_argument);
}

TEST_CASE("Frobenius series equals the rho series") {
  for (int i = 0; i <= 2; ++i) CHECK(enumerate_frobenius(2, i, 12) == enumerate_rho(2, i, 12));
  for (int i = 0; i <= 3; ++i) CHECK(enumerate_frobenius(3, i, 8) == enumerate_rho(3, i, 8));
}

TEST_CASE("degree zero has one bare ground") {
  for (int n = 2; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      auto s = enumerate_frobenius(n, i, 0);
      CHECK(s.coefficient(0, ColourMonomial::zero(n)) == 1);
      CHECK(s == enumerate_rho(n, i, 0));
    }
}

TEST_CASE("Frobenius round trips") {
  for (int i = 0; i <= 2; ++i) {
    auto r = roundtrip_frobenius(2, i, 9);
    CHECK_MESSAGE(r.failures == 0, r.first_failure);
    CHECK(r.forward_checked == r.backward_checked);
  }
  for (int i = 0; i <= 3; ++i) CHECK(roundtrip_frobenius(3, i, 5).failures == 0);
}

TEST_CASE("chains over other grounds match Frobenius pairs") {
  const int m = 4, N = 7;
  const std::vector<SecondaryInt> grounds{
      {0, Letter{1}, Letter{1}}, {1, Letter{2}, Letter{3}}, {0, Letter{3}, Letter{4}}, {-1, Letter{4}, Letter{4}}, {2, Letter{1}, Letter{4}}};
  for (const auto& g : grounds) {
    const auto gz = eta_zeta(g);
    std::set<FrobeniusPair> from_chains, direct;
    for_each_rho_chain(m, g, N, [&](const std::vector<SecondaryInt>& chain) {
      FrobeniusPair p;
      for (const auto& a : chain) {
        auto ez = eta_zeta(a);
        p.top.push_back(ez.eta);
        p.bottom.push_back(ez.zeta);
      }
      p.top.push_back(gz.eta);
      p.bottom.push_back(gz.zeta);
      CHECK(is_valid_frobenius(m, p));
      from_chains.insert(p);
    });
    for_each_frobenius(m, gz.eta, gz.zeta, N, [&](const FrobeniusPair& p) { direct.insert(p); });
    CHECK(from_chains == direct);
    CHECK(from_chains.size() > 1);
  }
}
