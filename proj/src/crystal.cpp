#include "cnchar/crystal.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace cnchar {

namespace {

void require_rank(int n) {
  if (n < 2) throw std::domain_error("crystal rank must be at least 2");
  if (n > 8) throw std::domain_error("crystal rank above 8 is not supported");
}

// x_k at index k-1, x̄_k at index 2n-k.
int& plain(std::vector<int>& c, int k) { return c[static_cast<std::size_t>(k - 1)]; }
int& barred(std::vector<int>& c, int k) { return c[c.size() - static_cast<std::size_t>(k)]; }

}  // namespace

std::vector<int> CrystalVertex::coordinates(int n) const {
  std::vector<int> c(static_cast<std::size_t>(2 * n), 0);
  if (!empty_) {
    ++c[static_cast<std::size_t>(x_.rank - 1)];
    ++c[static_cast<std::size_t>(y_.rank - 1)];
  }
  return c;
}

std::optional<CrystalVertex> CrystalVertex::from_coordinates(const std::vector<int>& coords) {
  std::vector<Letter> letters;
  for (std::size_t r = 0; r < coords.size(); ++r) {
    if (coords[r] < 0) return std::nullopt;
    for (int t = 0; t < coords[r]; ++t) letters.push_back(Letter{static_cast<int>(r) + 1});
  }
  if (letters.empty()) return CrystalVertex::empty();
  if (letters.size() != 2) return std::nullopt;
  return CrystalVertex::pair(letters[0], letters[1]);
}

std::string CrystalVertex::name(int n) const {
  if (empty_) return "∅";
  return letter_name(x_, n) + "," + letter_name(y_, n);
}

EnergyValue::EnergyValue(int v) : v_(v) {
  if (v < 0 || v > 2) throw std::out_of_range("energy outside {0,1,2}");
}

std::vector<CrystalVertex> vertices(int n) {
  require_rank(n);
  std::vector<CrystalVertex> out{CrystalVertex::empty()};
  for (int x = 1; x <= 2 * n; ++x)
    for (int y = x; y <= 2 * n; ++y) out.push_back(CrystalVertex::pair(Letter{x}, Letter{y}));
  return out;
}

Colour colour_of(const CrystalVertex& b) { return b.colour(); }

ColourMonomial monomial_of_vertex(const CrystalVertex& b, int n) { return monomial(b.colour(), n); }

std::optional<CrystalVertex> kashiwara_f(int n, int i, const CrystalVertex& b) {
  require_rank(n);
  if (i < 0 || i > n) throw std::invalid_argument("operator index out of range");
  auto c = b.coordinates(n);
  if (i == 0) {
    int x1 = plain(c, 1), xb1 = barred(c, 1);
    if (x1 >= xb1) {
      plain(c, 1) += 2;
    } else if (x1 == xb1 - 1) {
      plain(c, 1) += 1;
      barred(c, 1) -= 1;
    } else {
      barred(c, 1) -= 2;
    }
  } else if (i < n) {
    if (plain(c, i + 1) >= barred(c, i + 1)) {
      plain(c, i) -= 1;
      plain(c, i + 1) += 1;
    } else {
      barred(c, i + 1) -= 1;
      barred(c, i) += 1;
    }
  } else {
    plain(c, n) -= 1;
    barred(c, n) += 1;
  }
  return CrystalVertex::from_coordinates(c);
}

std::optional<CrystalVertex> kashiwara_e(int n, int i, const CrystalVertex& b) {
  require_rank(n);
  if (i < 0 || i > n) throw std::invalid_argument("operator index out of range");
  auto c = b.coordinates(n);
  if (i == 0) {
    int x1 = plain(c, 1), xb1 = barred(c, 1);
    if (x1 >= xb1 + 2) {
      plain(c, 1) -= 2;
    } else if (x1 == xb1 + 1) {
      plain(c, 1) -= 1;
      barred(c, 1) += 1;
    } else {
      barred(c, 1) += 2;
    }
  } else if (i < n) {
    if (plain(c, i + 1) > barred(c, i + 1)) {
      plain(c, i) += 1;
      plain(c, i + 1) -= 1;
    } else {
      barred(c, i + 1) += 1;
      barred(c, i) -= 1;
    }
  } else {
    plain(c, n) += 1;
    barred(c, n) -= 1;
  }
  return CrystalVertex::from_coordinates(c);
}

namespace {

// Letters of a vertex as ranks; the empty vertex has none.
struct Letters {
  std::array<int, 2> r{};
  int count = 0;
  explicit Letters(const CrystalVertex& b) {
    if (!b.is_empty()) {
      r = {b.x().rank, b.y().rank};
      count = 2;
    }
  }
  template <class Pred>
  int how_many(Pred p) const {
    int k = 0;
    for (int t = 0; t < count; ++t) k += chi(p(r[static_cast<std::size_t>(t)]));
    return k;
  }
};

}  // namespace

EnergyValue energy_kkm(int n, const CrystalVertex& b, const CrystalVertex& b2) {
  require_rank(n);
  const Letters l(b), lp(b2);
  // (s(b') - s(b)) / 2 is 0 between two pairs and ±1 against ∅
  const int half_s = (lp.count - l.count) / 2;
  int best = -100;
  for (int j = 1; j <= n; ++j) {
    const int jb = 2 * n + 1 - j;
    auto gt_jb = [jb](int r) { return r > jb; };
    auto ge_jb = [jb](int r) { return r >= jb; };
    auto lt_j = [j](int r) { return r < j; };
    auto le_j = [j](int r) { return r <= j; };
    auto eq_j = [j](int r) { return r == j; };
    auto eq_jb = [jb](int r) { return r == jb; };
    int theta = l.how_many(gt_jb) - lp.how_many(gt_jb) + half_s;
    int theta_p = lp.how_many(lt_j) - l.how_many(lt_j) - half_s;
    int eta = l.how_many(ge_jb) - lp.how_many(gt_jb) - l.how_many(eq_j) + half_s;
    int eta_p = lp.how_many(le_j) - l.how_many(lt_j) - lp.how_many(eq_jb) - half_s;
    best = std::max({best, theta, theta_p, eta, eta_p});
  }
  return EnergyValue(best);
}

int energy_kkm_coordinates(int n, const CrystalVertex& b, const CrystalVertex& b2) {
  require_rank(n);
  auto c = b.coordinates(n), cp = b2.coordinates(n);
  int s = 0, sp = 0;
  for (std::size_t r = 0; r < c.size(); ++r) {
    s += c[r];
    sp += cp[r];
  }
  int best = -100;
  for (int j = 1; j <= n; ++j) {
    int bar_sum = 0, plain_sum = 0;
    for (int k = 1; k < j; ++k) {
      bar_sum += barred(c, k) - barred(cp, k);
      plain_sum += plain(cp, k) - plain(c, k);
    }
    int theta = bar_sum + (sp - s) / 2;
    int theta_p = plain_sum + (s - sp) / 2;
    int eta = bar_sum + (barred(c, j) - plain(c, j)) + (sp - s) / 2;
    int eta_p = plain_sum + (plain(cp, j) - barred(cp, j)) + (s - sp) / 2;
    best = std::max({best, theta, theta_p, eta, eta_p});
  }
  return best;
}

EnergyValue energy_simple(int n, const CrystalVertex& b, const CrystalVertex& b2) {
  require_rank(n);
  if (b.is_empty() && b2.is_empty()) return EnergyValue(0);
  if (b.is_empty() || b2.is_empty()) return EnergyValue(1);
  const int x = b.x().rank, y = b.y().rank, xp = b2.x().rank, yp = b2.y().rank;
  if (2 * n + 1 - yp != x)
    return EnergyValue(chi(x >= xp) + chi(y >= yp) - chi(y >= yp && yp > x && x >= xp));
  return EnergyValue(chi(x > xp) + chi(y > yp) - chi(y > yp && yp > x && x > xp));
}

CrystalVertex ground_vertex(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("ground index out of range");
  if (i == 0) return CrystalVertex::empty();
  return CrystalVertex::pair(Letter{i}, Letter{2 * n + 1 - i});
}

Crystal::Crystal(int n) : n_(n), vertices_(vertices(n)) {
  const int v = size();
  energy_.resize(static_cast<std::size_t>(v * v));
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      energy_[static_cast<std::size_t>(a * v + b)] = energy_simple(n, vertex(a), vertex(b)).value();
  for (int i = 0; i <= n; ++i) {
    int g = ground_index(i);
    if (energy(g, g) != 0) throw std::logic_error("H(b_i ⊗ b_i) is not zero");
  }
}

int Crystal::index_of(const CrystalVertex& b) const {
  if (b.is_empty()) return 0;
  const int x = b.x().rank, y = b.y().rank, m = 2 * n_;
  if (x < 1 || y > m) throw std::invalid_argument("vertex not in crystal");
  // rows a < x hold m - a + 1 pairs each
  return 1 + (x - 1) * m - (x - 1) * (x - 2) / 2 + (y - x);
}

std::string Crystal::to_dot() const {
  std::ostringstream out;
  out << "digraph B {\n";
  for (int a = 0; a < size(); ++a) out << "  v" << a << " [label=\"" << vertex(a).name(n_) << "\"];\n";
  for (int a = 0; a < size(); ++a)
    for (int i = 0; i <= n_; ++i)
      if (auto t = kashiwara_f(n_, i, vertex(a)))
        out << "  v" << a << " -> v" << index_of(*t) << " [label=\"" << i << "\"" << (i == 0 ? ", style=dotted" : "")
            << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cnchar
