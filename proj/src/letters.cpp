#include "cnchar/letters.hpp"

#include <stdexcept>

namespace cnchar {

std::string letter_name(Letter x, int n) {
  if (x.rank < 1 || x.rank > 2 * n) throw std::invalid_argument("letter out of range");
  if (x.rank <= n) return std::to_string(x.rank);
  return std::to_string(2 * n + 1 - x.rank) + "̅";
}

std::string Colour::name(int n) const {
  switch (kind_) {
    case Kind::Empty: return "c_∅";
    case Kind::Infinity: return "c_∞";
    case Kind::Primary: return "c_" + letter_name(x_, n);
    case Kind::Secondary: return "c_" + letter_name(x_, n) + "," + letter_name(y_, n);
  }
  return {};
}

ColourMonomial& ColourMonomial::operator+=(const ColourMonomial& o) {
  if (o.exponents.size() != exponents.size()) throw std::invalid_argument("monomial length mismatch");
  for (std::size_t j = 0; j < exponents.size(); ++j) exponents[j] += o.exponents[j];
  return *this;
}

namespace {
void add_letter(ColourMonomial& mono, Letter x, int n) {
  if (x.rank < 1 || x.rank > 2 * n) throw std::invalid_argument("letter out of range");
  if (x.rank <= n)
    ++mono.exponents[static_cast<std::size_t>(x.rank - 1)];
  else
    --mono.exponents[static_cast<std::size_t>(2 * n - x.rank)];
}
}  // namespace

ColourMonomial monomial(const Colour& c, int n) {
  auto mono = ColourMonomial::zero(n);
  switch (c.kind()) {
    case Colour::Kind::Empty: break;
    case Colour::Kind::Primary: add_letter(mono, c.first(), n); break;
    case Colour::Kind::Secondary:
      add_letter(mono, c.first(), n);
      add_letter(mono, c.second(), n);
      break;
    case Colour::Kind::Infinity: throw std::invalid_argument("c_inf has no monomial");
  }
  return mono;
}

namespace {
void require_primary(const ColouredInt& a) {
  if (!a.colour.is_primary()) throw std::invalid_argument("primary colour expected");
}
}  // namespace

bool primary_ge(const ColouredInt& a, const ColouredInt& b) {
  require_primary(a);
  require_primary(b);
  return a.size - b.size >= chi(a.colour.first() < b.colour.first());
}

bool primary_gt(const ColouredInt& a, const ColouredInt& b) {
  require_primary(a);
  require_primary(b);
  return a.size - b.size >= chi(a.colour.first() <= b.colour.first());
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

PrimaryInt from_key(long k, int m) {
  long q = k / m, r = k % m;
  if (r < 0) {
    r += m;
    --q;
  }
  return {static_cast<int>(q), Letter{static_cast<int>(r) + 1}};
}

SecondaryInt make_secondary(int size, Letter a, Letter b) {
  return a <= b ? SecondaryInt{size, a, b} : SecondaryInt{size, b, a};
}

EtaZeta eta_zeta(SecondaryInt s) {
  int k = floor_div(s.size, 2);
  if (s.size - 2 * k == 0) return {{k, s.y}, {k, s.x}};
  return {{k + 1, s.x}, {k, s.y}};
}

SecondaryInt compose(PrimaryInt eta, PrimaryInt zeta, int m) {
  long ke = key(eta, m), kz = key(zeta, m);
  // zeta <= eta <= zeta + 1 as coloured integers, i.e. l_v <= k_u <= (l+1)_v
  if (ke < kz || ke > kz + m) throw std::domain_error("compose: eta and zeta not interlaced");
  return make_secondary(eta.size + zeta.size, eta.letter, zeta.letter);
}

}  // namespace cnchar
