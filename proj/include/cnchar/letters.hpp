#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cnchar {

/// A letter of the ordered alphabet 1 < 2 < ... < m, stored by rank.
/// In the crystal alphabet m = 2n and ranks n+1..2n stand for the barred
/// letters n̄ < ... < 1̄.
struct Letter {
  int rank = 1;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

constexpr Letter bar(Letter x, int m) { return Letter{m + 1 - x.rank}; }

/// Display name in the crystal alphabet of rank n ("2" or "2̄").
std::string letter_name(Letter x, int n);

class Colour {
 public:
  enum class Kind : std::uint8_t { Empty, Primary, Secondary, Infinity };

  static constexpr Colour empty() { return Colour(Kind::Empty, {0}, {0}); }
  static constexpr Colour infinity() { return Colour(Kind::Infinity, {0}, {0}); }
  static constexpr Colour primary(Letter u) { return Colour(Kind::Primary, u, {0}); }
  /// Unordered pair; stored with first <= second.
  static constexpr Colour secondary(Letter a, Letter b) {
    return a <= b ? Colour(Kind::Secondary, a, b) : Colour(Kind::Secondary, b, a);
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_primary() const { return kind_ == Kind::Primary; }
  constexpr bool is_secondary() const { return kind_ == Kind::Secondary; }
  constexpr bool is_empty() const { return kind_ == Kind::Empty; }
  constexpr bool is_infinity() const { return kind_ == Kind::Infinity; }

  /// Letter of a primary colour, or the smaller letter of a secondary one.
  constexpr Letter first() const { return x_; }
  constexpr Letter second() const { return y_; }

  friend constexpr auto operator<=>(const Colour&, const Colour&) = default;

  std::string name(int n) const;

 private:
  constexpr Colour(Kind k, Letter x, Letter y) : kind_(k), x_(x), y_(y) {}
  Kind kind_;
  Letter x_, y_;
};

/// Exponent vector of e_1..e_n.
struct ColourMonomial {
  std::vector<int> exponents;

  static ColourMonomial zero(int n) { return {std::vector<int>(static_cast<std::size_t>(n), 0)}; }
  int size() const { return static_cast<int>(exponents.size()); }
  ColourMonomial& operator+=(const ColourMonomial& o);
  friend ColourMonomial operator+(ColourMonomial a, const ColourMonomial& b) { return a += b; }
  friend auto operator<=>(const ColourMonomial&, const ColourMonomial&) = default;
};

/// Monomial of a colour over the crystal alphabet of rank n: j gives e_j,
/// j̄ gives e_j^{-1}, a pair multiplies both, the empty colour is 1.
ColourMonomial monomial(const Colour& c, int n);

struct ColouredInt {
  int size = 0;
  Colour colour = Colour::empty();
  friend auto operator<=>(const ColouredInt&, const ColouredInt&) = default;
};

/// k_{c_u} >= l_{c_v} iff k - l >= chi(u < v).  Both arguments must be primary.
bool primary_ge(const ColouredInt& a, const ColouredInt& b);
/// k_{c_u} > l_{c_v} iff k - l >= chi(u <= v).
bool primary_gt(const ColouredInt& a, const ColouredInt& b);

/// Primary coloured integer over an alphabet of size m.  The order is
/// lexicographic in (size, letter), which agrees with primary_ge.
struct PrimaryInt {
  int size = 0;
  Letter letter;
  friend constexpr auto operator<=>(PrimaryInt, PrimaryInt) = default;
};

/// Position on the chain ... < 0_{c_1} < ... < 0_{c_m} < 1_{c_1} < ...
constexpr long key(PrimaryInt p, int m) { return static_cast<long>(p.size) * m + (p.letter.rank - 1); }
PrimaryInt from_key(long k, int m);
inline PrimaryInt succ(PrimaryInt p, int m) { return from_key(key(p, m) + 1, m); }
inline PrimaryInt pred(PrimaryInt p, int m) { return from_key(key(p, m) - 1, m); }
inline ColouredInt to_coloured(PrimaryInt p) { return {p.size, Colour::primary(p.letter)}; }

/// Secondary coloured integer k_{c_{x,y}} over an alphabet of size m.
struct SecondaryInt {
  int size = 0;
  Letter x, y;  // x <= y
  friend constexpr auto operator<=>(SecondaryInt, SecondaryInt) = default;
};

SecondaryInt make_secondary(int size, Letter a, Letter b);
inline ColouredInt to_coloured(SecondaryInt s) { return {s.size, Colour::secondary(s.x, s.y)}; }

struct EtaZeta {
  PrimaryInt eta;
  PrimaryInt zeta;
  friend constexpr auto operator<=>(EtaZeta, EtaZeta) = default;
};

/// Splits 2k_{c_{x,y}} into (k_{c_y}, k_{c_x}) and (2k+1)_{c_{x,y}} into
/// ((k+1)_{c_x}, k_{c_y}).
EtaZeta eta_zeta(SecondaryInt s);
/// Inverse of eta_zeta.  Requires zeta <= eta <= zeta + 1 in size terms.
SecondaryInt compose(PrimaryInt eta, PrimaryInt zeta, int m);

constexpr int chi(bool b) { return b ? 1 : 0; }

int floor_div(int a, int b);

}  // namespace cnchar
