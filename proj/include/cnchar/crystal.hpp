#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cnchar/letters.hpp"

namespace cnchar {

/// Vertex of the level-1 crystal of rank n: the empty vertex or an
/// unordered pair x <= y of letters of rank 1..2n.
class CrystalVertex {
 public:
  static constexpr CrystalVertex empty() { return CrystalVertex(); }
  static constexpr CrystalVertex pair(Letter a, Letter b) { return a <= b ? CrystalVertex(a, b) : CrystalVertex(b, a); }

  constexpr bool is_empty() const { return empty_; }
  constexpr Letter x() const { return x_; }
  constexpr Letter y() const { return y_; }

  /// (x_1..x_n, x̄_n..x̄_1), i.e. multiplicity of each rank 1..2n.
  std::vector<int> coordinates(int n) const;
  static std::optional<CrystalVertex> from_coordinates(const std::vector<int>& coords);

  Colour colour() const { return empty_ ? Colour::empty() : Colour::secondary(x_, y_); }
  std::string name(int n) const;

  friend constexpr auto operator<=>(const CrystalVertex&, const CrystalVertex&) = default;

 private:
  constexpr CrystalVertex() = default;
  constexpr CrystalVertex(Letter a, Letter b) : empty_(false), x_(a), y_(b) {}
  bool empty_ = true;
  Letter x_{0}, y_{0};
};

class EnergyValue {
 public:
  explicit EnergyValue(int v);
  int value() const { return v_; }
  friend auto operator<=>(EnergyValue, EnergyValue) = default;

 private:
  int v_;
};

/// Empty vertex first, then pairs in lexicographic rank order.  n >= 2.
std::vector<CrystalVertex> vertices(int n);
Colour colour_of(const CrystalVertex& b);
ColourMonomial monomial_of_vertex(const CrystalVertex& b, int n);

std::optional<CrystalVertex> kashiwara_f(int n, int i, const CrystalVertex& b);
std::optional<CrystalVertex> kashiwara_e(int n, int i, const CrystalVertex& b);

/// H(b ⊗ b2) as a maximum of the four families, written with indicator
/// functions of the letters.
EnergyValue energy_kkm(int n, const CrystalVertex& b, const CrystalVertex& b2);
/// Same maximum computed from raw coordinate sums.
int energy_kkm_coordinates(int n, const CrystalVertex& b, const CrystalVertex& b2);
/// Closed form with the case split on bar(y') = x.
EnergyValue energy_simple(int n, const CrystalVertex& b, const CrystalVertex& b2);

/// Vertex b_i of the ground: b_0 = ∅, b_i = (i, ī).
CrystalVertex ground_vertex(int n, int i);

/// Precomputed vertex list and energy table for one rank.
class Crystal {
 public:
  explicit Crystal(int n);
  int rank() const { return n_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const CrystalVertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
  int index_of(const CrystalVertex& b) const;
  int ground_index(int i) const { return index_of(ground_vertex(n_, i)); }
  /// H(vertex(a) ⊗ vertex(b)).
  int energy(int a, int b) const { return energy_[static_cast<std::size_t>(a * size() + b)]; }
  /// Minimal difference between a part coloured by `larger` and the next
  /// smaller part coloured by `smaller`: H(smaller ⊗ larger).
  int min_diff(int larger, int smaller) const { return energy(smaller, larger); }

  /// DOT graph of the f-arrows.
  std::string to_dot() const;

 private:
  int n_;
  std::vector<CrystalVertex> vertices_;
  std::vector<int> energy_;
};

}  // namespace cnchar
