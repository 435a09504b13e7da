#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "cnchar/letters.hpp"

namespace cnchar {

using Integer = boost::multiprecision::cpp_int;

/// Power series in q (degrees 0..N) whose coefficients are Laurent
/// polynomials in e_1..e_n.  Series with n = 0 are colourless.
class TruncatedSeries {
 public:
  using Term = std::pair<int, ColourMonomial>;

  TruncatedSeries(int truncation, int colours);
  static TruncatedSeries one(int truncation, int colours);

  int truncation() const { return truncation_; }
  int colours() const { return colours_; }
  const std::map<Term, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(int q, const ColourMonomial& mono) const;
  /// Terms above the truncation are dropped.
  void add_term(int q, const ColourMonomial& mono, const Integer& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const Integer& c) const;
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Same q-series with e_j -> 1.
  TruncatedSeries forget_colours() const;
  /// A colourless series viewed as one in n colours.
  TruncatedSeries lift(int colours) const;
  /// Coefficients of q^0..q^N after forgetting colours.
  std::vector<Integer> q_coefficients() const;

  nlohmann::json to_json() const;
  static TruncatedSeries from_json(const nlohmann::json& j, int truncation, int colours);

 private:
  void require_compatible(const TruncatedSeries& o) const;
  int truncation_;
  int colours_;
  std::map<Term, Integer> terms_;
};

/// (q^j; q^mod)_inf truncated at q^N, colourless.
TruncatedSeries pochhammer(int j, int mod, int truncation);
/// 1 / (q^j; q^mod)_inf truncated at q^N, colourless.
TruncatedSeries inverse_pochhammer(int j, int mod, int truncation);
/// 1 / (q; q)_inf.
TruncatedSeries inverse_euler(int truncation);

/// Lowest degree at which the two series differ, if any.
struct SeriesMismatch {
  int degree;
  ColourMonomial colour;
  Integer lhs, rhs;
};
std::optional<SeriesMismatch> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);
nlohmann::json mismatch_json(const std::optional<SeriesMismatch>& m);

/// Fast counter used by the enumerators; at most 8 colours.
class CountAccumulator {
 public:
  using Packed = std::array<std::int16_t, 8>;

  CountAccumulator(int truncation, int colours);
  void add(int q, const Packed& mono) { ++cells_[static_cast<std::size_t>(q)][mono]; }
  TruncatedSeries to_series() const;

  static Packed pack(const ColourMonomial& mono);

 private:
  struct Hash {
    std::size_t operator()(const Packed& p) const noexcept;
  };
  int truncation_;
  int colours_;
  std::vector<std::unordered_map<Packed, std::uint64_t, Hash>> cells_;
};

inline void add_into(CountAccumulator::Packed& acc, const CountAccumulator::Packed& x, int sign) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = static_cast<std::int16_t>(acc[j] + sign * x[j]);
}

}  // namespace cnchar
