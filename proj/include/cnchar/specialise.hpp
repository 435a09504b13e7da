#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cnchar/letters.hpp"
#include "cnchar/series.hpp"

namespace cnchar {

/// l_d with l the size and d the subscript.
struct DilatedPart {
  int size;
  int subscript;
  friend auto operator<=>(const DilatedPart&, const DilatedPart&) = default;
};

/// Twice the dilated value of a primary part: 2km - (m+1) + 2j.
int dilate_doubled(PrimaryInt p, int m);
DilatedPart dilate(SecondaryInt a, int m);
/// Primary and secondary colours only; anything else is a domain error.
DilatedPart dilate(const ColouredInt& k, int m);
SecondaryInt undilate(DilatedPart p, int m);

bool in_e(DilatedPart p, int m, int lower);

/// Fictitious frequencies sitting in E_{-1} \ E_1 and the path bound.
struct CmppFrame {
  int m;
  int bound;
  std::vector<std::pair<DilatedPart, int>> fictitious;
};
/// m = 2n, f_{(-1)_{2n-2i}} = k_i.
CmppFrame cmpp_even(int n, const std::vector<int>& k);
/// m = 2n-1, f_{(-1)_{2n-1-2i}} = k_i for i < n and f_{0_0} = k_n.
CmppFrame cmpp_odd(int n, const std::vector<int>& k);

/// Every path (l_0)_0, ..., (l_m)_m in E_{-1} with unit steps carries
/// total frequency at most the bound.  Parts must lie in E_1.
bool admissible_cmpp(const CmppFrame& frame, const std::vector<DilatedPart>& parts);

/// Brute-force generating function of the admissible multisets over E_1.
TruncatedSeries enumerate_cmpp(const CmppFrame& frame, int truncation);

/// Factors (q^j; q^modulus) for each exponent over euler_power copies of
/// (q;q) and, if set, one (q;q^2).
struct ProductSpec {
  int modulus = 1;
  std::vector<int> exponents;
  int euler_power = 0;
  bool half_euler = false;
};
TruncatedSeries expand(const ProductSpec& spec, int truncation);

std::vector<int> d_set(const std::vector<int>& x);
std::vector<int> delta_multiset(const std::vector<int>& x);

ProductSpec level_one_factors(int n, int i);
ProductSpec general_factors(int n, const std::vector<int>& k);
ProductSpec odd_factors(int n, const std::vector<int>& k);
TruncatedSeries product_level_one(int n, int i, int truncation);
TruncatedSeries product_general(int n, const std::vector<int>& k, int truncation);
TruncatedSeries product_odd(int n, const std::vector<int>& k, int truncation);

/// Paths model of omega_i over the alphabet 1..2n weighted by dilated size.
TruncatedSeries dilated_paths_model(int n, int i, int truncation);

struct CmppReport {
  bool ok;
  bool proved_level;  // sum of k is one and the case is even
  std::optional<SeriesMismatch> mismatch;
  /// Odd case only: whether the product with k reversed matches instead.
  std::optional<bool> reversed_agrees;
  nlohmann::json to_json() const;
};
CmppReport cmpp_check(int n, const std::vector<int>& k, int truncation, bool odd);

}  // namespace cnchar
