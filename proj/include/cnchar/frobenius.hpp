#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cnchar/models.hpp"
#include "cnchar/series.hpp"

namespace cnchar {

/// Two rows of primary parts over the alphabet 1..m; the last column is
/// the fixed ground and is not counted in size or colour.
struct FrobeniusPair {
  std::vector<PrimaryInt> top;
  std::vector<PrimaryInt> bottom;
  friend auto operator<=>(const FrobeniusPair&, const FrobeniusPair&) = default;
};

std::pair<ColouredInt, ColouredInt> eta_zeta(const ColouredInt& k);
ColouredInt compose(const ColouredInt& eta, const ColouredInt& zeta, int m);

/// omega_0 = (-1)_{c_{m,m}}, omega_i = 0_{c_{i, bar(i+1)}} over the alphabet 1..m.
SecondaryInt omega(int m, int i);
FrobeniusPair frobenius_ground(int n, int i);

FrobeniusPair to_frobenius(int n, int i, const PartList& rho_partition);
PartList from_frobenius(int n, int i, const FrobeniusPair& pair);

bool is_valid_frobenius(int m, const FrobeniusPair& pair);
int frobenius_size(const FrobeniusPair& pair);

/// All pairs with the given ground column and size at most max_size.
void for_each_frobenius(int m, PrimaryInt ground_top, PrimaryInt ground_bottom, int max_size,
                        const std::function<void(const FrobeniusPair&)>& visit);
TruncatedSeries enumerate_frobenius(int n, int i, int truncation);

}  // namespace cnchar
