#pragma once

#include <functional>
#include <vector>

#include "cnchar/letters.hpp"
#include "cnchar/series.hpp"

namespace cnchar {

/// Elements of Z_S are secondary parts over the alphabet 1..m.
using Path = std::vector<SecondaryInt>;  // e_0, ..., e_m

/// Number of succ steps from zeta to eta, in 0..m.
int steps(SecondaryInt a, int m);
/// f keeps zeta and advances eta; d keeps eta and moves zeta back.
/// Both need steps(a) <= m - 1.
SecondaryInt op_f(SecondaryInt a, int m);
SecondaryInt op_d(SecondaryInt a, int m);

/// a >= b: eta(a) > eta(b), or equal etas and zeta(a) <= zeta(b).
bool zs_ge(SecondaryInt a, SecondaryInt b, int m);
inline bool zs_gt(SecondaryInt a, SecondaryInt b, int m) { return a != b && zs_ge(a, b, m); }

bool is_path(const Path& p, int m);
/// Every path whose seed e_0 has eta = zeta = a primary part of size in
/// [lo, hi].  Paths come out in a fixed order.
void for_each_path(int m, int seed_lo, int seed_hi, const std::function<void(const Path&)>& visit);
std::vector<Path> paths_through(SecondaryInt a, int m);
/// Explicit search over seeded paths.
bool share_path(SecondaryInt a, SecondaryInt b, int m);
/// zeta(a) <= zeta(b) <= eta(b) <= eta(a) <= zeta(a) + 1 after ordering a >= b.
bool share_path_by_interval(SecondaryInt a, SecondaryInt b, int m);

bool in_zs_plus(SecondaryInt a, int m);
std::vector<SecondaryInt> omega_set(int m);
bool in_omega(SecondaryInt a, int m);
/// e_{m-2u} = omega_u, e_{m-2u+1} = 0_{c_{u, bar u}}.
Path special_path(int m);

/// Every path inside Omega ⊔ Z_S^+ carries total frequency at most one,
/// counting a fictitious occurrence of omega.
bool path_sum_admissible(int m, SecondaryInt omega, const std::vector<SecondaryInt>& parts);
/// Parts pairwise (and with omega) on no common path.
bool pairwise_admissible(int m, SecondaryInt omega, const std::vector<SecondaryInt>& parts);

/// Drops the final omega of a rho-chain.
std::vector<SecondaryInt> lambda_forward(int m, const std::vector<SecondaryInt>& chain);
std::vector<SecondaryInt> lambda_inverse(int m, SecondaryInt omega, std::vector<SecondaryInt> parts);

using PartWeight = std::function<int(SecondaryInt)>;
/// Sets of pairwise path-disjoint elements of Z_S^+, also disjoint from
/// omega, with total weight at most max_weight.  Parts in decreasing order.
void for_each_paths_model(int m, SecondaryInt omega, int max_weight, const PartWeight& weight,
                          const std::function<void(const std::vector<SecondaryInt>&)>& visit);
/// Colour tracked when m is even, colourless otherwise.
TruncatedSeries enumerate_paths_model(int m, SecondaryInt omega, int truncation);
/// Colourless series under an arbitrary part weight.
TruncatedSeries enumerate_paths_model_weighted(int m, SecondaryInt omega, int truncation, const PartWeight& weight);

}  // namespace cnchar
