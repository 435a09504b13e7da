#pragma once

#include <functional>
#include <vector>

#include "cnchar/crystal.hpp"
#include "cnchar/series.hpp"

namespace cnchar {

enum class Relation { Exact, AtLeast };

/// Parts listed from the largest down to the ground part 0_{c_{b_i}}.
using PartList = std::vector<ColouredInt>;
using PartVisitor = std::function<void(const PartList&)>;

ColouredInt ground_part(int n, int i);

/// Minimal difference rho(left, right) between a part coloured `left` and
/// the next smaller part coloured `right`.  Both colours secondary.
int rho(const Colour& left, const Colour& right);
/// Bound on the last non-ground part of a rho-partition with ground i.
int rho_boundary(const Crystal& crystal, int i, const Colour& c);
/// a ≫_rho b: |a| - |b| >= rho(c(a), c(b)).
bool rho_dominates(SecondaryInt a, SecondaryInt b);

bool is_valid_grounded(const Crystal& crystal, int i, Relation rel, const PartList& parts);
bool is_valid_rho(const Crystal& crystal, int i, const PartList& parts);

TruncatedSeries enumerate_grounded(int n, int i, Relation rel, int truncation);
TruncatedSeries enumerate_rho(int n, int i, int truncation);

void for_each_grounded(int n, int i, Relation rel, int max_size, const PartVisitor& visit);
void for_each_rho(int n, int i, int max_size, const PartVisitor& visit);

/// Chains a_0 ≫ a_1 ≫ ... ≫ omega of secondary parts over the alphabet
/// 1..m with total size (omega excluded) at most max_size.  The visitor
/// sees the chain without omega.
void for_each_rho_chain(int m, SecondaryInt omega, int max_size, const std::function<void(const std::vector<SecondaryInt>&)>& visit);

/// Colour monomial of a partition, ground excluded.
ColourMonomial partition_monomial(const PartList& parts, int n);
int partition_size(const PartList& parts);

}  // namespace cnchar
