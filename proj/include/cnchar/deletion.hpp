#pragma once

#include <string>
#include <vector>

#include "cnchar/crystal.hpp"
#include "cnchar/models.hpp"

namespace cnchar {

enum class ColourClass { Free, Sup, Inf };

/// Colours 0..colours-1 with a distinguished free colour c0; the id
/// `colours` stands for c_∞.  For the crystal these ids are vertex ids.
struct ColourSystem {
  int colours = 0;
  int c0 = 0;
  std::vector<ColourClass> classes;
  std::vector<int> eps;    // eps[c * (colours + 1) + c2], c2 may be c_∞
  std::vector<int> delta;  // -1 on free colours
  std::vector<int> gamma;  // gamma[c * colours + c2], -1 where undefined

  int infinity() const { return colours; }
  int epsilon(int c, int c2) const { return eps[static_cast<std::size_t>(c * (colours + 1) + c2)]; }
  ColourClass cls(int c) const { return classes[static_cast<std::size_t>(c)]; }
  int delta_of(int c) const { return delta[static_cast<std::size_t>(c)]; }
  int gamma_of(int c, int c2) const { return gamma[static_cast<std::size_t>(c * colours + c2)]; }
};

/// epsilon_i, delta and gamma for the level-1 crystal of rank n and ground i.
ColourSystem crystal_colour_system(int n, int i);
ColourClass classify(const CrystalVertex& b, int n);

struct WellDefinedReport {
  bool ok = true;
  int condition = 0;  // 1..7 as in the definition, 8 for the c0 hypothesis
  std::string detail;
};

WellDefinedReport check_well_defined(const ColourSystem& sys);
WellDefinedReport check_well_defined(int n, int i);

struct IdPart {
  int size;
  int colour;
  friend auto operator<=>(const IdPart&, const IdPart&) = default;
};
/// Ends with the part 0_{c_∞}.
using IdPartition = std::vector<IdPart>;

bool is_eps_partition(const ColourSystem& sys, const IdPartition& p);
/// Part j (free, not c0) sits in the middle of one of the forbidden
/// three-part patterns, or starts the partition before its inf partner.
bool in_forbidden_pattern(const ColourSystem& sys, const IdPartition& p, std::size_t j);
/// c0-regular, no repeated free part, no forbidden pattern.
bool avoids_forbidden_patterns(const ColourSystem& sys, const IdPartition& p);

struct Deletion {
  IdPartition mu;
  std::vector<int> nu;  // weakly decreasing, positive
};

Deletion phi_forward(const ColourSystem& sys, const IdPartition& lambda);
/// Inserts the parts of nu one at a time in the given order.
IdPartition phi_inverse(const ColourSystem& sys, const IdPartition& mu, const std::vector<int>& nu);

/// Crystal-level wrappers on grounded partitions (ground part last).
struct CrystalDeletion {
  PartList mu;  // a rho-partition
  std::vector<int> nu;
};
CrystalDeletion phi_forward(int n, int i, const PartList& lambda);
PartList phi_inverse(int n, int i, const PartList& mu, const std::vector<int>& nu);

IdPartition to_ids(const Crystal& crystal, const PartList& parts);
PartList from_ids(const Crystal& crystal, int i, const IdPartition& parts);

}  // namespace cnchar
