#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cnchar {

/// Worker count from CNCHAR_THREADS, at least one.
int thread_count();

struct EnergyReport {
  int n;
  long pairs_checked = 0;
  long mismatches = 0;
  nlohmann::json to_json() const;
};
EnergyReport verify_energy(int n);

/// 2 iff x >= y'; 0 iff one of the three zero conditions; 1 otherwise.
EnergyReport verify_trichotomy(int n);

/// Exact, rho, Frobenius and paths series against each other, and the
/// at-least series against exact times 1/(q;q).
struct ModelsReport {
  int n, i, truncation;
  bool rho = false, frobenius = false, paths = false, euler_factor = false;
  bool ok() const { return rho && frobenius && paths && euler_factor; }
  nlohmann::json to_json() const;
};
ModelsReport verify_models(int n, int i, int truncation);

struct RoundtripReport {
  std::string bijection;
  int n, i, truncation;
  long forward_checked = 0;
  long backward_checked = 0;
  long failures = 0;
  std::string first_failure;
  nlohmann::json to_json() const;
};
RoundtripReport roundtrip_phi(int n, int i, int truncation);
RoundtripReport roundtrip_frobenius(int n, int i, int truncation);
RoundtripReport roundtrip_lambda(int n, int i, int truncation);

/// Explicit path search against the interval form and against ≫_rho, on
/// all comparable pairs over 1..m with sizes in [lo, hi].
struct ShareReport {
  long pairs = 0;
  long rho_disagreements = 0;
  long interval_disagreements = 0;
  nlohmann::json to_json() const;
};
ShareReport verify_share_path(int m, int lo, int hi);

}  // namespace cnchar
