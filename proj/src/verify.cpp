#include "cnchar/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "cnchar/deletion.hpp"
#include "cnchar/frobenius.hpp"
#include "cnchar/models.hpp"
#include "cnchar/paths.hpp"

namespace cnchar {

int thread_count() {
  if (const char* env = std::getenv("CNCHAR_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

nlohmann::json EnergyReport::to_json() const {
  return {{"n", n}, {"pairs_checked", pairs_checked}, {"mismatches", mismatches}};
}

EnergyReport verify_energy(int n) {
  EnergyReport r{n};
  const auto vs = vertices(n);
  for (const auto& b : vs)
    for (const auto& b2 : vs) {
      ++r.pairs_checked;
      if (energy_kkm(n, b, b2) != energy_simple(n, b, b2)) ++r.mismatches;
    }
  return r;
}

EnergyReport verify_trichotomy(int n) {
  EnergyReport r{n};
  const int m = 2 * n;
  for (const auto& b : vertices(n))
    for (const auto& b2 : vertices(n)) {
      if (b.is_empty() || b2.is_empty()) continue;
      const int x = b.x().rank, y = b.y().rank, xp = b2.x().rank, yp = b2.y().rank;
      const int ybar = m + 1 - y, ypbar = m + 1 - yp;
      const bool zero = (x < xp && y < yp) || (ybar >= x && x == ypbar && ypbar == xp) ||
                        (ybar == x && x == ypbar && ypbar < xp);
      const int expected = x >= yp ? 2 : zero ? 0 : 1;
      ++r.pairs_checked;
      if (energy_simple(n, b, b2).value() != expected) ++r.mismatches;
    }
  return r;
}

nlohmann::json ModelsReport::to_json() const {
  return {{"n", n},         {"i", i},           {"N", truncation},         {"rho", rho},
          {"frobenius", frobenius}, {"paths", paths}, {"atleast_euler", euler_factor}, {"ok", ok()}};
}

ModelsReport verify_models(int n, int i, int truncation) {
  ModelsReport r{n, i, truncation};
  const auto exact = enumerate_grounded(n, i, Relation::Exact, truncation);
  r.rho = enumerate_rho(n, i, truncation) == exact;
  r.frobenius = enumerate_frobenius(n, i, truncation) == exact;
  r.paths = enumerate_paths_model(2 * n, omega(2 * n, i), truncation) == exact;
  r.euler_factor =
      enumerate_grounded(n, i, Relation::AtLeast, truncation) == exact * inverse_euler(truncation).lift(n);
  return r;
}

nlohmann::json RoundtripReport::to_json() const {
  nlohmann::json j{{"bijection", bijection}, {"n", n},       {"i", i},
                   {"N", truncation},        {"forward", forward_checked}, {"backward", backward_checked},
                   {"failures", failures}};
  if (!first_failure.empty()) j["first_failure"] = first_failure;
  return j;
}

namespace {

std::string describe(const PartList& parts, int n) {
  std::ostringstream os;
  for (const auto& p : parts) {
    os << p.size << "_";
    if (p.colour.is_secondary())
      os << "(" << letter_name(p.colour.first(), n) << "," << letter_name(p.colour.second(), n) << ")";
    else
      os << "∅";
    os << " ";
  }
  return os.str();
}

std::string describe(const std::vector<SecondaryInt>& parts) {
  std::ostringstream os;
  for (const auto& p : parts) os << p.size << "_(" << p.x.rank << "," << p.y.rank << ") ";
  return os.str();
}

void fail(RoundtripReport& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

template <class F>
void guarded(RoundtripReport& r, const std::string& label, F&& f) {
  try {
    if (!f()) fail(r, label);
  } catch (const std::exception& e) {
    fail(r, label + ": " + e.what());
  }
}

// Partitions with parts at most `largest` and total at most `room`, weakly
// decreasing.
void for_each_integer_partition(int room, int largest, std::vector<int>& acc,
                                const std::function<void(const std::vector<int>&)>& visit) {
  visit(acc);
  for (int p = std::min(room, largest); p >= 1; --p) {
    acc.push_back(p);
    for_each_integer_partition(room - p, p, acc, visit);
    acc.pop_back();
  }
}

std::vector<std::pair<Letter, Letter>> restricted_colours(const PartList& parts, int n) {
  std::vector<std::pair<Letter, Letter>> out;
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
    const auto& c = parts[j].colour;
    if (!c.is_secondary()) continue;
    if (classify(CrystalVertex::pair(c.first(), c.second()), n) != ColourClass::Free)
      out.push_back({c.first(), c.second()});
  }
  return out;
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

}  // namespace

RoundtripReport roundtrip_phi(int n, int i, int truncation) {
  RoundtripReport r{"phi", n, i, truncation, 0, 0, 0, {}};
  Crystal crystal(n);
  for_each_grounded(n, i, Relation::AtLeast, truncation, [&](const PartList& lambda) {
    ++r.forward_checked;
    guarded(r, "phi forward " + describe(lambda, n), [&] {
      auto d = phi_forward(n, i, lambda);
      return is_valid_rho(crystal, i, d.mu) && phi_inverse(n, i, d.mu, d.nu) == lambda &&
             partition_size(lambda) == partition_size(d.mu) + sum(d.nu) &&
             lambda.size() == d.mu.size() + d.nu.size() &&
             restricted_colours(lambda, n) == restricted_colours(d.mu, n);
    });
  });
  for_each_rho(n, i, truncation, [&](const PartList& mu) {
    std::vector<int> acc;
    for_each_integer_partition(truncation - partition_size(mu), truncation, acc, [&](const std::vector<int>& nu) {
      ++r.backward_checked;
      guarded(r, "phi backward " + describe(mu, n), [&] {
        auto lambda = phi_inverse(n, i, mu, nu);
        if (!is_valid_grounded(crystal, i, Relation::AtLeast, lambda)) return false;
        auto d = phi_forward(n, i, lambda);
        return d.mu == mu && d.nu == nu;
      });
    });
  });
  if (r.forward_checked != r.backward_checked) fail(r, "phi: domain and codomain counts differ");
  return r;
}

RoundtripReport roundtrip_frobenius(int n, int i, int truncation) {
  RoundtripReport r{"frobenius", n, i, truncation, 0, 0, 0, {}};
  Crystal crystal(n);
  for_each_rho(n, i, truncation, [&](const PartList& pi) {
    ++r.forward_checked;
    guarded(r, "frobenius forward " + describe(pi, n), [&] {
      auto pair = to_frobenius(n, i, pi);
      return is_valid_frobenius(2 * n, pair) && frobenius_size(pair) == partition_size(pi) &&
             pair.top.size() == pi.size() && from_frobenius(n, i, pair) == pi;
    });
  });
  const auto g = frobenius_ground(n, i);
  for_each_frobenius(2 * n, g.top[0], g.bottom[0], truncation, [&](const FrobeniusPair& pair) {
    ++r.backward_checked;
    guarded(r, "frobenius backward", [&] {
      auto pi = from_frobenius(n, i, pair);
      return is_valid_rho(crystal, i, pi) && to_frobenius(n, i, pi) == pair;
    });
  });
  if (r.forward_checked != r.backward_checked) fail(r, "frobenius: domain and codomain counts differ");
  return r;
}

RoundtripReport roundtrip_lambda(int n, int i, int truncation) {
  RoundtripReport r{"lambda", n, i, truncation, 0, 0, 0, {}};
  const int m = 2 * n;
  const auto w = omega(m, i);
  for_each_rho_chain(m, w, truncation, [&](const std::vector<SecondaryInt>& chain) {
    ++r.forward_checked;
    guarded(r, "lambda forward " + describe(chain), [&] {
      auto full = chain;
      full.push_back(w);
      auto parts = lambda_forward(m, full);
      return path_sum_admissible(m, w, parts) && lambda_inverse(m, w, parts) == full;
    });
  });
  for_each_paths_model(m, w, truncation, [](SecondaryInt a) { return a.size; },
                       [&](const std::vector<SecondaryInt>& parts) {
                         ++r.backward_checked;
                         guarded(r, "lambda backward " + describe(parts), [&] {
                           auto chain = lambda_inverse(m, w, parts);
                           return lambda_forward(m, chain) == parts;
                         });
                       });
  if (r.forward_checked != r.backward_checked) fail(r, "lambda: domain and codomain counts differ");
  return r;
}

nlohmann::json ShareReport::to_json() const {
  return {{"pairs", pairs}, {"rho_disagreements", rho_disagreements}, {"interval_disagreements", interval_disagreements}};
}

ShareReport verify_share_path(int m, int lo, int hi) {
  std::vector<SecondaryInt> box;
  for (int s = lo; s <= hi; ++s)
    for (int x = 1; x <= m; ++x)
      for (int y = x; y <= m; ++y) box.push_back({s, Letter{x}, Letter{y}});
  ShareReport r;
  for (const auto& a : box)
    for (const auto& b : box) {
      if (!zs_gt(a, b, m)) continue;
      ++r.pairs;
      const bool shared = share_path(a, b, m);
      if (shared == (rho_dominates(a, b) || rho_dominates(b, a))) ++r.rho_disagreements;
      if (shared != share_path_by_interval(a, b, m)) ++r.interval_disagreements;
    }
  return r;
}

}  // namespace cnchar
