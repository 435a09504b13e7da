#include "cnchar/paths.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cnchar/models.hpp"

namespace cnchar {

int steps(SecondaryInt a, int m) {
  auto ez = eta_zeta(a);
  return static_cast<int>(key(ez.eta, m) - key(ez.zeta, m));
}

SecondaryInt op_f(SecondaryInt a, int m) {
  if (steps(a, m) >= m) throw std::domain_error("f is undefined when eta = zeta + 1");
  auto ez = eta_zeta(a);
  return compose(succ(ez.eta, m), ez.zeta, m);
}

SecondaryInt op_d(SecondaryInt a, int m) {
  if (steps(a, m) >= m) throw std::domain_error("d is undefined when eta = zeta + 1");
  auto ez = eta_zeta(a);
  return compose(ez.eta, pred(ez.zeta, m), m);
}

bool zs_ge(SecondaryInt a, SecondaryInt b, int m) {
  auto ea = eta_zeta(a), eb = eta_zeta(b);
  const long ha = key(ea.eta, m), hb = key(eb.eta, m);
  return ha > hb || (ha == hb && key(ea.zeta, m) <= key(eb.zeta, m));
}

bool is_path(const Path& p, int m) {
  if (static_cast<int>(p.size()) != m + 1) return false;
  auto e0 = eta_zeta(p[0]);
  if (e0.eta != e0.zeta) return false;
  for (int u = 0; u < m; ++u) {
    const auto& next = p[static_cast<std::size_t>(u + 1)];
    const auto& cur = p[static_cast<std::size_t>(u)];
    if (next != op_f(cur, m) && next != op_d(cur, m)) return false;
  }
  return true;
}

void for_each_path(int m, int seed_lo, int seed_hi, const std::function<void(const Path&)>& visit) {
  if (m < 1 || m > 16) throw std::invalid_argument("alphabet length out of range");
  Path p(static_cast<std::size_t>(m + 1));
  for (int s = seed_lo; s <= seed_hi; ++s)
    for (int u = 1; u <= m; ++u) {
      const PrimaryInt seed{s, Letter{u}};
      p[0] = compose(seed, seed, m);
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        for (int j = 0; j < m; ++j) {
          const auto& cur = p[static_cast<std::size_t>(j)];
          auto next = (mask >> j) & 1u ? op_f(cur, m) : op_d(cur, m);
          auto ec = eta_zeta(cur), en = eta_zeta(next);
          if (key(en.eta, m) < key(ec.eta, m) || key(en.zeta, m) > key(ec.zeta, m) || !zs_gt(next, cur, m))
            throw std::logic_error("path is not monotone");
          p[static_cast<std::size_t>(j + 1)] = next;
        }
        visit(p);
      }
    }
}

std::vector<Path> paths_through(SecondaryInt a, int m) {
  auto ez = eta_zeta(a);
  std::vector<Path> out;
  const auto pos = static_cast<std::size_t>(steps(a, m));
  for_each_path(m, ez.zeta.size, ez.eta.size, [&](const Path& p) {
    if (p[pos] == a) out.push_back(p);
  });
  return out;
}

bool share_path(SecondaryInt a, SecondaryInt b, int m) {
  for (const auto& p : paths_through(a, m))
    if (std::find(p.begin(), p.end(), b) != p.end()) return true;
  return false;
}

bool share_path_by_interval(SecondaryInt a, SecondaryInt b, int m) {
  if (!zs_ge(a, b, m)) std::swap(a, b);
  auto ea = eta_zeta(a), eb = eta_zeta(b);
  const long za = key(ea.zeta, m), zb = key(eb.zeta, m), hb = key(eb.eta, m), ha = key(ea.eta, m);
  return za <= zb && zb <= hb && hb <= ha && ha <= za + m;
}

bool in_zs_plus(SecondaryInt a, int m) {
  if (a.size > 0) return true;
  return a.size == 0 && a.x > bar(a.y, m);
}

std::vector<SecondaryInt> omega_set(int m) {
  std::vector<SecondaryInt> out;
  out.push_back({-1, Letter{m}, Letter{m}});
  for (int i = 1; 2 * i <= m; ++i) out.push_back(make_secondary(0, Letter{i}, bar(Letter{i + 1}, m)));
  for (int u = 1; 2 * u <= m + 1; ++u) out.push_back(make_secondary(0, Letter{u}, bar(Letter{u}, m)));
  return out;
}

bool in_omega(SecondaryInt a, int m) {
  const int x = a.x.rank, y = a.y.rank;
  if (a.size == -1) return x == m && y == m;
  if (a.size != 0 || x > y) return false;
  return (y == m - x && 2 * x <= m) || y == m + 1 - x;
}

Path special_path(int m) {
  Path p(static_cast<std::size_t>(m + 1));
  auto om = omega_set(m);
  for (int u = 0; 2 * u <= m; ++u) p[static_cast<std::size_t>(m - 2 * u)] = om[static_cast<std::size_t>(u)];
  for (int u = 1; 2 * u <= m + 1; ++u)
    p[static_cast<std::size_t>(m - 2 * u + 1)] = make_secondary(0, Letter{u}, bar(Letter{u}, m));
  return p;
}

bool path_sum_admissible(int m, SecondaryInt omega, const std::vector<SecondaryInt>& parts) {
  if (!in_omega(omega, m)) throw std::invalid_argument("omega must lie in Omega");
  std::map<SecondaryInt, int> freq;
  freq[omega] += 1;
  int lo = omega.size, hi = omega.size;
  for (const auto& a : parts) {
    if (!in_zs_plus(a, m)) return false;
    freq[a] += 1;
    lo = std::min(lo, a.size);
    hi = std::max(hi, a.size);
  }
  bool ok = true;
  for_each_path(m, floor_div(lo - 1, 2) - 1, floor_div(hi + 1, 2) + 1, [&](const Path& p) {
    if (!ok) return;
    int sum = 0;
    for (const auto& e : p) {
      if (!in_zs_plus(e, m) && !in_omega(e, m)) return;
      auto it = freq.find(e);
      if (it != freq.end()) sum += it->second;
    }
    if (sum > 1) ok = false;
  });
  return ok;
}

bool pairwise_admissible(int m, SecondaryInt omega, const std::vector<SecondaryInt>& parts) {
  for (std::size_t a = 0; a < parts.size(); ++a) {
    if (!in_zs_plus(parts[a], m) || share_path(parts[a], omega, m)) return false;
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      if (parts[a] == parts[b] || share_path(parts[a], parts[b], m)) return false;
  }
  return true;
}

std::vector<SecondaryInt> lambda_forward(int m, const std::vector<SecondaryInt>& chain) {
  if (chain.empty() || !in_omega(chain.back(), m)) throw std::invalid_argument("lambda_forward: chain must end in Omega");
  for (std::size_t j = 0; j + 1 < chain.size(); ++j)
    if (!rho_dominates(chain[j], chain[j + 1])) throw std::invalid_argument("lambda_forward: not a rho-chain");
  return {chain.begin(), chain.end() - 1};
}

std::vector<SecondaryInt> lambda_inverse(int m, SecondaryInt omega, std::vector<SecondaryInt> parts) {
  if (!path_sum_admissible(m, omega, parts)) throw std::invalid_argument("lambda_inverse: frequency condition fails");
  std::sort(parts.begin(), parts.end(), [m](SecondaryInt a, SecondaryInt b) { return zs_gt(a, b, m); });
  parts.push_back(omega);
  return parts;
}

namespace {

struct Universe {
  std::vector<SecondaryInt> elems;  // sorted by weight, then decreasing
  std::vector<int> weights;
  std::size_t words = 0;
  std::vector<std::uint64_t> share;  // row-major bitsets
  std::vector<std::uint64_t> blocked_by_omega;

  const std::uint64_t* row(std::size_t j) const { return share.data() + j * words; }
};

Universe build_universe(int m, SecondaryInt omega, int max_weight, const PartWeight& weight) {
  if (!in_omega(omega, m)) throw std::invalid_argument("omega must lie in Omega");
  Universe u;
  std::vector<std::pair<int, SecondaryInt>> cand;
  for (int s = 0; s <= max_weight; ++s)
    for (int x = 1; x <= m; ++x)
      for (int y = x; y <= m; ++y) {
        SecondaryInt a{s, Letter{x}, Letter{y}};
        if (!in_zs_plus(a, m)) continue;
        int w = weight(a);
        if (w < 0) throw std::logic_error("negative part weight");
        if (w <= max_weight) cand.push_back({w, a});
      }
  std::sort(cand.begin(), cand.end(), [m](const auto& p, const auto& q) {
    return p.first != q.first ? p.first < q.first : zs_gt(p.second, q.second, m);
  });
  for (const auto& [w, a] : cand) {
    u.weights.push_back(w);
    u.elems.push_back(a);
  }
  const std::size_t n = u.elems.size();
  u.words = (n + 64) / 64;
  u.share.assign(n * u.words, 0);
  u.blocked_by_omega.assign(u.words, 0);
  std::map<SecondaryInt, std::size_t> index;
  for (std::size_t j = 0; j < n; ++j) index[u.elems[j]] = j;
  const std::size_t omega_id = n;
  index[omega] = omega_id;
  int hi = omega.size;
  for (const auto& a : u.elems) hi = std::max(hi, a.size);
  std::vector<std::size_t> on_path;
  for_each_path(m, floor_div(omega.size - 1, 2) - 1, floor_div(hi + 1, 2) + 1, [&](const Path& p) {
    on_path.clear();
    for (const auto& e : p) {
      auto it = index.find(e);
      if (it != index.end()) on_path.push_back(it->second);
    }
    for (std::size_t a : on_path)
      for (std::size_t b : on_path) {
        if (a == omega_id && b != omega_id) u.blocked_by_omega[b / 64] |= 1ULL << (b % 64);
        if (a != omega_id && b != omega_id) u.share[a * u.words + b / 64] |= 1ULL << (b % 64);
      }
  });
  return u;
}

template <class Visit>
void independent_sets(const Universe& u, int max_weight, Visit& visit) {
  const std::size_t words = u.words;
  std::vector<std::size_t> chosen;
  // one blocked bitset per depth
  std::vector<std::uint64_t> blocked((u.elems.size() + 2) * words, 0);
  std::copy(u.blocked_by_omega.begin(), u.blocked_by_omega.end(), blocked.begin());
  auto rec = [&](auto&& self, std::size_t start, int used) -> void {
    visit(chosen, used);
    const std::size_t depth = chosen.size();
    const std::uint64_t* cur = blocked.data() + depth * words;
    std::uint64_t* next = blocked.data() + (depth + 1) * words;
    for (std::size_t j = start; j < u.elems.size(); ++j) {
      if (u.weights[j] > max_weight - used) break;
      if ((cur[j / 64] >> (j % 64)) & 1ULL) continue;
      const auto* r = u.row(j);
      for (std::size_t w = 0; w < words; ++w) next[w] = cur[w] | r[w];
      chosen.push_back(j);
      self(self, j + 1, used + u.weights[j]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

void for_each_paths_model(int m, SecondaryInt omega, int max_weight, const PartWeight& weight,
                          const std::function<void(const std::vector<SecondaryInt>&)>& visit) {
  auto u = build_universe(m, omega, max_weight, weight);
  auto inner = [&](const std::vector<std::size_t>& chosen, int) {
    std::vector<SecondaryInt> parts;
    for (auto j : chosen) parts.push_back(u.elems[j]);
    std::sort(parts.begin(), parts.end(), [m](SecondaryInt a, SecondaryInt b) { return zs_gt(a, b, m); });
    visit(parts);
  };
  independent_sets(u, max_weight, inner);
}

TruncatedSeries enumerate_paths_model(int m, SecondaryInt omega, int truncation) {
  const int n = m % 2 == 0 ? m / 2 : 0;
  auto u = build_universe(m, omega, truncation, [](SecondaryInt a) { return a.size; });
  std::vector<CountAccumulator::Packed> mono;
  for (const auto& a : u.elems)
    mono.push_back(n > 0 ? CountAccumulator::pack(monomial(Colour::secondary(a.x, a.y), n)) : CountAccumulator::Packed{});
  CountAccumulator acc(truncation, n);
  auto inner = [&](const std::vector<std::size_t>& chosen, int used) {
    CountAccumulator::Packed c{};
    for (auto j : chosen) add_into(c, mono[j], 1);
    acc.add(used, c);
  };
  independent_sets(u, truncation, inner);
  return acc.to_series();
}

TruncatedSeries enumerate_paths_model_weighted(int m, SecondaryInt omega, int truncation, const PartWeight& weight) {
  auto u = build_universe(m, omega, truncation, weight);
  CountAccumulator acc(truncation, 0);
  auto inner = [&](const std::vector<std::size_t>&, int used) { acc.add(used, CountAccumulator::Packed{}); };
  independent_sets(u, truncation, inner);
  return acc.to_series();
}

}  // namespace cnchar
