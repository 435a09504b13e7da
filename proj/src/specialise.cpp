#include "cnchar/specialise.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cnchar/frobenius.hpp"
#include "cnchar/paths.hpp"

namespace cnchar {

int dilate_doubled(PrimaryInt p, int m) { return 2 * p.size * m - (m + 1) + 2 * p.letter.rank; }

DilatedPart dilate(SecondaryInt a, int m) {
  auto ez = eta_zeta(a);
  const int he = dilate_doubled(ez.eta, m), hz = dilate_doubled(ez.zeta, m);
  return {(he + hz) / 2, (he - hz) / 2};
}

DilatedPart dilate(const ColouredInt& k, int m) {
  if (k.colour.is_secondary()) return dilate(SecondaryInt{k.size, k.colour.first(), k.colour.second()}, m);
  if (k.colour.is_primary()) throw std::invalid_argument("primary parts dilate to half-integers; use dilate_doubled");
  throw std::domain_error("dilation is undefined on the empty and infinite colours");
}

SecondaryInt undilate(DilatedPart p, int m) {
  if (!in_e(p, m, p.size)) throw std::invalid_argument("undilate: parity or subscript out of range");
  const long ke = (p.size + p.subscript + m + 1) / 2 - 1, kz = (p.size - p.subscript + m + 1) / 2 - 1;
  return compose(from_key(ke, m), from_key(kz, m), m);
}

bool in_e(DilatedPart p, int m, int lower) {
  return p.size >= lower && p.subscript >= 0 && p.subscript <= m && ((p.size - p.subscript - (m + 1)) % 2 == 0);
}

CmppFrame cmpp_even(int n, const std::vector<int>& k) {
  if (n < 1 || static_cast<int>(k.size()) != n + 1) throw std::invalid_argument("cmpp: need n >= 1 and n+1 values of k");
  CmppFrame f{2 * n, 0, {}};
  for (int i = 0; i <= n; ++i) {
    if (k[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("cmpp: negative k");
    f.bound += k[static_cast<std::size_t>(i)];
    f.fictitious.push_back({{-1, 2 * n - 2 * i}, k[static_cast<std::size_t>(i)]});
  }
  return f;
}

CmppFrame cmpp_odd(int n, const std::vector<int>& k) {
  if (n < 1 || static_cast<int>(k.size()) != n + 1) throw std::invalid_argument("cmpp: need n >= 1 and n+1 values of k");
  CmppFrame f{2 * n - 1, 0, {}};
  for (int i = 0; i <= n; ++i) {
    if (k[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("cmpp: negative k");
    f.bound += k[static_cast<std::size_t>(i)];
    DilatedPart at = i < n ? DilatedPart{-1, 2 * n - 1 - 2 * i} : DilatedPart{0, 0};
    f.fictitious.push_back({at, k[static_cast<std::size_t>(i)]});
  }
  return f;
}

namespace {

// Frequencies on E_{-1} for sizes -1..max_size, plus the unit-step
// offsets of every path shape.
class FrequencyGrid {
 public:
  FrequencyGrid(const CmppFrame& frame, int max_size)
      : m_(frame.m), max_(max_size), bound_(frame.bound), freq_(static_cast<std::size_t>((max_size + 2) * (frame.m + 1)), 0) {
    if (m_ < 1 || m_ > 16) throw std::invalid_argument("cmpp: alphabet length out of range");
    for (const auto& [p, f] : frame.fictitious) at(p) += f;
    offsets_.resize((std::size_t{1} << m_) * static_cast<std::size_t>(m_ + 1));
    for (unsigned mask = 0; mask < (1u << m_); ++mask) {
      int o = 0;
      for (int j = 0; j <= m_; ++j) {
        offsets_[mask * static_cast<std::size_t>(m_ + 1) + static_cast<std::size_t>(j)] = o;
        if (j < m_) o += (mask >> j) & 1u ? 1 : -1;
      }
    }
  }

  int& at(DilatedPart p) {
    return freq_[static_cast<std::size_t>((p.size + 1) * (m_ + 1) + p.subscript)];
  }

  // Largest path sum over paths through p.
  bool paths_through_ok(DilatedPart p) const {
    const std::size_t w = static_cast<std::size_t>(m_ + 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m_); ++mask) {
      const int* off = offsets_.data() + mask * w;
      const int base = p.size - off[p.subscript];
      int sum = 0;
      bool inside = true;
      for (int j = 0; j <= m_; ++j) {
        const int l = base + off[j];
        if (l < -1) {
          inside = false;
          break;
        }
        if (l <= max_) sum += freq_[static_cast<std::size_t>(l + 1) * w + static_cast<std::size_t>(j)];
      }
      if (inside && sum > bound_) return false;
    }
    return true;
  }

 private:
  int m_, max_, bound_;
  std::vector<int> freq_;
  std::vector<int> offsets_;
};

}  // namespace

bool admissible_cmpp(const CmppFrame& frame, const std::vector<DilatedPart>& parts) {
  int hi = 0;
  for (const auto& p : parts) {
    if (!in_e(p, frame.m, 1)) throw std::invalid_argument("admissible_cmpp: part outside E_1");
    hi = std::max(hi, p.size);
  }
  FrequencyGrid grid(frame, hi);
  for (const auto& p : parts) grid.at(p) += 1;
  return std::all_of(parts.begin(), parts.end(), [&](const DilatedPart& p) { return grid.paths_through_ok(p); });
}

TruncatedSeries enumerate_cmpp(const CmppFrame& frame, int truncation) {
  std::vector<DilatedPart> elems;
  for (int l = 1; l <= truncation; ++l)
    for (int d = 0; d <= frame.m; ++d)
      if (in_e({l, d}, frame.m, 1)) elems.push_back({l, d});
  FrequencyGrid grid(frame, truncation);
  std::vector<Integer> counts(static_cast<std::size_t>(truncation + 1), 0);
  auto rec = [&](auto&& self, std::size_t start, int used) -> void {
    counts[static_cast<std::size_t>(used)] += 1;
    for (std::size_t j = start; j < elems.size(); ++j) {
      const auto p = elems[j];
      if (p.size > truncation - used) break;
      grid.at(p) += 1;
      if (grid.paths_through_ok(p)) self(self, j, used + p.size);
      grid.at(p) -= 1;
    }
  };
  rec(rec, 0, 0);
  TruncatedSeries out(truncation, 0);
  for (int q = 0; q <= truncation; ++q) out.add_term(q, ColourMonomial{}, counts[static_cast<std::size_t>(q)]);
  return out;
}

TruncatedSeries expand(const ProductSpec& spec, int truncation) {
  auto out = TruncatedSeries::one(truncation, 0);
  for (int j : spec.exponents) {
    if (j < 1 || j > spec.modulus) throw std::invalid_argument("product exponent outside [1, modulus]");
    out = out * pochhammer(j, spec.modulus, truncation);
  }
  for (int e = 0; e < spec.euler_power; ++e) out = out * inverse_euler(truncation);
  if (spec.half_euler) out = out * inverse_pochhammer(1, 2, truncation);
  return out;
}

std::vector<int> d_set(const std::vector<int>& x) {
  if (x.empty()) throw std::invalid_argument("D needs at least one entry");
  std::vector<int> out;
  int prefix = 0;
  for (int v : x) out.push_back(prefix += v);
  const int total = prefix;
  int head = 0;
  for (std::size_t j = 1; j < x.size(); ++j) {
    head += x[j - 1];
    out.push_back(head + 2 * (total - head));
  }
  return out;
}

std::vector<int> delta_multiset(const std::vector<int>& x) {
  std::vector<int> out;
  for (std::size_t s = 0; s < x.size(); ++s) {
    auto d = d_set({x.begin() + static_cast<long>(s), x.end()});
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

namespace {

std::vector<int> shifted_tail(const std::vector<int>& k, std::size_t from) {
  std::vector<int> out;
  for (std::size_t j = from; j < k.size(); ++j) out.push_back(k[j] + 1);
  return out;
}

void append_b_terms(ProductSpec& spec, const std::vector<int>& k) {
  if (k.size() < 2) return;
  for (int b : delta_multiset(shifted_tail(k, 1))) {
    spec.exponents.push_back(b);
    spec.exponents.push_back(spec.modulus - b);
  }
}

}  // namespace

ProductSpec level_one_factors(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("product: need 0 <= i <= n");
  const int mod = 2 * n + 4;
  return {mod, {mod, 2 * i + 2, 2 * n - 2 * i + 2}, 1, false};
}

ProductSpec general_factors(int n, const std::vector<int>& k) {
  if (n < 1 || static_cast<int>(k.size()) != n + 1) throw std::invalid_argument("product: need n+1 values of k");
  const int level = std::accumulate(k.begin(), k.end(), 0);
  ProductSpec spec{2 * n + 2 * level + 2, {}, n, true};
  for (int a = 0; a < n; ++a) spec.exponents.push_back(spec.modulus);
  for (int a : d_set(shifted_tail(k, 0))) spec.exponents.push_back(a);
  append_b_terms(spec, k);
  return spec;
}

ProductSpec odd_factors(int n, const std::vector<int>& k) {
  if (n < 1 || static_cast<int>(k.size()) != n + 1) throw std::invalid_argument("product: need n+1 values of k");
  const int level = std::accumulate(k.begin(), k.end(), 0);
  ProductSpec spec{2 * n + 2 * level + 1, {}, n, false};
  for (int a = 0; a < n; ++a) spec.exponents.push_back(spec.modulus);
  append_b_terms(spec, k);
  return spec;
}

TruncatedSeries product_level_one(int n, int i, int truncation) { return expand(level_one_factors(n, i), truncation); }
TruncatedSeries product_general(int n, const std::vector<int>& k, int truncation) {
  return expand(general_factors(n, k), truncation);
}
TruncatedSeries product_odd(int n, const std::vector<int>& k, int truncation) { return expand(odd_factors(n, k), truncation); }

TruncatedSeries dilated_paths_model(int n, int i, int truncation) {
  const int m = 2 * n;
  return enumerate_paths_model_weighted(m, omega(m, i), truncation,
                                        [m](SecondaryInt a) { return dilate(a, m).size; });
}

nlohmann::json CmppReport::to_json() const {
  auto j = mismatch_json(mismatch);
  if (ok) j["status"] = proved_level ? "ok" : "conjecture-consistent";
  if (reversed_agrees) j["reversed_k_agrees"] = *reversed_agrees;
  return j;
}

CmppReport cmpp_check(int n, const std::vector<int>& k, int truncation, bool odd) {
  const auto frame = odd ? cmpp_odd(n, k) : cmpp_even(n, k);
  const auto lhs = enumerate_cmpp(frame, truncation);
  const auto rhs = odd ? product_odd(n, k, truncation) : product_general(n, k, truncation);
  auto mm = first_mismatch(lhs, rhs);
  CmppReport r{!mm.has_value(), !odd && frame.bound == 1, mm, std::nullopt};
  if (odd) r.reversed_agrees = lhs == product_odd(n, {k.rbegin(), k.rend()}, truncation);
  return r;
}

}  // namespace cnchar
