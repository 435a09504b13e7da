#include "cnchar/frobenius.hpp"

#include <stdexcept>

namespace cnchar {

namespace {

SecondaryInt as_secondary(const ColouredInt& k) {
  if (!k.colour.is_secondary()) throw std::invalid_argument("secondary colour expected");
  return {k.size, k.colour.first(), k.colour.second()};
}

PrimaryInt as_primary(const ColouredInt& k) {
  if (!k.colour.is_primary()) throw std::invalid_argument("primary colour expected");
  return {k.size, k.colour.first()};
}

// Columns are grown leftwards from the ground; each new column must beat
// the previous one in both rows and stay interlaced.
template <class Visit>
class ColumnDfs {
 public:
  ColumnDfs(int m, int max_size, Visit& visit) : m_(m), max_(max_size), visit_(visit) {}

  void run(PrimaryInt top, PrimaryInt bottom) {
    tops_.push_back(top);
    bottoms_.push_back(bottom);
    grow(0);
  }

  const std::vector<PrimaryInt>& tops() const { return tops_; }
  const std::vector<PrimaryInt>& bottoms() const { return bottoms_; }

 private:
  void grow(int used) {
    visit_(*this, used);
    const int room = max_ - used;
    const long prev_top = key(tops_.back(), m_), prev_bottom = key(bottoms_.back(), m_);
    for (long kb = prev_bottom + 1;; ++kb) {
      const PrimaryInt b = from_key(kb, m_);
      if (b.size < 0) throw std::logic_error("negative bottom entry");
      if (2 * b.size > room) break;
      for (long kt = std::max(prev_top + 1, kb); kt <= kb + m_; ++kt) {
        const PrimaryInt t = from_key(kt, m_);
        const int col = t.size + b.size;
        if (col > room) break;
        tops_.push_back(t);
        bottoms_.push_back(b);
        grow(used + col);
        tops_.pop_back();
        bottoms_.pop_back();
      }
    }
  }

  int m_, max_;
  Visit& visit_;
  std::vector<PrimaryInt> tops_, bottoms_;
};

}  // namespace

std::pair<ColouredInt, ColouredInt> eta_zeta(const ColouredInt& k) {
  auto ez = eta_zeta(as_secondary(k));
  return {to_coloured(ez.eta), to_coloured(ez.zeta)};
}

ColouredInt compose(const ColouredInt& eta, const ColouredInt& zeta, int m) {
  return to_coloured(compose(as_primary(eta), as_primary(zeta), m));
}

SecondaryInt omega(int m, int i) {
  if (i < 0 || 2 * i > m) throw std::invalid_argument("omega index out of range");
  if (i == 0) return {-1, Letter{m}, Letter{m}};
  return make_secondary(0, Letter{i}, bar(Letter{i + 1}, m));
}

FrobeniusPair frobenius_ground(int n, int i) {
  auto ez = eta_zeta(omega(2 * n, i));
  return {{ez.eta}, {ez.zeta}};
}

FrobeniusPair to_frobenius(int n, int i, const PartList& rho_partition) {
  Crystal crystal(n);
  if (!is_valid_rho(crystal, i, rho_partition)) throw std::invalid_argument("to_frobenius: invalid rho-partition");
  FrobeniusPair out;
  for (std::size_t j = 0; j + 1 < rho_partition.size(); ++j) {
    auto ez = eta_zeta(as_secondary(rho_partition[j]));
    out.top.push_back(ez.eta);
    out.bottom.push_back(ez.zeta);
  }
  auto g = frobenius_ground(n, i);
  out.top.push_back(g.top[0]);
  out.bottom.push_back(g.bottom[0]);
  return out;
}

PartList from_frobenius(int n, int i, const FrobeniusPair& pair) {
  const int m = 2 * n;
  if (!is_valid_frobenius(m, pair) || pair.top.back() != frobenius_ground(n, i).top[0] ||
      pair.bottom.back() != frobenius_ground(n, i).bottom[0])
    throw std::invalid_argument("from_frobenius: invalid pair");
  PartList out;
  for (std::size_t j = 0; j + 1 < pair.top.size(); ++j)
    out.push_back(to_coloured(compose(pair.top[j], pair.bottom[j], m)));
  out.push_back(ground_part(n, i));
  return out;
}

bool is_valid_frobenius(int m, const FrobeniusPair& pair) {
  if (pair.top.empty() || pair.top.size() != pair.bottom.size()) return false;
  for (std::size_t j = 0; j < pair.top.size(); ++j) {
    const long t = key(pair.top[j], m), b = key(pair.bottom[j], m);
    if (pair.top[j].letter.rank < 1 || pair.top[j].letter.rank > m) return false;
    if (pair.bottom[j].letter.rank < 1 || pair.bottom[j].letter.rank > m) return false;
    if (j + 1 < pair.top.size()) {
      if (!(t < b + m + 1 && t >= b)) return false;
      if (!primary_gt(to_coloured(pair.top[j]), to_coloured(pair.top[j + 1]))) return false;
      if (!primary_gt(to_coloured(pair.bottom[j]), to_coloured(pair.bottom[j + 1]))) return false;
    }
  }
  return true;
}

int frobenius_size(const FrobeniusPair& pair) {
  int s = 0;
  for (std::size_t j = 0; j + 1 < pair.top.size(); ++j) s += pair.top[j].size + pair.bottom[j].size;
  return s;
}

void for_each_frobenius(int m, PrimaryInt ground_top, PrimaryInt ground_bottom, int max_size,
                        const std::function<void(const FrobeniusPair&)>& visit) {
  auto inner = [&](const auto& dfs, int) {
    FrobeniusPair p{{dfs.tops().rbegin(), dfs.tops().rend()}, {dfs.bottoms().rbegin(), dfs.bottoms().rend()}};
    visit(p);
  };
  ColumnDfs<decltype(inner)> dfs(m, max_size, inner);
  dfs.run(ground_top, ground_bottom);
}

TruncatedSeries enumerate_frobenius(int n, int i, int truncation) {
  if (n < 2 || i < 0 || i > n) throw std::invalid_argument("enumerate_frobenius: bad rank or ground");
  const int m = 2 * n;
  std::vector<CountAccumulator::Packed> letter_mono;
  for (int r = 1; r <= m; ++r) letter_mono.push_back(CountAccumulator::pack(monomial(Colour::primary(Letter{r}), n)));
  CountAccumulator acc(truncation, n);
  auto inner = [&](const auto& dfs, int used) {
    CountAccumulator::Packed mono{};
    const auto& t = dfs.tops();
    const auto& b = dfs.bottoms();
    for (std::size_t j = 1; j < t.size(); ++j) {
      add_into(mono, letter_mono[static_cast<std::size_t>(t[j].letter.rank - 1)], 1);
      add_into(mono, letter_mono[static_cast<std::size_t>(b[j].letter.rank - 1)], 1);
    }
    acc.add(used, mono);
  };
  ColumnDfs<decltype(inner)> dfs(m, truncation, inner);
  auto g = frobenius_ground(n, i);
  dfs.run(g.top[0], g.bottom[0]);
  return acc.to_series();
}

}  // namespace cnchar
