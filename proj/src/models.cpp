#include "cnchar/models.hpp"

#include <algorithm>
#include <stdexcept>

#include "chain_dfs.hpp"

namespace cnchar {

namespace {

void require_ground(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("ground index out of range");
}

int vertex_id(const Crystal& crystal, const Colour& c) {
  if (c.is_empty()) return 0;
  if (!c.is_secondary()) throw std::invalid_argument("colour is not a crystal vertex colour");
  return crystal.index_of(CrystalVertex::pair(c.first(), c.second()));
}

PartList to_parts(const Crystal& crystal, int i, const std::vector<detail::StackPart>& stack) {
  PartList parts;
  parts.reserve(stack.size() + 1);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) parts.push_back({it->size, crystal.vertex(it->colour).colour()});
  parts.push_back(ground_part(crystal.rank(), i));
  return parts;
}

detail::ChainRules grounded_rules(const Crystal& crystal, int i, Relation rel) {
  const int v = crystal.size(), g = crystal.ground_index(i);
  detail::ChainRules r;
  r.colours = v;
  r.exact = rel == Relation::Exact;
  r.diff.resize(static_cast<std::size_t>(v * v));
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b) r.diff[static_cast<std::size_t>(a * v + b)] = crystal.min_diff(a, b);
  for (int c = 0; c < v; ++c) r.boundary.push_back(crystal.min_diff(c, g));
  r.ground_size = 0;
  r.ground_colour = g;
  r.excluded_colour = g;
  for (int c = 0; c < v; ++c) r.mono.push_back(CountAccumulator::pack(monomial_of_vertex(crystal.vertex(c), crystal.rank())));
  return r;
}

// Colour ids for the rho model are vertex ids shifted down by one (no ∅).
detail::ChainRules rho_rules(const Crystal& crystal, int i) {
  const int v = crystal.size() - 1;
  detail::ChainRules r;
  r.colours = v;
  r.exact = false;
  r.diff.resize(static_cast<std::size_t>(v * v));
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      r.diff[static_cast<std::size_t>(a * v + b)] = rho(crystal.vertex(a + 1).colour(), crystal.vertex(b + 1).colour());
  for (int c = 0; c < v; ++c) r.boundary.push_back(rho_boundary(crystal, i, crystal.vertex(c + 1).colour()));
  r.ground_size = 0;
  r.ground_colour = i == 0 ? -1 : crystal.ground_index(i) - 1;
  for (int c = 0; c < v; ++c)
    r.mono.push_back(CountAccumulator::pack(monomial_of_vertex(crystal.vertex(c + 1), crystal.rank())));
  return r;
}

TruncatedSeries accumulate(const detail::ChainRules& rules, int n, int truncation) {
  CountAccumulator acc(truncation, n);
  auto visit = [&acc](const std::vector<detail::StackPart>&, int used, const CountAccumulator::Packed& mono) {
    acc.add(used, mono);
  };
  detail::run_chain_dfs(rules, truncation, visit);
  return acc.to_series();
}

}  // namespace

ColouredInt ground_part(int n, int i) {
  require_ground(n, i);
  return {0, ground_vertex(n, i).colour()};
}

int rho(const Colour& left, const Colour& right) {
  if (!left.is_secondary() || !right.is_secondary()) throw std::invalid_argument("rho needs secondary colours");
  const Letter a = left.first(), b = left.second(), ap = right.first(), bp = right.second();
  return chi(ap >= a) + chi(bp >= b) - chi(bp >= b && b > ap && ap >= a);
}

int rho_boundary(const Crystal& crystal, int i, const Colour& c) {
  const int g = crystal.ground_index(i), id = vertex_id(crystal, c);
  if (id == 0) throw std::invalid_argument("rho-partitions have no c_∅ parts");
  if (id == g) return 1;
  return crystal.energy(g, id);
}

bool rho_dominates(SecondaryInt a, SecondaryInt b) {
  return a.size - b.size >= rho(Colour::secondary(a.x, a.y), Colour::secondary(b.x, b.y));
}

int partition_size(const PartList& parts) {
  int s = 0;
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) s += parts[j].size;
  return s;
}

ColourMonomial partition_monomial(const PartList& parts, int n) {
  auto mono = ColourMonomial::zero(n);
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) mono += monomial(parts[j].colour, n);
  return mono;
}

bool is_valid_grounded(const Crystal& crystal, int i, Relation rel, const PartList& parts) {
  const int n = crystal.rank();
  if (parts.empty() || parts.back() != ground_part(n, i)) return false;
  const std::size_t s = parts.size() - 1;
  if (s > 0 && parts[s - 1] == parts[s]) return false;
  for (std::size_t j = 0; j < s; ++j) {
    const auto& c = parts[j].colour;
    if (!c.is_empty() && !(c.is_secondary() && c.second().rank <= 2 * n && c.first().rank >= 1)) return false;
    int d = crystal.min_diff(vertex_id(crystal, c), vertex_id(crystal, parts[j + 1].colour));
    int gap = parts[j].size - parts[j + 1].size;
    if (rel == Relation::Exact ? gap != d : gap < d) return false;
  }
  return true;
}

bool is_valid_rho(const Crystal& crystal, int i, const PartList& parts) {
  const int n = crystal.rank();
  if (parts.empty() || parts.back() != ground_part(n, i)) return false;
  const std::size_t s = parts.size() - 1;
  for (std::size_t j = 0; j < s; ++j) {
    const auto& c = parts[j].colour;
    if (!(c.is_secondary() && c.second().rank <= 2 * n && c.first().rank >= 1)) return false;
  }
  for (std::size_t j = 0; j + 1 < s; ++j)
    if (parts[j].size - parts[j + 1].size < rho(parts[j].colour, parts[j + 1].colour)) return false;
  if (s > 0 && parts[s - 1].size < rho_boundary(crystal, i, parts[s - 1].colour)) return false;
  return true;
}

TruncatedSeries enumerate_grounded(int n, int i, Relation rel, int truncation) {
  require_ground(n, i);
  Crystal crystal(n);
  return accumulate(grounded_rules(crystal, i, rel), n, truncation);
}

TruncatedSeries enumerate_rho(int n, int i, int truncation) {
  require_ground(n, i);
  Crystal crystal(n);
  return accumulate(rho_rules(crystal, i), n, truncation);
}

void for_each_grounded(int n, int i, Relation rel, int max_size, const PartVisitor& visit) {
  require_ground(n, i);
  Crystal crystal(n);
  auto rules = grounded_rules(crystal, i, rel);
  auto inner = [&](const std::vector<detail::StackPart>& stack, int, const CountAccumulator::Packed&) {
    visit(to_parts(crystal, i, stack));
  };
  detail::run_chain_dfs(rules, max_size, inner);
}

void for_each_rho(int n, int i, int max_size, const PartVisitor& visit) {
  require_ground(n, i);
  Crystal crystal(n);
  auto rules = rho_rules(crystal, i);
  auto inner = [&](const std::vector<detail::StackPart>& stack, int, const CountAccumulator::Packed&) {
    PartList parts;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it)
      parts.push_back({it->size, crystal.vertex(it->colour + 1).colour()});
    parts.push_back(ground_part(n, i));
    visit(parts);
  };
  detail::run_chain_dfs(rules, max_size, inner);
}

void for_each_rho_chain(int m, SecondaryInt omega, int max_size,
                        const std::function<void(const std::vector<SecondaryInt>&)>& visit) {
  if (m < 1) throw std::invalid_argument("alphabet must be non-empty");
  std::vector<std::pair<Letter, Letter>> colours;
  for (int x = 1; x <= m; ++x)
    for (int y = x; y <= m; ++y) colours.push_back({Letter{x}, Letter{y}});
  const int v = static_cast<int>(colours.size());
  auto colour = [&](int c) { return Colour::secondary(colours[static_cast<std::size_t>(c)].first, colours[static_cast<std::size_t>(c)].second); };
  detail::ChainRules r;
  r.colours = v;
  r.diff.resize(static_cast<std::size_t>(v * v));
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b) r.diff[static_cast<std::size_t>(a * v + b)] = rho(colour(a), colour(b));
  const Colour oc = Colour::secondary(omega.x, omega.y);
  for (int c = 0; c < v; ++c) {
    r.boundary.push_back(rho(colour(c), oc));
    if (colour(c) == oc) r.ground_colour = c;
  }
  r.ground_size = omega.size;
  if (omega.size != 0) r.ground_colour = -1;
  r.mono.assign(static_cast<std::size_t>(v), CountAccumulator::Packed{});
  auto inner = [&](const std::vector<detail::StackPart>& stack, int, const CountAccumulator::Packed&) {
    std::vector<SecondaryInt> chain;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const auto& [x, y] = colours[static_cast<std::size_t>(it->colour)];
      chain.push_back({it->size, x, y});
    }
    visit(chain);
  };
  detail::run_chain_dfs(r, max_size, inner);
}

}  // namespace cnchar
