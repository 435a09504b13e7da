#include "cnchar/deletion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cnchar {

ColourClass classify(const CrystalVertex& b, int n) {
  if (b.is_empty()) return ColourClass::Free;
  const int x = b.x().rank, y = b.y().rank, ybar = 2 * n + 1 - y, xbar = 2 * n + 1 - x;
  if (y == xbar) return ColourClass::Free;
  if (ybar < x) return ColourClass::Sup;
  return ColourClass::Inf;
}

ColourSystem crystal_colour_system(int n, int i) {
  Crystal crystal(n);
  const int v = crystal.size(), g = crystal.ground_index(i), m = 2 * n;
  auto id = [&](int x, int y) { return crystal.index_of(CrystalVertex::pair(Letter{x}, Letter{y})); };
  ColourSystem sys;
  sys.colours = v;
  sys.c0 = 0;
  sys.eps.resize(static_cast<std::size_t>(v * (v + 1)));
  for (int c = 0; c < v; ++c) {
    sys.classes.push_back(classify(crystal.vertex(c), n));
    for (int c2 = 0; c2 < v; ++c2) sys.eps[static_cast<std::size_t>(c * (v + 1) + c2)] = crystal.min_diff(c, c2);
    sys.eps[static_cast<std::size_t>(c * (v + 1) + v)] = c == g ? 1 : crystal.min_diff(c, g);
  }
  sys.delta.assign(static_cast<std::size_t>(v), -1);
  for (int c = 1; c < v; ++c) {
    const int x = crystal.vertex(c).x().rank, y = crystal.vertex(c).y().rank;
    if (sys.cls(c) == ColourClass::Sup) sys.delta[static_cast<std::size_t>(c)] = id(m + 1 - y, y);
    if (sys.cls(c) == ColourClass::Inf) sys.delta[static_cast<std::size_t>(c)] = id(x, m + 1 - x);
  }
  sys.gamma.assign(static_cast<std::size_t>(v * v), -1);
  for (int c = 1; c < v; ++c)
    for (int c2 = 1; c2 < v; ++c2) {
      const auto k1 = sys.cls(c), k2 = sys.cls(c2);
      const int e = sys.epsilon(c, c2);
      const int y = crystal.vertex(c).y().rank, x2 = crystal.vertex(c2).x().rank;
      int g_id = -1;
      if (k1 == ColourClass::Sup && k2 == ColourClass::Inf && e == 0) {
        const int z = std::max(x2, m + 1 - y);
        g_id = id(std::min(z, m + 1 - z), std::max(z, m + 1 - z));
      } else if (k1 == ColourClass::Sup && k2 == ColourClass::Sup && e <= 1) {
        g_id = id(m + 1 - y, y);
      } else if (k1 == ColourClass::Inf && k2 == ColourClass::Inf && e <= 1) {
        g_id = id(x2, m + 1 - x2);
      }
      sys.gamma[static_cast<std::size_t>(c * v + c2)] = g_id;
    }
  return sys;
}

namespace {

bool in(int v, std::initializer_list<int> allowed) {
  return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
}

WellDefinedReport fail(int condition, int c, int c2) {
  std::ostringstream s;
  s << "colours " << c << ", " << c2;
  return {false, condition, s.str()};
}

}  // namespace

WellDefinedReport check_well_defined(const ColourSystem& sys) {
  const int v = sys.colours, inf = sys.infinity();
  auto is_free = [&](int c) { return c >= 0 && c < v && sys.cls(c) == ColourClass::Free; };
  for (int c = 0; c < v; ++c)
    for (int c2 = 0; c2 < v; ++c2) {
      const auto k1 = sys.cls(c), k2 = sys.cls(c2);
      const int e = sys.epsilon(c, c2), back = sys.epsilon(c2, c);
      if (k1 == ColourClass::Free && k2 == ColourClass::Free && e != chi(c != c2)) return fail(1, c, c2);
      if (k1 == ColourClass::Sup && k2 == ColourClass::Free && (!in(e, {0, 1}) || !in(back, {1, 2}))) return fail(2, c, c2);
      if (k1 == ColourClass::Free && k2 == ColourClass::Inf && (!in(e, {0, 1}) || !in(back, {1, 2}))) return fail(3, c, c2);
      if (k1 == ColourClass::Sup && k2 == ColourClass::Inf) {
        if (!in(e, {0, 1}) || !in(back, {1, 2})) return fail(4, c, c2);
        if (e == 0) {
          const int g = sys.gamma_of(c, c2);
          if (!is_free(g) || sys.epsilon(c, g) != 0 || sys.epsilon(g, c2) != 0) return fail(4, c, c2);
        }
      }
      if (k1 == ColourClass::Sup && k2 == ColourClass::Sup && e <= 1) {
        const int g = sys.gamma_of(c, c2);
        if (!is_free(g) || sys.epsilon(c, g) != 0 || sys.epsilon(g, c2) != 1) return fail(5, c, c2);
      }
      if (k1 == ColourClass::Inf && k2 == ColourClass::Inf && e <= 1) {
        const int g = sys.gamma_of(c, c2);
        if (!is_free(g) || sys.epsilon(c, g) != 1 || sys.epsilon(g, c2) != 0) return fail(6, c, c2);
      }
    }
  for (int c = 0; c < v; ++c) {
    const int d = sys.delta_of(c);
    if (sys.cls(c) == ColourClass::Sup && (!is_free(d) || sys.epsilon(c, d) != 0)) return fail(2, c, d);
    if (sys.cls(c) == ColourClass::Inf && (!is_free(d) || sys.epsilon(d, c) != 0)) return fail(3, c, d);
    const int e = sys.epsilon(c, inf);
    if (sys.cls(c) == ColourClass::Free && e != 1) return fail(7, c, inf);
    if (sys.cls(c) == ColourClass::Inf && !in(e, {1, 2})) return fail(7, c, inf);
    if (sys.cls(c) == ColourClass::Sup && !in(e, {0, 1})) return fail(7, c, inf);
  }
  if (!is_free(sys.c0)) return fail(8, sys.c0, sys.c0);
  for (int c = 0; c < v; ++c)
    if (c != sys.c0 && (sys.epsilon(sys.c0, c) != 1 || sys.epsilon(c, sys.c0) != 1)) return fail(8, sys.c0, c);
  return {};
}

WellDefinedReport check_well_defined(int n, int i) { return check_well_defined(crystal_colour_system(n, i)); }

bool is_eps_partition(const ColourSystem& sys, const IdPartition& p) {
  if (p.empty() || p.back().size != 0 || p.back().colour != sys.infinity()) return false;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (p[j].colour < 0 || p[j].colour >= sys.colours) return false;
    if (p[j].size - p[j + 1].size < sys.epsilon(p[j].colour, p[j + 1].colour)) return false;
  }
  return true;
}

bool in_forbidden_pattern(const ColourSystem& sys, const IdPartition& p, std::size_t j) {
  if (j + 1 >= p.size()) return false;
  const int f = p[j].colour, size = p[j].size;
  if (sys.cls(f) != ColourClass::Free || f == sys.c0) return false;
  const IdPart right = p[j + 1];
  const int inf = sys.infinity();
  auto kind = [&](int c) { return c == inf ? -1 : static_cast<int>(sys.cls(c)); };
  const int sup = static_cast<int>(ColourClass::Sup), infc = static_cast<int>(ColourClass::Inf),
            free = static_cast<int>(ColourClass::Free);
  if (j > 0) {
    const IdPart left = p[j - 1];
    if (left.size == size && kind(left.colour) == sup) {
      const int c = left.colour;
      // p_c, p_gamma, p_c' and p_c, p_gamma, (p-1)_c'
      if (right.size == size && kind(right.colour) == infc && sys.epsilon(c, right.colour) == 0 &&
          sys.gamma_of(c, right.colour) == f)
        return true;
      if (right.size == size - 1 && kind(right.colour) == sup && sys.epsilon(c, right.colour) <= 1 &&
          sys.gamma_of(c, right.colour) == f)
        return true;
      if (sys.delta_of(c) == f) {
        const int rk = kind(right.colour);
        if (right.size == size - 1 && ((rk == free && right.colour != sys.c0) || rk == infc || rk == -1)) return true;
        if (right.size <= size - 2 && right.colour != sys.c0) return true;
      }
    }
    if (left.size == size + 1 && kind(left.colour) == infc && right.size == size && kind(right.colour) == infc &&
        sys.epsilon(left.colour, right.colour) <= 1 && sys.gamma_of(left.colour, right.colour) == f)
      return true;
  }
  if (right.size == size && kind(right.colour) == infc && sys.delta_of(right.colour) == f) {
    if (j == 0) return true;
    const IdPart left = p[j - 1];
    const int lk = kind(left.colour);
    if (left.size == size + 1 && ((lk == free && left.colour != sys.c0) || lk == sup)) return true;
    if (left.size >= size + 2 && left.colour != sys.c0) return true;
  }
  return false;
}

bool avoids_forbidden_patterns(const ColourSystem& sys, const IdPartition& p) {
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (p[j].colour == sys.c0) return false;
    if (sys.cls(p[j].colour) == ColourClass::Free && p[j + 1] == p[j]) return false;
    if (in_forbidden_pattern(sys, p, j)) return false;
  }
  return true;
}

Deletion phi_forward(const ColourSystem& sys, const IdPartition& lambda) {
  if (!is_eps_partition(sys, lambda)) throw std::invalid_argument("phi_forward: invalid partition");
  Deletion out;
  IdPartition second;  // after steps (1) and (2)
  for (const auto& part : lambda) {
    if (part.colour == sys.c0) {
      out.nu.push_back(part.size);
      continue;
    }
    if (part.colour != sys.infinity() && sys.cls(part.colour) == ColourClass::Free && !second.empty() &&
        second.back() == part) {
      out.nu.push_back(part.size);
      continue;
    }
    second.push_back(part);
  }
  std::vector<char> drop(second.size(), 0);
  for (std::size_t j = 0; j < second.size(); ++j) drop[j] = in_forbidden_pattern(sys, second, j) ? 1 : 0;
  for (std::size_t j = 0; j < second.size(); ++j) {
    if (drop[j])
      out.nu.push_back(second[j].size);
    else
      out.mu.push_back(second[j]);
  }
  std::sort(out.nu.begin(), out.nu.end(), std::greater<>());
  return out;
}

namespace {

// Neighbour of position t skipping c0 parts; -1 when there is none.
long next_non_c0(const ColourSystem& sys, const IdPartition& p, long t, int step) {
  for (long u = t + step; u >= 0 && u < static_cast<long>(p.size()); u += step)
    if (p[static_cast<std::size_t>(u)].colour != sys.c0) return u;
  return -1;
}

void insert_one(const ColourSystem& sys, IdPartition& lam, int size) {
  if (size <= 0) throw std::invalid_argument("phi_inverse: parts of nu must be positive");
  const int inf = sys.infinity();
  auto cls = [&](int c) { return sys.cls(c); };
  auto at = [&](long u) -> const IdPart& { return lam[static_cast<std::size_t>(u)]; };
  auto put = [&](long pos, int colour) { lam.insert(lam.begin() + pos, IdPart{size, colour}); };

  std::vector<long> same;
  for (long u = 0; u + 1 < static_cast<long>(lam.size()); ++u)
    if (at(u).size == size) same.push_back(u);
  for (long u : same)
    if (cls(at(u).colour) == ColourClass::Free) {
      put(u, at(u).colour);
      return;
    }
  if (same.empty()) {
    long pos = 0;
    while (at(pos).colour != inf && at(pos).size > size) ++pos;
    put(pos, sys.c0);
    return;
  }
  for (std::size_t t = 0; t + 1 < same.size(); ++t) {
    const int c1 = at(same[t]).colour, c2 = at(same[t + 1]).colour;
    if (cls(c1) == ColourClass::Sup && cls(c2) == ColourClass::Inf) {
      put(same[t + 1], sys.gamma_of(c1, c2));
      return;
    }
  }
  if (cls(at(same.front()).colour) == ColourClass::Sup) {
    const long t = same.back();
    const int c1 = at(t).colour;
    const long r = next_non_c0(sys, lam, t, +1);
    const IdPart right = at(r);
    int colour = sys.delta_of(c1);
    if (right.size == size - 1 && right.colour != inf && cls(right.colour) == ColourClass::Sup) {
      colour = sys.gamma_of(c1, right.colour);
      if (colour < 0) throw std::logic_error("phi_inverse: gamma undefined");
    }
    put(t + 1, colour);
    return;
  }
  const long t = same.front();
  const int c2 = at(t).colour;
  const long l = next_non_c0(sys, lam, t, -1);
  int colour = sys.delta_of(c2);
  if (l >= 0 && at(l).size == size + 1 && cls(at(l).colour) == ColourClass::Inf) {
    colour = sys.gamma_of(at(l).colour, c2);
    if (colour < 0) throw std::logic_error("phi_inverse: gamma undefined");
  }
  put(t, colour);
}

}  // namespace

IdPartition phi_inverse(const ColourSystem& sys, const IdPartition& mu, const std::vector<int>& nu) {
  if (!is_eps_partition(sys, mu) || !avoids_forbidden_patterns(sys, mu))
    throw std::invalid_argument("phi_inverse: mu is not pattern-avoiding");
  IdPartition lam = mu;
  for (int size : nu) insert_one(sys, lam, size);
  return lam;
}

IdPartition to_ids(const Crystal& crystal, const PartList& parts) {
  IdPartition out;
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
    const auto& c = parts[j].colour;
    int id = c.is_empty() ? 0 : crystal.index_of(CrystalVertex::pair(c.first(), c.second()));
    out.push_back({parts[j].size, id});
  }
  out.push_back({0, crystal.size()});
  return out;
}

PartList from_ids(const Crystal& crystal, int i, const IdPartition& parts) {
  PartList out;
  for (std::size_t j = 0; j + 1 < parts.size(); ++j)
    out.push_back({parts[j].size, crystal.vertex(parts[j].colour).colour()});
  out.push_back(ground_part(crystal.rank(), i));
  return out;
}

CrystalDeletion phi_forward(int n, int i, const PartList& lambda) {
  Crystal crystal(n);
  if (!is_valid_grounded(crystal, i, Relation::AtLeast, lambda)) throw std::invalid_argument("phi_forward: invalid partition");
  auto sys = crystal_colour_system(n, i);
  auto d = phi_forward(sys, to_ids(crystal, lambda));
  return {from_ids(crystal, i, d.mu), d.nu};
}

PartList phi_inverse(int n, int i, const PartList& mu, const std::vector<int>& nu) {
  Crystal crystal(n);
  auto sys = crystal_colour_system(n, i);
  return from_ids(crystal, i, phi_inverse(sys, to_ids(crystal, mu), nu));
}

}  // namespace cnchar
