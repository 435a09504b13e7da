#pragma once

// Depth-first enumeration of chains of coloured parts grown leftwards from
// a fixed ground part.  Shared by the grounded and rho models.

#include <stdexcept>
#include <vector>

#include "cnchar/series.hpp"

namespace cnchar::detail {

struct ChainRules {
  int colours = 0;
  bool exact = false;
  std::vector<int> diff;      // diff[left * colours + right]
  std::vector<int> boundary;  // difference between a part of colour c and the ground
  int ground_size = 0;
  int ground_colour = -1;     // id of the ground colour when it is one of ours
  int excluded_colour = -1;   // colour of a part that may not sit on the ground at ground size
  std::vector<CountAccumulator::Packed> mono;
};

struct StackPart {
  int size;
  int colour;
};

template <class Visit>
class ChainDfs {
 public:
  ChainDfs(const ChainRules& rules, int max_size, Visit& visit)
      : r_(rules), max_(max_size), visit_(visit), in_zero_run_(static_cast<std::size_t>(rules.colours), 0) {}

  void run() {
    if (r_.ground_colour >= 0 && r_.ground_size == 0) in_zero_run_[static_cast<std::size_t>(r_.ground_colour)] = 1;
    CountAccumulator::Packed mono{};
    grow(r_.ground_size, -1, 0, mono);
  }

 private:
  void grow(int top_size, int top_colour, int used, const CountAccumulator::Packed& mono) {
    visit_(stack_, used, mono);
    const int room = max_ - used;
    for (int c = 0; c < r_.colours; ++c) {
      const int d = top_colour < 0 ? r_.boundary[static_cast<std::size_t>(c)]
                                   : r_.diff[static_cast<std::size_t>(c * r_.colours + top_colour)];
      const int lo = top_size + d;
      if (lo < 0) throw std::logic_error("chain part of negative size");
      const int hi = r_.exact ? lo : room;
      for (int k = lo; k <= hi && k <= room; ++k) {
        if (top_colour < 0 && c == r_.excluded_colour && k == r_.ground_size) continue;
        auto& flag = in_zero_run_[static_cast<std::size_t>(c)];
        if (k == 0) {
          if (flag) throw std::logic_error("zero-size chain repeats a colour");
          flag = 1;
        }
        auto next = mono;
        add_into(next, r_.mono[static_cast<std::size_t>(c)], 1);
        stack_.push_back({k, c});
        grow(k, c, used + k, next);
        stack_.pop_back();
        if (k == 0) flag = 0;
      }
    }
  }

  const ChainRules& r_;
  int max_;
  Visit& visit_;
  std::vector<char> in_zero_run_;
  std::vector<StackPart> stack_;
};

template <class Visit>
void run_chain_dfs(const ChainRules& rules, int max_size, Visit& visit) {
  ChainDfs<Visit> dfs(rules, max_size, visit);
  dfs.run();
}

}  // namespace cnchar::detail
