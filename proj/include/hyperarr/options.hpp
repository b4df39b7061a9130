#pragma once

#include <cstddef>
#include <cstdint>

namespace hyperarr {

// Knobs shared by every expensive routine. Results never depend on
// `threads`; the budgets only decide whether a computation is attempted.
struct RunOptions {
  unsigned threads = 1;
  std::uint64_t node_budget = 0;  // independent-set enumeration nodes, 0 = unlimited
  std::size_t whitney_limit = 22;  // max hyperplanes for subset enumeration
  std::size_t poset_limit = 18;    // max hyperplanes for the intersection poset
  std::uint64_t offpoint_budget = 100'000'000;  // max q^n for the point scan
};

}  // namespace hyperarr
