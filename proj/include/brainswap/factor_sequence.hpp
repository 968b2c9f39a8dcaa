#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brainswap/perm.hpp"

namespace brainswap {

/// A repair plan: an ordered product of equal-length cycles.
///
/// The leftmost factor acts last, matching compose(). Read as machine runs,
/// the plan executes from the back of `factors` to the front.
/// `base_degree` is the n of the scrambled group and `extras` lists the
/// fresh points (all labels above n) the plan may use.
struct FactorSequence {
  std::vector<Cycle> factors;
  std::size_t base_degree = 0;
  std::vector<Point> extras;

  std::size_t size() const { return factors.size(); }
  bool empty() const { return factors.empty(); }
  Permutation product() const;
  // Factors in run order (rightmost first), ready to append to a history.
  std::vector<Cycle> run_order() const;
  // Concatenated cycle notation, or "id" when empty.
  std::string to_string() const;

  friend bool operator==(const FactorSequence&, const FactorSequence&) = default;
};

}  // namespace brainswap
