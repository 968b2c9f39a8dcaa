#include "brainswap/keeler.hpp"

#include <string>

#include "brainswap/errors.hpp"

namespace brainswap::keeler {

namespace {

// Appends delta_m with block i = m first, i = 1 last. `label(i)` maps the
// generic point i to an actual point.
template <typename Label>
void append_delta(std::vector<Cycle>& out, std::size_t m, Label label, Point x, Point y) {
  for (std::size_t i = m;; i -= 2) {
    out.push_back(Cycle{label(i + 1), y});
    out.push_back(Cycle{label(i + 2), y});
    out.push_back(Cycle{label(i), x});
    out.push_back(Cycle{label(i + 1), x});
    if (i == 1) break;
  }
}

void require_fresh_pair(Point x, Point y) {
  if (x == 0 || y == 0 || x == y) {
    throw InvalidArgument("fresh points x and y must be distinct positive labels");
  }
}

}  // namespace

FactorSequence delta(const DeltaSpec& spec) {
  if (spec.m % 2 == 0) {
    throw InvalidArgument("delta needs odd m, got " + std::to_string(spec.m));
  }
  require_fresh_pair(spec.x, spec.y);
  if (spec.x <= spec.m + 2 || spec.y <= spec.m + 2) {
    throw InvalidArgument("x and y must exceed m + 2");
  }
  FactorSequence seq;
  seq.base_degree = spec.m + 2;
  seq.extras = {spec.x, spec.y};
  append_delta(seq.factors, spec.m, [](std::size_t i) { return static_cast<Point>(i); },
               spec.x, spec.y);
  return seq;
}

FactorSequence invert_cycle_as_transpositions(const Cycle& c, Point x, Point y) {
  require_fresh_pair(x, y);
  if (c.contains(x) || c.contains(y)) {
    throw InvalidArgument("fresh points must not lie on the cycle " + c.to_string());
  }
  const std::size_t k = c.length();
  auto at = [&c](std::size_t i) { return c[i - 1]; };
  auto swap = [](Point a, Point b) { return Cycle{a, b}; };

  FactorSequence seq;
  seq.base_degree = c.max_point();
  seq.extras = {x, y};
  auto& f = seq.factors;

  if (k == 2) {
    f = {swap(x, y), swap(at(2), x), swap(at(1), y), swap(at(2), y), swap(at(1), x)};
    return seq;
  }
  if (k % 2 == 1) {
    switch (k % 3) {
      case 1:  // k >= 7
        append_delta(f, k - 2, at, x, y);
        break;
      case 2:  // k >= 5
        f = {swap(x, y), swap(at(k - 2), x), swap(at(k - 1), x), swap(at(k), x)};
        append_delta(f, k - 4, at, x, y);
        break;
      default:  // k >= 3
        f = {swap(x, y), swap(at(k), x)};
        append_delta(f, k - 2, at, x, y);
        break;
    }
  } else {
    switch (k % 3) {
      case 0:  // k >= 6
        f = {swap(at(k), y), swap(at(k - 1), x), swap(at(k), x)};
        append_delta(f, k - 3, at, x, y);
        break;
      case 1:  // k >= 4
        f = {swap(x, y), swap(at(k - 1), x), swap(at(k), x)};
        append_delta(f, k - 3, at, x, y);
        break;
      default:  // k >= 8
        f = {swap(at(k - 2), y), swap(at(k - 1), y), swap(at(k), y), swap(at(k - 3), x),
             swap(at(k - 2), x)};
        append_delta(f, k - 5, at, x, y);
        break;
    }
  }
  return seq;
}

FactorSequence dedupe_xy(FactorSequence seq) {
  if (seq.extras.size() < 2) return seq;
  const Point x = seq.extras[0];
  const Point y = seq.extras[1];
  const Cycle xy{x, y};

  std::vector<Cycle> out;
  out.reserve(seq.factors.size());
  // Index in `out` of an unmatched (x y), if one is open.
  std::optional<std::size_t> open;
  for (const Cycle& factor : seq.factors) {
    if (factor.same_as(xy)) {
      if (open) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(*open));
        for (std::size_t j = *open; j < out.size(); ++j) out[j] = out[j].swapped_labels(x, y);
        open.reset();
      } else {
        open = out.size();
        out.push_back(factor);
      }
    } else {
      out.push_back(factor);
    }
  }
  seq.factors = std::move(out);
  return seq;
}

FactorSequence invert_permutation_as_transpositions(const Permutation& p,
                                                     std::optional<std::size_t> n) {
  const std::size_t base = n.value_or(p.degree());
  if (base < p.largest_moved()) {
    throw InvalidArgument("base degree " + std::to_string(base) + " is smaller than moved point " +
                          std::to_string(p.largest_moved()));
  }
  const Point x = static_cast<Point>(base + 1);
  const Point y = static_cast<Point>(base + 2);

  FactorSequence seq;
  seq.base_degree = base;
  seq.extras = {x, y};
  // Each block inverts one cycle of p; the blocks move disjoint sets of old
  // points and each fixes x and y, so their product is p^-1.
  for (const Cycle& c : cycle_decomposition(p)) {
    auto block = invert_cycle_as_transpositions(c, x, y);
    seq.factors.insert(seq.factors.end(), block.factors.begin(), block.factors.end());
  }
  return dedupe_xy(std::move(seq));
}

}  // namespace brainswap::keeler
