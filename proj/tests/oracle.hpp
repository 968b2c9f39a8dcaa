#pragma once

// Brute-force reference used by the test suites. Works on plain point lists
// and never touches the library's Permutation arithmetic, so it can check
// products, inverses and decompositions independently.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "brainswap/perm.hpp"

namespace oracle {

using brainswap::Point;
using PointList = std::vector<Point>;

// Image of `v` under one cycle written as a point list.
inline Point chase(const PointList& cycle, Point v) {
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    if (cycle[j] == v) return cycle[(j + 1) % cycle.size()];
  }
  return v;
}

// Images of 1..degree under the product of `cycles`, rightmost first.
inline PointList product_images(const std::vector<PointList>& cycles, std::size_t degree) {
  PointList out(degree);
  for (Point i = 1; i <= degree; ++i) {
    Point v = i;
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) v = chase(*it, v);
    out[i - 1] = v;
  }
  return out;
}

inline PointList inverse_images(const PointList& images) {
  PointList out(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out[images[i] - 1] = static_cast<Point>(i + 1);
  return out;
}

inline std::vector<PointList> to_lists(const std::vector<brainswap::Cycle>& cycles) {
  std::vector<PointList> out;
  for (const auto& c : cycles) out.emplace_back(c.points().begin(), c.points().end());
  return out;
}

inline std::size_t max_label(const std::vector<PointList>& cycles) {
  std::size_t m = 0;
  for (const auto& c : cycles) {
    for (Point v : c) m = std::max<std::size_t>(m, v);
  }
  return m;
}

// Images of 1..degree of a permutation, padded with fixed points.
inline PointList images_of(const brainswap::Permutation& p, std::size_t degree) {
  PointList out(degree);
  for (Point i = 1; i <= degree; ++i) out[i - 1] = i <= p.degree() ? p.images()[i - 1] : i;
  return out;
}

// True when `factors` (leftmost last) multiply to the inverse of `target`.
inline bool undoes(const std::vector<brainswap::Cycle>& factors, const brainswap::Permutation& target) {
  const auto lists = to_lists(factors);
  const std::size_t degree = std::max(max_label(lists), target.degree());
  return product_images(lists, degree) == inverse_images(images_of(target, degree));
}

// Number of transpositions in a naive bubble-sort of the images.
inline bool is_even(PointList images) {
  std::size_t swaps = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j + 1 < images.size() - i; ++j) {
      if (images[j] > images[j + 1]) {
        std::swap(images[j], images[j + 1]);
        ++swaps;
      }
    }
  }
  return swaps % 2 == 0;
}

// Every permutation of 1..n as image lists, in lexicographic order.
inline std::vector<PointList> all_images(std::size_t n) {
  PointList cur(n);
  std::iota(cur.begin(), cur.end(), Point{1});
  std::vector<PointList> out;
  do {
    out.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

inline PointList random_images(std::size_t n, std::mt19937& rng) {
  PointList cur(n);
  std::iota(cur.begin(), cur.end(), Point{1});
  std::shuffle(cur.begin(), cur.end(), rng);
  return cur;
}

inline PointList random_even_images(std::size_t n, std::mt19937& rng) {
  PointList cur = random_images(n, rng);
  if (!is_even(cur)) std::swap(cur[0], cur[1]);
  return cur;
}

// Set of points moved by a cycle list.
inline std::set<Point> moved_points(const PointList& cycle) { return {cycle.begin(), cycle.end()}; }

// b^m for a single cycle b as an image map over its points.
inline std::map<Point, Point> cycle_power(const PointList& b, std::size_t m) {
  std::map<Point, Point> out;
  for (std::size_t j = 0; j < b.size(); ++j) out[b[j]] = b[(j + m) % b.size()];
  return out;
}

// a in <b> for single cycles, by listing every power of b.
inline bool in_cyclic_group(const PointList& a, const PointList& b) {
  std::map<Point, Point> amap;
  for (Point v : a) amap[v] = chase(a, v);
  for (std::size_t m = 1; m < b.size(); ++m) {
    auto pw = cycle_power(b, m);
    std::map<Point, Point> moved;
    for (auto [k, v] : pw) {
      if (k != v) moved[k] = v;
    }
    if (moved == amap) return true;
  }
  return false;
}

}  // namespace oracle
