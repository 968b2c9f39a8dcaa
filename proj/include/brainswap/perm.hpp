#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brainswap {

// Points are 1-based labels. Fresh points are simply labels above the base
// degree n of the scramble.
using Point = std::uint32_t;

enum class Parity { even, odd };

const char* to_string(Parity parity);

class Permutation;

/// A single cycle: points[j] maps to points[j+1] and the last point maps back
/// to the first. Holds at least two distinct positive labels.
///
/// The stored rotation is kept as given, so `(4 2 1)` prints as written. Use
/// canonical() or same_as() when comparing cycles as permutations.
class Cycle {
 public:
  explicit Cycle(std::vector<Point> points);
  Cycle(std::initializer_list<Point> points);

  std::span<const Point> points() const { return points_; }
  std::size_t length() const { return points_.size(); }
  Point operator[](std::size_t i) const { return points_[i]; }
  Point max_point() const;
  bool contains(Point point) const;

  // Image of a point under this cycle.
  Point apply(Point point) const;

  // Same cycle rotated so the smallest label comes first.
  Cycle canonical() const;
  Cycle reversed() const;
  Cycle relabeled(Point from, Point to) const;
  Cycle swapped_labels(Point a, Point b) const;

  // True when both denote the same permutation (equal up to rotation).
  bool same_as(const Cycle& other) const;

  Permutation to_permutation() const;
  std::string to_string() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Point> points_;
};

/// Bijection on {1..degree}. Points above the degree are treated as fixed, so
/// permutations of different degree compose and compare freely; equality
/// ignores trailing fixed points.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);
  // images[i] is the image of point i+1. Throws InvalidArgument unless the
  // images form a bijection of {1..images.size()}.
  static Permutation from_images(std::vector<Point> images);
  // Product of cycles, rightmost acting first.
  static Permutation from_cycles(std::span<const Cycle> cycles);

  std::size_t degree() const { return images_.size(); }
  std::span<const Point> images() const { return images_; }
  Point operator()(Point point) const {
    return point >= 1 && point <= images_.size() ? images_[point - 1] : point;
  }

  bool is_identity() const;
  // Largest moved point, 0 for the identity.
  Point largest_moved() const;
  Permutation padded(std::size_t degree) const;

  friend bool operator==(const Permutation& a, const Permutation& b);

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Point> images_;
};

// result(i) = p(q(i)): the right operand acts first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation operator*(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// m-fold composition; negative m raises the inverse.
Permutation power(const Permutation& p, std::int64_t m);

// Disjoint cycles, each starting at its smallest label, sorted by that label.
// Fixed points are omitted.
std::vector<Cycle> cycle_decomposition(const Permutation& p);
Parity parity(const Permutation& p);
// Moved points in ascending order.
std::vector<Point> support(const Permutation& p);

// Grammar: perm := "id" | cycle+ ; cycle := "(" int (("," | ws) int)+ ")".
// Overlapping cycles are multiplied, rightmost first.
Permutation parse_cycles(std::string_view text);
// Exactly one cycle, kept in the rotation it was written in.
Cycle parse_cycle(std::string_view text);
// Canonical cycle notation, "id" for the identity.
std::string format_cycles(const Permutation& p);

// Product of a factor list with the leftmost factor acting last.
Permutation product(std::span<const Cycle> factors);

}  // namespace brainswap
