#include "brainswap/cycleswap.hpp"

#include <algorithm>
#include <string>

#include "brainswap/errors.hpp"

namespace brainswap::cycleswap {

namespace {

void require_odd(const Cycle& c) {
  if (c.length() % 2 == 0) {
    throw InvalidArgument("expected an odd-length cycle, got " + c.to_string());
  }
}

void require_even(const Cycle& c) {
  if (c.length() % 2 != 0) {
    throw InvalidArgument("expected an even-length cycle, got " + c.to_string());
  }
}

void require_disjoint(const Cycle& a, const Cycle& b) {
  for (Point v : a.points()) {
    if (b.contains(v)) {
      throw InvalidArgument("cycles " + a.to_string() + " and " + b.to_string() +
                            " share point " + std::to_string(v));
    }
  }
}

void require_fresh(const Cycle& c, Point x) {
  if (x == 0 || c.contains(x)) {
    throw InvalidArgument("fresh point " + std::to_string(x) + " lies on " + c.to_string());
  }
}

void require_fresh(const Cycle& c, std::span<const Point> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require_fresh(c, xs[i]);
    if (std::find(xs.begin() + static_cast<std::ptrdiff_t>(i) + 1, xs.end(), xs[i]) != xs.end()) {
      throw InvalidArgument("fresh list repeats point " + std::to_string(xs[i]));
    }
  }
}

// Tail (a_2 ... a_r) of an even cycle, or nothing when r = 2.
std::optional<Cycle> remainder(const Cycle& c) {
  if (c.length() < 3) return std::nullopt;
  return Cycle(std::vector<Point>(c.points().begin() + 1, c.points().end()));
}

Cycle with_fresh(std::initializer_list<Point> head, std::span<const Point> xs, bool reversed) {
  std::vector<Point> points(head);
  if (reversed) {
    points.insert(points.end(), xs.rbegin(), xs.rend());
  } else {
    points.insert(points.end(), xs.begin(), xs.end());
  }
  return Cycle(std::move(points));
}

void append(FactorSequence& into, const FactorSequence& from) {
  into.factors.insert(into.factors.end(), from.factors.begin(), from.factors.end());
}

void append_pcycles_for_odd(FactorSequence& into, const Cycle& c, std::span<const Point> xs) {
  for (const Cycle& t : factor_cycle_into_3cycles(c)) append(into, expand_3cycle_to_pcycles(t, xs));
}

std::size_t checked_base(const Permutation& p, std::optional<std::size_t> n) {
  const std::size_t base = n.value_or(p.degree());
  if (base < p.largest_moved()) {
    throw InvalidArgument("base degree " + std::to_string(base) + " is smaller than moved point " +
                          std::to_string(p.largest_moved()));
  }
  if (parity(p) == Parity::odd) {
    throw ParityError("odd permutation " + format_cycles(p) +
                      " cannot be undone by a machine of odd cycle length");
  }
  return base;
}

// Walks the cycles of p^-1: odd cycles go to `odd`, even cycles are paired
// in canonical order and handed to `pair`.
template <typename OddFn, typename PairFn>
void for_each_block(const Permutation& p, OddFn odd, PairFn pair) {
  std::optional<Cycle> pending;
  for (const Cycle& c : cycle_decomposition(inverse(p))) {
    if (c.length() % 2 == 1) {
      odd(c);
    } else if (pending) {
      pair(*pending, c);
      pending.reset();
    } else {
      pending = c;
    }
  }
  // Even permutations have an even number of even cycles.
  if (pending) throw ParityError("unpaired even cycle " + pending->to_string());
}

}  // namespace

bool is_prime(std::size_t value) {
  if (value < 2) return false;
  for (std::size_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeSpec::PrimeSpec(std::size_t p) : p_(p) {
  if (p < 5 || !is_prime(p)) {
    throw InvalidArgument("cycle length must be a prime >= 5, got " + std::to_string(p));
  }
}

std::vector<Point> fresh_list(std::size_t n, const PrimeSpec& spec) {
  std::vector<Point> xs(spec.fresh_count());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<Point>(n + 1 + i);
  return xs;
}

// ------------------------------------------------------------- 3-cycles

FactorSequence factor_odd_cycle_3cycles(const Cycle& c, Point x) {
  require_odd(c);
  require_fresh(c, x);
  const std::size_t k = c.length();
  FactorSequence seq;
  seq.base_degree = c.max_point();
  seq.extras = {x};
  seq.factors.push_back(Cycle{x, c[k - 1], c[0]});
  for (std::size_t i = k - 2; i >= 1; i -= 2) {
    // Generic (x i i+1) with 1-based i, i = k-2, ..., 3, 1.
    seq.factors.push_back(Cycle{x, c[i - 1], c[i]});
    if (i == 1) break;
  }
  return seq;
}

FactorSequence factor_even_pair_3cycles(const Cycle& c1, const Cycle& c2, Point x) {
  require_even(c1);
  require_even(c2);
  require_disjoint(c1, c2);
  require_fresh(c1, x);
  require_fresh(c2, x);
  const Point a1 = c1[0], a2 = c1[1], b1 = c2[0], b2 = c2[1];

  FactorSequence seq;
  seq.base_degree = std::max(c1.max_point(), c2.max_point());
  seq.extras = {x};
  seq.factors = {Cycle{b2, b1, x}, Cycle{b1, a2, x}, Cycle{a2, a1, x}, Cycle{a1, b1, x}};
  if (auto rest = remainder(c1)) append(seq, factor_odd_cycle_3cycles(*rest, x));
  if (auto rest = remainder(c2)) append(seq, factor_odd_cycle_3cycles(*rest, x));
  return seq;
}

FactorSequence invert_permutation_3cycles(const Permutation& p, std::optional<std::size_t> n) {
  const std::size_t base = checked_base(p, n);
  const Point x = static_cast<Point>(base + 1);
  FactorSequence seq;
  seq.base_degree = base;
  seq.extras = {x};
  for_each_block(
      p, [&](const Cycle& c) { append(seq, factor_odd_cycle_3cycles(c, x)); },
      [&](const Cycle& c1, const Cycle& c2) { append(seq, factor_even_pair_3cycles(c1, c2, x)); });
  return seq;
}

// ------------------------------------------------------------- p-cycles

std::vector<Cycle> factor_cycle_into_3cycles(const Cycle& c) {
  require_odd(c);
  std::vector<Cycle> out;
  out.reserve((c.length() - 1) / 2);
  for (std::size_t i = 0; i + 2 < c.length(); i += 2) out.push_back(Cycle{c[i], c[i + 1], c[i + 2]});
  return out;
}

FactorSequence expand_3cycle_to_pcycles(const Cycle& t, std::span<const Point> xs) {
  if (t.length() != 3) throw InvalidArgument("expected a 3-cycle, got " + t.to_string());
  require_fresh(t, xs);
  FactorSequence seq;
  seq.base_degree = t.max_point();
  seq.extras.assign(xs.begin(), xs.end());
  seq.factors = {with_fresh({t[0], t[2], t[1]}, xs, true), with_fresh({t[1], t[0], t[2]}, xs, false)};
  return seq;
}

FactorSequence factor_even_pair_pcycles(const Cycle& c1, const Cycle& c2,
                                        std::span<const Point> xs) {
  require_even(c1);
  require_even(c2);
  require_disjoint(c1, c2);
  require_fresh(c1, xs);
  require_fresh(c2, xs);
  const Point a1 = c1[0], a2 = c1[1], b1 = c2[0], b2 = c2[1];

  FactorSequence seq;
  seq.base_degree = std::max(c1.max_point(), c2.max_point());
  seq.extras.assign(xs.begin(), xs.end());
  seq.factors = {with_fresh({b2, b1, a2}, xs, true), with_fresh({a2, a1, b1}, xs, false)};
  if (auto rest = remainder(c1)) append_pcycles_for_odd(seq, *rest, xs);
  if (auto rest = remainder(c2)) append_pcycles_for_odd(seq, *rest, xs);
  return seq;
}

FactorSequence invert_permutation_pcycles(const Permutation& p, const PrimeSpec& spec,
                                          std::optional<std::size_t> n) {
  const std::size_t base = checked_base(p, n);
  const auto xs = fresh_list(base, spec);
  FactorSequence seq;
  seq.base_degree = base;
  seq.extras = xs;
  for_each_block(
      p, [&](const Cycle& c) { append_pcycles_for_odd(seq, c, xs); },
      [&](const Cycle& c1, const Cycle& c2) { append(seq, factor_even_pair_pcycles(c1, c2, xs)); });
  return seq;
}

}  // namespace brainswap::cycleswap
