#pragma once

// Undoing even permutations with a machine that cycles 3 or p (prime) points
// at a time. Every factor moves a fresh point and no factor lies in the
// cyclic subgroup generated by another.
//
// The cycle-level builders return factors whose product is the given cycle
// itself (not its inverse); the permutation-level entry points feed them the
// cycles of p^-1.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "brainswap/factor_sequence.hpp"
#include "brainswap/perm.hpp"

namespace brainswap::cycleswap {

bool is_prime(std::size_t value);

// Prime cycle length handled by the p-cycle path (p >= 5).
class PrimeSpec {
 public:
  // Throws InvalidArgument unless p is a prime >= 5.
  explicit PrimeSpec(std::size_t p);
  std::size_t p() const { return p_; }
  std::size_t fresh_count() const { return p_ - 3; }

 private:
  std::size_t p_;
};

// The p-3 fresh points n+1, ..., n+p-3 used by the p-cycle constructions.
std::vector<Point> fresh_list(std::size_t n, const PrimeSpec& spec);

/// (a_1 ... a_k), k odd, as (x a_k a_1)(x a_{k-2} a_{k-1}) ... (x a_3 a_4)(x a_1 a_2):
/// (k+1)/2 three-cycles, all through x.
FactorSequence factor_odd_cycle_3cycles(const Cycle& c, Point x);

/// Two disjoint even cycles (a_1 ... a_r), (b_1 ... b_s) as
/// (b_2 b_1 x)(b_1 a_2 x)(a_2 a_1 x)(a_1 b_1 x) followed by the odd
/// remainders (a_2 ... a_r) and (b_2 ... b_s). A remainder of a single
/// point contributes nothing.
FactorSequence factor_even_pair_3cycles(const Cycle& c1, const Cycle& c2, Point x);

/// p^-1 as 3-cycles through x = n+1. Throws ParityError for odd p.
FactorSequence invert_permutation_3cycles(const Permutation& p,
                                          std::optional<std::size_t> n = {});

// (a_1 a_2 a_3)(a_3 a_4 a_5) ... (a_{k-2} a_{k-1} a_k) for odd k >= 3.
std::vector<Cycle> factor_cycle_into_3cycles(const Cycle& c);

/// (a b c) = (a c b xs^-1)(b a c xs), where xs^-1 is xs reversed. The two
/// factors share a support but neither is a power of the other.
FactorSequence expand_3cycle_to_pcycles(const Cycle& t, std::span<const Point> xs);

// (b_2 b_1 a_2 xs^-1)(a_2 a_1 b_1 xs) followed by the odd remainders, each
// split into 3-cycles and expanded.
FactorSequence factor_even_pair_pcycles(const Cycle& c1, const Cycle& c2,
                                        std::span<const Point> xs);

/// p^-1 as p-cycles through xs = (n+1, ..., n+p-3). Throws ParityError for
/// odd p.
FactorSequence invert_permutation_pcycles(const Permutation& p, const PrimeSpec& spec,
                                          std::optional<std::size_t> n = {});

}  // namespace brainswap::cycleswap
