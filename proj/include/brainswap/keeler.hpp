#pragma once

// Undoing any permutation of S_n with distinct transpositions, each of which
// moves one of two fresh points x and y.

#include <cstddef>
#include <optional>

#include "brainswap/factor_sequence.hpp"
#include "brainswap/perm.hpp"

namespace brainswap::keeler {

/// Parameters of the backbone product
///
///   delta_m = prod over odd i in [1, m] of (i+1 y)(i+2 y)(i x)(i+1 x)
///
/// with the block for i = m leftmost and the block for i = 1 rightmost.
struct DeltaSpec {
  std::size_t m = 1;
  Point x = 0;
  Point y = 0;
};

// 2(m+1) distinct transpositions, none equal to (x y). Throws
// InvalidArgument for even m or x, y inside {1..m+2}.
FactorSequence delta(const DeltaSpec& spec);

/// Distinct transpositions through x and y whose product is c^-1.
///
/// The generic formulas are written for (1 2 ... k) and relabeled
/// positionally (i -> i-th point of c). The case is chosen from the parity
/// of k and k mod 3; k = 2 uses the five-swap formula (x y)(2 x)(1 y)(2 y)(1 x).
/// Factor counts: k=2 -> 5, odd k: 2k when 3 | k else 2(k-1), even k:
/// 2k-3 when k = 2 mod 3 (k >= 8) else 2k-1.
FactorSequence invert_cycle_as_transpositions(const Cycle& c, Point x, Point y);

/// Removes repeated (x y) factors without changing the product.
///
/// Occurrences are paired left to right; both members of each pair are
/// dropped and x and y are exchanged in every factor strictly between them.
/// This is conjugation by (x y). An unpaired last occurrence stays. x and y
/// are taken from the first two entries of seq.extras.
FactorSequence dedupe_xy(FactorSequence seq);

/// Factors p^-1 into pairwise distinct transpositions each moving x = n+1 or
/// y = n+2. n defaults to p.degree() and must cover every moved point.
FactorSequence invert_permutation_as_transpositions(const Permutation& p,
                                                     std::optional<std::size_t> n = {});

}  // namespace brainswap::keeler
