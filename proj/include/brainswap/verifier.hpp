#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brainswap/factor_sequence.hpp"
#include "brainswap/perm.hpp"

namespace brainswap {

enum class MachineKind { swap2, cycle3, pcycle };

const char* to_string(MachineKind kind);
// Throws ParseError on anything but "swap2", "cycle3", "pcycle".
MachineKind parse_machine_kind(std::string_view text);

/// Which machine runs the repair, and over which base group.
///
/// swap2 cycles 2 points with extras {n+1, n+2}; cycle3 cycles 3 points with
/// extra {n+1}; pcycle cycles p points (p prime >= 5) with extras
/// {n+1, ..., n+p-3}.
struct MachineSpec {
  MachineKind kind = MachineKind::swap2;
  std::size_t p = 2;
  std::size_t n = 0;

  static MachineSpec swap2(std::size_t n);
  static MachineSpec cycle3(std::size_t n);
  // Throws InvalidArgument unless p is a prime >= 5.
  static MachineSpec pcycle(std::size_t p, std::size_t n);

  std::size_t factor_length() const { return p; }
  std::vector<Point> extras() const;
  // n plus the number of extras: every label a legal factor may touch.
  std::size_t domain_size() const { return n + extras().size(); }
};

struct VerifyReport {
  bool composition_ok = true;
  bool shape_ok = true;
  bool freshness_ok = true;
  bool distinctness_ok = true;
  // tau_i not in <tau_j> for every i != j; always true for swap2, where it
  // coincides with distinctness.
  bool subgroup_ok = true;
  std::vector<std::string> failures;

  bool passed() const {
    return composition_ok && shape_ok && freshness_ok && distinctness_ok && subgroup_ok;
  }
};

/// Checks a plan against every machine constraint. Never throws on a bad
/// plan; each violation is recorded in the report.
VerifyReport verify(const FactorSequence& seq, const Permutation& target, const MachineSpec& spec);

// Whether a lies in the cyclic group generated by b (a == b^m for some m).
bool in_generated_subgroup(const Cycle& a, const Cycle& b);

/// Solves with the construction matching the machine. Throws ParityError
/// for odd targets on cycle machines.
FactorSequence solve(const Permutation& target, const MachineSpec& spec);

struct SearchResult {
  std::size_t length = 0;
  FactorSequence sequence;
};

// Instance limits for search_min_sequence.
inline constexpr std::size_t kSearchMaxPoints = 8;
inline constexpr std::size_t kSearchMaxDepth = 7;

/// Shortest legal plan for target^-1 by iterative deepening, or nullopt when
/// none exists within max_len factors. Among shortest plans the
/// lexicographically least (factors in canonical rotation) is returned.
/// Throws SizeError when n + extras > 8 or max_len > 7.
std::optional<SearchResult> search_min_sequence(const Permutation& target, const MachineSpec& spec,
                                                std::size_t max_len);

/// Who is in whose body. mind_in_body[b-1] is the mind now housed by body b.
struct BrainState {
  std::vector<Point> mind_in_body;

  static BrainState initial(std::size_t size);
  bool is_identity() const;
  friend bool operator==(const BrainState&, const BrainState&) = default;
};

struct SimulationResult {
  BrainState state;
  bool legal = true;
  std::vector<std::string> violations;
};

/// Runs the machine on each history entry in order. Running (a_1 ... a_k)
/// moves the mind in body a_j to body a_{j+1}. Legality follows the
/// machine: no repeated swap for swap2, no entry inside the cyclic group of
/// an earlier one for cycle machines. Throws InvalidArgument when an entry
/// has the wrong length.
SimulationResult simulate(std::span<const Cycle> history, const MachineSpec& spec);

}  // namespace brainswap
