#include "brainswap/verifier.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

#include "brainswap/cycleswap.hpp"
#include "brainswap/errors.hpp"
#include "brainswap/keeler.hpp"

namespace brainswap {

namespace {

std::vector<Point> sorted_points(const Cycle& c) {
  std::vector<Point> pts(c.points().begin(), c.points().end());
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::string pair_note(std::size_t i, const Cycle& a, std::size_t j, const Cycle& b) {
  return "factor " + std::to_string(i) + " " + a.to_string() + " vs factor " + std::to_string(j) +
         " " + b.to_string();
}

}  // namespace

const char* to_string(MachineKind kind) {
  switch (kind) {
    case MachineKind::swap2:
      return "swap2";
    case MachineKind::cycle3:
      return "cycle3";
    case MachineKind::pcycle:
      return "pcycle";
  }
  return "?";
}

MachineKind parse_machine_kind(std::string_view text) {
  if (text == "swap2") return MachineKind::swap2;
  if (text == "cycle3") return MachineKind::cycle3;
  if (text == "pcycle") return MachineKind::pcycle;
  throw ParseError("unknown machine '" + std::string(text) + "' (expected swap2, cycle3 or pcycle)");
}

MachineSpec MachineSpec::swap2(std::size_t n) { return {MachineKind::swap2, 2, n}; }

MachineSpec MachineSpec::cycle3(std::size_t n) { return {MachineKind::cycle3, 3, n}; }

MachineSpec MachineSpec::pcycle(std::size_t p, std::size_t n) {
  cycleswap::PrimeSpec checked(p);
  return {MachineKind::pcycle, checked.p(), n};
}

std::vector<Point> MachineSpec::extras() const {
  std::size_t count = 0;
  switch (kind) {
    case MachineKind::swap2:
      count = 2;
      break;
    case MachineKind::cycle3:
      count = 1;
      break;
    case MachineKind::pcycle:
      count = p - 3;
      break;
  }
  std::vector<Point> xs(count);
  for (std::size_t i = 0; i < count; ++i) xs[i] = static_cast<Point>(n + 1 + i);
  return xs;
}

bool in_generated_subgroup(const Cycle& a, const Cycle& b) {
  // Every non-identity power of a single cycle moves exactly its support.
  if (a.length() != b.length() || sorted_points(a) != sorted_points(b)) return false;
  const std::size_t len = b.length();
  const auto bp = b.points();
  const auto at = std::find(bp.begin(), bp.end(), a.apply(bp[0]));
  const std::size_t m = static_cast<std::size_t>(at - bp.begin());
  if (m == 0) return false;
  for (std::size_t j = 0; j < len; ++j) {
    if (a.apply(bp[j]) != bp[(j + m) % len]) return false;
  }
  return true;
}

VerifyReport verify(const FactorSequence& seq, const Permutation& target, const MachineSpec& spec) {
  VerifyReport report;
  const auto extras = spec.extras();
  const std::size_t domain = spec.domain_size();

  const Permutation got = seq.product();
  const Permutation want = inverse(target);
  if (!(got == want)) {
    report.composition_ok = false;
    report.failures.push_back("product " + format_cycles(got) + " differs from target inverse " +
                              format_cycles(want));
  }

  for (std::size_t i = 0; i < seq.factors.size(); ++i) {
    const Cycle& f = seq.factors[i];
    if (f.length() != spec.factor_length()) {
      report.shape_ok = false;
      report.failures.push_back("factor " + std::to_string(i) + " " + f.to_string() + " has length " +
                                std::to_string(f.length()) + ", machine needs " +
                                std::to_string(spec.factor_length()));
    }
    const bool touches_extra =
        std::any_of(extras.begin(), extras.end(), [&](Point x) { return f.contains(x); });
    if (!touches_extra) {
      report.freshness_ok = false;
      report.failures.push_back("factor " + std::to_string(i) + " " + f.to_string() +
                                " moves no fresh point");
    }
    if (f.max_point() > domain) {
      report.freshness_ok = false;
      report.failures.push_back("factor " + std::to_string(i) + " " + f.to_string() +
                                " uses a label above " + std::to_string(domain));
    }
  }

  std::map<Cycle, std::size_t> first_seen;
  for (std::size_t i = 0; i < seq.factors.size(); ++i) {
    auto [it, inserted] = first_seen.emplace(seq.factors[i].canonical(), i);
    if (!inserted) {
      report.distinctness_ok = false;
      report.failures.push_back("repeated " +
                                pair_note(it->second, seq.factors[it->second], i, seq.factors[i]));
    }
  }

  if (spec.kind != MachineKind::swap2) {
    for (std::size_t i = 0; i < seq.factors.size(); ++i) {
      for (std::size_t j = i + 1; j < seq.factors.size(); ++j) {
        const Cycle& a = seq.factors[i];
        const Cycle& b = seq.factors[j];
        if (in_generated_subgroup(a, b) || in_generated_subgroup(b, a)) {
          report.subgroup_ok = false;
          report.failures.push_back("power relation between " + pair_note(i, a, j, b));
        }
      }
    }
  }
  return report;
}

FactorSequence solve(const Permutation& target, const MachineSpec& spec) {
  switch (spec.kind) {
    case MachineKind::swap2:
      return keeler::invert_permutation_as_transpositions(target, spec.n);
    case MachineKind::cycle3:
      return cycleswap::invert_permutation_3cycles(target, spec.n);
    case MachineKind::pcycle:
      return cycleswap::invert_permutation_pcycles(target, cycleswap::PrimeSpec(spec.p), spec.n);
  }
  throw InvalidArgument("unknown machine");
}

// ---------------------------------------------------------------- search

namespace {

// Dense permutation on at most kSearchMaxPoints points; index 0 unused.
using SmallPerm = std::array<std::uint8_t, kSearchMaxPoints + 1>;

SmallPerm small_identity() {
  SmallPerm s{};
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<std::uint8_t>(i);
  return s;
}

class MinSearch {
 public:
  MinSearch(const Permutation& target, const MachineSpec& spec)
      : domain_(spec.domain_size()), length_(spec.factor_length()), swap2_(spec.kind == MachineKind::swap2) {
    const Permutation want = inverse(target);
    goal_ = small_identity();
    for (Point i = 1; i <= domain_; ++i) goal_[i] = static_cast<std::uint8_t>(want(i));
    build_generators(spec.extras());
  }

  std::optional<std::vector<Cycle>> run(std::size_t max_len) {
    for (std::size_t depth = 0; depth <= max_len; ++depth) {
      chosen_.clear();
      if (dfs(goal_, depth)) {
        std::vector<Cycle> out;
        for (std::size_t g : chosen_) out.push_back(generators_[g]);
        return out;
      }
    }
    return std::nullopt;
  }

 private:
  void build_generators(const std::vector<Point>& extras) {
    // Canonical cycles (smallest label first) of the machine length that
    // move at least one fresh point, in lexicographic order.
    std::vector<Point> rest;
    for (Point first = 1; first <= domain_; ++first) {
      rest.clear();
      for (Point v = first + 1; v <= domain_; ++v) rest.push_back(v);
      if (rest.size() + 1 < length_) continue;
      // Ordered selections of length_-1 points from rest, in lex order.
      std::vector<Point> pick;
      std::vector<bool> used(rest.size(), false);
      collect(first, rest, used, pick, extras);
    }
    std::sort(generators_.begin(), generators_.end());
    inverses_.reserve(generators_.size());
    for (const Cycle& g : generators_) {
      SmallPerm inv = small_identity();
      for (std::size_t j = 0; j < g.length(); ++j) {
        inv[g[(j + 1) % g.length()]] = static_cast<std::uint8_t>(g[j]);
      }
      inverses_.push_back(inv);
    }
    const std::size_t count = generators_.size();
    conflict_.assign(count * count, false);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        const bool clash = swap2_ ? a == b
                                  : in_generated_subgroup(generators_[a], generators_[b]) ||
                                        in_generated_subgroup(generators_[b], generators_[a]);
        conflict_[a * count + b] = clash;
      }
    }
  }

  void collect(Point first, const std::vector<Point>& rest, std::vector<bool>& used,
               std::vector<Point>& pick, const std::vector<Point>& extras) {
    if (pick.size() + 1 == length_) {
      std::vector<Point> pts{first};
      pts.insert(pts.end(), pick.begin(), pick.end());
      const bool fresh = std::any_of(pts.begin(), pts.end(), [&](Point v) {
        return std::find(extras.begin(), extras.end(), v) != extras.end();
      });
      if (fresh) generators_.emplace_back(std::move(pts));
      return;
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      pick.push_back(rest[i]);
      collect(first, rest, used, pick, extras);
      pick.pop_back();
      used[i] = false;
    }
  }

  // `remaining` is what the factors still to be chosen must multiply to.
  bool dfs(const SmallPerm& remaining, std::size_t depth) {
    std::size_t moved = 0;
    for (Point i = 1; i <= domain_; ++i) moved += remaining[i] != i;
    if (depth == 0) return moved == 0;
    if (moved > depth * length_) return false;
    if (parity_of(remaining) != ((length_ - 1) * depth) % 2) return false;

    const std::size_t count = generators_.size();
    for (std::size_t g = 0; g < count; ++g) {
      bool clash = false;
      for (std::size_t c : chosen_) {
        if (conflict_[g * count + c]) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      // remaining = g * next  =>  next = g^-1 * remaining
      SmallPerm next = remaining;
      for (Point i = 1; i <= domain_; ++i) next[i] = inverses_[g][remaining[i]];
      chosen_.push_back(g);
      if (dfs(next, depth - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::size_t parity_of(const SmallPerm& s) const {
    std::array<bool, kSearchMaxPoints + 1> seen{};
    std::size_t orbits = 0;
    for (Point i = 1; i <= domain_; ++i) {
      if (seen[i]) continue;
      ++orbits;
      for (Point v = i; !seen[v]; v = s[v]) seen[v] = true;
    }
    return (domain_ - orbits) % 2;
  }

  std::size_t domain_;
  std::size_t length_;
  bool swap2_;
  SmallPerm goal_{};
  std::vector<Cycle> generators_;
  std::vector<SmallPerm> inverses_;
  std::vector<bool> conflict_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<SearchResult> search_min_sequence(const Permutation& target, const MachineSpec& spec,
                                                std::size_t max_len) {
  if (spec.domain_size() > kSearchMaxPoints) {
    throw SizeError("search needs n + extras <= " + std::to_string(kSearchMaxPoints) + ", got " +
                    std::to_string(spec.domain_size()));
  }
  if (max_len > kSearchMaxDepth) {
    throw SizeError("search depth is limited to " + std::to_string(kSearchMaxDepth));
  }
  if (target.largest_moved() > spec.n) {
    throw InvalidArgument("target moves point " + std::to_string(target.largest_moved()) +
                          " outside the base group of degree " + std::to_string(spec.n));
  }
  auto found = MinSearch(target, spec).run(max_len);
  if (!found) return std::nullopt;
  SearchResult result;
  result.length = found->size();
  result.sequence.factors = std::move(*found);
  result.sequence.base_degree = spec.n;
  result.sequence.extras = spec.extras();
  return result;
}

// ------------------------------------------------------------- simulate

BrainState BrainState::initial(std::size_t size) {
  BrainState s;
  s.mind_in_body.resize(size);
  for (std::size_t i = 0; i < size; ++i) s.mind_in_body[i] = static_cast<Point>(i + 1);
  return s;
}

bool BrainState::is_identity() const {
  for (std::size_t i = 0; i < mind_in_body.size(); ++i) {
    if (mind_in_body[i] != i + 1) return false;
  }
  return true;
}

SimulationResult simulate(std::span<const Cycle> history, const MachineSpec& spec) {
  std::size_t size = spec.n;
  for (const Cycle& c : history) {
    if (c.length() != spec.factor_length()) {
      throw InvalidArgument("history entry " + c.to_string() + " has length " +
                            std::to_string(c.length()) + ", machine cycles " +
                            std::to_string(spec.factor_length()) + " points");
    }
    size = std::max<std::size_t>(size, c.max_point());
  }

  SimulationResult result;
  result.state = BrainState::initial(size);
  auto& minds = result.state.mind_in_body;
  for (std::size_t i = 0; i < history.size(); ++i) {
    const Cycle& c = history[i];
    for (std::size_t j = 0; j < i; ++j) {
      const bool illegal = spec.kind == MachineKind::swap2 ? c.same_as(history[j])
                                                           : in_generated_subgroup(c, history[j]);
      if (illegal) {
        result.legal = false;
        result.violations.push_back("run " + std::to_string(i) + " " + c.to_string() +
                                    (spec.kind == MachineKind::swap2 ? " repeats run "
                                                                     : " is a power of run ") +
                                    std::to_string(j) + " " + history[j].to_string());
      }
    }
    const std::vector<Point> before = minds;
    for (std::size_t j = 0; j < c.length(); ++j) {
      minds[c[(j + 1) % c.length()] - 1] = before[c[j] - 1];
    }
  }
  return result;
}

}  // namespace brainswap
