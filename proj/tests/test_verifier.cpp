#include <doctest.h>

#include <random>

#include "brainswap/errors.hpp"
#include "brainswap/keeler.hpp"
#include "brainswap/verifier.hpp"
#include "oracle.hpp"

using namespace brainswap;

namespace {

using Factors = std::vector<Cycle>;

FactorSequence plan_of(Factors fs) {
  FactorSequence seq;
  seq.factors = std::move(fs);
  return seq;
}

MachineSpec spec_for(int kind, std::size_t n) {
  switch (kind) {
    case 0:
      return MachineSpec::swap2(n);
    case 1:
      return MachineSpec::cycle3(n);
    default:
      return MachineSpec::pcycle(5, n);
  }
}

bool commute(const Cycle& a, const Cycle& b) {
  return compose(a.to_permutation(), b.to_permutation()) == compose(b.to_permutation(), a.to_permutation());
}

Permutation scramble_of(const Factors& history) {
  return product(Factors(history.rbegin(), history.rend()));
}

}  // namespace

TEST_CASE("machine specs") {
  CHECK(MachineSpec::swap2(5).extras() == std::vector<Point>{6, 7});
  CHECK(MachineSpec::cycle3(5).extras() == std::vector<Point>{6});
  CHECK(MachineSpec::pcycle(7, 5).extras() == std::vector<Point>{6, 7, 8, 9});
  CHECK(MachineSpec::pcycle(7, 5).factor_length() == 7);
  CHECK_THROWS_AS(MachineSpec::pcycle(6, 5), InvalidArgument);
  CHECK(parse_machine_kind("cycle3") == MachineKind::cycle3);
  CHECK_THROWS_AS(parse_machine_kind("swap3"), ParseError);
}

TEST_CASE("verify accepts the five-swap repair of (1 2)") {
  const auto target = parse_cycles("(1 2)");
  const auto seq = keeler::invert_permutation_as_transpositions(target);
  const auto report = verify(seq, target, MachineSpec::swap2(2));
  CHECK(report.passed());
  CHECK(report.failures.empty());
}

TEST_CASE("verify flags a repeated non-fresh swap") {
  const auto report = verify(plan_of({{1, 2}, {1, 2}}), Permutation::identity(2), MachineSpec::swap2(2));
  CHECK(report.composition_ok);
  CHECK_FALSE(report.distinctness_ok);
  CHECK_FALSE(report.freshness_ok);
  CHECK(report.shape_ok);
  CHECK_FALSE(report.passed());
  CHECK(report.failures.size() == 3);
}

TEST_CASE("verify checks factor order") {
  const auto spec = MachineSpec::pcycle(5, 3);
  // (1 3 2 5 4)(2 1 3 4 5) = (1 2 3), which undoes (1 3 2)
  const auto good = plan_of({{1, 3, 2, 5, 4}, {2, 1, 3, 4, 5}});
  CHECK(verify(good, parse_cycles("(1 3 2)"), spec).passed());
  const auto swapped = plan_of({{2, 1, 3, 4, 5}, {1, 3, 2, 5, 4}});
  CHECK_FALSE(verify(swapped, parse_cycles("(1 3 2)"), spec).composition_ok);
  CHECK_FALSE(verify(swapped, parse_cycles("(1 2 3)"), spec).composition_ok);
}

TEST_CASE("verify flags powers, shapes and labels outside the domain") {
  const auto spec = MachineSpec::cycle3(3);
  const auto powers = verify(plan_of({{4, 1, 2}, {4, 2, 1}}), Permutation::identity(3), spec);
  CHECK(powers.composition_ok);
  CHECK_FALSE(powers.subgroup_ok);
  CHECK(powers.distinctness_ok);

  const auto shape = verify(plan_of({{1, 4}}), parse_cycles("(1 4)"), spec);
  CHECK_FALSE(shape.shape_ok);

  const auto outside = verify(plan_of({{4, 5, 1}, {4, 1, 5}}), parse_cycles("id"), spec);
  CHECK_FALSE(outside.freshness_ok);
}

TEST_CASE("in_generated_subgroup") {
  CHECK(in_generated_subgroup({1, 2, 3}, {2, 3, 1}));
  CHECK(in_generated_subgroup({1, 3, 2}, {1, 2, 3}));
  CHECK_FALSE(in_generated_subgroup({1, 2, 4}, {1, 2, 3}));
  CHECK(in_generated_subgroup({1, 3, 5, 2, 4}, {1, 2, 3, 4, 5}));  // square
  CHECK_FALSE(in_generated_subgroup({1, 3, 2, 5, 4}, {2, 1, 3, 4, 5}));
  CHECK_FALSE(in_generated_subgroup({1, 2, 3, 4}, {1, 3, 2, 4}));
}

TEST_CASE("solve dispatches by machine") {
  CHECK(solve(parse_cycles("(1 2)"), MachineSpec::swap2(2)).size() == 5);
  CHECK(solve(parse_cycles("(1 2 3)"), MachineSpec::cycle3(3)).size() == 2);
  CHECK(solve(parse_cycles("(1 2 3 4 5)"), MachineSpec::pcycle(5, 5)).size() == 4);
  CHECK_THROWS_AS(solve(parse_cycles("(1 2)"), MachineSpec::cycle3(3)), ParityError);
}

TEST_CASE("mutations of valid plans are caught") {
  std::mt19937 rng(1234);
  std::size_t deletions = 0, duplicates = 0, swaps = 0, powers = 0, stale = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int kind = trial % 3;
    const std::size_t n = 8;
    const auto images = kind == 0 ? oracle::random_images(n, rng) : oracle::random_even_images(n, rng);
    const auto target = Permutation::from_images(images);
    if (target.is_identity()) continue;
    const auto spec = spec_for(kind, n);
    const auto seq = solve(target, spec);
    REQUIRE(verify(seq, target, spec).passed());
    std::uniform_int_distribution<std::size_t> pick(0, seq.size() - 1);
    const std::size_t i = pick(rng);

    auto deleted = seq;
    deleted.factors.erase(deleted.factors.begin() + static_cast<std::ptrdiff_t>(i));
    CHECK_FALSE(verify(deleted, target, spec).composition_ok);
    ++deletions;

    auto duplicated = seq;
    duplicated.factors.insert(duplicated.factors.begin() + static_cast<std::ptrdiff_t>(i), seq.factors[i]);
    const auto dup_report = verify(duplicated, target, spec);
    CHECK_FALSE(dup_report.distinctness_ok);
    CHECK_FALSE(dup_report.passed());
    ++duplicates;

    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
      if (commute(seq.factors[j], seq.factors[j + 1])) continue;
      auto swapped = seq;
      std::swap(swapped.factors[j], swapped.factors[j + 1]);
      CHECK_FALSE(verify(swapped, target, spec).composition_ok);
      ++swaps;
      break;
    }

    if (kind != 0 && seq.size() >= 2) {
      // replace a neighbour by a power of factor i
      auto powered = seq;
      const std::size_t j = i == 0 ? 1 : i - 1;
      powered.factors[j] = seq.factors[i].reversed();
      CHECK_FALSE(verify(powered, target, spec).subgroup_ok);
      ++powers;
    }

    // a factor that no longer touches a fresh point
    auto no_fresh = seq;
    std::vector<Point> pts(seq.factors[i].length());
    for (std::size_t j = 0; j < pts.size(); ++j) pts[j] = static_cast<Point>(j + 1);
    no_fresh.factors[i] = Cycle(pts);
    CHECK_FALSE(verify(no_fresh, target, spec).freshness_ok);
    ++stale;
  }
  CHECK(deletions > 150);
  CHECK(duplicates > 150);
  CHECK(swaps > 100);
  CHECK(powers > 100);
  CHECK(stale > 150);
}

TEST_CASE("search_min_sequence") {
  const auto five = search_min_sequence(parse_cycles("(1 2)"), MachineSpec::swap2(2), 7);
  REQUIRE(five);
  CHECK(five->length == 5);
  CHECK(five->sequence.factors == Factors{{1, 3}, {2, 4}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(verify(five->sequence, parse_cycles("(1 2)"), MachineSpec::swap2(2)).passed());

  const auto zero = search_min_sequence(Permutation::identity(2), MachineSpec::swap2(2), 7);
  REQUIRE(zero);
  CHECK(zero->length == 0);

  const auto two = search_min_sequence(parse_cycles("(1 2 3)"), MachineSpec::cycle3(3), 7);
  REQUIRE(two);
  CHECK(two->length == 2);
  CHECK(verify(two->sequence, parse_cycles("(1 2 3)"), MachineSpec::cycle3(3)).passed());

  CHECK_FALSE(search_min_sequence(parse_cycles("(1 2)"), MachineSpec::swap2(2), 4));
  CHECK_THROWS_AS(search_min_sequence(parse_cycles("(1 2)"), MachineSpec::swap2(7), 3), SizeError);
  CHECK_THROWS_AS(search_min_sequence(parse_cycles("(1 2)"), MachineSpec::swap2(2), 8), SizeError);
  CHECK_THROWS_AS(search_min_sequence(parse_cycles("(1 5)"), MachineSpec::swap2(3), 3), InvalidArgument);
}

TEST_CASE("search never beats the construction by going longer") {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& images : oracle::all_images(n)) {
      const auto target = Permutation::from_images(images);
      const auto spec = MachineSpec::swap2(n);
      const auto built = solve(target, spec);
      const auto found = search_min_sequence(target, spec, std::min<std::size_t>(built.size(), 7));
      REQUIRE(found);
      CHECK(found->length <= built.size());
      CHECK(verify(found->sequence, target, spec).passed());
    }
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    for (const auto& images : oracle::all_images(n)) {
      if (!oracle::is_even(images)) continue;
      const auto target = Permutation::from_images(images);
      const auto spec = MachineSpec::cycle3(n);
      const auto built = solve(target, spec);
      const auto found = search_min_sequence(target, spec, std::min<std::size_t>(built.size(), 7));
      REQUIRE(found);
      CHECK(found->length <= built.size());
      CHECK(verify(found->sequence, target, spec).passed());
    }
  }
}

TEST_CASE("simulate") {
  const auto spec = MachineSpec::swap2(2);
  CHECK(simulate({}, spec).state.is_identity());

  const Factors one{{1, 2}};
  const auto swapped = simulate(one, spec);
  CHECK(swapped.state.mind_in_body == std::vector<Point>{2, 1});
  CHECK(swapped.legal);

  // the mind in body 1 moves to body 2, 2 to 3, 3 to 1
  const Factors rot{{1, 2, 3}};
  CHECK(simulate(rot, MachineSpec::cycle3(3)).state.mind_in_body == std::vector<Point>{3, 1, 2});

  Factors history{{1, 2}};
  for (const auto& run : solve(scramble_of(history), spec).run_order()) history.push_back(run);
  const auto fixed = simulate(history, spec);
  CHECK(fixed.state.is_identity());
  CHECK(fixed.state.mind_in_body.size() == 4);
  CHECK(fixed.legal);

  const Factors again{{1, 2}, {2, 1}};
  const auto bad = simulate(again, spec);
  CHECK_FALSE(bad.legal);
  CHECK(bad.violations.size() == 1);

  const Factors power{{1, 2, 3}, {3, 2, 1}};
  CHECK_FALSE(simulate(power, MachineSpec::cycle3(3)).legal);

  const Factors wrong{{1, 2, 3}};
  CHECK_THROWS_AS(simulate(wrong, spec), InvalidArgument);
}

TEST_CASE("appending the repair to a random legal history restores everyone") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const bool cyc = trial % 2 == 1;
    std::uniform_int_distribution<std::size_t> size(3, 6), runs(0, 8);
    const std::size_t n = size(rng);
    const auto spec = cyc ? MachineSpec::cycle3(n) : MachineSpec::swap2(n);
    std::uniform_int_distribution<Point> pt(1, static_cast<Point>(n));
    Factors history;
    const std::size_t want = runs(rng);
    for (int attempts = 0; history.size() < want && attempts < 200; ++attempts) {
      std::vector<Point> pts;
      while (pts.size() < spec.factor_length()) {
        const Point v = pt(rng);
        if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
      }
      const Cycle c(pts);
      const bool clash = std::any_of(history.begin(), history.end(), [&](const Cycle& h) {
        return cyc ? in_generated_subgroup(c, h) : c.same_as(h);
      });
      if (!clash) history.push_back(c);
    }
    REQUIRE(simulate(history, spec).legal);
    const auto scramble = scramble_of(history);
    for (const auto& run : solve(scramble, spec).run_order()) history.push_back(run);
    const auto result = simulate(history, spec);
    CHECK(result.state.is_identity());
    CHECK(result.legal);
  }
}
