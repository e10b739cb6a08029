#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "test_lattices.hpp"

using namespace gabriel;
using namespace gabriel::testing;

namespace {

ClassFlags all_flags() { return {true, true, true, true, true}; }

IntervalSet trivials_and_covers(const IntervalSpace& space) {
  return IntervalSet::trivial(space) | height_one(space);
}

std::vector<Lattice> tiny_lattices() {
  return {chain(1), chain(2), three_chain(), chain(4), m3(), n5(),
          generate({GeneratorKind::boolean, 2, 0})};
}

}  // namespace

TEST(Classify, TrivialAndFullSets) {
  for (auto& [name, space] : corpus::build()) {
    EXPECT_EQ(classify(space, IntervalSet::trivial(space)), all_flags()) << name;
    EXPECT_EQ(classify(space, IntervalSet::full(space)), all_flags()) << name;
  }
}

TEST(Classify, LoneCoverIsNotBasic) {
  IntervalSpace space(chain(2));
  auto f = classify(space, IntervalSet::of(space, {{0, 1}}));
  EXPECT_TRUE(f.abstract);
  EXPECT_FALSE(f.basic);
  EXPECT_FALSE(f.division);
  auto v = basic_violation(space, IntervalSet::of(space, {{0, 1}}));
  ASSERT_TRUE(v.has_value());
}

TEST(Classify, FlagsNest) {
  for (const auto& l : tiny_lattices()) {
    IntervalSpace space(l);
    if (space.size() > 12) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space.size()); ++mask) {
      IntervalSet s(space.size());
      for (std::size_t i = 0; i < space.size(); ++i)
        if (mask >> i & 1U) s.insert(i);
      auto f = classify(space, s);
      EXPECT_TRUE(!f.basic || f.abstract);
      EXPECT_TRUE(!(f.congruence || f.pre_division) || f.basic);
      EXPECT_TRUE(!f.division || (f.pre_division && f.congruence));
      ASSERT_EQ(f.division, f.basic && !division_violation(space, s).has_value());
    }
  }
}

TEST(BasicClosure, Examples) {
  {
    IntervalSpace space(chain(3));
    auto o = IntervalSet::trivial(space);
    EXPECT_EQ(basic_closure(space, o), o);
  }
  {
    IntervalSpace space(chain(2));
    EXPECT_EQ(basic_closure(space, IntervalSet::of(space, {{0, 1}})), IntervalSet::full(space));
  }
  {
    auto l = m3();
    IntervalSpace space(l);
    auto got = basic_closure(space, IntervalSet::of(space, {iv(l, "0", "a")}));
    EXPECT_EQ(got, trivials_and_covers(space));
    EXPECT_EQ(got.count(), 11U);
    EXPECT_EQ(got, oracle::naive_basic_closure(space, IntervalSet::of(space, {iv(l, "0", "a")})));
  }
}

TEST(BasicClosure, RejectsEmptySet) {
  IntervalSpace space(chain(2));
  EXPECT_THROW(basic_closure(space, IntervalSet::empty(space)), Error);
  EXPECT_THROW(dvs(space, IntervalSet::empty(space)), Error);
}

TEST(Dvs, Examples) {
  {
    IntervalSpace space(m3());
    auto o = IntervalSet::trivial(space);
    EXPECT_EQ(dvs(space, o), o);
  }
  {
    auto l = three_chain();
    IntervalSpace space(l);
    auto s = basic_closure(space, IntervalSet::of(space, {iv(l, "0", "m")}));
    auto expected = IntervalSet::trivial(space);
    expected.insert(space.table().index(iv(l, "0", "m")));
    EXPECT_EQ(dvs(space, s), expected);
    EXPECT_EQ(oracle::naive_dvs(space, s), expected);
  }
  {
    auto l = m3();
    IntervalSpace space(l);
    auto s = basic_closure(space, IntervalSet::of(space, {iv(l, "0", "a")}));
    EXPECT_EQ(dvs(space, s), IntervalSet::full(space));
  }
}

TEST(Dvs, ResultIsDivision) {
  for (const auto& l : tiny_lattices()) {
    IntervalSpace space(l);
    for (const auto& b : oracle::sample_basic_sets(space, 50, 7)) {
      EXPECT_TRUE(classify(space, basic_closure(space, b)).basic);
      EXPECT_TRUE(classify(space, dvs(space, b)).division);
    }
  }
}

TEST(Dvs, AgreesWithNaiveSaturation) {
  for (auto& [name, space] : corpus::build()) {
    if (space.lattice().size() > 12) continue;
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
      auto s = IntervalSet::empty(space);
      auto picks = 1 + rng() % 3;
      for (std::size_t p = 0; p < picks; ++p) s.insert(rng() % space.size());
      ASSERT_EQ(basic_closure(space, s), oracle::naive_basic_closure(space, s)) << name;
      ASSERT_EQ(dvs(space, s), oracle::naive_dvs(space, s)) << name;
    }
  }
}

// The naive oracle runs on non-modular lattices too; the fixpoint is the same there.
TEST(Dvs, AgreesWithNaiveSaturationOnPentagon) {
  IntervalSpace space(n5());
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto s = IntervalSet::empty(space);
    s.insert(i);
    EXPECT_EQ(dvs(space, s), oracle::naive_dvs(space, s));
    EXPECT_EQ(basic_closure(space, s), oracle::naive_basic_closure(space, s));
  }
}

TEST(Dvs, SchedulesAgree) {
  for (auto& [name, space] : corpus::build()) {
    for (const auto& b : oracle::sample_basic_sets(space, 10, 3)) {
      ClosureOptions sweep;
      sweep.schedule = Schedule::sweep;
      ASSERT_EQ(dvs(space, b), dvs(space, b, sweep)) << name;
      ASSERT_EQ(basic_closure(space, b), basic_closure(space, b, Schedule::sweep)) << name;
    }
  }
}

// On modular lattices the binary-join rule adds nothing beyond abutting.
TEST(Dvs, JoinRuleIsRedundantOnModularLattices) {
  for (auto& [name, space] : corpus::build()) {
    ClosureOptions no_join;
    no_join.join_rule = false;
    for (const auto& b : oracle::sample_basic_sets(space, 10, 5)) {
      ASSERT_EQ(dvs(space, b), dvs(space, b, no_join)) << name;
    }
  }
}

TEST(Dvs, IsTheLeastDivisionSuperset) {
  for (const auto& l : tiny_lattices()) {
    IntervalSpace space(l);
    if (space.size() > 14) continue;
    auto divisions = enumerate_division_sets(space);
    for (const auto& b : enumerate_basic_sets(space)) {
      ASSERT_EQ(dvs(space, b), oracle::least_division_superset(space, divisions, b));
    }
  }
}

TEST(ForallExists, Examples) {
  IntervalSpace space(chain(2));
  auto o = IntervalSet::trivial(space);
  EXPECT_EQ(forall_exists(space, o), o);
  EXPECT_EQ(forall_exists(space, IntervalSet::full(space)), IntervalSet::full(space));
  auto with_cover = o;
  with_cover.insert(space.table().index(0, 1));
  EXPECT_EQ(forall_exists(space, with_cover), IntervalSet::full(space));
}

TEST(ForallExists, AgreesWithQuantifierOracle) {
  for (auto& [name, space] : corpus::build()) {
    if (space.lattice().size() > 16) continue;
    std::mt19937_64 rng(17);
    for (int k = 0; k < 20; ++k) {
      IntervalSet c(space.size());
      for (std::size_t i = 0; i < space.size(); ++i)
        if (rng() % 3 == 0) c.insert(i);
      ASSERT_EQ(forall_exists(space, c), oracle::naive_forall_exists(space, c)) << name;
    }
  }
}

TEST(ForallExists, Monotone) {
  IntervalSpace space(generate({GeneratorKind::divisor, 24, 0}));
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    IntervalSet a(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
      if (rng() % 4 == 0) a.insert(i);
    auto b = a;
    for (std::size_t i = 0; i < space.size(); ++i)
      if (rng() % 4 == 0) b.insert(i);
    ASSERT_TRUE(forall_exists(space, a).subset_of(forall_exists(space, b)));
  }
}

TEST(SimpleCritical, OnTrivialSet) {
  for (auto& [name, space] : corpus::build()) {
    auto o = IntervalSet::trivial(space);
    auto expected = trivials_and_covers(space);
    ASSERT_EQ(smp(space, o), expected) << name;
    ASSERT_EQ(crt(space, o), expected) << name;
  }
}

TEST(SimpleCritical, ThreeChainFullIntervalIsNotCritical) {
  auto l = three_chain();
  IntervalSpace space(l);
  auto c = crt(space, IntervalSet::trivial(space));
  EXPECT_FALSE(c.contains(space, iv(l, "0", "1")));
  EXPECT_TRUE(c.contains(space, iv(l, "0", "m")));
}

TEST(SimpleCritical, DiamondWithCovers) {
  IntervalSpace space(m3());
  EXPECT_EQ(crt(space, trivials_and_covers(space)), IntervalSet::full(space));
}

TEST(SimpleCritical, RejectNonBasicInput) {
  IntervalSpace space(chain(2));
  auto bad = IntervalSet::of(space, {{0, 1}});
  for (auto op : {&smp, &crt, &gab}) {
    try {
      op(space, bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::not_basic);
    }
  }
}

TEST(SimpleCritical, CriticalWithinSimpleAndBothContainCovers) {
  for (auto& [name, space] : corpus::build()) {
    auto covers = trivials_and_covers(space);
    for (const auto& b : oracle::sample_basic_sets(space, 10, 9)) {
      auto c = crt(space, b);
      auto s = smp(space, b);
      ASSERT_TRUE(c.subset_of(s)) << name;
      ASSERT_TRUE(covers.subset_of(c)) << name;
      ASSERT_EQ(dvs(space, c), dvs(space, s)) << name;
    }
  }
}

TEST(Gab, Examples) {
  for (auto& [name, space] : corpus::build()) {
    ASSERT_EQ(gab(space, IntervalSet::trivial(space)), IntervalSet::full(space)) << name;
    ASSERT_EQ(gab(space, IntervalSet::full(space)), IntervalSet::full(space)) << name;
  }
}

TEST(EnumerateBasicSets, Counts) {
  {
    IntervalSpace space(chain(1));
    auto sets = enumerate_basic_sets(space);
    ASSERT_EQ(sets.size(), 1U);
    EXPECT_EQ(sets[0], IntervalSet::trivial(space));
  }
  {
    IntervalSpace space(chain(2));
    auto sets = enumerate_basic_sets(space);
    ASSERT_EQ(sets.size(), 2U);
  }
  {
    auto l = three_chain();
    IntervalSpace space(l);
    auto sets = enumerate_basic_sets(space);
    auto o = IntervalSet::trivial(space);
    auto lo = o | IntervalSet::of(space, {iv(l, "0", "m")});
    auto hi = o | IntervalSet::of(space, {iv(l, "m", "1")});
    std::vector<IntervalSet> expected{o, lo, hi, lo | hi, IntervalSet::full(space)};
    ASSERT_EQ(sets.size(), 5U);
    for (const auto& e : expected) EXPECT_NE(std::find(sets.begin(), sets.end(), e), sets.end());
  }
}

TEST(EnumerateBasicSets, TooLarge) {
  IntervalSpace space(generate({GeneratorKind::boolean, 3, 0}));
  try {
    enumerate_basic_sets(space);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::too_large);
  }
}

// Basic sets form a frame and division sets a closure system: check the
// finite instances of those lattice operations.
TEST(Frames, BasicAndDivisionSetsAreClosedUnderTheRightOperations) {
  for (const auto& l : tiny_lattices()) {
    IntervalSpace space(l);
    if (space.size() > 12) continue;
    auto basics = enumerate_basic_sets(space);
    auto divisions = enumerate_division_sets(space);
    for (const auto& a : basics)
      for (const auto& b : basics) {
        ASSERT_TRUE(is_basic(space, a & b));
        ASSERT_TRUE(is_basic(space, a | b));
        for (const auto& c : basics) ASSERT_EQ(a & (b | c), (a & b) | (a & c));
      }
    for (const auto& a : divisions)
      for (const auto& b : divisions) ASSERT_TRUE(classify(space, a & b).division);
  }
}
