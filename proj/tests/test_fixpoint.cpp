#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "mbfcount/fixpoint.hpp"
#include "mbfcount/oracle.hpp"

using namespace mbfcount;

namespace {

CycleType type(const char* text, int n) { return CycleType::parse(text, n); }

std::vector<std::uint64_t> renderings(const MbfSet& s) {
  std::vector<std::uint64_t> out;
  for (const Mbf& f : s) out.push_back(f.to_u64());
  return out;
}

// Fix set of the type in D_n obtained by filtering, independent of the fast paths.
MbfSet filtered_fix_set(const CycleType& t) {
  const BitPerm bp = lift(canonical_perm(t));
  std::vector<Mbf> out;
  for (const Mbf& f : enumerate_dn(t.vars())) {
    if (is_fixed(f, bp)) out.push_back(f);
  }
  return MbfSet(t.vars(), std::move(out));
}

}  // namespace

TEST(Alg1, FixSets) {
  EXPECT_EQ(renderings(alg1_fixset(type("3", 3)).elements), (std::vector<std::uint64_t>{0, 1, 23, 127, 255}));
  EXPECT_EQ(alg1_fixset(type("2+2", 4)).size(), 28u);
  EXPECT_EQ(alg1_fixset(CycleType::identity(2)).elements, enumerate_dn(2));
}

TEST(Alg1, MatchesFilteringForEveryTypeUpToFive) {
  for (int n = 0; n <= 5; ++n) {
    for (const CycleType& t : partitions(n)) EXPECT_EQ(alg1_fixset(t).elements, filtered_fix_set(t)) << t.notation();
  }
}

TEST(Alg2, Extension) {
  const FixSet chain = alg1_fixset(type("3", 3));
  const FixSet next = alg2_extend(chain);
  EXPECT_EQ(next.size(), 15u);  // a 5-chain has 15 comparable pairs
  EXPECT_EQ(next.elements, filtered_fix_set(type("3", 4)));

  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(alg2_extend(FixSet{CycleType::identity(n), enumerate_dn(n)}).elements, enumerate_dn(n + 1));
  }

  const FixSet f4 = alg1_fixset(type("2+2", 4));
  EXPECT_EQ(static_cast<Count>(alg2_extend(f4).size()), oracle::oracle_phi(canonical_perm(type("2+2", 5))));
}

TEST(Alg2, PairCounts) {
  const FixSet seven = alg1_fixset(type("7", 7));
  EXPECT_EQ(seven.size(), 101u);
  EXPECT_EQ(to_decimal(alg2_count_pairs(seven)), "3858");
  const FixSet two_five = alg1_fixset(type("2+5", 7));
  EXPECT_EQ(two_five.size(), 264u);
  EXPECT_EQ(to_decimal(alg2_count_pairs(two_five)), "21216");
  const FixSet single{CycleType::identity(0), MbfSet(0, {Mbf::zeros(0)})};
  EXPECT_EQ(alg2_count_pairs(single), Count{1});
}

TEST(Alg2, PairCountEqualsExtensionSize) {
  for (const char* t : {"2", "3", "2+2", "4"}) {
    const FixSet fs = fix_set(type(t, 5));
    EXPECT_EQ(alg2_count_pairs(fs), static_cast<Count>(alg2_extend(fs).size())) << t;
  }
}

TEST(Alg3, SmallCases) {
  const MbfSet d2 = enumerate_dn(2);
  const FixSet all{CycleType::identity(2), d2};
  EXPECT_EQ(alg3_count(CycleType::identity(2), all, d2), Count{50});
  EXPECT_EQ(oracle::oracle_phi(canonical_perm(type("2", 4))), Count{50});

  const FixSet swapped = alg1_fixset(type("2", 2));
  EXPECT_EQ(alg3_count(type("2", 2), swapped, d2), Count{28});
  EXPECT_THROW(alg3_count(type("2", 3), swapped, d2), InputError);
}

TEST(Alg3, NonInvolutionInnerUsesSquareFixedBase) {
  // inner (123) has inner^2 = (132): base must be Fix(inner^2, D_3).
  const CycleType inner = type("3", 3);
  const FixSet F = alg1_fixset(inner);
  const MbfSet base = filtered_fix_set(inner);  // Fix((132)) = Fix((123))
  EXPECT_EQ(alg3_count(inner, F, base), oracle::oracle_phi(canonical_perm(type("2+3", 5))));
}

TEST(Alg3, SplitMatchesOracleForEveryTypeWithATwoCycle) {
  for (int n = 2; n <= 5; ++n) {
    for (const CycleType& t : partitions(n)) {
      if (!t.has_two_cycle()) continue;
      EXPECT_EQ(phi(t, n, StrategyChoice::alg3).phi, oracle::oracle_phi(canonical_perm(t))) << t.notation();
    }
  }
}

TEST(Quadrant, DedekindNumbers) {
  EXPECT_EQ(quadrant_count_two_fixed(FixSet{CycleType::identity(2), enumerate_dn(2)}), Count{168});
  EXPECT_EQ(to_decimal(quadrant_count_two_fixed(FixSet{CycleType::identity(5), enumerate_dn(5)})), "2414682040998");
  const FixSet chain = alg1_fixset(type("3", 3));
  EXPECT_EQ(quadrant_count_two_fixed(chain), oracle::oracle_phi(canonical_perm(type("3", 5))));
}

TEST(Phi, Examples) {
  const std::vector<Count> d{2, 3, 6, 20, 168, 7581, 7828354, 2414682040998ULL};
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(phi(CycleType::identity(n), n).phi, d[static_cast<std::size_t>(n)]) << n;
  EXPECT_EQ(phi(type("3", 7), 7).phi, Count{2068224});
  EXPECT_EQ(phi(type("2", 3), 3).phi, Count{10});
  EXPECT_EQ(phi(type("3", 3), 3).phi, Count{5});
}

TEST(Phi, EveryApplicableStrategyAgreesWithTheOracle) {
  for (int n = 0; n <= 5; ++n) {
    for (const CycleType& t : partitions(n)) {
      const Count expected = oracle::oracle_phi(canonical_perm(t));
      for (Strategy s : applicable_strategies(t)) {
        EXPECT_EQ(detail::run_strategy(s, t, {}, {}), expected) << t.notation() << " via " << to_string(s);
      }
    }
  }
}

TEST(Phi, StrategyNamesRoundTrip) {
  EXPECT_EQ(parse_strategy("auto"), StrategyChoice::automatic);
  EXPECT_EQ(parse_strategy("alg2-pairs"), StrategyChoice::alg2_pairs);
  EXPECT_EQ(parse_strategy("quadrant"), StrategyChoice::quadrant);
  EXPECT_THROW(parse_strategy("fast"), InputError);
}

TEST(Phi, AutomaticPlanOrder) {
  EXPECT_EQ(auto_plan(type("8", 8)), std::vector<Strategy>{Strategy::alg1_count});
  EXPECT_EQ(auto_plan(type("7", 8)), std::vector<Strategy>{Strategy::alg2_pairs});
  EXPECT_EQ(auto_plan(type("2", 8)), (std::vector<Strategy>{Strategy::alg3_split, Strategy::quadrant_two_fixed}));
  EXPECT_EQ(auto_plan(type("3", 8)), std::vector<Strategy>{Strategy::quadrant_two_fixed});
}

TEST(Phi, ForcedStrategyMustApply) {
  EXPECT_THROW(phi(type("3", 3), 3, StrategyChoice::alg3), PreconditionError);
  EXPECT_THROW(phi(type("3", 3), 3, StrategyChoice::quadrant), PreconditionError);
  EXPECT_THROW(phi(type("3", 3), 2), InputError);
  EXPECT_THROW(phi(type("3", 3), 9), InputError);
}

TEST(Phi, BudgetExhaustionNamesEveryStrategy) {
  const Budgets tiny{1000, 100, 100};
  try {
    phi(type("2", 8), 8, StrategyChoice::automatic, tiny);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("alg3-split"), std::string::npos) << what;
    EXPECT_NE(what.find("quadrant-two-fixed"), std::string::npos) << what;
  }
}

TEST(Phi, FallsThroughToTheNextStrategy) {
  // alg3 needs all of D_6 as its base; the quadrant only needs Fix((12), D_6).
  Budgets b = budgets_for_tier(3);
  b.family_elements = 1'000'000;
  const PhiResult r = phi(type("2+2", 8), 8, StrategyChoice::automatic, b);
  EXPECT_EQ(r.strategy, Strategy::quadrant_two_fixed);
  EXPECT_EQ(to_decimal(r.phi), "182755441509724");
}

TEST(Phi, ThreadCountDoesNotChangeResults) {
  for (unsigned threads : {1u, 2u, 5u}) {
    Exec exec;
    exec.threads = threads;
    EXPECT_EQ(to_decimal(phi(CycleType::identity(7), 7, StrategyChoice::automatic, {}, exec).phi), "2414682040998");
    EXPECT_EQ(phi(type("2+2+2", 7), 7, StrategyChoice::automatic, {}, exec).phi, Count{12015832});
  }
}

TEST(Phi, FourTwoCyclesAgreeAcrossRoutes) {
  const CycleType t = type("2+2+2+2", 8);
  EXPECT_EQ(to_decimal(phi(t, 8, StrategyChoice::alg1_count).phi), "2038188253420");
  EXPECT_EQ(to_decimal(phi(t, 8, StrategyChoice::alg3).phi), "2038188253420");
}

TEST(TierBudgets, ArePositiveAndIncreasing) {
  EXPECT_THROW(budgets_for_tier(0), InputError);
  for (int tier = 1; tier < 3; ++tier) {
    const Budgets lo = budgets_for_tier(tier), hi = budgets_for_tier(tier + 1);
    EXPECT_GT(lo.pair_comparisons, 0u);
    EXPECT_LT(lo.pair_comparisons, hi.pair_comparisons);
    EXPECT_LT(lo.downsets, hi.downsets);
    EXPECT_LT(lo.family_elements, hi.family_elements);
  }
}
