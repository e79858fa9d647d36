#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mbfcount/mbf_set.hpp"
#include "mbfcount/permutation.hpp"

using namespace mbfcount;

TEST(CycleType, ParseAndRender) {
  const CycleType t = CycleType::parse("3+2", 7);
  EXPECT_EQ(t.lengths(), (std::vector<int>{3, 2, 1, 1}));
  EXPECT_EQ(t.notation(), "(12)(345)");
  EXPECT_EQ(t.text(), "2+3");
  EXPECT_EQ(t.total_length(), 5);
  EXPECT_EQ(CycleType::parse("id", 4), CycleType::identity(4));
  EXPECT_EQ(CycleType::parse("1", 4).notation(), "(1)");
  EXPECT_THROW(CycleType::parse("5+4", 8), InputError);
  EXPECT_THROW(CycleType::parse("2+", 4), InputError);
  EXPECT_THROW(CycleType::parse("0", 4), InputError);
}

TEST(CycleType, Predicates) {
  EXPECT_TRUE(CycleType::parse("2+2+2", 8).is_involution());
  EXPECT_FALSE(CycleType::parse("2+3", 8).is_involution());
  EXPECT_TRUE(CycleType::parse("2+3", 8).has_two_cycle());
  EXPECT_EQ(CycleType::parse("2+3", 8).without_two_cycle(), CycleType::parse("3", 6));
  EXPECT_THROW(CycleType::parse("3", 6).without_two_cycle(), PreconditionError);
}

TEST(Partitions, Counts) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions(n).size(), p[static_cast<std::size_t>(n)]) << n;
  EXPECT_THROW(partitions(9), InputError);
}

TEST(Partitions, TableOrder) {
  std::vector<std::string> names;
  for (const CycleType& t : partitions_in_table_order(7)) names.push_back(t.notation());
  EXPECT_EQ(names, (std::vector<std::string>{"(1)", "(12)", "(123)", "(1234)", "(12345)", "(123456)", "(1234567)",
                                             "(12)(34)", "(12)(345)", "(12)(3456)", "(12)(34567)", "(123)(456)",
                                             "(123)(4567)", "(12)(34)(56)", "(12)(34)(567)"}));
}

TEST(Mu, ExamplesAndSums) {
  EXPECT_EQ(mu(CycleType::parse("3", 7)), Count{70});
  EXPECT_EQ(mu(CycleType::parse("2+2+2+2", 8)), Count{105});
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(mu(CycleType::identity(n)), Count{1});
    Count sum = 0;
    for (const CycleType& t : partitions(n)) sum += mu(t);
    EXPECT_EQ(sum, factorial(n)) << n;
  }
}

TEST(Mu, MatchesClassSizesByEnumeration) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::map<std::string, Count> seen;
    do {
      ++seen[VarPerm(img).cycle_type().text()];
    } while (std::next_permutation(img.begin(), img.end()));
    for (const CycleType& t : partitions(n)) EXPECT_EQ(seen[t.text()], mu(t)) << t.notation();
  }
}

TEST(VarPerm, CanonicalRepresentatives) {
  EXPECT_EQ(canonical_perm(CycleType::parse("3", 3)).image(), (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(canonical_perm(CycleType::identity(4)), VarPerm::identity(4));
  EXPECT_EQ(canonical_perm(CycleType::parse("2+2", 4)).image(), (std::vector<int>{1, 0, 3, 2}));
  EXPECT_EQ(canonical_perm(CycleType::parse("3+2", 7)).image(), (std::vector<int>{1, 0, 3, 4, 2, 5, 6}));
  for (int n = 0; n <= 8; ++n) {
    for (const CycleType& t : partitions(n)) EXPECT_EQ(canonical_perm(t).cycle_type(), t);
  }
}

TEST(VarPerm, RejectsNonPermutations) {
  EXPECT_THROW(VarPerm({0, 0}), InputError);
  EXPECT_THROW(VarPerm({0, 2}), InputError);
}

TEST(VarPerm, GroupLaws) {
  const VarPerm p = canonical_perm(CycleType::parse("2+3", 6));
  EXPECT_EQ(compose(p, p.inverse()), VarPerm::identity(6));
  VarPerm power = p;
  for (int k = 1; k < 6; ++k) power = compose(power, p);
  EXPECT_EQ(power, VarPerm::identity(6));  // order lcm(2,3) = 6
}

TEST(Lift, CycleStrings) {
  EXPECT_EQ(lift(canonical_perm(CycleType::parse("3", 3))).to_cycle_string(), "(0)(1 2 4)(3 6 5)(7)");
  EXPECT_EQ(lift(canonical_perm(CycleType::parse("2+2", 4))).to_cycle_string(),
            "(0)(1 2)(3)(4 8)(5 10)(6 9)(7 11)(12)(13 14)(15)");
  EXPECT_EQ(lift(VarPerm::identity(2)).to_cycle_string(), "(0)(1)(2)(3)");
}

TEST(Lift, IsAHomomorphismPreservingCardinality) {
  const VarPerm p = canonical_perm(CycleType::parse("2+3", 5));
  const VarPerm q = canonical_perm(CycleType::parse("4", 5));
  EXPECT_EQ(lift(compose(p, q)), compose(lift(p), lift(q)));
  const BitPerm bp = lift(p);
  for (std::size_t s = 0; s < bp.size(); ++s) {
    EXPECT_EQ(std::popcount(s), std::popcount(static_cast<std::size_t>(bp(s))));
  }
}

TEST(Orbits, Examples) {
  const auto o3 = orbits(lift(canonical_perm(CycleType::parse("3", 3))));
  EXPECT_EQ(o3, (std::vector<Orbit>{{0}, {1, 2, 4}, {3, 5, 6}, {7}}));
  EXPECT_EQ(orbits(lift(VarPerm::identity(2))).size(), 4u);
  std::vector<int> minima;
  for (const Orbit& o : orbits(lift(canonical_perm(CycleType::parse("2+2", 4))))) minima.push_back(o.front());
  EXPECT_EQ(minima, (std::vector<int>{0, 1, 3, 4, 5, 6, 7, 12, 13, 15}));
}

TEST(Apply, FixedPointsAndInverses) {
  const BitPerm bp = lift(canonical_perm(CycleType::parse("3", 3)));
  EXPECT_NE(apply(bp, Mbf::from_u64(3, 15)), Mbf::from_u64(3, 15));
  EXPECT_FALSE(is_fixed(Mbf::from_u64(3, 15), bp));
  for (std::uint64_t f : {0u, 1u, 23u, 127u, 255u}) EXPECT_TRUE(is_fixed(Mbf::from_u64(3, f), bp)) << f;
  for (const Mbf& f : enumerate_dn(3)) {
    EXPECT_EQ(apply(bp, apply(bp.inverse(), f)), f);
    EXPECT_EQ(apply(lift(VarPerm::identity(3)), f), f);
    EXPECT_TRUE(is_fixed(f, lift(VarPerm::identity(3))));
    EXPECT_TRUE(is_monotone(apply(bp, f)));
  }
}

TEST(Apply, FixedIffConstantOnOrbits) {
  const BitPerm bp = lift(canonical_perm(CycleType::parse("2+2", 4)));
  const auto os = orbits(bp);
  for (const Mbf& f : enumerate_dn(4)) {
    bool constant = true;
    for (const Orbit& o : os) {
      for (int s : o) constant = constant && f.bit(static_cast<std::size_t>(s)) == f.bit(static_cast<std::size_t>(o.front()));
    }
    EXPECT_EQ(is_fixed(f, bp), constant);
  }
}
