#include <gtest/gtest.h>

#include <random>

#include "aalt/canonical.hpp"
#include "aalt/codec.hpp"
#include "aalt/generate.hpp"
#include "aalt/oracle.hpp"
#include "aalt/planemap.hpp"
#include "aalt/rules.hpp"
#include "oracles.hpp"

using namespace aalt;

namespace {

const char* kTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
const char* kHopf = "X(4,1,3,2) X(2,3,1,4)";

std::multiset<CanonicalForm> forms(const std::vector<Diagram>& ds) {
  std::multiset<CanonicalForm> out;
  for (const auto& d : ds) out.insert(canonical_form(d));
  return out;
}

}  // namespace

TEST(PlaneMaps, RootedCounts) {
  // 2 * 3^n (2n)! / (n! (n+2)!) rooted 4-regular planar maps.
  const long long expect[] = {2, 9, 54, 378, 2916, 24057};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(count_rooted_maps(n), expect[n - 1]) << n;
}

TEST(PlaneMaps, UnrootedCountsAndBurnside) {
  const std::size_t expect[] = {1, 3, 7, 33, 156, 1070};
  for (int n = 1; n <= 6; ++n) {
    auto maps = enumerate_plane_maps(n);
    EXPECT_EQ(maps.size(), expect[n - 1]) << n;
    // Orbit-stabilizer: rooted maps = sum over classes of 4n / |Aut|.
    long long rooted = 0;
    for (const auto& m : maps) {
      auto zero = [](int) { return 0; };
      auto base = map::bfs_code(m, 0, zero, zero).code;
      int autos = 0;
      for (int s = 0; s < 4 * n; ++s) autos += map::bfs_code(m, s, zero, zero).code == base;
      ASSERT_EQ((4 * n) % autos, 0);
      rooted += 4 * n / autos;
      ASSERT_TRUE(map::is_spherical(m));
    }
    EXPECT_EQ(rooted, count_rooted_maps(n));
  }
}

TEST(PlaneMaps, RandomMapsAreValid) {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto m = random_plane_map(1 + t % 12, rng);
    ASSERT_TRUE(map::is_valid_involution(m));
    ASSERT_TRUE(map::is_spherical(m));
  }
  EXPECT_THROW(random_plane_map(0, rng), InvalidGraph);
}

TEST(Alternation, Examples) {
  Diagram t = parse_pd(kTrefoil);
  auto r = alternation_report(t);
  EXPECT_TRUE(r.is_alternating);
  EXPECT_TRUE(r.dealternators.empty());
  EXPECT_FALSE(hopf_degeneracy_check(t));
  for (int c = 0; c < 3; ++c) {
    auto s = alternation_report(crossing_change(t, c));
    EXPECT_TRUE(s.is_almost_alternating);
    EXPECT_EQ(s.dealternators, std::vector<CrossingId>{c});
  }
  Diagram ch = crossing_change(parse_pd(kHopf), 0);
  auto h = alternation_report(ch);
  EXPECT_TRUE(h.is_almost_alternating);
  EXPECT_EQ(h.dealternators.size(), 2u);
  EXPECT_TRUE(hopf_degeneracy_check(ch));
  EXPECT_TRUE(hopf_degeneracy_check(mirror(ch)));
  EXPECT_THROW(alternation_report(disjoint_union(t, t)), Disconnected);
}

TEST(Alternation, FaceCriterionMatchesStrandParityForKnots) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Diagram d = random_diagram(1 + trial % 7, rng);
    if (d.link_components() != 1) continue;
    // Walk the knot: over and under must strictly alternate.
    bool alternates = true;
    int s = 0;
    while (!d.incoming(s)) ++s;
    int p = s;
    bool prev = d.is_over(p);
    for (int p2 = d.mate(map::opp(p)); p2 != s; p2 = d.mate(map::opp(p2))) {
      if (d.is_over(p2) == prev) alternates = false;
      prev = d.is_over(p2);
    }
    if (d.is_over(s) == prev) alternates = false;
    ASSERT_EQ(is_alternating(d), alternates) << raw_pd(d);
  }
}

TEST(Alternation, DealternatorRoundTrip) {
  for (const Diagram& d : almost_alternating_corpus(5))
    for (CrossingId c : dealternators(d)) ASSERT_TRUE(is_alternating(crossing_change(d, c)));
}

TEST(Prime, Examples) {
  Diagram t = parse_pd(kTrefoil);
  EXPECT_TRUE(is_prime(t));
  Diagram granny = connected_sum(t, t);
  EXPECT_EQ(granny.crossing_count(), 6);
  EXPECT_FALSE(is_prime(granny));
  auto factors = connected_sum_factors(granny);
  ASSERT_EQ(factors.size(), 2u);
  for (const auto& f : factors) EXPECT_TRUE(isomorphic(f, t));
  EXPECT_TRUE(is_prime(parse_pd("X(1,1,2,2)")));
  EXPECT_THROW(is_prime(parse_pd("O 1")), NoCrossings);
  EXPECT_THROW(connected_sum_factors(parse_pd("O 1")), NoCrossings);
}

TEST(Prime, FactorsRecombine) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    Diagram a = random_diagram(1 + trial % 4, rng), b = random_diagram(1 + trial % 3, rng),
            c = random_diagram(2, rng);
    Diagram sum = connected_sum(connected_sum(a, b), c);
    auto factors = connected_sum_factors(sum);
    Diagram again = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) again = connected_sum(again, factors[i]);
    EXPECT_EQ(forms(connected_sum_factors(again)), forms(factors));
    int total = 0;
    for (const auto& f : factors) {
      EXPECT_TRUE(is_prime(f));
      total += f.crossing_count();
    }
    EXPECT_EQ(total, sum.crossing_count());
  }
}

TEST(Prime, AgreesWithBruteForce) {
  int nonprime = 0;
  for (const Diagram& d : alternating_corpus(6)) {
    bool p = is_prime(d);
    ASSERT_EQ(p, testing_oracle::pd_is_prime(pd_rows(d))) << emit_pd(d);
    nonprime += !p;
  }
  EXPECT_GT(nonprime, 0);
  std::mt19937 rng(21);
  for (int t = 0; t < 400; ++t) {
    Diagram d = random_diagram(7 + t % 4, rng);
    ASSERT_EQ(is_prime(d), testing_oracle::pd_is_prime(pd_rows(d))) << emit_pd(d);
  }
}

TEST(Reduced, Preconditions) {
  EXPECT_THROW(is_reduced(parse_pd(kTrefoil)), NotAlmostAlternating);
  Diagram t = parse_pd(kTrefoil);
  EXPECT_THROW(is_reduced(disjoint_union(t, t)), Disconnected);
  Diagram granny = crossing_change(connected_sum(t, t), 0);
  EXPECT_THROW(is_reduced(granny), NotPrime);
}

TEST(Reduced, MovesShrinkAndKeepBracket) {
  for (const Diagram& d : almost_alternating_corpus(6)) {
    if (!is_prime(d) || dealternators(d).size() != 1) continue;
    auto v = is_reduced(d);
    if (v.kind == ReducednessVerdict::Kind::Reduced) continue;
    Diagram e = apply_rule(d, default_rules(), *v.site);
    ASSERT_LT(e.crossing_count(), d.crossing_count());
    ASSERT_EQ(kauffman_bracket(e), kauffman_bracket(d)) << emit_pd(d);
  }
}
