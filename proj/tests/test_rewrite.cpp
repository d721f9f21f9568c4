#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "aalt/codec.hpp"
#include "aalt/generate.hpp"
#include "aalt/rewrite.hpp"
#include "oracles.hpp"

using namespace aalt;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(AALT_SOURCE_DIR) + "/fixtures/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Independent necessary condition for splitting: the skein bracket of a
// split diagram is a multiple of -A^2 - A^-2, equivalently of A^4 + 1.
bool skein_has_loop_factor(const Diagram& d) {
  LaurentPolynomial p = testing_oracle::skein_bracket(pd_rows(d), d.circle_count());
  while (!p.is_zero()) {
    int top = p.max_exponent();
    auto c = p.coefficient(top);
    if (top - 4 < p.min_exponent()) return false;
    p = p + LaurentPolynomial::monomial(-c, top) + LaurentPolynomial::monomial(-c, top - 4);
  }
  return true;
}

// Sum of crossing signs between distinct components, by following rows.
int total_linking(const Diagram& d) {
  int twice = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    int a = d.strand_of(map::position(c, 0)), b = d.strand_of(map::position(c, 1));
    if (a != b) twice += d.sign(c);
  }
  return twice / 2;
}

}  // namespace

TEST(Decide, AlternatingNeedsNoMoves) {
  auto dec = decide_splittable(parse_pd(fixture("hopf.pd")));
  EXPECT_EQ(dec.verdict.kind, Verdict::NonSplittable);
  EXPECT_EQ(dec.verdict.certificate, Certificate::ConnectedAlternating);
  EXPECT_EQ(dec.trace.moves(), 0);
}

TEST(Decide, ChangedHopfSplits) {
  auto dec = decide_splittable(parse_pd(fixture("changed_hopf.pd")));
  EXPECT_EQ(dec.verdict.kind, Verdict::Splittable);
  ASSERT_TRUE(dec.verdict.exhibited.has_value());
  EXPECT_EQ(dec.verdict.exhibited->crossing_count(), 0);
  EXPECT_EQ(dec.verdict.exhibited->circle_count(), 2);
  EXPECT_EQ(dec.verdict.pieces.size(), 2u);
  EXPECT_EQ(dec.trace.moves(), 1);
}

TEST(Decide, DiagramIBecomesHopf) {
  Diagram d = parse_pd(fixture("diagram_I.pd"));
  EXPECT_EQ(is_reduced(d).kind, ReducednessVerdict::Kind::MatchesDiagramI);
  Diagram e = reducing_move_I(d);
  EXPECT_EQ(e.crossing_count(), 2);
  EXPECT_TRUE(isomorphic_up_to_mirror(e, parse_pd(fixture("hopf.pd"))));
  auto dec = decide_splittable(d);
  EXPECT_EQ(dec.verdict.kind, Verdict::NonSplittable);
  EXPECT_EQ(dec.verdict.certificate, Certificate::ConnectedAlternating);
  EXPECT_THROW(reducing_move_II(d), NoMatch);
}

TEST(Decide, DiagramIIReduces) {
  for (const char* name : {"diagram_II.pd", "diagram_II_small.pd"}) {
    Diagram d = parse_pd(fixture(name));
    EXPECT_EQ(is_reduced(d).kind, ReducednessVerdict::Kind::MatchesDiagramII) << name;
    Diagram e = reducing_move_II(d);
    EXPECT_LT(e.crossing_count(), d.crossing_count());
    EXPECT_EQ(e.shadow_components(), 1);
    EXPECT_EQ(kauffman_bracket(e), kauffman_bracket(d));
    EXPECT_EQ(alternation_report(e).dealternators.size(), 1u);
    EXPECT_THROW(reducing_move_I(d), NoMatch);
  }
}

TEST(Decide, ReducedIsCertified) {
  Diagram d = parse_pd(fixture("reduced_prime.pd"));
  EXPECT_EQ(is_reduced(d).kind, ReducednessVerdict::Kind::Reduced);
  EXPECT_THROW(reducing_move_I(d), NoMatch);
  EXPECT_THROW(reducing_move_II(d), NoMatch);
  auto dec = decide_splittable(d);
  EXPECT_EQ(dec.verdict.kind, Verdict::NonSplittable);
  EXPECT_EQ(dec.verdict.certificate, Certificate::ReducedAlmostAlternating);
  EXPECT_EQ(dec.trace.moves(), 0);
  EXPECT_EQ(std::abs(total_linking(d)), 2);
}

TEST(Decide, Preconditions) {
  Diagram t = parse_pd(fixture("trefoil.pd"));
  EXPECT_THROW(decide_splittable(disjoint_union(t, t)), Disconnected);
  // Two far-apart crossing changes on an 8-crossing alternating diagram.
  std::mt19937 rng(5);
  bool tested = false;
  for (int i = 0; i < 50 && !tested; ++i) {
    Diagram a = random_alternating(8, rng);
    Diagram b = crossing_change(crossing_change(a, 0), 4);
    if (!alternation_report(b).is_alternating && !alternation_report(b).is_almost_alternating) {
      EXPECT_THROW(decide_splittable(b), NotAlmostAlternating);
      tested = true;
    }
  }
  EXPECT_TRUE(tested);
}

TEST(Decide, TraceChainsAndSerializes) {
  Diagram d = parse_pd(fixture("diagram_II.pd"));
  auto dec = decide_splittable(d);
  ASSERT_GE(dec.trace.steps.size(), 2u);
  EXPECT_EQ(dec.trace.steps.front().before_hash, diagram_hash(d));
  for (std::size_t i = 0; i + 1 < dec.trace.steps.size(); ++i)
    if (dec.trace.steps[i].move != "factorize")
      EXPECT_EQ(dec.trace.steps[i].after_hash, dec.trace.steps[i + 1].before_hash);
  for (const auto& s : dec.trace.steps)
    if (s.move == "I" || s.move == "II") EXPECT_GT(s.crossings_removed, 0);
  EXPECT_EQ(dec.trace.moves(), static_cast<int>(dec.trace.steps.size()));
  std::istringstream lines(trace_jsonl(dec.trace));
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["step"], n++);
    EXPECT_TRUE(j.contains("justification"));
  }
  EXPECT_EQ(n, static_cast<int>(dec.trace.steps.size()));
}

TEST(Decide, NonPrimeFactorizes) {
  Diagram t = parse_pd(fixture("trefoil.pd"));
  Diagram ch = parse_pd(fixture("changed_hopf.pd"));
  Diagram sum = connected_sum(t, ch);
  auto dec = decide_splittable(sum);
  EXPECT_EQ(dec.trace.steps.front().move, "factorize");
  // Trefoil and a separate unknot.
  EXPECT_EQ(dec.verdict.kind, Verdict::Splittable);
  EXPECT_EQ(dec.verdict.certificate, Certificate::SplitFactor);
  ASSERT_EQ(dec.verdict.pieces.size(), 2u);
  EXPECT_EQ(dec.verdict.exhibited->shadow_components(), 2);
  std::vector<int> sizes{dec.verdict.pieces[0].crossing_count(), dec.verdict.pieces[1].crossing_count()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{0, 3}));
  EXPECT_TRUE(skein_has_loop_factor(sum));

  // Hopf summed with the changed Hopf: Hopf link plus an unknot.
  Diagram hopf = parse_pd(fixture("hopf.pd"));
  auto dec2 = decide_splittable(connected_sum(hopf, ch));
  EXPECT_EQ(dec2.verdict.kind, Verdict::PartialSplit);
}

// Every almost alternating diagram up to six crossings: the verdict agrees
// with the independent obstructions, and moves only shrink the diagram.
TEST(Decide, CorpusAgreesWithObstructions) {
  int split = 0, nonsplit = 0;
  for (const Diagram& d : almost_alternating_corpus(6)) {
    auto dec = decide_splittable(d);
    for (const auto& s : dec.trace.steps)
      if (s.move == "I" || s.move == "II") ASSERT_GT(s.crossings_removed, 0) << emit_pd(d);
    if (dec.verdict.kind == Verdict::NonSplittable) {
      ++nonsplit;
    } else {
      ++split;
      ASSERT_TRUE(skein_has_loop_factor(d)) << emit_pd(d);
      if (d.link_components() == 2) ASSERT_EQ(total_linking(d), 0) << emit_pd(d);
    }
    if (!skein_has_loop_factor(d)) ASSERT_EQ(dec.verdict.kind, Verdict::NonSplittable) << emit_pd(d);
  }
  EXPECT_GT(split, 0);
  EXPECT_GT(nonsplit, 0);
}

TEST(Trivial, NeedsThreeComponents) {
  EXPECT_THROW(decide_trivial_multicomponent(parse_pd(fixture("changed_hopf.pd"))), TooFewComponents);
  EXPECT_TRUE(decide_trivial_multicomponent(parse_pd(fixture("reduced_three_component.pd"))));
}

TEST(Trivial, CorpusNeverReachesTheUnlink) {
  int tested = 0;
  for (const Diagram& d : almost_alternating_corpus(6)) {
    if (d.link_components() < 3 || d.shadow_components() != 1) continue;
    EXPECT_TRUE(decide_trivial_multicomponent(d)) << emit_pd(d);
    ++tested;
  }
  EXPECT_GT(tested, 0);
}

TEST(Rules, FileMatchesEmbedded) {
  EXPECT_EQ(load_rules(std::string(AALT_SOURCE_DIR) + "/rules/default_rules.json"), default_rules());
}

TEST(Rules, RejectsMalformed) {
  EXPECT_THROW(parse_rules_text(R"({"rules":[{"name":"x","verdict":"III","pattern":[[1,1,0,0]],"moves":[]}]})"),
               ParseError);
  EXPECT_THROW(parse_rules_text(R"({"rules":[{"name":"x","verdict":"I","pattern":[[1,2,0,0]],"moves":[]}]})"),
               ParseError);
  EXPECT_THROW(parse_rules_text("not json"), ParseError);
}

TEST(Rules, EmptyRuleSetCallsEverythingReduced) {
  RuleSet none;
  Diagram d = parse_pd(fixture("diagram_I.pd"));
  EXPECT_EQ(is_reduced(d, none).kind, ReducednessVerdict::Kind::Reduced);
}
