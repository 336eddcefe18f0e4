#include <gtest/gtest.h>

#include <algorithm>

#include "quartic/degree.hpp"
#include "quartic/errors.hpp"
#include "quartic/untwist.hpp"
#include "quartic/words.hpp"
#include "support.hpp"

using namespace quartic;
using quartic::testing::make_config;

namespace {

QuarticIncidence one_node() { return make_config({{"P1", false}}, {{"L", {"P1"}, false}}); }
QuarticIncidence two_node() { return make_config({{"P1", false}, {"P2", false}}, {{"L", {"P1", "P2"}, false}}); }

DegreeVector vec(long mu, std::map<std::string, long> nu) {
  DegreeVector v;
  v.mu = mu;
  for (const auto& [k, x] : nu) v.nu[k] = x;
  return v;
}

CenterSet centers(std::vector<std::string> points, std::vector<std::string> lines) {
  CenterSet c;
  c.points = std::move(points);
  c.lines = std::move(lines);
  return c;
}

}  // namespace

TEST(DetectCenters, StrictThreshold) {
  const auto c = detect_centers(two_node(), vec(13, {{"P1", 14}, {"P2", 14}, {"L", 8}}));
  EXPECT_EQ(c.points, (std::vector<std::string>{"P1", "P2"}));
  EXPECT_TRUE(c.lines.empty());
  EXPECT_TRUE(detect_centers(two_node(), DegreeVector::identity(two_node())).empty());
  const auto l = detect_centers(one_node(), vec(11, {{"P1", 6}, {"L", 12}}));
  EXPECT_TRUE(l.points.empty());
  EXPECT_EQ(l.lines, std::vector<std::string>{"L"});
}

TEST(DetectCenters, UnknownAndEqualCoordinatesAreReportedSeparately) {
  auto v = vec(5, {{"P1", 5}, {"L", 2}});
  const auto c = detect_centers(two_node(), v);
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(c.canonical, std::vector<std::string>{"P1"});
  EXPECT_EQ(c.indeterminate, std::vector<std::string>{"P2"});
}

TEST(Admissibility, RulesFromTheCenterAnalysis) {
  const auto three = make_config({{"P1", false}, {"P2", false}, {"P3", false}, {"E", true}, {"Q", false}},
                                 {{"L", {"P1", "P2"}, false},
                                  {"M", {"P3", "E", "Q"}, true},
                                  {"N", {"P1"}, false},
                                  {"K", {"P2"}, true}});
  EXPECT_TRUE(check_admissible(three, centers({}, {})).ok);
  EXPECT_TRUE(check_admissible(three, centers({"P1", "P2"}, {})).ok);
  EXPECT_EQ(check_admissible(three, centers({"P1", "P2", "P3"}, {})).rule, "three points");
  EXPECT_EQ(check_admissible(three, centers({}, {"L", "N"})).rule, "two lines");
  EXPECT_EQ(check_admissible(three, centers({"E"}, {})).rule, "eckardt point");
  EXPECT_EQ(check_admissible(three, centers({}, {"K"})).rule, "eckardt line");
  EXPECT_EQ(check_admissible(three, centers({"P1", "P3"}, {})).rule, "two points not joined by a marked line");
  EXPECT_EQ(check_admissible(three, centers({"P3", "Q"}, {})).rule, "two points collinear with an eckardt point");
  EXPECT_EQ(check_admissible(three, centers({"P3"}, {"L"})).rule, "line and a point outside it");
  EXPECT_EQ(check_admissible(three, centers({"P1"}, {"N"})).rule, "point and line without exactly one more node");
  EXPECT_TRUE(check_admissible(three, centers({"P1"}, {"L"})).ok);
  EXPECT_EQ(check_admissible(three, centers({"P1", "P2"}, {"L"})).rule, "two points and a line");

  const auto collinear = make_config({{"P1", false}, {"P2", false}, {"E", true}},
                                     {{"L", {"P1", "P2", "E"}, false}, {"M", {"E"}, false}});
  EXPECT_EQ(check_admissible(collinear, centers({"P1", "P2"}, {})).rule, "two points collinear with an eckardt point");
  EXPECT_EQ(check_admissible(collinear, centers({}, {"L"})).rule, "line with three nodes");

  const auto flagged = make_config({{"P1", false}, {"P2", false}, {"P3", false}, {"P4", false}, {"P5", false}},
                                   {{"L", {"P1", "P2"}, true}, {"M", {"P3", "P4", "P5"}, true}});
  EXPECT_EQ(check_admissible(flagged, centers({"P1", "P2"}, {})).rule, "two points on an eckardt line");
  EXPECT_TRUE(check_admissible(flagged, centers({"P3", "P4"}, {})).ok);
}

TEST(UntwistStep, ExamplesReturnToIdentity) {
  auto [g1, v1] = untwist_step(two_node(), vec(13, {{"P1", 14}, {"P2", 14}, {"L", 8}}));
  EXPECT_EQ(g1, Generator(PairGen{"P1", "P2", "L"}));
  EXPECT_EQ(v1, DegreeVector::identity(two_node()));
  auto [g2, v2] = untwist_step(two_node(), vec(3, {{"P1", 4}, {"P2", 1}, {"L", 1}}));
  EXPECT_EQ(g2, Generator(PointGen{"P1"}));
  EXPECT_EQ(v2, DegreeVector::identity(two_node()));
  auto [g3, v3] = untwist_step(one_node(), vec(11, {{"P1", 6}, {"L", 12}}));
  EXPECT_EQ(g3, Generator(LineGen{"L"}));
  EXPECT_EQ(v3, DegreeVector::identity(one_node()));
}

TEST(UntwistStep, PointAndLineUntwistsTheLineFirst) {
  auto [g, v] = untwist_step(two_node(), vec(10, {{"P1", 11}, {"P2", 2}, {"L", 11}}));
  EXPECT_EQ(g, Generator(LineGen{"L"}));
  EXPECT_LT(v.mu, 10);
}

TEST(UntwistStep, ErrorsWithoutCentersOrWhenInadmissible) {
  EXPECT_THROW(untwist_step(two_node(), DegreeVector::identity(two_node())), PreconditionError);
  const auto c = make_config({{"P1", false}, {"P2", false}, {"P3", false}}, {{"L", {"P1"}, false}});
  EXPECT_THROW(untwist_step(c, vec(2, {{"P1", 3}, {"P2", 3}, {"P3", 3}, {"L", 0}})), InvalidInput);
}

TEST(Untwist, ShortWordRoundTrip) {
  const auto c = one_node();
  const Word w{LineGen{"L"}, PointGen{"P1"}};
  const auto trace = untwist(c, apply_word(c, w, DegreeVector::identity(c)));
  EXPECT_EQ(trace.status, DescentStatus::complete);
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.final, DegreeVector::identity(c));
  auto recovered = trace.generators();
  std::reverse(recovered.begin(), recovered.end());
  EXPECT_EQ(recovered, w);
}

TEST(Untwist, IdentityHasEmptyTrace) {
  const auto trace = untwist(two_node(), DegreeVector::identity(two_node()));
  EXPECT_EQ(trace.status, DescentStatus::complete);
  EXPECT_TRUE(trace.steps.empty());
}

TEST(Untwist, ThreeNonCollinearPointsAreInadmissible) {
  const auto c = make_config({{"P1", false}, {"P2", false}, {"P3", false}},
                             {{"L1", {"P1"}, false}, {"L2", {"P2"}, false}, {"L3", {"P3"}, false}});
  const auto trace = untwist(c, vec(2, {{"P1", 3}, {"P2", 3}, {"P3", 3}, {"L1", 0}, {"L2", 0}, {"L3", 0}}));
  EXPECT_EQ(trace.status, DescentStatus::inadmissible);
  EXPECT_EQ(trace.detail, "three points");
}

TEST(Untwist, UnknownMultiplicityStopsTheDescent) {
  auto v = vec(5, {{"P1", 1}, {"L", 1}});
  const auto trace = untwist(two_node(), v);
  EXPECT_EQ(trace.status, DescentStatus::stuck);
  EXPECT_EQ(trace.detail, "unknown multiplicity at P2");
}

TEST(UntwistProperties, RoundTripMonotoneAndCenterRemoving) {
  quartic::testing::Rng rng(23);
  int single_cluster = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = quartic::testing::random_config(rng);
    const Word w = quartic::testing::random_admissible_word(c, 12, rng);
    const auto v = apply_word(c, w, DegreeVector::identity(c));
    const auto trace = untwist(c, v);
    ASSERT_EQ(trace.status, DescentStatus::complete) << to_string(w) << " " << trace.detail;
    EXPECT_EQ(trace.final.mu, 1);
    Rational prev = v.mu;
    for (const auto& s : trace.steps) {
      EXPECT_LT(s.after.mu, prev);
      prev = s.after.mu;
    }
    if (!trace.steps.empty()) {
      const auto first = detect_centers(c, v);
      const auto after = trace.steps.front().after;
      for (const auto& p : first.points)
        if (after.known(p)) EXPECT_LE(*after.at(p), after.mu);
      for (const auto& l : first.lines)
        if (after.known(l)) EXPECT_LE(*after.at(l), after.mu);
    }
    auto recovered = trace.generators();
    std::reverse(recovered.begin(), recovered.end());
    if (supporting_clusters(c, free_reduce(w)).size() == 1) ++single_cluster;
    EXPECT_NE(equal(c, recovered, w).verdict, Verdict::distinct) << to_string(w);
  }
  EXPECT_GT(single_cluster, 0);
}
