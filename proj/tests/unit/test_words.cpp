#include <gtest/gtest.h>

#include "quartic/degree.hpp"
#include "quartic/errors.hpp"
#include "quartic/words.hpp"
#include "support.hpp"

using namespace quartic;
using quartic::testing::make_config;

namespace {

QuarticIncidence one_node() { return make_config({{"P", false}}, {{"L", {"P"}, false}}); }
QuarticIncidence two_node() { return make_config({{"P1", false}, {"P2", false}}, {{"L", {"P1", "P2"}, false}}); }
QuarticIncidence three_node() {
  return make_config({{"P1", false}, {"P2", false}, {"P3", false}}, {{"L", {"P1", "P2", "P3"}, false}});
}

ClusterElement element(std::string line, int parity, std::vector<long> t) {
  ClusterElement e{std::move(line), parity, {}};
  for (long x : t) e.translation.push_back(Integer(x));
  return e;
}

const Generator P1 = PointGen{"P1"}, P2 = PointGen{"P2"}, P3 = PointGen{"P3"}, TL = LineGen{"L"};

}  // namespace

TEST(FreeReduce, CancelsAdjacentInvolutionsAndInversePairs) {
  EXPECT_TRUE(free_reduce({P1, P1}).empty());
  EXPECT_TRUE(free_reduce({P1, TL, TL, P1}).empty());
  EXPECT_EQ(free_reduce({P1, TL, P2}), (Word{P1, TL, P2}));
  EXPECT_TRUE(free_reduce({AutGen{"w"}, AutGen{"w", true}}).empty());
  EXPECT_EQ(free_reduce({AutGen{"w"}, AutGen{"w"}}), (Word{AutGen{"w"}, AutGen{"w"}}));
}

TEST(ClusterNormalForm, ThreeReflectionsSquareToIdentity) {
  EXPECT_EQ(cluster_normal_form(three_node(), {P1, P2, P3, P1, P2, P3}), element("L", 1, {0, 0, 0}));
}

TEST(ClusterNormalForm, PointThenLineOnOneNodeLine) {
  EXPECT_EQ(cluster_normal_form(one_node(), {PointGen{"P"}, TL}), element("L", 1, {-3}));
}

TEST(ClusterNormalForm, PairEqualsPointLinePoint) {
  const auto pair = cluster_normal_form(two_node(), {PairGen{"P1", "P2", "L"}});
  EXPECT_EQ(pair, cluster_normal_form(two_node(), {P1, TL, P2}));
  EXPECT_EQ(pair, element("L", -1, {-2, -2}));
}

TEST(ClusterNormalForm, ThirdSectionIsMinusTheSumOfTheOthers) {
  EXPECT_EQ(cluster_normal_form(three_node(), {P3}), element("L", -1, {1, 1, 0}));
}

TEST(ClusterNormalForm, MixedWordsAreRejected) {
  const auto c = make_config({{"P1", false}, {"P2", false}}, {{"L", {"P1"}, false}, {"M", {"P2"}, false}});
  EXPECT_THROW(cluster_normal_form(c, {P1, P2}), InvalidInput);
}

TEST(ClusterModel, EveryListedRelationHoldsAndLettersAreInvolutions) {
  for (const auto& c : {one_node(), two_node(), three_node()})
    for (const auto& g : cluster_letters(c, "L")) EXPECT_TRUE(cluster_normal_form(c, {g, g}).is_identity());
  EXPECT_TRUE(cluster_normal_form(two_node(), {P1, P2, TL, P1, P2, TL}).is_identity());
  EXPECT_TRUE(cluster_normal_form(three_node(), {P1, P2, P3, P1, P2, P3}).is_identity());
  const Generator pair = PairGen{"P1", "P2", "L"};
  EXPECT_TRUE(cluster_normal_form(two_node(), {pair, pair}).is_identity());
}

TEST(ClusterModel, TwoNodeTranslationsHaveRankTwo) {
  const auto ab = cluster_normal_form(two_node(), {P1, P2});
  const auto bl = cluster_normal_form(two_node(), {P2, TL});
  EXPECT_EQ(ab.parity, 1);
  EXPECT_EQ(bl.parity, 1);
  Matrix m(2, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    m(0, j) = Rational(ab.translation[j]);
    m(1, j) = Rational(bl.translation[j]);
  }
  EXPECT_EQ(rank(m), 2u);
}

TEST(ClusterModel, ShortestWordsRealiseTheirElements) {
  const auto target = cluster_normal_form(two_node(), {P1, TL, P2, P1, TL});
  const Word w = shortest_cluster_word(two_node(), target, 10);
  EXPECT_EQ(cluster_normal_form(two_node(), "L", w), target);
  EXPECT_LE(w.size(), 5u);
}

TEST(PushAuts, ConjugatesTheBody) {
  std::vector<SingularPoint> ps{{"P1", false}, {"P2", false}};
  std::vector<LineMark> ls{{"L", {"P1", "P2"}, false}};
  const QuarticIncidence c(ps, ls, {Automorphism{"w", {{"P1", "P2"}, {"P2", "P1"}}, {}}});
  const auto split = push_auts(c, {P1, AutGen{"w"}});
  EXPECT_EQ(split.automorphisms, (Word{AutGen{"w"}}));
  EXPECT_EQ(split.body, (Word{P2}));
  EXPECT_EQ(equal(c, {P1, AutGen{"w"}}, {AutGen{"w"}, P2}).verdict, Verdict::equal);
  EXPECT_EQ(equal(c, {AutGen{"w"}, P1, AutGen{"w", true}}, {P2}).verdict, Verdict::equal);
  EXPECT_EQ(equal(c, {AutGen{"w"}}, {}).verdict, Verdict::distinct);
}

TEST(Equal, ExamplesFromTheRelations) {
  EXPECT_EQ(equal(three_node(), {P1, P2, P3}, {P3, P2, P1}).verdict, Verdict::equal);
  EXPECT_EQ(equal(two_node(), {P1}, {P2}).verdict, Verdict::distinct);
  EXPECT_EQ(equal(one_node(), {PointGen{"P"}, TL}, {}).verdict, Verdict::distinct);
  EXPECT_EQ(equal(two_node(), {PairGen{"P1", "P2", "L"}}, {P1, TL, P2}).verdict, Verdict::equal);
}

TEST(Equal, MixedWordsUseRewriting) {
  // Two 3-node lines through P1: relations of both clusters are needed.
  const auto c = make_config({{"P1", false}, {"P2", false}, {"P3", false}, {"Q2", false}, {"Q3", false}},
                             {{"L", {"P1", "P2", "P3"}, false}, {"M", {"P1", "Q2", "Q3"}, false}});
  const Generator Q2 = PointGen{"Q2"}, Q3 = PointGen{"Q3"};
  const auto r = equal(c, {P1, P2, P3, Q2, P1, Q3}, {P3, P2, P1, Q3, P1, Q2});
  EXPECT_EQ(r.verdict, Verdict::equal) << r.reason;
  EXPECT_NE(equal(c, {P2, Q2}, {Q2, P2}).verdict, Verdict::equal);
}

TEST(Equal, EckardtConfigurationsNeverGuessDistinctFromClusterData) {
  const auto c = make_config({{"E", true}, {"P1", false}, {"P2", false}}, {{"L", {"E", "P1", "P2"}, true}});
  EXPECT_FALSE(split_presentation(c));
  EXPECT_EQ(equal(c, {P1}, {P1}).verdict, Verdict::equal);
  EXPECT_NE(equal(c, {P1, P2}, {P2, P1}).verdict, Verdict::equal);
}

TEST(WordProperties, ReflexiveAndConsistentWithDegreeActions) {
  quartic::testing::Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = quartic::testing::random_config(rng);
    const Word w1 = quartic::testing::random_admissible_word(c, 8, rng);
    const Word w2 = quartic::testing::random_admissible_word(c, 8, rng);
    EXPECT_EQ(equal(c, w1, w1).verdict, Verdict::equal);
    const auto small = equal(c, w1, w2, 10).verdict;
    const auto large = equal(c, w1, w2, 2000).verdict;
    if (small != Verdict::undecided) EXPECT_EQ(small, large) << to_string(w1) << " vs " << to_string(w2);
    if (large == Verdict::equal) {
      const auto m1 = compose(c, w1), m2 = compose(c, w2);
      for (const auto& a : m1.basis) {
        if (!m2.tracks(a) || m1.untouched.count(a) || m2.untouched.count(a)) continue;
        for (const auto& b : m1.basis)
          if (m2.tracks(b)) EXPECT_EQ(m1.entries(m1.index(a), m1.index(b)), m2.entries(m2.index(a), m2.index(b)));
      }
    }
  }
}

TEST(WordProperties, CommutatorsOfTwoReflectionsArePureTranslations) {
  quartic::testing::Rng rng(31);
  for (const auto& c : {one_node(), two_node(), three_node()}) {
    auto letters = cluster_letters(c, "L");
    letters.push_back(PairGen{"P1", "P2", "L"});
    if (c.lines()[0].points.size() != 2) letters.pop_back();
    for (const auto& g : letters)
      for (const auto& h : letters) EXPECT_EQ(cluster_normal_form(c, {g, h, g, h}).parity, 1);
  }
}
