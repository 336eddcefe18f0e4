#include <gtest/gtest.h>

#include <random>

#include "quartic/degree.hpp"
#include "quartic/errors.hpp"
#include "support.hpp"

using namespace quartic;
using quartic::testing::make_config;

namespace {

QuarticIncidence one_node() { return make_config({{"P1", false}}, {{"L", {"P1"}, false}}); }
QuarticIncidence two_node() { return make_config({{"P1", false}, {"P2", false}}, {{"L", {"P1", "P2"}, false}}); }
QuarticIncidence three_node() {
  return make_config({{"P1", false}, {"P2", false}, {"P3", false}}, {{"L", {"P1", "P2", "P3"}, false}});
}

DegreeVector vec(long mu, std::map<std::string, long> nu) {
  DegreeVector v;
  v.mu = mu;
  for (const auto& [k, x] : nu) v.nu[k] = x;
  return v;
}

}  // namespace

TEST(ActionMatrix, OneNodeLineRows) {
  const auto m = action_matrix(one_node(), LineGen{"L"});
  EXPECT_EQ(m.over({"mu", "P1", "L"}), (Matrix{{11, 0, -10}, {6, 1, -6}, {12, 0, -11}}));
  EXPECT_TRUE(m.untouched.empty());
}

TEST(ActionMatrix, TwoNodeLineRows) {
  EXPECT_EQ(action_matrix(two_node(), LineGen{"L"}).over({"mu", "P1", "P2", "L"}),
            (Matrix{{5, 0, 0, -4}, {3, 0, 1, -3}, {3, 1, 0, -3}, {6, 0, 0, -5}}));
}

TEST(ActionMatrix, PairRowsMatchThePrintedFormulas) {
  EXPECT_EQ(action_matrix(two_node(), PairGen{"P1", "P2", "L"}).over({"mu", "P1", "P2", "L"}),
            (Matrix{{13, -6, -6, 0}, {14, -7, -6, 0}, {14, -6, -7, 0}, {8, -4, -4, 1}}));
}

TEST(ActionMatrix, PointRowsOnEachLineShape) {
  EXPECT_EQ(action_matrix(one_node(), PointGen{"P1"}).over({"mu", "P1", "L"}),
            (Matrix{{3, -2, 0}, {4, -3, 0}, {1, -1, 1}}));
  EXPECT_EQ(action_matrix(two_node(), PointGen{"P1"}).over({"mu", "P1", "P2", "L"}),
            (Matrix{{3, -2, 0, 0}, {4, -3, 0, 0}, {1, -1, 0, 1}, {1, -1, 1, 0}}));
  EXPECT_EQ(action_matrix(three_node(), PointGen{"P1"}).over({"mu", "P1", "P2", "P3", "L"}),
            (Matrix{{3, -2, 0, 0, 0}, {4, -3, 0, 0, 0}, {1, -1, 0, 1, 0}, {1, -1, 1, 0, 0}, {2, -2, 0, 0, 1}}));
}

TEST(ActionMatrix, PointBasisSpansEveryLineThroughThePoint) {
  const auto c = make_config({{"P", false}, {"Q", false}, {"R", false}, {"S", false}},
                             {{"L1", {"P", "Q"}, false}, {"L2", {"P"}, false}, {"L3", {"R"}, false}});
  const auto m = action_matrix(c, PointGen{"P"});
  EXPECT_TRUE(m.tracks("Q"));
  EXPECT_TRUE(m.tracks("L1"));
  EXPECT_TRUE(m.tracks("L2"));
  EXPECT_EQ(m.untouched, (std::set<std::string>{"L3", "R", "S"}));
  EXPECT_EQ(m.over({"mu", "P", "Q", "L1", "L2"}),
            (Matrix{{3, -2, 0, 0, 0}, {4, -3, 0, 0, 0}, {1, -1, 0, 1, 0}, {1, -1, 1, 0, 0}, {1, -1, 0, 0, 1}}));
}

TEST(ActionMatrix, AutomorphismIsAPermutation) {
  std::vector<SingularPoint> ps{{"P1", false}, {"P2", false}};
  std::vector<LineMark> ls{{"L", {"P1", "P2"}, false}};
  const QuarticIncidence c(ps, ls, {Automorphism{"w", {{"P1", "P2"}, {"P2", "P1"}}, {}}});
  EXPECT_EQ(action_matrix(c, AutGen{"w"}).over({"mu", "P1", "P2", "L"}),
            (Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
}

TEST(ActionMatrix, InvalidGeneratorsAreRejected) {
  const auto c = make_config({{"E", true}, {"P1", false}, {"P2", false}, {"P3", false}},
                             {{"L", {"P1", "P2", "P3"}, false}, {"M", {"E"}, true}});
  EXPECT_THROW(action_matrix(c, PointGen{"E"}), InvalidInput);
  EXPECT_THROW(action_matrix(c, LineGen{"L"}), InvalidInput);
  EXPECT_THROW(action_matrix(c, LineGen{"M"}), InvalidInput);
  EXPECT_THROW(action_matrix(c, PairGen{"P1", "P2", "L"}), InvalidInput);
  EXPECT_THROW(action_matrix(c, AutGen{"none"}), InvalidInput);
}

TEST(Apply, IdentityImagesFromTheExamples) {
  const auto one = apply(one_node(), LineGen{"L"}, DegreeVector::identity(one_node()));
  EXPECT_EQ(one, vec(11, {{"P1", 6}, {"L", 12}}));
  const auto pair = apply(two_node(), PairGen{"P1", "P2", "L"}, DegreeVector::identity(two_node()));
  EXPECT_EQ(pair, vec(13, {{"P1", 14}, {"P2", 14}, {"L", 8}}));
  const auto point = apply(two_node(), PointGen{"P1"}, DegreeVector::identity(two_node()));
  EXPECT_EQ(point, vec(3, {{"P1", 4}, {"P2", 1}, {"L", 1}}));
}

TEST(Apply, UntouchedCoordinatesBecomeUnknown) {
  const auto c = make_config({{"P", false}, {"R", false}}, {{"L1", {"P"}, false}, {"L2", {"R"}, false}});
  const auto v = apply(c, PointGen{"P"}, DegreeVector::identity(c));
  EXPECT_TRUE(v.known("L1"));
  EXPECT_FALSE(v.known("R"));
  EXPECT_FALSE(v.known("L2"));
}

TEST(Apply, UnknownReadByDegreeRowNamesTheCoordinate) {
  auto v = DegreeVector::identity(one_node());
  v.set("L", std::nullopt);
  try {
    apply(one_node(), LineGen{"L"}, v);
    FAIL() << "expected InsufficientData";
  } catch (const InsufficientData& e) {
    EXPECT_EQ(e.coordinate(), "L");
  }
  EXPECT_FALSE(fully_known(one_node(), LineGen{"L"}, v));
}

TEST(Apply, UnknownReadByOtherRowsPropagates) {
  auto v = DegreeVector::identity(two_node());
  v.set("P2", std::nullopt);
  const auto out = apply(two_node(), LineGen{"L"}, v);
  EXPECT_FALSE(out.known("P1"));  // nu_P1' reads nu_P2
  EXPECT_TRUE(out.known("P2"));
  EXPECT_FALSE(fully_known(two_node(), LineGen{"L"}, v));
}

TEST(Compose, PointLinePointEqualsPair) {
  const auto composed = compose(two_node(), {PointGen{"P1"}, LineGen{"L"}, PointGen{"P2"}});
  const auto pair = action_matrix(two_node(), PairGen{"P1", "P2", "L"});
  const std::vector<std::string> order{"mu", "P1", "P2", "L"};
  EXPECT_EQ(composed.over(order), pair.over(order));
}

TEST(Compose, CompositeRelationsSquareToIdentity) {
  const std::vector<std::string> two{"mu", "P1", "P2", "L"};
  const auto t = compose(two_node(), {PointGen{"P1"}, PointGen{"P2"}, LineGen{"L"}}).over(two);
  EXPECT_TRUE((t * t).is_identity());
  // Test-side product of the individual matrices, in the other multiplication order.
  const Matrix a = action_matrix(two_node(), PointGen{"P1"}).over(two);
  const Matrix b = action_matrix(two_node(), PointGen{"P2"}).over(two);
  const Matrix l = action_matrix(two_node(), LineGen{"L"}).over(two);
  EXPECT_EQ(t, l * b * a);
  const Matrix abl = a * b * l;
  EXPECT_TRUE((abl * abl).is_identity());

  const std::vector<std::string> three{"mu", "P1", "P2", "P3", "L"};
  const auto s = compose(three_node(), {PointGen{"P1"}, PointGen{"P2"}, PointGen{"P3"}}).over(three);
  EXPECT_TRUE((s * s).is_identity());
}

TEST(Compose, ConjugationByAutomorphismRelabels) {
  std::vector<SingularPoint> ps{{"P1", false}, {"P2", false}, {"P3", false}};
  std::vector<LineMark> ls{{"L", {"P1", "P2"}, false}, {"M", {"P3"}, false}};
  const QuarticIncidence c(ps, ls, {Automorphism{"w", {{"P1", "P2"}, {"P2", "P1"}}, {}}});
  const std::vector<std::string> order{"mu", "P1", "P2", "L"};
  for (const Generator& g : std::vector<Generator>{PointGen{"P1"}, LineGen{"L"}, PairGen{"P1", "P2", "L"}}) {
    const auto lhs = compose(c, {AutGen{"w"}, g, AutGen{"w", true}});
    const auto rhs = compose(c, {conjugate(resolve_automorphism(c, AutGen{"w"}), g)});
    auto block = [&](const ActionMatrix& m) {
      std::vector<std::size_t> idx;
      for (const auto& o : order) idx.push_back(m.index(o));
      return m.entries.principal(idx);
    };
    EXPECT_EQ(block(lhs), block(rhs)) << to_string(g);
  }
}

TEST(DegreeProperties, EveryGeneratorIsAnInvolution) {
  for (const auto& c : quartic::testing::all_small_configs(3, 3)) {
    for (const auto& g : quartic::testing::involution_generators(c)) {
      const auto m = action_matrix(c, g);
      EXPECT_TRUE((m.entries * m.entries).is_identity()) << to_string(g);
      const auto twice = compose(c, {g, g});
      EXPECT_TRUE(twice.entries.is_identity()) << to_string(g);
    }
  }
}

TEST(DegreeProperties, ApplyTwiceRestoresKnownTrackedCoordinates) {
  quartic::testing::Rng rng(17);
  std::uniform_int_distribution<long> d(0, 30);
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = quartic::testing::random_config(rng);
    DegreeVector v;
    v.mu = 1 + d(rng);
    for (const auto& id : c.coordinates()) v.nu[id] = d(rng);
    for (const auto& g : quartic::testing::involution_generators(c)) {
      const auto m = action_matrix(c, g);
      const auto back = apply(c, g, apply(c, g, v));
      EXPECT_EQ(back.mu, v.mu);
      for (const auto& id : m.basis)
        if (id != kMuCoordinate) EXPECT_EQ(back.at(id), v.at(id)) << id;
      for (const auto& id : m.untouched) EXPECT_FALSE(back.known(id));
    }
  }
}

TEST(DegreeProperties, UntwistingInequalities) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> d(1, 1000);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational mu = d(rng);
    const Rational nu = mu + ratio(d(rng), 7);
    const Rational nu2 = 2 * mu - nu + Rational(d(rng), 5);  // nu + nu2 > 2 mu
    const auto p = apply(one_node(), PointGen{"P1"}, [&] {
      DegreeVector v;
      v.mu = mu;
      v.nu = {{"P1", nu}, {"L", 0}};
      return v;
    }());
    EXPECT_LT(p.mu, mu);
    DegreeVector l1;
    l1.mu = mu;
    l1.nu = {{"P1", 0}, {"L", nu}};
    EXPECT_LT(apply(one_node(), LineGen{"L"}, l1).mu, mu);
    DegreeVector l2;
    l2.mu = mu;
    l2.nu = {{"P1", 0}, {"P2", 0}, {"L", nu}};
    EXPECT_LT(apply(two_node(), LineGen{"L"}, l2).mu, mu);
    DegreeVector pp;
    pp.mu = mu;
    pp.nu = {{"P1", nu}, {"P2", nu2}, {"L", 0}};
    EXPECT_LT(apply(two_node(), PairGen{"P1", "P2", "L"}, pp).mu, mu);
  }
}
