#include <gtest/gtest.h>

#include "generators.hpp"
#include "minfol/torus3.hpp"

using namespace minfol;
using namespace minfol::torus3;

TEST(Geometry, Examples) {
  const auto cat = summarize({2, 1, 1, 1});
  EXPECT_EQ(cat.kind, MonodromyClass::Anosov);
  EXPECT_EQ(geometry_classify(cat).geometry, Geometry::Sol);
  EXPECT_EQ(cat.b1(), 1);

  MonodromySummary pa{3, MonodromyClass::PseudoAnosov, std::nullopt, 0};
  EXPECT_EQ(geometry_classify(pa).geometry, Geometry::H3);
  MonodromySummary per{2, MonodromyClass::Periodic, std::nullopt, std::nullopt};
  EXPECT_EQ(geometry_classify(per).geometry, Geometry::H2xR);

  const auto flat = geometry_classify(summarize(sl2z::IntMatrix2::identity()));
  EXPECT_EQ(flat.geometry, Geometry::E3);
  ASSERT_TRUE(flat.note.has_value());
  EXPECT_NE(flat.note->find("polynomial growth"), std::string::npos);
  EXPECT_EQ(geometry_classify(summarize({1, 2, 0, 1})).geometry, Geometry::IncompressibleTorus);
  EXPECT_EQ(geometry_classify({4, MonodromyClass::Reducible, std::nullopt, std::nullopt}).geometry,
            Geometry::IncompressibleTorus);
}

TEST(Geometry, TrichotomyListsAreDisjointByGenus) {
  gen::Rng rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = summarize(gen::sl2z_matrix(rng, 12));
    ASSERT_NE(geometry_classify(m).geometry, Geometry::H3);
  }
  for (long g = 2; g <= 6; ++g)
    for (auto c : {MonodromyClass::Periodic, MonodromyClass::Reducible, MonodromyClass::PseudoAnosov})
      ASSERT_NE(geometry_classify({g, c, std::nullopt, std::nullopt}).geometry, Geometry::Sol);
}

TEST(Geometry, MalformedSummariesRejected) {
  EXPECT_THROW(geometry_classify({2, MonodromyClass::Anosov, std::nullopt, std::nullopt}), DomainError);
  EXPECT_THROW(geometry_classify({1, MonodromyClass::PseudoAnosov, std::nullopt, std::nullopt}), DomainError);
  EXPECT_THROW(geometry_classify({2, MonodromyClass::Periodic, std::nullopt, 5}), DomainError);
  EXPECT_THROW(geometry_classify({2, MonodromyClass::PseudoAnosov, QuadraticIrrational::rational(1, 2, 5), 0}),
               DomainError);
}

TEST(Geometry, TorusBettiNumbers) {
  // b1 of the torus bundle: 1 + dim ker(A - I).
  EXPECT_EQ(summarize({2, 1, 1, 1}).b1(), 1);
  EXPECT_EQ(summarize({1, 3, 0, 1}).b1(), 2);
  EXPECT_EQ(summarize(sl2z::IntMatrix2::identity()).b1(), 3);
  EXPECT_EQ(summarize({-1, 0, 0, -1}).b1(), 1);
}

TEST(Euler, Examples) {
  const auto a = euler_report(2, 0);
  EXPECT_EQ(a.geometry, Geometry::H2xR);
  EXPECT_TRUE(a.milnor_wood_ok);
  EXPECT_TRUE(a.transverse_to_fibration_possible);
  const auto b = euler_report(2, 3);
  EXPECT_EQ(b.geometry, Geometry::SL2R);
  EXPECT_FALSE(b.milnor_wood_ok);
  EXPECT_FALSE(b.transverse_to_fibration_possible);
  const auto c = euler_report(2, 2);
  EXPECT_EQ(c.geometry, Geometry::SL2R);
  EXPECT_TRUE(c.milnor_wood_ok);
  EXPECT_TRUE(c.borderline);
  EXPECT_THROW(euler_report(1, 0), DomainError);
}

TEST(Euler, SymmetricAndKeyedOnZero) {
  for (long g = 2; g <= 7; ++g)
    for (long e = -20; e <= 20; ++e) {
      const auto r = euler_report(g, e), s = euler_report(g, -e);
      ASSERT_EQ(r.milnor_wood_ok, s.milnor_wood_ok);
      ASSERT_EQ(r.abs_euler, std::abs(e));
      ASSERT_EQ(r.geometry == Geometry::H2xR, e == 0);
      ASSERT_EQ(r.milnor_wood_ok, std::abs(e) <= 2 * g - 2);
    }
}

TEST(Periods, Examples) {
  EXPECT_EQ(period_group_rank({{1, 0}, {0, 1}}).r, 2);
  EXPECT_EQ(period_group_rank({{1, 0}, {0, 1}}).leaf_cover_rank, 1);
  EXPECT_EQ(period_group_rank({{Rational(1, 2), 0}, {Rational(1, 3), 0}, {Rational(1, 6), 0}}).r, 1);
  EXPECT_EQ(period_group_rank({{1, 0}, {0, 1}, {1, 1}}).r, 2);
  EXPECT_THROW(period_group_rank({}), DomainError);
  EXPECT_THROW(period_group_rank({{0, 0}}), DomainError);
}

TEST(Periods, InvariantUnderPermutationAndScaling) {
  gen::Rng rng(72);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen::uniform(rng, 1, 5), dim = gen::uniform(rng, 1, 4);
    std::vector<std::vector<Rational>> v(static_cast<std::size_t>(n));
    for (auto& row : v) {
      for (int j = 0; j < dim; ++j) row.emplace_back(gen::uniform(rng, -3, 3), gen::uniform(rng, 1, 4));
    }
    v[0][0] = 1;  // never all zero
    const long r = period_group_rank(v).r;
    auto w = v;
    std::shuffle(w.begin(), w.end(), rng);
    for (auto& row : w) {
      const Rational c(gen::uniform(rng, 1, 5) * (gen::uniform(rng, 0, 1) ? 1 : -1), gen::uniform(rng, 1, 5));
      for (auto& x : row) x = x * c;
    }
    ASSERT_EQ(period_group_rank(w).r, r);
  }
}
