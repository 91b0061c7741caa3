#include <gtest/gtest.h>

#include "generators.hpp"
#include "minfol/permutation.hpp"

using namespace minfol;

TEST(PermutationTest, ParseAndPrintRoundTrip) {
  const auto p = Permutation::parse("(1 2 3)(4 5)");
  EXPECT_EQ(p.size(), 5u);
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(2), 0);
  EXPECT_EQ(p.to_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(Permutation::parse(p.to_string(), 5), p);
  EXPECT_EQ(Permutation::parse("(1,2,3)(4,5)"), p);
  EXPECT_EQ(p.cycle_type(), (std::vector<int>{3, 2}));
}

TEST(PermutationTest, MalformedNotationRejected) {
  EXPECT_THROW(Permutation::parse("(1 2"), DomainError);
  EXPECT_THROW(Permutation::parse("(1 1)"), DomainError);
  EXPECT_THROW(Permutation::parse("(0 1)"), DomainError);
  EXPECT_THROW(Permutation::parse("(1 x)"), DomainError);
  EXPECT_THROW(Permutation::parse("(1 2)(2 3)"), DomainError);
  EXPECT_THROW(Permutation::parse("(1 7)", 5), DomainError);
}

TEST(PermutationTest, ProductIsComposition) {
  gen::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 9));
    const auto f = gen::permutation(rng, n), g = gen::permutation(rng, n);
    const auto fg = f * g;
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(fg(static_cast<int>(i)), f(g(static_cast<int>(i))));
    ASSERT_TRUE((f * f.inverse()).is_identity());
    int total = 0;
    for (int c : f.cycle_type()) total += c;
    ASSERT_EQ(static_cast<std::size_t>(total), n);
  }
}

TEST(PermutationTest, Orbits) {
  const auto a = Permutation::parse("(1 2)", 4), b = Permutation::parse("(3 4)", 4);
  std::vector<Permutation> gens{a, b};
  EXPECT_FALSE(is_transitive(gens, 4));
  EXPECT_EQ(orbits(gens, 4).size(), 2u);
  gens.push_back(Permutation::parse("(2 3)", 4));
  EXPECT_TRUE(is_transitive(gens, 4));
}
