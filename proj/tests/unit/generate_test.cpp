#include <gtest/gtest.h>

#include <set>

#include <vknot/error.hpp>
#include <vknot/gauss.hpp>
#include <vknot/generate.hpp>

using namespace vknot;

TEST(Random, EmptyAndDeterministic) {
  EXPECT_TRUE(random_diagram(0, 99).empty());
  EXPECT_EQ(random_diagram(6, 1234), random_diagram(6, 1234));
  EXPECT_NE(random_diagram(6, 1234), random_diagram(6, 1235));
}

TEST(Random, AlwaysValid) {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const auto d = random_diagram(3, seed);
    EXPECT_EQ(d.chord_count(), 3u);
    EXPECT_NO_THROW(parse_gauss(serialize(d)));
  }
}

TEST(Random, BoundedDraws) {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    EXPECT_LT(rng.below(7), 7u);
    const auto v = rng.between(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
}

TEST(Enumerate, Counts) {
  // (2n-1)!! matchings, two passage orders and two signs per chord.
  std::uint64_t matchings = 1;
  for (std::size_t n = 0; n <= 3; ++n) {
    if (n > 0) {
      matchings *= 2 * n - 1;
    }
    const std::uint64_t expected = matchings << (2 * n);
    EXPECT_EQ(diagram_count(n), expected);
    const auto all = enumerate_diagrams(n);
    EXPECT_EQ(all.size(), expected);
    std::set<std::string> codes;
    for (const auto& d : all) {
      EXPECT_TRUE(d.is_canonical());
      codes.insert(serialize(d));
    }
    EXPECT_EQ(codes.size(), expected);
  }
  EXPECT_EQ(enumerate_diagrams(1).size(), 4u);
  EXPECT_EQ(enumerate_diagrams(2).size(), 48u);
}

TEST(Enumerate, CapAndEarlyStop) {
  EXPECT_THROW(enumerate_diagrams(5), CapExceeded);
  EXPECT_EQ(enumerate_diagrams(5, 5).size(), diagram_count(5));
  std::size_t seen = 0;
  for_each_diagram(3, [&](const GaussDiagram&) { return ++seen < 10; });
  EXPECT_EQ(seen, 10u);
}

TEST(Enumerate, ContainsRandomSamples) {
  for (std::size_t n = 0; n <= 3; ++n) {
    std::set<std::string> codes;
    for (const auto& d : enumerate_diagrams(n)) {
      codes.insert(serialize(d));
    }
    Rng rng(n + 1);
    for (int k = 0; k < 200; ++k) {
      EXPECT_TRUE(codes.count(serialize(random_diagram(n, rng))));
    }
  }
}
