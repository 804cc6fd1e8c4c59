#include <gtest/gtest.h>

#include <vknot/construct.hpp>
#include <vknot/error.hpp>
#include <vknot/generate.hpp>
#include <vknot/invariants.hpp>
#include <vknot/patterns.hpp>

using namespace vknot;

namespace {

// <P, D> through the public diagram operations: delete every chord outside
// the subset and compare the canonical code with the pattern.
std::int64_t brute_pairing(const PatternDiagram& p, const GaussDiagram& d) {
  const auto ids = chord_ids(d);
  std::int64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask) {
    std::vector<ChordId> dropped;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (!((mask >> k) & 1u)) {
        dropped.push_back(ids[k]);
      }
    }
    const auto sub = without_chords(d, dropped).canonical();
    if (sub.chord_count() != p.chord_count() ||
        !std::equal(sub.word().begin(), sub.word().end(), p.word.begin(), p.word.end())) {
      continue;
    }
    int weight = 1;
    bool ok = true;
    for (std::size_t k = 0; k < p.chord_count(); ++k) {
      const Sign s = sub.sign(chord_id(static_cast<std::uint32_t>(k + 1)));
      ok = ok && (!p.constraints[k] || *p.constraints[k] == s);
      weight *= to_int(s);
    }
    total += ok ? weight : 0;
  }
  return total;
}

}  // namespace

TEST(Patterns, StandardSet) {
  for (int s = 1; s <= 10; ++s) {
    const auto& p = standard_pattern(s);
    EXPECT_EQ(p.chord_count(), s <= 6 ? 3u : 2u) << s;
  }
  EXPECT_THROW(standard_pattern(0), std::out_of_range);
  EXPECT_THROW(standard_pattern(11), std::out_of_range);
  const auto& d7 = standard_pattern(7);
  EXPECT_EQ(d7.constraints[0], Sign::Negative);
  EXPECT_EQ(d7.constraints[1], Sign::Positive);
}

TEST(Patterns, ParseText) {
  const auto p = parse_pattern("# comment\nO1* U2+ U1* O2+", "x");
  EXPECT_EQ(p.name, "x");
  EXPECT_EQ(p.chord_count(), 2u);
  EXPECT_FALSE(p.constraints[0].has_value());
  EXPECT_EQ(p.constraints[1], Sign::Positive);
  EXPECT_THROW(parse_pattern("O1* U1+"), ParseError);
  EXPECT_THROW(parse_pattern("O1+ U1+ O2+ U2+ O3+ U3+ O4+ U4+"), DiagramError);
}

TEST(Pairing, K7) {
  const auto k7 = reference_diagram("k7");
  EXPECT_EQ(pairing(standard_pattern(7), k7), -1);
  EXPECT_EQ(v1_prime_gd(GaussDiagram{}), 0);
  EXPECT_EQ(v1_prime_gd(k7), -1);
  EXPECT_EQ(v1_prime_gd(reversed(k7)), 1);
  EXPECT_EQ(alpha3_gd(GaussDiagram{}), 0);
  EXPECT_EQ(alpha2_gd(k7), -1);
  EXPECT_EQ(alpha3_gd(k7), 0);
  EXPECT_EQ(alpha3_gd(reversed(k7)), 2);
  EXPECT_EQ(pairing(standard_pattern(1), reference_diagram("d1_plus")), 1);
}

TEST(Pairing, Families) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto k = family({Family::K, n});
    EXPECT_EQ(alpha3_gd(k), static_cast<std::int64_t>(n) - 1);
    EXPECT_EQ(alpha2_gd(k), 1);
    EXPECT_EQ(v1_prime_gd(k), static_cast<std::int64_t>(n));
  }
}

TEST(PairingProperty, MatchesBruteForceAndDerivative) {
  Rng rng(61);
  for (int k = 0; k < 300; ++k) {
    const auto d = random_diagram(rng.below(7), rng);
    for (int s = 1; s <= 10; ++s) {
      EXPECT_EQ(pairing(standard_pattern(s), d), brute_pairing(standard_pattern(s), d));
    }
    EXPECT_EQ(standard_pairings(d), pattern_counts_semantic(d));
    const auto p = v_polys(d);
    EXPECT_EQ(Integer(v1_prime_gd(d)), derivative_at_one(p.v1));
    EXPECT_EQ(Integer(v2_prime_gd(d)), derivative_at_one(p.v2));
    EXPECT_EQ(Integer(alpha2_gd(d)), alpha2(d));
    EXPECT_EQ(Integer(alpha3_gd(d)), alpha3(d));
  }
}
