#include <gtest/gtest.h>

#include <vknot/construct.hpp>
#include <vknot/error.hpp>
#include <vknot/invariants.hpp>

using namespace vknot;

namespace {

LaurentPolynomial P(const char* text) { return parse_poly(text); }

LaurentPolynomial random_poly(Rng& rng, int span, int coeff) {
  LaurentPolynomial f;
  for (auto k = rng.below(4); k > 0; --k) {
    f.add_term(rng.between(-span, span), Integer(rng.between(-coeff, coeff)));
  }
  return f;
}

}  // namespace

TEST(Family, Values) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto k = v_polys(family({Family::K, n}));
    const auto kp = v_polys(family({Family::KPrime, n}));
    EXPECT_EQ(k.v1, monomial(1, static_cast<std::int64_t>(n)));
    EXPECT_EQ(kp.v1, monomial(-1, static_cast<std::int64_t>(n) - 1));
    EXPECT_TRUE(k.v2.is_zero());
    EXPECT_TRUE(kp.v2.is_zero());
    EXPECT_EQ(family({Family::K, n}).chord_count(), n + 2);
  }
  EXPECT_EQ(serialize(family({Family::K, 0})), serialize(reference_diagram("hopf_in")));
}

TEST(Reference, Names) {
  for (auto name : reference_names()) {
    EXPECT_NO_THROW(reference_diagram(name));
  }
  EXPECT_THROW(reference_diagram("nope"), std::out_of_range);
  EXPECT_EQ(v_polys(reference_diagram("k7")).v1, P("-t"));
  EXPECT_EQ(v_polys(reference_diagram("hopf_in")).v1, P("1"));
}

TEST(Realize, Examples) {
  EXPECT_TRUE(realize({}, {}).empty());
  EXPECT_EQ(realize(P("t^3"), {}), family({Family::K, 3}));
  const auto d = realize(P("-t^3-2*t"), P("-t"));
  EXPECT_EQ(v_polys(d).v1, P("-t^3-2*t"));
  EXPECT_EQ(v_polys(d).v2, P("-t"));
}

TEST(Realize, Cap) {
  LaurentPolynomial huge;
  huge.add_term(0, Integer(200000));
  EXPECT_THROW(realize(huge, {}), CapExceeded);
}

TEST(RealizeProperty, SelfVerifies) {
  Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const auto f = random_poly(rng, 5, 3);
    const auto g = random_poly(rng, 5, 3);
    const auto d = realize(f, g);
    EXPECT_EQ(v_polys(d), (VPolynomials{f, g}));
  }
}

TEST(DeltaBound, Examples) {
  const auto ex = reference_diagram("example");
  const auto same = delta_bound(ex, ex);
  EXPECT_FALSE(same.obstruction);
  EXPECT_EQ(same.lower_bound, Integer(0));
  EXPECT_TRUE(same.difference.is_zero());
  const auto kk = delta_bound(family({Family::K, 2}), family({Family::KPrime, 2}));
  EXPECT_TRUE(kk.obstruction);
  EXPECT_FALSE(kk.lower_bound.has_value());
  const auto h = P("2*t+1");
  const auto pair = delta_bound(realize(h + P("t^2"), h), realize(P("t^2"), {}));
  EXPECT_FALSE(pair.obstruction);
  EXPECT_EQ(pair.difference, h);
  EXPECT_EQ(pair.lower_bound, Integer(3));
}

TEST(Search, Examples) {
  const auto ex = search_diagram(
      [](const GaussDiagram& d) {
        const auto p = v_polys(d);
        return d.chord_count() == 4 && p.v1 == P("-t^3-2*t") && p.v2 == P("-t");
      },
      4);
  ASSERT_TRUE(ex.has_value());
  const auto hopf = search_diagram(
      [](const GaussDiagram& d) { return d.chord_count() == 2 && v_polys(d).v1 == P("1"); }, 2);
  ASSERT_TRUE(hopf.has_value());
  EXPECT_FALSE(search_diagram([](const GaussDiagram& d) { return d.chord_count() > 3; }, 1));
  EXPECT_THROW(search_diagram([](const GaussDiagram&) { return false; }, 5), CapExceeded);
}
