#include <gtest/gtest.h>

#include <vknot/construct.hpp>
#include <vknot/invariants.hpp>

#include "oracles.hpp"

using namespace vknot;

namespace {

struct Knot {
  const char* name;
  oracles::Braid braid;
  int strands;
  int a2;
};

const std::vector<Knot>& knots() {
  static const std::vector<Knot> table{
      {"unknot", {1}, 2, 0},
      {"trefoil", {1, 1, 1}, 2, 1},
      {"figure_eight", {1, -2, 1, -2}, 3, -1},
      {"cinquefoil", {1, 1, 1, 1, 1}, 2, 3},
      {"three_twist", {1, 1, 1, 2, -1, 2}, 3, 2},
      {"granny", {1, 1, 1, 2, 2, 2}, 3, 2},
  };
  return table;
}

}  // namespace

TEST(Oracle, AlexanderPolynomials) {
  using oracles::BigInt;
  EXPECT_EQ(oracles::alexander(oracles::braid_closure_code({1, 1, 1}, 2)),
            (std::vector<BigInt>{1, -1, 1}));
  EXPECT_EQ(oracles::alexander(oracles::braid_closure_code({1, -2, 1, -2}, 3)),
            (std::vector<BigInt>{-1, 3, -1}));
  EXPECT_THROW(oracles::braid_closure_code({1, 1}, 2), std::invalid_argument);
}

TEST(Oracle, ClassicalV1EqualsConway) {
  for (const auto& k : knots()) {
    const std::string code = oracles::braid_closure_code(k.braid, k.strands);
    EXPECT_EQ(oracles::conway_a2(code), k.a2) << k.name;
    const auto p = v_polys(parse_gauss(code));
    EXPECT_EQ(p.v1, LaurentPolynomial::constant(k.a2)) << k.name << ": " << code;
    EXPECT_EQ(p.v2, LaurentPolynomial::constant(k.a2)) << k.name;
  }
}

TEST(Oracle, TrefoilReferenceIsClassical) {
  const std::string code = serialize(reference_diagram("trefoil"));
  EXPECT_EQ(oracles::conway_a2(code), 1);
}
