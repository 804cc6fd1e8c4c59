#include <gtest/gtest.h>

#include <set>

#include "triangle.hpp"

using namespace vknot;
using namespace vknot::detail;

namespace {

// +1 when strand s meets the first-named of its two corners first:
// A meets AB before CA, B meets AB before BC, C meets BC before CA.
int direction(const TriangleConfig& t, int strand) {
  static constexpr std::array<Corner, 3> first{Corner::AB, Corner::AB, Corner::BC};
  return t.order[strand][0] == first[strand] ? 1 : -1;
}

int sign(const TriangleConfig& t, Corner c) { return to_int(t.signs[static_cast<int>(c)]); }

}  // namespace

// With straight strands a = xA (CA - AB), b = xB (BC - AB), c = xC (CA - BC)
// and o the orientation of (AB, BC, CA), the cross products give
//   s_AB = -xA xB o,  s_BC = xB xC o,  s_CA = xA xC o (R3, A over C)
// and s_CA = -xA xC o when C passes over A.
TEST(TriangleTable, R3ClosedForm) {
  const auto& table = triangle_table(TriangleKind::R3);
  EXPECT_EQ(table.size(), 16u);
  std::set<std::pair<std::array<int, 3>, int>> seen;
  for (const auto& t : table) {
    const int xa = direction(t, 0), xb = direction(t, 1), xc = direction(t, 2);
    EXPECT_EQ(sign(t, Corner::AB) * sign(t, Corner::BC), -xa * xc);
    EXPECT_EQ(sign(t, Corner::BC) * sign(t, Corner::CA), xa * xb);
    seen.insert({{xa, xb, xc}, sign(t, Corner::BC) * xb * xc});
    EXPECT_TRUE(is_realizable(TriangleKind::R3, t));
  }
  EXPECT_EQ(seen.size(), 16u);
}

TEST(TriangleTable, DeltaClosedForm) {
  const auto& table = triangle_table(TriangleKind::Delta);
  EXPECT_EQ(table.size(), 16u);
  for (const auto& t : table) {
    const int xa = direction(t, 0), xb = direction(t, 1), xc = direction(t, 2);
    EXPECT_EQ(sign(t, Corner::AB) * sign(t, Corner::BC), -xa * xc);
    EXPECT_EQ(sign(t, Corner::BC) * sign(t, Corner::CA), -xa * xb);
  }
}

TEST(TriangleTable, RejectsUnrealizable) {
  auto t = triangle_table(TriangleKind::R3).front();
  t.signs[0] = -t.signs[0];
  EXPECT_FALSE(is_realizable(TriangleKind::R3, t));
  auto u = triangle_table(TriangleKind::Delta).front();
  std::swap(u.order[0][0], u.order[0][1]);
  EXPECT_FALSE(is_realizable(TriangleKind::Delta, u));
}
