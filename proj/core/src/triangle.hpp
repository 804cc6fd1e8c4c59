#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot::detail {

// Three strands A, B, C bound a small triangle whose corners are the
// crossings AB, BC and CA. Strand indices: A = 0, B = 1, C = 2.
enum class Corner : std::uint8_t { AB, BC, CA };

// Local picture of a triangle: for each strand, the order in which it meets
// its two corners, and the sign of the crossing at each corner.
struct TriangleConfig {
  std::array<std::array<Corner, 2>, 3> order;
  std::array<Sign, 3> signs;  // indexed by Corner

  friend auto operator<=>(const TriangleConfig&, const TriangleConfig&) = default;
  friend bool operator==(const TriangleConfig&, const TriangleConfig&) = default;
};

enum class TriangleKind { R3, Delta };

// Strand that passes over at each corner. R3: A is top, B middle, C bottom.
// Delta: the heights are cyclic, A over B over C over A.
constexpr std::array<int, 3> over_strand(TriangleKind kind) {
  return kind == TriangleKind::R3 ? std::array<int, 3>{0, 1, 0} : std::array<int, 3>{0, 1, 2};
}

constexpr std::array<int, 2> corner_strands(Corner c) {
  switch (c) {
    case Corner::AB:
      return {0, 1};
    case Corner::BC:
      return {1, 2};
    case Corner::CA:
      break;
  }
  return {2, 0};
}

// Every realizable configuration, sorted. Built once from straight-line
// triangles: both orientations of the triangle times every choice of strand
// directions.
const std::vector<TriangleConfig>& triangle_table(TriangleKind kind);

bool is_realizable(TriangleKind kind, const TriangleConfig& config);

}  // namespace vknot::detail
