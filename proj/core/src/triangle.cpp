#include "triangle.hpp"

#include <algorithm>

namespace vknot::detail {

namespace {

struct Vec {
  int x;
  int y;
};

std::vector<TriangleConfig> build(TriangleKind kind) {
  // Corners AB, BC, CA; each strand is the line through two of them.
  constexpr std::array<std::array<Corner, 2>, 3> lines{{
      {Corner::AB, Corner::CA},
      {Corner::AB, Corner::BC},
      {Corner::BC, Corner::CA},
  }};
  const auto over = over_strand(kind);
  std::vector<TriangleConfig> out;
  for (int reflect : {1, -1}) {
    const std::array<Vec, 3> corner{{{0, 0}, {1, 0}, {0, reflect}}};
    for (int dirs = 0; dirs < 8; ++dirs) {
      TriangleConfig config{};
      std::array<Vec, 3> direction{};
      for (int s = 0; s < 3; ++s) {
        auto [from, to] = lines[s];
        if ((dirs >> s) & 1) {
          std::swap(from, to);
        }
        const Vec p = corner[static_cast<int>(from)];
        const Vec q = corner[static_cast<int>(to)];
        direction[s] = {q.x - p.x, q.y - p.y};
        config.order[s] = {from, to};
      }
      for (int c = 0; c < 3; ++c) {
        const auto strands = corner_strands(static_cast<Corner>(c));
        const int top = over[c];
        const int bottom = strands[0] == top ? strands[1] : strands[0];
        const Vec a = direction[top];
        const Vec b = direction[bottom];
        config.signs[c] = a.x * b.y - a.y * b.x > 0 ? Sign::Positive : Sign::Negative;
      }
      out.push_back(config);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

const std::vector<TriangleConfig>& triangle_table(TriangleKind kind) {
  static const std::vector<TriangleConfig> r3 = build(TriangleKind::R3);
  static const std::vector<TriangleConfig> delta = build(TriangleKind::Delta);
  return kind == TriangleKind::R3 ? r3 : delta;
}

bool is_realizable(TriangleKind kind, const TriangleConfig& config) {
  const auto& table = triangle_table(kind);
  return std::binary_search(table.begin(), table.end(), config);
}

}  // namespace vknot::detail
