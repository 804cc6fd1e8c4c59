#include "vknot/invariants.hpp"

#include <algorithm>

namespace vknot {

namespace {

bool is_linked(const ChordMeta& a, const ChordMeta& b) {
  return a.left_pos < b.left_pos && b.left_pos < a.right_pos && a.right_pos < b.right_pos;
}

// `a` must precede `b` and the two must be linked.
std::int64_t between_sum(std::span<const ChordMeta> table, const ChordMeta& a, const ChordMeta& b) {
  std::int64_t sum = 0;
  for (const auto& k : table) {
    if (k.chord == a.chord || k.chord == b.chord) {
      continue;
    }
    const bool left_in_first = a.left_pos < k.left_pos && k.left_pos < b.left_pos;
    const bool left_in_middle = b.left_pos < k.left_pos && k.left_pos < a.right_pos;
    const bool right_in_middle = b.left_pos < k.right_pos && k.right_pos < a.right_pos;
    const bool right_in_last = a.right_pos < k.right_pos && k.right_pos < b.right_pos;
    if ((left_in_first && right_in_middle) || (left_in_middle && right_in_last) ||
        (left_in_first && right_in_last)) {
      sum += to_int(k.left_sign);
    }
  }
  return sum;
}

std::int64_t ordered_intersection(std::span<const ChordMeta> table, const ChordMeta& a,
                                  const ChordMeta& b) {
  std::int64_t value = between_sum(table, a, b);
  if (a.left_sign == b.left_sign) {
    value += to_int(a.left_sign);
  }
  return value;
}

struct LocatedPair {
  const ChordMeta* first;
  const ChordMeta* second;
  bool swapped;
};

LocatedPair locate(std::span<const ChordMeta> table, ChordId i, ChordId j) {
  auto find = [&](ChordId id) -> const ChordMeta& {
    auto it = std::find_if(table.begin(), table.end(), [&](const ChordMeta& m) { return m.chord == id; });
    if (it == table.end()) {
      throw DiagramError("no chord " + std::to_string(to_int(id)));
    }
    return *it;
  };
  const ChordMeta& mi = find(i);
  const ChordMeta& mj = find(j);
  if (is_linked(mi, mj)) {
    return {&mi, &mj, false};
  }
  if (is_linked(mj, mi)) {
    return {&mj, &mi, true};
  }
  throw NotLinkedError("chords " + std::to_string(to_int(i)) + " and " + std::to_string(to_int(j)) +
                       " are not linked");
}

template <class Visit>
void for_each_linked_pair(std::span<const ChordMeta> table, Visit&& visit) {
  // The table is sorted by left endpoint.
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t b = a + 1; b < table.size(); ++b) {
      if (table[b].left_pos > table[a].right_pos) {
        break;
      }
      if (!is_linked(table[a], table[b]) || table[a].type == table[b].type) {
        continue;
      }
      visit(table[a], table[b], table[a].type == 0 ? LinkKind::In : LinkKind::Out);
    }
  }
}

}  // namespace

std::vector<LinkedPairRecord> linked_pairs(const GaussDiagram& diagram, ArrowConvention convention) {
  const auto table = chord_table(diagram, convention);
  std::vector<LinkedPairRecord> out;
  for_each_linked_pair(table, [&](const ChordMeta& a, const ChordMeta& b, LinkKind kind) {
    out.push_back({a.chord, b.chord, kind, ordered_intersection(table, a, b), a.sign * b.sign});
  });
  return out;
}

std::int64_t between_sign_sum(const GaussDiagram& diagram, ChordId i, ChordId j,
                              ArrowConvention convention) {
  const auto table = chord_table(diagram, convention);
  const auto pair = locate(table, i, j);
  return between_sum(table, *pair.first, *pair.second);
}

std::int64_t intersection_number(const GaussDiagram& diagram, ChordId i, ChordId j,
                                 ArrowConvention convention) {
  const auto table = chord_table(diagram, convention);
  const auto pair = locate(table, i, j);
  const std::int64_t value = ordered_intersection(table, *pair.first, *pair.second);
  return pair.swapped ? -value : value;
}

VPolynomials v_polys(const GaussDiagram& diagram, ArrowConvention convention) {
  const auto table = chord_table(diagram, convention);
  VPolynomials out;
  for_each_linked_pair(table, [&](const ChordMeta& a, const ChordMeta& b, LinkKind kind) {
    auto& target = kind == LinkKind::In ? out.v1 : out.v2;
    target.add_term(ordered_intersection(table, a, b), to_int(a.sign * b.sign));
  });
  return out;
}

std::int64_t v21_direct(const GaussDiagram& diagram) {
  const auto table = chord_table(diagram);
  std::int64_t sum = 0;
  for_each_linked_pair(table, [&](const ChordMeta& a, const ChordMeta& b, LinkKind kind) {
    if (kind == LinkKind::In) {
      sum += to_int(a.sign * b.sign);
    }
  });
  return sum;
}

std::int64_t v22_direct(const GaussDiagram& diagram) {
  const auto table = chord_table(diagram);
  std::int64_t sum = 0;
  for_each_linked_pair(table, [&](const ChordMeta& a, const ChordMeta& b, LinkKind kind) {
    if (kind == LinkKind::Out) {
      sum += to_int(a.sign * b.sign);
    }
  });
  return sum;
}

Integer alpha2(const GaussDiagram& diagram) { return eval_at_one(v_polys(diagram).v1); }

Integer alpha3(const GaussDiagram& diagram) {
  const auto v1 = v_polys(diagram).v1;
  return derivative_at_one(v1) - eval_at_one(v1);
}

InvariantReport compute_report(const GaussDiagram& diagram) {
  auto polys = v_polys(diagram);
  InvariantReport r;
  r.gauss_code = serialize(diagram);
  r.n = diagram.chord_count();
  r.v21 = eval_at_one(polys.v1);
  r.v22 = eval_at_one(polys.v2);
  r.v1_prime_1 = derivative_at_one(polys.v1);
  r.v2_prime_1 = derivative_at_one(polys.v2);
  r.alpha2 = r.v21;
  r.alpha3 = r.v1_prime_1 - r.alpha2;
  r.v1 = std::move(polys.v1);
  r.v2 = std::move(polys.v2);
  return r;
}

LaurentPolynomial virtualization_alt_sum(const GaussDiagram& diagram,
                                         std::span<const ChordId> subset) {
  return alternating_sum(diagram, subset, LocalChange::Virtualize,
                         [](const GaussDiagram& d) { return v_polys(d).v1; });
}

LaurentPolynomial crossing_change_alt_sum(const GaussDiagram& diagram,
                                          std::span<const ChordId> subset) {
  return alternating_sum(diagram, subset, LocalChange::CrossingChange,
                         [](const GaussDiagram& d) { return v_polys(d).v1; });
}

}  // namespace vknot
