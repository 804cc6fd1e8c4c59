#include "vknot/patterns.hpp"

#include <algorithm>
#include <stdexcept>

#include "gauss_text.hpp"
#include "pattern_data.hpp"
#include "vknot/error.hpp"

namespace vknot {

namespace {

std::array<PatternDiagram, 10> load_standard_patterns() {
  std::array<PatternDiagram, 10> out;
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s] = parse_pattern(detail::kPatternSources[s], "D" + std::to_string(s + 1));
  }
  return out;
}

struct Item {
  std::size_t pos;
  std::uint32_t chord;  // index into the chord table
  Passage passage;
};

}  // namespace

PatternDiagram parse_pattern(std::string_view text, std::string name) {
  // Blank out comment lines so columns stay meaningful for the rest.
  std::string body(text);
  std::size_t line_start = 0;
  while (line_start < body.size()) {
    std::size_t line_end = body.find('\n', line_start);
    if (line_end == std::string::npos) {
      line_end = body.size();
    }
    std::size_t first = line_start;
    while (first < line_end && (body[first] == ' ' || body[first] == '\t')) {
      ++first;
    }
    if (first < line_end && body[first] == '#') {
      std::fill(body.begin() + static_cast<std::ptrdiff_t>(line_start),
                body.begin() + static_cast<std::ptrdiff_t>(line_end), ' ');
    }
    line_start = line_end + 1;
  }
  auto parsed = detail::parse_gauss_word(body, true);
  if (parsed.signs.size() > kMaxPatternChords) {
    throw DiagramError("pattern has more than 3 chords");
  }
  std::map<ChordId, ChordId> relabel;
  PatternDiagram out;
  out.name = std::move(name);
  for (const auto& e : parsed.word) {
    auto [it, inserted] = relabel.try_emplace(e.chord, chord_id(relabel.size() + 1));
    out.word.push_back({it->second, e.passage});
  }
  out.constraints.resize(relabel.size());
  for (const auto& [old_id, new_id] : relabel) {
    out.constraints[to_int(new_id) - 1] = parsed.signs.at(old_id);
  }
  return out;
}

const PatternDiagram& standard_pattern(int s) {
  static const std::array<PatternDiagram, 10> patterns = load_standard_patterns();
  if (s < 1 || s > 10) {
    throw std::out_of_range("standard patterns are D1..D10");
  }
  return patterns[static_cast<std::size_t>(s - 1)];
}

std::int64_t pairing(const PatternDiagram& pattern, const GaussDiagram& diagram) {
  const std::size_t m = pattern.chord_count();
  const auto table = chord_table(diagram);
  const std::size_t n = table.size();
  if (m > n) {
    return 0;
  }
  if (m == 0) {
    return 1;
  }
  std::vector<std::size_t> pick(m);
  for (std::size_t k = 0; k < m; ++k) {
    pick[k] = k;
  }
  std::vector<Item> items(2 * m);
  std::vector<std::uint32_t> label(n);
  std::int64_t total = 0;
  for (;;) {
    for (std::size_t k = 0; k < m; ++k) {
      const auto& c = table[pick[k]];
      const Passage left_passage = c.type == 0 ? Passage::Over : Passage::Under;
      items[2 * k] = {c.left_pos, static_cast<std::uint32_t>(pick[k]), left_passage};
      items[2 * k + 1] = {c.right_pos, static_cast<std::uint32_t>(pick[k]), opposite(left_passage)};
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.pos < b.pos; });
    // Chords of the table are ordered by left endpoint, so increasing table
    // index is the order of first appearance within the subset.
    for (std::size_t k = 0; k < m; ++k) {
      label[pick[k]] = static_cast<std::uint32_t>(k + 1);
    }
    bool match = true;
    for (std::size_t e = 0; e < items.size() && match; ++e) {
      const Endpoint& want = pattern.word[e];
      match = to_int(want.chord) == label[items[e].chord] && want.passage == items[e].passage;
    }
    int product = 1;
    for (std::size_t k = 0; k < m && match; ++k) {
      const Sign s = table[pick[k]].sign;
      const auto& constraint = pattern.constraints[k];
      match = !constraint || *constraint == s;
      product *= to_int(s);
    }
    if (match) {
      total += product;
    }
    // Next m-subset in lexicographic order.
    std::size_t k = m;
    while (k > 0 && pick[k - 1] == n - m + (k - 1)) {
      --k;
    }
    if (k == 0) {
      break;
    }
    ++pick[k - 1];
    for (std::size_t r = k; r < m; ++r) {
      pick[r] = pick[r - 1] + 1;
    }
  }
  return total;
}

std::array<std::int64_t, 10> standard_pairings(const GaussDiagram& diagram) {
  std::array<std::int64_t, 10> out{};
  for (int s = 1; s <= 10; ++s) {
    out[static_cast<std::size_t>(s - 1)] = pairing(standard_pattern(s), diagram);
  }
  return out;
}

std::array<std::int64_t, 10> pattern_counts_semantic(const GaussDiagram& diagram) {
  const auto table = chord_table(diagram);
  std::array<std::int64_t, 10> count{};
  for (const auto& a : table) {
    for (const auto& b : table) {
      const bool linked = a.left_pos < b.left_pos && b.left_pos < a.right_pos && a.right_pos < b.right_pos;
      if (!linked || a.type != 0 || b.type != 1) {
        continue;
      }
      const int w = to_int(a.sign * b.sign);
      if (a.left_sign == Sign::Positive && b.left_sign == Sign::Positive) {
        count[6] += w;
      } else if (a.left_sign == Sign::Negative && b.left_sign == Sign::Negative) {
        count[7] += w;
      } else if (a.sign == Sign::Positive) {
        count[8] += w;
      } else {
        count[9] += w;
      }
      for (const auto& k : table) {
        if (k.chord == a.chord || k.chord == b.chord) {
          continue;
        }
        const bool l_first = a.left_pos < k.left_pos && k.left_pos < b.left_pos;
        const bool l_middle = b.left_pos < k.left_pos && k.left_pos < a.right_pos;
        const bool r_middle = b.left_pos < k.right_pos && k.right_pos < a.right_pos;
        const bool r_last = a.right_pos < k.right_pos && k.right_pos < b.right_pos;
        int condition = -1;
        if (l_first && r_middle) {
          condition = 0;
        } else if (l_middle && r_last) {
          condition = 1;
        } else if (l_first && r_last) {
          condition = 2;
        }
        if (condition < 0) {
          continue;
        }
        const std::size_t slot = static_cast<std::size_t>(2 * condition + (k.type == 1 ? 0 : 1));
        count[slot] += w * to_int(k.sign);
      }
    }
  }
  return count;
}

std::int64_t v1_prime_gd(const GaussDiagram& diagram) {
  const auto p = standard_pairings(diagram);
  return p[0] - p[1] + p[2] - p[3] + p[4] - p[5] + p[6] - p[7];
}

std::int64_t v2_prime_gd(const GaussDiagram& diagram) { return v1_prime_gd(switched(diagram)); }

std::int64_t alpha2_gd(const GaussDiagram& diagram) {
  const auto p = standard_pairings(diagram);
  return p[6] + p[7] + p[8] + p[9];
}

std::int64_t alpha3_gd(const GaussDiagram& diagram) {
  const auto p = standard_pairings(diagram);
  return p[0] - p[1] + p[2] - p[3] + p[4] - p[5] - 2 * p[7] - p[8] - p[9];
}

}  // namespace vknot
