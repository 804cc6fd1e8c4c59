#include "vknot/generate.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "vknot/error.hpp"

namespace vknot {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("Rng::below: bound must be positive");
  }
  // Values under `threshold` would bias the modulo; 2^64 mod bound of them.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) {
      return r % bound;
    }
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) {
    throw std::invalid_argument("Rng::between: empty range");
  }
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::int64_t>(engine_());
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
}

GaussDiagram random_diagram(std::size_t chords, Rng& rng) {
  const std::size_t length = 2 * chords;
  std::vector<std::size_t> free_slots(length);
  for (std::size_t i = 0; i < length; ++i) {
    free_slots[i] = i;
  }
  std::vector<Endpoint> word(length);
  std::map<ChordId, Sign> signs;
  std::uint32_t label = 0;
  while (!free_slots.empty()) {
    const std::size_t left = free_slots.front();
    free_slots.erase(free_slots.begin());
    const std::size_t pick = rng.below(free_slots.size());
    const std::size_t right = free_slots[pick];
    free_slots.erase(free_slots.begin() + static_cast<std::ptrdiff_t>(pick));
    const ChordId id = chord_id(++label);
    const bool under_first = rng.coin();
    const bool negative = rng.coin();
    word[left] = {id, under_first ? Passage::Under : Passage::Over};
    word[right] = {id, under_first ? Passage::Over : Passage::Under};
    signs.emplace(id, negative ? Sign::Negative : Sign::Positive);
  }
  return GaussDiagram(std::move(word), std::move(signs));
}

GaussDiagram random_diagram(std::size_t chords, std::uint64_t seed) {
  Rng rng(seed);
  return random_diagram(chords, rng);
}

std::uint64_t diagram_count(std::size_t chords) {
  std::uint64_t count = 1;
  for (std::size_t k = 1; k <= chords; ++k) {
    count *= (2 * k - 1) * 4;
  }
  return count;
}

namespace {

// Fills `partner` with every perfect matching of the slots, lexicographically.
bool for_each_matching(std::vector<int>& partner, const std::function<bool()>& visit) {
  std::size_t first = 0;
  while (first < partner.size() && partner[first] >= 0) {
    ++first;
  }
  if (first == partner.size()) {
    return visit();
  }
  for (std::size_t other = first + 1; other < partner.size(); ++other) {
    if (partner[other] >= 0) {
      continue;
    }
    partner[first] = static_cast<int>(other);
    partner[other] = static_cast<int>(first);
    const bool keep_going = for_each_matching(partner, visit);
    partner[first] = -1;
    partner[other] = -1;
    if (!keep_going) {
      return false;
    }
  }
  return true;
}

}  // namespace

void for_each_diagram(std::size_t chords, const std::function<bool(const GaussDiagram&)>& visit,
                      std::size_t cap) {
  if (chords > cap) {
    throw CapExceeded("enumeration of " + std::to_string(chords) + " chords exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<int> partner(2 * chords, -1);
  const std::uint32_t masks = 1u << chords;
  for_each_matching(partner, [&]() {
    // Label chords by left endpoint.
    std::vector<std::uint32_t> label(partner.size(), 0);
    std::uint32_t next = 0;
    for (std::size_t pos = 0; pos < partner.size(); ++pos) {
      if (static_cast<std::size_t>(partner[pos]) > pos) {
        label[pos] = next;
        label[static_cast<std::size_t>(partner[pos])] = next;
        ++next;
      }
    }
    for (std::uint32_t passage_mask = 0; passage_mask < masks; ++passage_mask) {
      std::vector<Endpoint> word(partner.size());
      for (std::size_t pos = 0; pos < partner.size(); ++pos) {
        const std::uint32_t k = label[pos];
        const bool is_left = static_cast<std::size_t>(partner[pos]) > pos;
        const bool under_first = (passage_mask >> k) & 1u;
        word[pos] = {chord_id(k + 1), (is_left != under_first) ? Passage::Over : Passage::Under};
      }
      for (std::uint32_t sign_mask = 0; sign_mask < masks; ++sign_mask) {
        std::map<ChordId, Sign> signs;
        for (std::uint32_t k = 0; k < chords; ++k) {
          signs.emplace(chord_id(k + 1), ((sign_mask >> k) & 1u) ? Sign::Negative : Sign::Positive);
        }
        if (!visit(GaussDiagram(word, std::move(signs)))) {
          return false;
        }
      }
    }
    return true;
  });
}

std::vector<GaussDiagram> enumerate_diagrams(std::size_t chords, std::size_t cap) {
  std::vector<GaussDiagram> out;
  for_each_diagram(
      chords,
      [&](const GaussDiagram& d) {
        out.push_back(d);
        return true;
      },
      cap);
  return out;
}

}  // namespace vknot
