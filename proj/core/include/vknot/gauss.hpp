#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vknot {

enum class Passage : std::uint8_t { Over, Under };

/// Chord label inside one diagram. Labels are positive; the canonical form
/// numbers chords 1..n by first appearance along the line.
enum class ChordId : std::uint32_t {};

constexpr std::uint32_t to_int(ChordId id) noexcept { return static_cast<std::uint32_t>(id); }
constexpr ChordId chord_id(std::uint32_t value) noexcept { return static_cast<ChordId>(value); }

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::Positive : Sign::Negative; }
constexpr Passage opposite(Passage p) noexcept {
  return p == Passage::Over ? Passage::Under : Passage::Over;
}

struct Endpoint {
  ChordId chord;
  Passage passage;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Which endpoint of a chord is its head. The library computes with
/// OverToUnder (arrows run from the over-passage to the under-passage, so the
/// under endpoint is terminal and carries the chord sign); UnderToOver exists
/// only so the choice can be re-checked against reference values.
enum class ArrowConvention { OverToUnder, UnderToOver };
inline constexpr ArrowConvention kArrowConvention = ArrowConvention::OverToUnder;

/// Passage of the initial (tail) endpoint of every chord.
constexpr Passage initial_passage(ArrowConvention convention) noexcept {
  return convention == ArrowConvention::OverToUnder ? Passage::Over : Passage::Under;
}

/// Move set that defines equivalence: Reidemeister moves only, or
/// Reidemeister moves plus the welded (tail exchange) move.
enum class DiagramClass { Virtual, Welded };

/// Gauss diagram of a long virtual knot: a word of 2n endpoints on a line and
/// one sign per chord. Every chord occurs exactly once as Over and once as
/// Under. Immutable after construction.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  /// Throws DiagramError if the invariants do not hold.
  GaussDiagram(std::vector<Endpoint> word, std::map<ChordId, Sign> signs);

  std::span<const Endpoint> word() const noexcept { return word_; }
  const std::map<ChordId, Sign>& signs() const noexcept { return signs_; }
  Sign sign(ChordId chord) const;
  bool contains(ChordId chord) const { return signs_.count(chord) != 0; }

  std::size_t chord_count() const noexcept { return signs_.size(); }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  std::uint32_t max_chord_id() const noexcept;

  /// Chords renumbered 1..n by first appearance.
  GaussDiagram canonical() const;
  bool is_canonical() const;

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  std::vector<Endpoint> word_;
  std::map<ChordId, Sign> signs_;
};

/// Per-chord data derived from the word. `type` is 0 when the Over endpoint
/// comes first, 1 otherwise. Endpoint signs: the terminal endpoint carries the
/// chord sign, the initial endpoint its negation.
struct ChordMeta {
  ChordId chord;
  int type;
  std::size_t left_pos;
  std::size_t right_pos;
  Sign sign;
  Sign left_sign;
  Sign right_sign;
};

/// Chords ordered by left endpoint (so entry k is canonical chord k+1).
std::vector<ChordMeta> chord_table(const GaussDiagram& diagram,
                                   ArrowConvention convention = kArrowConvention);

/// Parses "O1+ U2- ..." (whitespace separated). Throws ParseError for bad
/// tokens and for semantic violations, with the column of the offending token.
GaussDiagram parse_gauss(std::string_view text);

/// Canonical text: chords renumbered by first appearance, single spaces.
std::string serialize(const GaussDiagram& diagram);

/// -D: the word read backwards.
GaussDiagram reversed(const GaussDiagram& diagram);
/// D*: all signs negated.
GaussDiagram mirrored(const GaussDiagram& diagram);
/// D#: all signs negated and every chord's passages exchanged.
GaussDiagram switched(const GaussDiagram& diagram);
/// D o D': the word of `second` appended, its chord ids shifted past
/// `first.max_chord_id()`.
GaussDiagram concat(const GaussDiagram& first, const GaussDiagram& second);

/// Drops the given chords (virtualization of those crossings).
GaussDiagram without_chords(const GaussDiagram& diagram, std::span<const ChordId> chords);
/// Crossing change on the given chords: sign negated, passages exchanged.
GaussDiagram with_crossings_changed(const GaussDiagram& diagram, std::span<const ChordId> chords);

std::vector<ChordId> chord_ids(const GaussDiagram& diagram);

}  // namespace vknot
