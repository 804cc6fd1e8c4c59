#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/generate.hpp"

namespace vknot {

enum class MoveKind {
  R1Insert,
  R1Delete,
  R2Insert,
  R2Delete,
  R3,
  Welded,
  Delta,
  Virtualize,
  CrossingChange,
};

inline constexpr std::array<MoveKind, 9> kAllMoveKinds{
    MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert,
    MoveKind::R2Delete, MoveKind::R3,       MoveKind::Welded,
    MoveKind::Delta,    MoveKind::Virtualize, MoveKind::CrossingChange,
};

std::string_view to_string(MoveKind kind);
/// Throws ParseError for unknown names.
MoveKind parse_move_kind(std::string_view name);

/// New isolated chord whose endpoints occupy word slots `slot` and `slot+1`
/// of the result.
struct R1Insert {
  std::size_t slot;
  Passage first;
  Sign sign;
};

/// Removes the chord at positions pos, pos+1.
struct R1Delete {
  std::size_t pos;
};

/// Two new chords x, y with sign(x) = sign, sign(y) = -sign. One pair of
/// adjacent endpoints is inserted at `first_slot` and the other at
/// `second_slot` (both slots index the word before insertion, first <= second).
/// The pair at first_slot has passage `first` for both chords, ordered x y;
/// the other pair is ordered y x when antiparallel, x y otherwise.
struct R2Insert {
  std::size_t first_slot;
  std::size_t second_slot;
  Passage first;
  bool antiparallel;
  Sign sign;
};

/// Removes two chords of opposite sign whose Over endpoints sit at
/// over_pos, over_pos+1 and whose Under endpoints sit at under_pos, under_pos+1.
struct R2Delete {
  std::size_t over_pos;
  std::size_t under_pos;
};

/// Triangle site: three disjoint pairs of adjacent endpoints (given by their
/// first positions, ascending) over three chords. The move exchanges the two
/// endpoints of every pair.
///
/// variant: 1..6, the order in which the top (T), middle (M) and bottom (B)
/// strands are met along the line: TMB, BMT, MTB, BTM, TBM, MBT.
/// cyclic: each chord has one endpoint leading its pair and one trailing.
struct R3Move {
  std::array<std::size_t, 3> pairs;
  int variant;
  bool cyclic;
};

/// Exchanges two adjacent Over (initial) endpoints at pos, pos+1.
struct WeldedMove {
  std::size_t pos;
};

/// Triangle site with cyclic heights. forward: the strand through the
/// smallest pair meets its over-crossing first.
struct DeltaMove {
  std::array<std::size_t, 3> pairs;
  bool forward;
};

struct Virtualize {
  ChordId chord;
};

struct CrossingChange {
  ChordId chord;
};

using MoveSite = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Move, WeldedMove,
                              DeltaMove, Virtualize, CrossingChange>;

MoveKind kind_of(const MoveSite& site);

/// Every applicable site of `kind`, in a fixed order (ascending positions,
/// then parameters). Insertion kinds list every slot and parameter choice.
std::vector<MoveSite> enumerate_sites(const GaussDiagram& diagram, MoveKind kind);

/// Rewrites the diagram. Chords added by insertions get ids above
/// max_chord_id(); the result is not renumbered. Throws MoveError when the
/// site is out of range or its local pattern is absent.
GaussDiagram apply_move(const GaussDiagram& diagram, const MoveSite& site);

/// Uniformly random applicable site of `kind`, or nullopt when there is none.
std::optional<MoveSite> sample_site(const GaussDiagram& diagram, MoveKind kind, Rng& rng);

/// Inserts three new chords forming a random realizable R3 or Delta triangle
/// (kind must be R3 or Delta) at random slots of `diagram`.
GaussDiagram plant_triangle(const GaussDiagram& diagram, MoveKind kind, Rng& rng);

/// "R3.I" .. "R3.VI" and "Delta.forward"/"Delta.backward" for triangle
/// sites, to_string(kind) otherwise.
std::string coverage_key(const MoveSite& site);

/// Site parameters as space-separated key=value fields.
std::string format_site(const MoveSite& site);
/// Inverse of format_site for the given kind. Throws ParseError.
MoveSite parse_site(MoveKind kind, std::string_view fields);

struct WalkResult {
  GaussDiagram diagram;
  /// Line 0 is "0 start | <code>"; line k is "k <Kind> <fields> | <code>" or
  /// "k <Kind> skipped | <code>".
  std::vector<std::string> transcript;
  std::map<std::string, std::size_t> coverage;
  std::size_t skipped = 0;
};

/// Applies `length` moves. Each step draws a kind uniformly from `kinds`,
/// then a uniform site of that kind; a kind with no site skips the step. The
/// diagram is renumbered canonically before the walk and after every step,
/// so transcript sites refer to the code on the previous line.
WalkResult random_walk(const GaussDiagram& diagram, std::span<const MoveKind> kinds,
                       std::size_t length, Rng& rng);
WalkResult random_walk(const GaussDiagram& diagram, std::span<const MoveKind> kinds,
                       std::size_t length, std::uint64_t seed);

struct ReplayStep {
  std::size_t step;
  std::optional<MoveSite> site;  // nullopt for skipped steps
  GaussDiagram before;
  GaussDiagram after;
};

/// Re-applies a transcript. Throws ParseError for malformed lines and
/// MoveError when a recorded result does not match the recomputed one.
std::vector<ReplayStep> replay(std::span<const std::string> transcript);

/// Moves that generate equivalence for the class (insertions and deletions
/// of R1, R2, plus R3; Welded adds the welded move).
std::vector<MoveKind> equivalence_moves(DiagramClass diagram_class);

}  // namespace vknot
