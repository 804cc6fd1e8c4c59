#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

/// Small arrow diagram used as the left argument of the pairing. The word is
/// canonical (chords 1..m by first appearance); constraint k applies to chord
/// k+1, nullopt meaning "either sign".
struct PatternDiagram {
  std::string name;
  std::vector<Endpoint> word;
  std::vector<std::optional<Sign>> constraints;

  std::size_t chord_count() const noexcept { return constraints.size(); }
};

inline constexpr std::size_t kMaxPatternChords = 3;

/// Gauss-code text where '*' is also accepted as a sign. Lines starting with
/// '#' are ignored. Throws ParseError, or DiagramError when the pattern has
/// more than kMaxPatternChords chords.
PatternDiagram parse_pattern(std::string_view text, std::string name = {});

/// D1..D10 (s = 1..10), read from the pattern files shipped with the library.
/// Throws std::out_of_range for other s.
const PatternDiagram& standard_pattern(int s);

/// <P, D>: over chord subsets of D whose induced word equals P's word and
/// whose signs meet P's constraints, the sum of the products of their signs.
std::int64_t pairing(const PatternDiagram& pattern, const GaussDiagram& diagram);

/// <D_s, D> for s = 1..10 (index s-1).
std::array<std::int64_t, 10> standard_pairings(const GaussDiagram& diagram);

/// The same ten numbers obtained from the linked pairs directly: the
/// correction term of each in-pair split by its two left-endpoint signs, and
/// every chord counted in that pair's S-sum split by which interval
/// condition it meets and by its type. Independent of the pattern files.
std::array<std::int64_t, 10> pattern_counts_semantic(const GaussDiagram& diagram);

/// V1'(1) = <D1> - <D2> + <D3> - <D4> + <D5> - <D6> + <D7> - <D8>.
std::int64_t v1_prime_gd(const GaussDiagram& diagram);
/// V2'(1) = V1'(1) of the switched diagram.
std::int64_t v2_prime_gd(const GaussDiagram& diagram);
/// alpha2 = <D7> + <D8> + <D9> + <D10>.
std::int64_t alpha2_gd(const GaussDiagram& diagram);
/// alpha3 = <D1> - <D2> + <D3> - <D4> + <D5> - <D6> - 2<D8> - <D9> - <D10>.
std::int64_t alpha3_gd(const GaussDiagram& diagram);

}  // namespace vknot
