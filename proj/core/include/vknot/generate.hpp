#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

/// Seeded generator with a platform-independent stream: std::mt19937_64
/// (algorithm fixed by the standard) and bounded draws by rejection sampling
/// on the raw 64-bit output. Distribution objects from <random> are not used
/// because their output is implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 4;

/// Uniformly random diagram with `chords` chords. Sampler: scan slots left to
/// right; the first free slot is paired with a uniformly chosen remaining free
/// slot (below(remaining)), then one coin decides whether that chord's left
/// endpoint is Over (coin false) or Under, and one coin decides its sign
/// (false = '+'). Chords are labelled in order of their left endpoints, so the
/// result is canonical.
GaussDiagram random_diagram(std::size_t chords, Rng& rng);
GaussDiagram random_diagram(std::size_t chords, std::uint64_t seed);

/// (2n-1)!! * 4^n: matchings times passage orders times signs.
std::uint64_t diagram_count(std::size_t chords);

/// Visits every canonical diagram with exactly `chords` chords once, in the
/// canonical order: matchings in lexicographic order (first free slot paired
/// with each later free slot in increasing order), then passage mask, then
/// sign mask (bit k refers to chord k+1; a set bit means Under-first or '-').
/// Stops early when `visit` returns false. Throws CapExceeded when
/// chords > cap.
void for_each_diagram(std::size_t chords, const std::function<bool(const GaussDiagram&)>& visit,
                      std::size_t cap = kDefaultEnumerationCap);

std::vector<GaussDiagram> enumerate_diagrams(std::size_t chords,
                                             std::size_t cap = kDefaultEnumerationCap);

}  // namespace vknot
