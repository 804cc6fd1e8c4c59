#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/generate.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

enum class Family { K, KPrime };

struct FamilySpec {
  Family name;
  std::size_t n;
};

/// K(n): chords c1 (+, over first), c2 (+, under first) linked as an in-pair,
/// and n negative chords c3..c(n+2) nested inside the interval between the
/// left endpoints of c1 and c2's right endpoint so that each adds one to the
/// intersection number. V1 = t^n, V2 = 0. K'(n) is K(n) with c2 negated:
/// V1 = -t^(n-1), V2 = 0.
GaussDiagram family(const FamilySpec& spec);

/// Diagrams used as fixed reference points:
///   "example"   four chords, V1 = -t^3 - 2t, V2 = -t
///   "trefoil"   long trefoil, V1 = V2 = 1
///   "k7"        two chords, V1 = -t (alpha2 = -1, alpha3 = 0)
///   "hopf_in"   two positive chords forming one in-pair, V1 = 1
///   "d1_plus"   the all-positive three-chord diagram matching D1
/// Throws std::out_of_range for other names.
GaussDiagram reference_diagram(std::string_view name);
std::vector<std::string_view> reference_names();

inline constexpr std::size_t kMaxRealizeChords = 200000;

/// Diagram with (V1, V2) = (f, g). Each term c t^m of f contributes |c|
/// copies of one factor:
///   c > 0, m >= 0:   K(m)          c < 0, m >= -1:  K'(m+1)
///   c > 0, m < 0:    -K(-m)        c < 0, m < -1:   -K'(1-m)
/// in increasing order of m; g is built the same way and switched, and the
/// two parts are concatenated. The result is recomputed and a mismatch
/// throws VerificationError. Throws CapExceeded beyond kMaxRealizeChords.
GaussDiagram realize(const LaurentPolynomial& f, const LaurentPolynomial& g);

struct DeltaBoundReport {
  LaurentPolynomial difference;       // V1(D) - V1(D')
  std::optional<Integer> lower_bound;  // empty when obstructed
  bool obstruction = false;           // V1 - V2 differs: not Delta-equivalent
};

DeltaBoundReport delta_bound(const GaussDiagram& a, const GaussDiagram& b);

/// First diagram in enumeration order (by chord count 0..n_max, then the
/// order of for_each_diagram) satisfying the predicate. Throws CapExceeded
/// when n_max > cap.
std::optional<GaussDiagram> search_diagram(const std::function<bool(const GaussDiagram&)>& predicate,
                                           std::size_t n_max,
                                           std::size_t cap = kDefaultEnumerationCap);

}  // namespace vknot
