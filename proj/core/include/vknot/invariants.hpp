#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vknot/error.hpp"
#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

enum class LinkKind { In, Out };

/// Ordered linked pair (i, j) with l_i before l_j. In: i has type 0 and j
/// type 1 (both arrows point into the middle interval); Out: the reverse.
/// Linked pairs of equal type belong to neither set and are not reported.
struct LinkedPairRecord {
  ChordId i;
  ChordId j;
  LinkKind kind;
  std::int64_t intersection;  // alpha_i . alpha_j
  Sign weight;                // eps_i * eps_j
};

std::vector<LinkedPairRecord> linked_pairs(const GaussDiagram& diagram,
                                           ArrowConvention convention = kArrowConvention);

/// Sum of left-endpoint signs over chords k whose endpoints sit, relative to
/// a linked pair ordered l_a < l_b < r_a < r_b, in
///   (l_a, l_b) x (l_b, r_a),  (l_b, r_a) x (r_a, r_b)  or  (l_a, l_b) x (r_a, r_b).
/// Argument order does not matter. Throws NotLinkedError.
std::int64_t between_sign_sum(const GaussDiagram& diagram, ChordId i, ChordId j,
                              ArrowConvention convention = kArrowConvention);

/// alpha_i . alpha_j: between_sign_sum plus +1/-1 when both left endpoints
/// are positive/negative. Defined for the order l_i < l_j and extended to the
/// other order by antisymmetry. Throws NotLinkedError.
std::int64_t intersection_number(const GaussDiagram& diagram, ChordId i, ChordId j,
                                 ArrowConvention convention = kArrowConvention);

struct VPolynomials {
  LaurentPolynomial v1;
  LaurentPolynomial v2;

  friend bool operator==(const VPolynomials&, const VPolynomials&) = default;
};

/// V1 = sum over J_in of eps_i eps_j t^(alpha_i . alpha_j); V2 the same over J_out.
VPolynomials v_polys(const GaussDiagram& diagram, ArrowConvention convention = kArrowConvention);

/// Goussarov-Polyak-Viro v_{2,1} / v_{2,2}: signed counts of J_in / J_out,
/// computed without the polynomial machinery.
std::int64_t v21_direct(const GaussDiagram& diagram);
std::int64_t v22_direct(const GaussDiagram& diagram);

/// alpha2 = V1(1); alpha3 = V1'(1) - V1(1). Both are invariants of the
/// welded class of the diagram; for a diagram read up to Reidemeister moves
/// only they are still well defined but carry no Alexander-polynomial meaning.
Integer alpha2(const GaussDiagram& diagram);
Integer alpha3(const GaussDiagram& diagram);

struct InvariantReport {
  std::string gauss_code;
  std::size_t n = 0;
  LaurentPolynomial v1;
  LaurentPolynomial v2;
  Integer v21;
  Integer v22;
  Integer v1_prime_1;
  Integer v2_prime_1;
  Integer alpha2;
  Integer alpha3;
};

InvariantReport compute_report(const GaussDiagram& diagram);

enum class LocalChange { Virtualize, CrossingChange };

inline constexpr std::size_t kMaxAlternatingSubset = 20;

/// Sum over all delta in {0,1}^C of (-1)^|delta| * eval(D_delta), where
/// D_delta has the local change applied to the chords with delta = 1.
template <class Eval>
auto alternating_sum(const GaussDiagram& diagram, std::span<const ChordId> subset,
                     LocalChange change, Eval&& eval) -> decltype(eval(diagram)) {
  for (std::size_t a = 0; a < subset.size(); ++a) {
    if (!diagram.contains(subset[a])) {
      throw DiagramError("alternating sum: chord " + std::to_string(to_int(subset[a])) +
                         " is not in the diagram");
    }
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (subset[a] == subset[b]) {
        throw DiagramError("alternating sum: repeated chord");
      }
    }
  }
  if (subset.size() > kMaxAlternatingSubset) {
    throw CapExceeded("alternating sum over more than 20 chords");
  }
  decltype(eval(diagram)) total{};
  std::vector<ChordId> chosen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << subset.size()); ++mask) {
    chosen.clear();
    for (std::size_t k = 0; k < subset.size(); ++k) {
      if ((mask >> k) & 1u) {
        chosen.push_back(subset[k]);
      }
    }
    const GaussDiagram changed = change == LocalChange::Virtualize
                                     ? without_chords(diagram, chosen)
                                     : with_crossings_changed(diagram, chosen);
    if (chosen.size() % 2 == 0) {
      total += eval(changed);
    } else {
      total -= eval(changed);
    }
  }
  return total;
}

/// Alternating sum of V1 over virtualizations of the chords in `subset`.
LaurentPolynomial virtualization_alt_sum(const GaussDiagram& diagram,
                                         std::span<const ChordId> subset);

/// Alternating sum of V1 over crossing changes of the chords in `subset`.
LaurentPolynomial crossing_change_alt_sum(const GaussDiagram& diagram,
                                          std::span<const ChordId> subset);

}  // namespace vknot
