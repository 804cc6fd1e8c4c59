#include "vknot/construct.hpp"

#include <stdexcept>
#include <string>

#include "vknot/error.hpp"
#include "vknot/invariants.hpp"

namespace vknot {

GaussDiagram family(const FamilySpec& spec) {
  const std::uint32_t last = static_cast<std::uint32_t>(spec.n) + 2;
  const Sign second = spec.name == Family::K ? Sign::Positive : Sign::Negative;
  std::vector<Endpoint> word;
  word.reserve(2 * last);
  word.push_back({chord_id(1), Passage::Over});
  word.push_back({chord_id(2), Passage::Under});
  for (std::uint32_t k = 3; k <= last; ++k) {
    word.push_back({chord_id(k), Passage::Over});
  }
  word.push_back({chord_id(1), Passage::Under});
  for (std::uint32_t k = last; k >= 3; --k) {
    word.push_back({chord_id(k), Passage::Under});
  }
  word.push_back({chord_id(2), Passage::Over});
  std::map<ChordId, Sign> signs{{chord_id(1), Sign::Positive}, {chord_id(2), second}};
  for (std::uint32_t k = 3; k <= last; ++k) {
    signs.emplace(chord_id(k), Sign::Negative);
  }
  return GaussDiagram(std::move(word), std::move(signs));
}

namespace {

struct Reference {
  std::string_view name;
  std::string_view code;
};

constexpr std::array<Reference, 5> kReferences{{
    {"example", "O1- U2+ O3- U4+ U1- O2+ U3- O4+"},
    {"trefoil", "O1+ U2+ O3+ U1+ O2+ U3+"},
    {"k7", "O1- U2+ U1- O2+"},
    {"hopf_in", "O1+ U2+ U1+ O2+"},
    {"d1_plus", "O1+ U2+ U3+ O2+ U1+ O3+"},
}};

void append_term(std::vector<GaussDiagram>& factors, const Integer& coefficient,
                 LaurentPolynomial::Exponent m, std::size_t& chords) {
  GaussDiagram factor;
  if (coefficient > 0) {
    factor = m >= 0 ? family({Family::K, static_cast<std::size_t>(m)})
                    : reversed(family({Family::K, static_cast<std::size_t>(-m)}));
  } else {
    factor = m >= -1 ? family({Family::KPrime, static_cast<std::size_t>(m + 1)})
                     : reversed(family({Family::KPrime, static_cast<std::size_t>(1 - m)}));
  }
  const Integer copies = abs(coefficient);
  if (copies * factor.chord_count() + chords > kMaxRealizeChords) {
    throw CapExceeded("realization would need more than " + std::to_string(kMaxRealizeChords) +
                      " chords");
  }
  const auto count = static_cast<std::size_t>(copies);
  chords += count * factor.chord_count();
  for (std::size_t k = 0; k < count; ++k) {
    factors.push_back(factor);
  }
}

GaussDiagram build_part(const LaurentPolynomial& f, std::size_t& chords) {
  std::vector<GaussDiagram> factors;
  for (const auto& [m, c] : f.terms()) {
    append_term(factors, c, m, chords);
  }
  // Append words directly; concat() on a growing diagram would be quadratic.
  std::vector<Endpoint> word;
  std::map<ChordId, Sign> signs;
  std::uint32_t shift = 0;
  for (const auto& factor : factors) {
    for (const auto& e : factor.word()) {
      word.push_back({chord_id(to_int(e.chord) + shift), e.passage});
    }
    for (const auto& [chord, s] : factor.signs()) {
      signs.emplace(chord_id(to_int(chord) + shift), s);
    }
    shift += factor.max_chord_id();
  }
  return GaussDiagram(std::move(word), std::move(signs));
}

}  // namespace

GaussDiagram reference_diagram(std::string_view name) {
  for (const auto& r : kReferences) {
    if (r.name == name) {
      return parse_gauss(r.code);
    }
  }
  throw std::out_of_range("no reference diagram named '" + std::string(name) + "'");
}

std::vector<std::string_view> reference_names() {
  std::vector<std::string_view> names;
  for (const auto& r : kReferences) {
    names.push_back(r.name);
  }
  return names;
}

GaussDiagram realize(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  std::size_t chords = 0;
  const GaussDiagram first = build_part(f, chords);
  const GaussDiagram second = switched(build_part(g, chords));
  GaussDiagram result = concat(first, second);
  const auto check = v_polys(result);
  if (check.v1 != f || check.v2 != g) {
    throw VerificationError("realized diagram has V1 = " + format_poly(check.v1) + ", V2 = " +
                            format_poly(check.v2) + "; requested " + format_poly(f) + ", " +
                            format_poly(g));
  }
  return result;
}

DeltaBoundReport delta_bound(const GaussDiagram& a, const GaussDiagram& b) {
  const auto pa = v_polys(a);
  const auto pb = v_polys(b);
  DeltaBoundReport report;
  report.difference = pa.v1 - pb.v1;
  report.obstruction = (pa.v1 - pa.v2) != (pb.v1 - pb.v2);
  if (!report.obstruction) {
    report.lower_bound = one_norm(report.difference);
  }
  return report;
}

std::optional<GaussDiagram> search_diagram(const std::function<bool(const GaussDiagram&)>& predicate,
                                           std::size_t n_max, std::size_t cap) {
  if (n_max > cap) {
    throw CapExceeded("search up to " + std::to_string(n_max) + " chords exceeds cap " +
                      std::to_string(cap));
  }
  std::optional<GaussDiagram> found;
  for (std::size_t n = 0; n <= n_max && !found; ++n) {
    for_each_diagram(
        n,
        [&](const GaussDiagram& d) {
          if (predicate(d)) {
            found = d;
            return false;
          }
          return true;
        },
        cap);
  }
  return found;
}

}  // namespace vknot
