#include "verify.hpp"

#include <functional>
#include <stdexcept>

#include <vknot/vknot.hpp>

namespace vknot::cli {

namespace {

std::size_t chords_up_to(Rng& rng, std::size_t max) { return rng.below(max + 1); }

std::string describe(const std::string& what, const GaussDiagram& d) {
  return what + ": " + serialize(d);
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::string invariance_case(Rng& rng, std::size_t max_chords, SuiteResult& result) {
  GaussDiagram d;
  if (max_chords >= 3 && rng.coin()) {
    // Seed an R3 triangle so the walk has one to use.
    d = plant_triangle(random_diagram(chords_up_to(rng, max_chords - 3), rng), MoveKind::R3, rng);
  } else {
    d = random_diagram(chords_up_to(rng, max_chords), rng);
  }
  const auto kinds = equivalence_moves(DiagramClass::Virtual);
  const auto walk = random_walk(d, kinds, rng.below(13), rng);
  for (const auto& [key, count] : walk.coverage) {
    result.coverage[key] += count;
  }
  if (v_polys(d) == v_polys(walk.diagram)) {
    return {};
  }
  return "V1/V2 changed along walk:\n" + join(walk.transcript);
}

std::string symmetry_case(Rng& rng, std::size_t max_chords, SuiteResult&) {
  const auto d = random_diagram(chords_up_to(rng, max_chords), rng);
  const auto p = v_polys(d);
  const auto rev = v_polys(reversed(d));
  const auto mir = v_polys(mirrored(d));
  const auto sw = v_polys(switched(d));
  if (rev.v1 != substitute_inverse(p.v1) || rev.v2 != substitute_inverse(p.v2)) {
    return describe("reverse does not invert t", d);
  }
  if (mir.v1 != substitute_inverse(p.v1) || mir.v2 != substitute_inverse(p.v2)) {
    return describe("mirror does not invert t", d);
  }
  if (sw.v1 != p.v2 || sw.v2 != p.v1) {
    return describe("switch does not exchange V1 and V2", d);
  }
  const Integer a2 = alpha2(d);
  const Integer a3 = alpha3(d);
  if (alpha2(reversed(d)) != a2 || alpha3(reversed(d)) != -2 * a2 - a3) {
    return describe("alpha identities fail under reversal", d);
  }
  return {};
}

std::string additivity_case(Rng& rng, std::size_t max_chords, SuiteResult&) {
  const auto a = random_diagram(chords_up_to(rng, max_chords), rng);
  const auto b = random_diagram(chords_up_to(rng, max_chords), rng);
  const auto pa = v_polys(a);
  const auto pb = v_polys(b);
  const auto pc = v_polys(concat(a, b));
  if (pc.v1 != pa.v1 + pb.v1 || pc.v2 != pa.v2 + pb.v2) {
    return "not additive: " + serialize(a) + " / " + serialize(b);
  }
  return {};
}

std::vector<ChordId> random_subset(const GaussDiagram& d, std::size_t size, Rng& rng) {
  auto ids = chord_ids(d);
  for (std::size_t k = 0; k < size; ++k) {
    std::swap(ids[k], ids[k + rng.below(ids.size() - k)]);
  }
  ids.resize(size);
  return ids;
}

std::string subset_text(const std::vector<ChordId>& ids) {
  std::string out;
  for (auto id : ids) {
    out += (out.empty() ? "" : ",") + std::to_string(to_int(id));
  }
  return out;
}

std::string finite_type_case(Rng& rng, std::size_t max_chords, SuiteResult&) {
  const std::size_t n = 4 + rng.below(max_chords >= 4 ? max_chords - 3 : 1);
  const auto d = random_diagram(n, rng);
  for (std::size_t size : {3u, 4u}) {
    const auto subset = random_subset(d, size, rng);
    if (!crossing_change_alt_sum(d, subset).is_zero()) {
      return describe("crossing-change sum over {" + subset_text(subset) + "} is not 0", d);
    }
  }
  const auto subset = random_subset(d, 4, rng);
  const Integer sum = alternating_sum(d, subset, LocalChange::Virtualize, [](const GaussDiagram& x) {
    return derivative_at_one(v_polys(x).v1);
  });
  if (sum != 0) {
    return describe("virtualization sum of V1'(1) over {" + subset_text(subset) + "} is not 0", d);
  }
  return {};
}

std::string delta_case(Rng& rng, std::size_t max_chords, SuiteResult& result) {
  const std::size_t room = max_chords >= 3 ? max_chords - 3 : 0;
  const auto d = plant_triangle(random_diagram(chords_up_to(rng, room), rng), MoveKind::Delta, rng)
                     .canonical();
  const auto sites = enumerate_sites(d, MoveKind::Delta);
  if (sites.empty()) {
    return describe("planted Delta triangle not found", d);
  }
  const MoveSite& site = sites[rng.below(sites.size())];
  ++result.coverage[coverage_key(site)];
  const auto after = apply_move(d, site);
  const auto p = v_polys(d);
  const auto q = v_polys(after);
  const auto d1 = q.v1 - p.v1;
  const auto d2 = q.v2 - p.v2;
  if (d1 != d2 || one_norm(d1) != 1) {
    return describe("Delta move at " + format_site(site) + " changed V1 by " + format_poly(d1) +
                        " and V2 by " + format_poly(d2),
                    d);
  }
  // The same pairs carry the reverse move.
  const auto back = enumerate_sites(after, MoveKind::Delta);
  const auto& pairs = std::get<DeltaMove>(site).pairs;
  for (const auto& s : back) {
    if (std::get<DeltaMove>(s).pairs == pairs) {
      if (!(apply_move(after, s) == d)) {
        return describe("Delta move at " + format_site(site) + " is not undone", d);
      }
      return {};
    }
  }
  return describe("no reverse Delta move at " + format_site(site), d);
}

std::string welded_case(Rng& rng, std::size_t max_chords, SuiteResult&) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto d = random_diagram(2 + rng.below(max_chords >= 2 ? max_chords - 1 : 1), rng);
    const auto sites = enumerate_sites(d, MoveKind::Welded);
    if (sites.empty()) {
      continue;
    }
    const MoveSite& site = sites[rng.below(sites.size())];
    const auto after = apply_move(d, site);
    if (derivative_at_one(v_polys(d).v1) != derivative_at_one(v_polys(after).v1)) {
      return describe("welded move at " + format_site(site) + " changed V1'(1)", d);
    }
    return {};
  }
  return {};
}

std::string formula_case(Rng& rng, std::size_t max_chords, SuiteResult&) {
  const auto d = random_diagram(chords_up_to(rng, std::min<std::size_t>(max_chords, 6)), rng);
  const auto r = compute_report(d);
  if (standard_pairings(d) != pattern_counts_semantic(d)) {
    return describe("pattern pairings disagree with the linked-pair evaluation", d);
  }
  if (Integer(v1_prime_gd(d)) != r.v1_prime_1 || Integer(v2_prime_gd(d)) != r.v2_prime_1) {
    return describe("Gauss diagram formula for V'(1) disagrees", d);
  }
  if (Integer(alpha2_gd(d)) != r.alpha2 || Integer(alpha3_gd(d)) != r.alpha3) {
    return describe("Gauss diagram formula for alpha2/alpha3 disagrees", d);
  }
  if (v21_direct(d) != r.v21 || v22_direct(d) != r.v22) {
    return describe("direct v21/v22 disagree with V(1)", d);
  }
  return {};
}

const std::map<std::string, std::function<std::string(Rng&, std::size_t, SuiteResult&)>>& suites() {
  static const std::map<std::string, std::function<std::string(Rng&, std::size_t, SuiteResult&)>>
      table{
          {"invariance", invariance_case}, {"symmetry", symmetry_case},
          {"additivity", additivity_case}, {"finite-type", finite_type_case},
          {"delta", delta_case},           {"welded", welded_case},
          {"formula", formula_case},
      };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"invariance", "symmetry", "additivity", "finite-type",
                                              "delta",      "welded",   "formula"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  const auto it = suites().find(std::string(name));
  if (it == suites().end()) {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  SuiteResult result;
  result.name = std::string(name);
  Rng rng(options.seed);
  for (std::size_t k = 0; k < options.count; ++k) {
    ++result.cases;
    std::string failure = it->second(rng, options.max_chords, result);
    if (!failure.empty()) {
      ++result.failures;
      if (result.reports.size() < kMaxReports) {
        result.reports.push_back("case " + std::to_string(k) + ": " + failure);
      }
    }
  }
  return result;
}

}  // namespace vknot::cli
