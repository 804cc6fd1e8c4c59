#include "vknot/moves.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "triangle.hpp"
#include "vknot/error.hpp"

namespace vknot {

namespace {

using detail::Corner;
using detail::TriangleConfig;
using detail::TriangleKind;

constexpr std::array<std::string_view, 9> kKindNames{
    "R1Insert", "R1Delete", "R2Insert", "R2Delete", "R3",
    "Welded",   "Delta",    "Virtualize", "CrossingChange",
};

constexpr std::array<std::string_view, 6> kVariantNames{"I", "II", "III", "IV", "V", "VI"};

// Strand order along the line, top/middle/bottom as T/M/B, for variants I..VI.
constexpr std::array<std::string_view, 6> kVariantOrders{"TMB", "BMT", "MTB", "BTM", "TBM", "MBT"};

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

std::vector<Endpoint> copy_word(const GaussDiagram& d) {
  return {d.word().begin(), d.word().end()};
}

std::size_t position_of(const GaussDiagram& d, ChordId chord, Passage passage) {
  const auto w = d.word();
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].chord == chord && w[p].passage == passage) {
      return p;
    }
  }
  throw DiagramError("no endpoint for chord " + std::to_string(to_int(chord)));
}

struct TriangleMatch {
  TriangleKind kind;
  std::array<std::size_t, 3> pairs;
  std::array<int, 3> strand_pair;  // strand A/B/C -> index into pairs
  TriangleConfig config;
  bool realizable;
};

std::optional<TriangleMatch> classify_triangle(const GaussDiagram& d,
                                               const std::array<std::size_t, 3>& pairs) {
  const auto w = d.word();
  for (int k = 0; k < 3; ++k) {
    if (pairs[k] + 1 >= w.size()) {
      return std::nullopt;
    }
    if (k > 0 && pairs[k] < pairs[k - 1] + 2) {
      return std::nullopt;
    }
    if (w[pairs[k]].chord == w[pairs[k] + 1].chord) {
      return std::nullopt;
    }
  }
  std::map<ChordId, int> seen;
  for (auto p : pairs) {
    ++seen[w[p].chord];
    ++seen[w[p + 1].chord];
  }
  if (seen.size() != 3) {
    return std::nullopt;
  }
  auto holds = [&](int pair, ChordId c) {
    return w[pairs[pair]].chord == c || w[pairs[pair] + 1].chord == c;
  };
  auto partner = [&](int pair, ChordId c) {
    for (int other = 0; other < 3; ++other) {
      if (other != pair && holds(other, c)) {
        return other;
      }
    }
    return -1;
  };
  std::array<int, 3> over_count{};
  for (int k = 0; k < 3; ++k) {
    over_count[k] = (w[pairs[k]].passage == Passage::Over) + (w[pairs[k] + 1].passage == Passage::Over);
  }

  TriangleMatch m{};
  m.pairs = pairs;
  auto sorted_counts = over_count;
  std::sort(sorted_counts.begin(), sorted_counts.end());
  if (sorted_counts == std::array<int, 3>{0, 1, 2}) {
    m.kind = TriangleKind::R3;
    for (int k = 0; k < 3; ++k) {
      m.strand_pair[2 - over_count[k]] = k;
    }
  } else if (sorted_counts == std::array<int, 3>{1, 1, 1}) {
    m.kind = TriangleKind::Delta;
    auto over_partner = [&](int pair) {
      const std::size_t p = pairs[pair];
      const ChordId c = w[p].passage == Passage::Over ? w[p].chord : w[p + 1].chord;
      return partner(pair, c);
    };
    m.strand_pair[0] = 0;
    m.strand_pair[1] = over_partner(0);
    m.strand_pair[2] = over_partner(m.strand_pair[1]);
    if (m.strand_pair[1] < 0 || m.strand_pair[2] < 0 || m.strand_pair[2] == 0) {
      return std::nullopt;
    }
  } else {
    return std::nullopt;
  }

  std::array<int, 3> strand_of_pair{};
  for (int s = 0; s < 3; ++s) {
    strand_of_pair[m.strand_pair[s]] = s;
  }
  auto corner_between = [](int s, int t) {
    const int lo = std::min(s, t);
    const int hi = std::max(s, t);
    if (lo == 0 && hi == 1) {
      return Corner::AB;
    }
    return lo == 1 ? Corner::BC : Corner::CA;
  };
  for (int s = 0; s < 3; ++s) {
    const int pair = m.strand_pair[s];
    for (int e = 0; e < 2; ++e) {
      const ChordId c = w[pairs[pair] + e].chord;
      const int other = partner(pair, c);
      if (other < 0) {
        return std::nullopt;
      }
      const Corner corner = corner_between(s, strand_of_pair[other]);
      m.config.order[s][e] = corner;
      m.config.signs[static_cast<int>(corner)] = d.sign(c);
    }
  }
  m.realizable = detail::is_realizable(m.kind, m.config);
  return m;
}

int r3_variant(const TriangleMatch& m) {
  std::string order(3, ' ');
  constexpr std::string_view kLetters = "TMB";
  for (int s = 0; s < 3; ++s) {
    order[m.strand_pair[s]] = kLetters[s];
  }
  for (int v = 0; v < 6; ++v) {
    if (kVariantOrders[v] == order) {
      return v + 1;
    }
  }
  return 0;
}

bool is_cyclic(const GaussDiagram& d, const TriangleMatch& m) {
  const auto w = d.word();
  std::map<ChordId, int> leading;
  for (auto p : m.pairs) {
    ++leading[w[p].chord];
  }
  return std::all_of(leading.begin(), leading.end(), [](const auto& kv) { return kv.second == 1; });
}

MoveSite triangle_site(const GaussDiagram& d, const TriangleMatch& m) {
  if (m.kind == TriangleKind::R3) {
    return R3Move{m.pairs, r3_variant(m), is_cyclic(d, m)};
  }
  return DeltaMove{m.pairs, m.config.order[0][0] == Corner::AB};
}

std::vector<TriangleMatch> find_triangles(const GaussDiagram& d, TriangleKind kind) {
  const auto w = d.word();
  std::set<std::array<std::size_t, 3>> tried;
  std::vector<TriangleMatch> out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p].chord == w[p + 1].chord) {
      continue;
    }
    // The other endpoints of the two chords must sit in the other two pairs.
    const std::size_t ox = position_of(d, w[p].chord, opposite(w[p].passage));
    const std::size_t oy = position_of(d, w[p + 1].chord, opposite(w[p + 1].passage));
    for (std::size_t jx : {ox - 1, ox}) {
      for (std::size_t jy : {oy - 1, oy}) {
        if (ox == 0 && jx == ox - 1) {
          continue;
        }
        if (oy == 0 && jy == oy - 1) {
          continue;
        }
        if (jx <= p || jy <= p) {
          continue;
        }
        std::array<std::size_t, 3> pairs{p, std::min(jx, jy), std::max(jx, jy)};
        if (!tried.insert(pairs).second) {
          continue;
        }
        auto m = classify_triangle(d, pairs);
        if (m && m->realizable && m->kind == kind) {
          out.push_back(*m);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TriangleMatch& a, const TriangleMatch& b) { return a.pairs < b.pairs; });
  return out;
}

GaussDiagram apply_triangle(const GaussDiagram& d, const std::array<std::size_t, 3>& pairs,
                            TriangleKind kind, const MoveSite& site) {
  const auto m = classify_triangle(d, pairs);
  if (!m || !m->realizable || m->kind != kind) {
    throw MoveError("no " + std::string(kind == TriangleKind::R3 ? "R3" : "Delta") +
                    " triangle at the given pairs");
  }
  const MoveSite actual = triangle_site(d, *m);
  if (format_site(actual) != format_site(site)) {
    throw MoveError("triangle parameters do not match the diagram: expected " + format_site(actual));
  }
  auto word = copy_word(d);
  for (auto p : pairs) {
    std::swap(word[p], word[p + 1]);
  }
  return GaussDiagram(std::move(word), d.signs());
}

ChordId next_id(const GaussDiagram& d, std::uint32_t offset = 1) {
  return chord_id(d.max_chord_id() + offset);
}

char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }
char passage_char(Passage p) { return p == Passage::Over ? 'O' : 'U'; }

}  // namespace

std::string_view to_string(MoveKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

MoveKind parse_move_kind(std::string_view name) {
  for (std::size_t k = 0; k < kKindNames.size(); ++k) {
    if (kKindNames[k] == name) {
      return static_cast<MoveKind>(k);
    }
  }
  throw ParseError("unknown move kind '" + std::string(name) + "'", 0);
}

MoveKind kind_of(const MoveSite& site) {
  return std::visit(Overloaded{
                        [](const R1Insert&) { return MoveKind::R1Insert; },
                        [](const R1Delete&) { return MoveKind::R1Delete; },
                        [](const R2Insert&) { return MoveKind::R2Insert; },
                        [](const R2Delete&) { return MoveKind::R2Delete; },
                        [](const R3Move&) { return MoveKind::R3; },
                        [](const WeldedMove&) { return MoveKind::Welded; },
                        [](const DeltaMove&) { return MoveKind::Delta; },
                        [](const Virtualize&) { return MoveKind::Virtualize; },
                        [](const CrossingChange&) { return MoveKind::CrossingChange; },
                    },
                    site);
}

std::vector<MoveSite> enumerate_sites(const GaussDiagram& d, MoveKind kind) {
  std::vector<MoveSite> out;
  const auto w = d.word();
  const std::size_t size = w.size();
  constexpr std::array<Passage, 2> kPassages{Passage::Over, Passage::Under};
  constexpr std::array<Sign, 2> kSigns{Sign::Positive, Sign::Negative};
  switch (kind) {
    case MoveKind::R1Insert:
      for (std::size_t slot = 0; slot <= size; ++slot) {
        for (auto p : kPassages) {
          for (auto s : kSigns) {
            out.push_back(R1Insert{slot, p, s});
          }
        }
      }
      break;
    case MoveKind::R1Delete:
      for (std::size_t p = 0; p + 1 < size; ++p) {
        if (w[p].chord == w[p + 1].chord) {
          out.push_back(R1Delete{p});
        }
      }
      break;
    case MoveKind::R2Insert:
      for (std::size_t a = 0; a <= size; ++a) {
        for (std::size_t b = a; b <= size; ++b) {
          for (auto p : kPassages) {
            for (bool anti : {false, true}) {
              for (auto s : kSigns) {
                out.push_back(R2Insert{a, b, p, anti, s});
              }
            }
          }
        }
      }
      break;
    case MoveKind::R2Delete:
      for (std::size_t p = 0; p + 1 < size; ++p) {
        if (w[p].passage != Passage::Over || w[p + 1].passage != Passage::Over) {
          continue;
        }
        if (d.sign(w[p].chord) == d.sign(w[p + 1].chord)) {
          continue;
        }
        const std::size_t u = position_of(d, w[p].chord, Passage::Under);
        const std::size_t v = position_of(d, w[p + 1].chord, Passage::Under);
        if (u + 1 == v || v + 1 == u) {
          out.push_back(R2Delete{p, std::min(u, v)});
        }
      }
      break;
    case MoveKind::R3:
    case MoveKind::Delta:
      for (const auto& m :
           find_triangles(d, kind == MoveKind::R3 ? TriangleKind::R3 : TriangleKind::Delta)) {
        out.push_back(triangle_site(d, m));
      }
      break;
    case MoveKind::Welded:
      for (std::size_t p = 0; p + 1 < size; ++p) {
        if (w[p].passage == Passage::Over && w[p + 1].passage == Passage::Over) {
          out.push_back(WeldedMove{p});
        }
      }
      break;
    case MoveKind::Virtualize:
      for (const auto& [chord, s] : d.signs()) {
        out.push_back(Virtualize{chord});
      }
      break;
    case MoveKind::CrossingChange:
      for (const auto& [chord, s] : d.signs()) {
        out.push_back(CrossingChange{chord});
      }
      break;
  }
  return out;
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveSite& site) {
  const auto w = d.word();
  const std::size_t size = w.size();
  return std::visit(
      Overloaded{
          [&](const R1Insert& m) {
            if (m.slot > size) {
              throw MoveError("R1Insert slot out of range");
            }
            auto word = copy_word(d);
            const ChordId id = next_id(d);
            const Endpoint pair[2] = {{id, m.first}, {id, opposite(m.first)}};
            word.insert(word.begin() + static_cast<std::ptrdiff_t>(m.slot), pair, pair + 2);
            auto signs = d.signs();
            signs.emplace(id, m.sign);
            return GaussDiagram(std::move(word), std::move(signs));
          },
          [&](const R1Delete& m) {
            if (m.pos + 1 >= size || w[m.pos].chord != w[m.pos + 1].chord) {
              throw MoveError("no isolated chord at position " + std::to_string(m.pos));
            }
            const ChordId id = w[m.pos].chord;
            return without_chords(d, std::span<const ChordId>(&id, 1));
          },
          [&](const R2Insert& m) {
            if (m.first_slot > m.second_slot || m.second_slot > size) {
              throw MoveError("R2Insert slots out of range");
            }
            const ChordId x = next_id(d, 1);
            const ChordId y = next_id(d, 2);
            const Passage q = opposite(m.first);
            const std::array<Endpoint, 2> first{{{x, m.first}, {y, m.first}}};
            const std::array<Endpoint, 2> second =
                m.antiparallel ? std::array<Endpoint, 2>{{{y, q}, {x, q}}}
                               : std::array<Endpoint, 2>{{{x, q}, {y, q}}};
            std::vector<Endpoint> word;
            word.reserve(size + 4);
            word.insert(word.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m.first_slot));
            word.insert(word.end(), first.begin(), first.end());
            word.insert(word.end(), w.begin() + static_cast<std::ptrdiff_t>(m.first_slot),
                        w.begin() + static_cast<std::ptrdiff_t>(m.second_slot));
            word.insert(word.end(), second.begin(), second.end());
            word.insert(word.end(), w.begin() + static_cast<std::ptrdiff_t>(m.second_slot), w.end());
            auto signs = d.signs();
            signs.emplace(x, m.sign);
            signs.emplace(y, -m.sign);
            return GaussDiagram(std::move(word), std::move(signs));
          },
          [&](const R2Delete& m) {
            const bool in_range = m.over_pos + 1 < size && m.under_pos + 1 < size &&
                                  (m.over_pos + 1 < m.under_pos || m.under_pos + 1 < m.over_pos);
            if (!in_range || w[m.over_pos].passage != Passage::Over ||
                w[m.over_pos + 1].passage != Passage::Over ||
                w[m.under_pos].passage != Passage::Under ||
                w[m.under_pos + 1].passage != Passage::Under) {
              throw MoveError("no R2 bigon at the given positions");
            }
            const std::set<ChordId> over{w[m.over_pos].chord, w[m.over_pos + 1].chord};
            const std::set<ChordId> under{w[m.under_pos].chord, w[m.under_pos + 1].chord};
            if (over != under || d.sign(*over.begin()) == d.sign(*over.rbegin())) {
              throw MoveError("no R2 bigon at the given positions");
            }
            const std::array<ChordId, 2> ids{*over.begin(), *over.rbegin()};
            return without_chords(d, ids);
          },
          [&](const R3Move& m) { return apply_triangle(d, m.pairs, TriangleKind::R3, site); },
          [&](const WeldedMove& m) {
            if (m.pos + 1 >= size || w[m.pos].passage != Passage::Over ||
                w[m.pos + 1].passage != Passage::Over) {
              throw MoveError("no adjacent initial endpoints at position " + std::to_string(m.pos));
            }
            auto word = copy_word(d);
            std::swap(word[m.pos], word[m.pos + 1]);
            return GaussDiagram(std::move(word), d.signs());
          },
          [&](const DeltaMove& m) { return apply_triangle(d, m.pairs, TriangleKind::Delta, site); },
          [&](const Virtualize& m) {
            if (!d.contains(m.chord)) {
              throw MoveError("no chord " + std::to_string(to_int(m.chord)));
            }
            return without_chords(d, std::span<const ChordId>(&m.chord, 1));
          },
          [&](const CrossingChange& m) {
            if (!d.contains(m.chord)) {
              throw MoveError("no chord " + std::to_string(to_int(m.chord)));
            }
            return with_crossings_changed(d, std::span<const ChordId>(&m.chord, 1));
          },
      },
      site);
}

std::optional<MoveSite> sample_site(const GaussDiagram& d, MoveKind kind, Rng& rng) {
  const std::size_t size = d.size();
  auto passage = [&] { return rng.coin() ? Passage::Under : Passage::Over; };
  auto sign = [&] { return rng.coin() ? Sign::Negative : Sign::Positive; };
  if (kind == MoveKind::R1Insert) {
    const std::size_t slot = rng.below(size + 1);
    const Passage p = passage();
    return R1Insert{slot, p, sign()};
  }
  if (kind == MoveKind::R2Insert) {
    // Uniform over slot pairs a <= b.
    std::uint64_t r = rng.below((size + 1) * (size + 2) / 2);
    std::size_t a = 0;
    while (r >= size + 1 - a) {
      r -= size + 1 - a;
      ++a;
    }
    const std::size_t b = a + r;
    const Passage p = passage();
    const bool anti = rng.coin();
    return R2Insert{a, b, p, anti, sign()};
  }
  auto sites = enumerate_sites(d, kind);
  if (sites.empty()) {
    return std::nullopt;
  }
  return sites[rng.below(sites.size())];
}

GaussDiagram plant_triangle(const GaussDiagram& d, MoveKind kind, Rng& rng) {
  if (kind != MoveKind::R3 && kind != MoveKind::Delta) {
    throw MoveError("plant_triangle needs R3 or Delta");
  }
  const TriangleKind tk = kind == MoveKind::R3 ? TriangleKind::R3 : TriangleKind::Delta;
  const auto& table = detail::triangle_table(tk);
  const TriangleConfig& config = table[rng.below(table.size())];
  std::array<std::size_t, 3> slots{};
  for (auto& s : slots) {
    s = rng.below(d.size() + 1);
  }
  std::sort(slots.begin(), slots.end());
  std::array<int, 3> strands{0, 1, 2};
  for (int k = 2; k > 0; --k) {
    std::swap(strands[k], strands[rng.below(static_cast<std::uint64_t>(k) + 1)]);
  }
  const auto over = detail::over_strand(tk);
  std::array<ChordId, 3> ids{next_id(d, 1), next_id(d, 2), next_id(d, 3)};
  std::array<std::array<Endpoint, 2>, 3> blocks{};
  for (int k = 0; k < 3; ++k) {
    const int s = strands[k];
    for (int e = 0; e < 2; ++e) {
      const int c = static_cast<int>(config.order[s][e]);
      blocks[k][e] = {ids[c], over[c] == s ? Passage::Over : Passage::Under};
    }
  }
  std::vector<Endpoint> word;
  const auto w = d.word();
  std::size_t next_block = 0;
  for (std::size_t p = 0; p <= w.size(); ++p) {
    while (next_block < 3 && slots[next_block] == p) {
      word.insert(word.end(), blocks[next_block].begin(), blocks[next_block].end());
      ++next_block;
    }
    if (p < w.size()) {
      word.push_back(w[p]);
    }
  }
  auto signs = d.signs();
  for (int c = 0; c < 3; ++c) {
    signs.emplace(ids[c], config.signs[c]);
  }
  return GaussDiagram(std::move(word), std::move(signs));
}

std::string coverage_key(const MoveSite& site) {
  if (const auto* r3 = std::get_if<R3Move>(&site)) {
    return "R3." + std::string(kVariantNames[static_cast<std::size_t>(r3->variant - 1)]);
  }
  if (const auto* delta = std::get_if<DeltaMove>(&site)) {
    return delta->forward ? "Delta.forward" : "Delta.backward";
  }
  return std::string(to_string(kind_of(site)));
}

std::string format_site(const MoveSite& site) {
  std::ostringstream out;
  auto pairs = [&](const std::array<std::size_t, 3>& p) {
    out << "pairs=" << p[0] << ',' << p[1] << ',' << p[2];
  };
  std::visit(Overloaded{
                 [&](const R1Insert& m) {
                   out << "slot=" << m.slot << " first=" << passage_char(m.first)
                       << " sign=" << sign_char(m.sign);
                 },
                 [&](const R1Delete& m) { out << "pos=" << m.pos; },
                 [&](const R2Insert& m) {
                   out << "first_slot=" << m.first_slot << " second_slot=" << m.second_slot
                       << " first=" << passage_char(m.first) << " antiparallel=" << m.antiparallel
                       << " sign=" << sign_char(m.sign);
                 },
                 [&](const R2Delete& m) { out << "over=" << m.over_pos << " under=" << m.under_pos; },
                 [&](const R3Move& m) {
                   pairs(m.pairs);
                   out << " variant=" << kVariantNames[static_cast<std::size_t>(m.variant - 1)]
                       << " cyclic=" << m.cyclic;
                 },
                 [&](const WeldedMove& m) { out << "pos=" << m.pos; },
                 [&](const DeltaMove& m) {
                   pairs(m.pairs);
                   out << " direction=" << (m.forward ? "forward" : "backward");
                 },
                 [&](const Virtualize& m) { out << "chord=" << to_int(m.chord); },
                 [&](const CrossingChange& m) { out << "chord=" << to_int(m.chord); },
             },
             site);
  return out.str();
}

namespace {

class FieldReader {
 public:
  explicit FieldReader(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && text[pos] == ' ') {
        ++pos;
      }
      if (pos == text.size()) {
        break;
      }
      const std::size_t end = std::min(text.find(' ', pos), text.size());
      const std::string_view field = text.substr(pos, end - pos);
      const std::size_t eq = field.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError("expected key=value, got '" + std::string(field) + "'", pos + 1);
      }
      fields_.emplace(std::string(field.substr(0, eq)),
                      Field{std::string(field.substr(eq + 1)), pos + eq + 2});
      pos = end;
    }
  }

  std::size_t number(const std::string& key) {
    const Field& f = take(key);
    std::size_t value = 0;
    const auto* end = f.value.data() + f.value.size();
    auto [ptr, ec] = std::from_chars(f.value.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw ParseError("bad number for " + key, f.column);
    }
    return value;
  }

  bool flag(const std::string& key) {
    const Field& f = take(key);
    if (f.value != "0" && f.value != "1") {
      throw ParseError("bad flag for " + key + " (expected 0 or 1)", f.column);
    }
    return f.value == "1";
  }

  Passage passage(const std::string& key) {
    const Field& f = take(key);
    if (f.value != "O" && f.value != "U") {
      throw ParseError("bad passage for " + key, f.column);
    }
    return f.value == "O" ? Passage::Over : Passage::Under;
  }

  Sign sign(const std::string& key) {
    const Field& f = take(key);
    if (f.value != "+" && f.value != "-") {
      throw ParseError("bad sign for " + key, f.column);
    }
    return f.value == "+" ? Sign::Positive : Sign::Negative;
  }

  std::array<std::size_t, 3> triple(const std::string& key) {
    const Field& f = take(key);
    std::array<std::size_t, 3> out{};
    const char* p = f.value.data();
    const char* end = f.value.data() + f.value.size();
    for (int k = 0; k < 3; ++k) {
      auto [ptr, ec] = std::from_chars(p, end, out[k]);
      if (ec != std::errc() || (k < 2 && (ptr == end || *ptr != ',')) || (k == 2 && ptr != end)) {
        throw ParseError("bad position triple for " + key, f.column);
      }
      p = ptr + 1;
    }
    return out;
  }

  std::string text(const std::string& key) { return take(key).value; }

  std::size_t column(const std::string& key) const {
    auto it = fields_.find(key);
    return it == fields_.end() ? 0 : it->second.column;
  }

  void finish() const {
    if (!fields_.empty()) {
      throw ParseError("unexpected field '" + fields_.begin()->first + "'",
                       fields_.begin()->second.column);
    }
  }

 private:
  struct Field {
    std::string value;
    std::size_t column;
  };

  const Field& take(const std::string& key) {
    auto it = fields_.find(key);
    if (it == fields_.end()) {
      throw ParseError("missing field '" + key + "'", 0);
    }
    taken_ = it->second;
    fields_.erase(it);
    return taken_;
  }

  std::map<std::string, Field> fields_;
  Field taken_;
};

}  // namespace

MoveSite parse_site(MoveKind kind, std::string_view text) {
  FieldReader r(text);
  MoveSite site;
  switch (kind) {
    case MoveKind::R1Insert: {
      const auto slot = r.number("slot");
      const auto first = r.passage("first");
      site = R1Insert{slot, first, r.sign("sign")};
      break;
    }
    case MoveKind::R1Delete:
      site = R1Delete{r.number("pos")};
      break;
    case MoveKind::R2Insert: {
      const auto a = r.number("first_slot");
      const auto b = r.number("second_slot");
      const auto first = r.passage("first");
      const auto anti = r.flag("antiparallel");
      site = R2Insert{a, b, first, anti, r.sign("sign")};
      break;
    }
    case MoveKind::R2Delete: {
      const auto over = r.number("over");
      site = R2Delete{over, r.number("under")};
      break;
    }
    case MoveKind::R3: {
      const auto pairs = r.triple("pairs");
      const std::size_t column = r.column("variant");
      const std::string name = r.text("variant");
      auto it = std::find(kVariantNames.begin(), kVariantNames.end(), name);
      if (it == kVariantNames.end()) {
        throw ParseError("bad R3 variant '" + name + "'", column);
      }
      site = R3Move{pairs, static_cast<int>(it - kVariantNames.begin()) + 1, r.flag("cyclic")};
      break;
    }
    case MoveKind::Welded:
      site = WeldedMove{r.number("pos")};
      break;
    case MoveKind::Delta: {
      const auto pairs = r.triple("pairs");
      const std::size_t column = r.column("direction");
      const std::string dir = r.text("direction");
      if (dir != "forward" && dir != "backward") {
        throw ParseError("bad Delta direction '" + dir + "'", column);
      }
      site = DeltaMove{pairs, dir == "forward"};
      break;
    }
    case MoveKind::Virtualize:
      site = Virtualize{chord_id(static_cast<std::uint32_t>(r.number("chord")))};
      break;
    case MoveKind::CrossingChange:
      site = CrossingChange{chord_id(static_cast<std::uint32_t>(r.number("chord")))};
      break;
  }
  r.finish();
  return site;
}

WalkResult random_walk(const GaussDiagram& diagram, std::span<const MoveKind> kinds,
                       std::size_t length, Rng& rng) {
  if (kinds.empty() && length > 0) {
    throw MoveError("random walk needs at least one move kind");
  }
  WalkResult result;
  result.diagram = diagram.canonical();
  result.transcript.push_back("0 start | " + serialize(result.diagram));
  for (std::size_t step = 1; step <= length; ++step) {
    const MoveKind kind = kinds[rng.below(kinds.size())];
    const auto site = sample_site(result.diagram, kind, rng);
    std::string line = std::to_string(step) + ' ' + std::string(to_string(kind)) + ' ';
    if (!site) {
      ++result.skipped;
      line += "skipped";
    } else {
      result.diagram = apply_move(result.diagram, *site).canonical();
      ++result.coverage[coverage_key(*site)];
      line += format_site(*site);
    }
    line += " | " + serialize(result.diagram);
    result.transcript.push_back(std::move(line));
  }
  return result;
}

WalkResult random_walk(const GaussDiagram& diagram, std::span<const MoveKind> kinds,
                       std::size_t length, std::uint64_t seed) {
  Rng rng(seed);
  return random_walk(diagram, kinds, length, rng);
}

std::vector<ReplayStep> replay(std::span<const std::string> transcript) {
  std::vector<ReplayStep> steps;
  if (transcript.empty()) {
    return steps;
  }
  auto split = [](const std::string& line, std::size_t index) {
    const std::size_t bar = line.find('|');
    if (bar == std::string::npos) {
      throw ParseError("line " + std::to_string(index + 1) + ": missing '|'", 0);
    }
    std::string head = line.substr(0, bar);
    while (!head.empty() && head.back() == ' ') {
      head.pop_back();
    }
    return std::pair{head, line.substr(bar + 1)};
  };
  auto parse_code = [](const std::string& code, std::size_t index, std::size_t offset) {
    try {
      return parse_gauss(code);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(index + 1) + ": " + e.what(), offset + e.column());
    }
  };

  auto [head0, code0] = split(transcript[0], 0);
  if (head0 != "0 start") {
    throw ParseError("line 1: expected '0 start | <code>'", 1);
  }
  GaussDiagram current = parse_code(code0, 0, transcript[0].find('|') + 1);
  for (std::size_t index = 1; index < transcript.size(); ++index) {
    const std::string& line = transcript[index];
    auto [head, code] = split(line, index);
    const std::size_t s1 = head.find(' ');
    const std::size_t s2 = s1 == std::string::npos ? std::string::npos : head.find(' ', s1 + 1);
    if (s2 == std::string::npos) {
      throw ParseError("line " + std::to_string(index + 1) + ": expected '<step> <kind> <fields>'", 1);
    }
    const std::string step_text = head.substr(0, s1);
    if (step_text != std::to_string(index)) {
      throw ParseError("line " + std::to_string(index + 1) + ": expected step " +
                           std::to_string(index),
                       1);
    }
    MoveKind kind;
    try {
      kind = parse_move_kind(head.substr(s1 + 1, s2 - s1 - 1));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(index + 1) + ": " + e.what(), s1 + 2);
    }
    const std::string fields = head.substr(s2 + 1);
    ReplayStep step{index, std::nullopt, current, current};
    if (fields != "skipped") {
      try {
        step.site = parse_site(kind, fields);
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(index + 1) + ": " + e.what(),
                         e.column() == 0 ? 0 : s2 + 1 + e.column());
      }
      step.after = apply_move(current, *step.site).canonical();
    }
    const GaussDiagram recorded = parse_code(code, index, line.find('|') + 1);
    if (!(recorded.canonical() == step.after)) {
      throw MoveError("line " + std::to_string(index + 1) + ": recorded diagram '" +
                      serialize(recorded) + "' differs from recomputed '" + serialize(step.after) +
                      "'");
    }
    current = step.after;
    steps.push_back(std::move(step));
  }
  return steps;
}

std::vector<MoveKind> equivalence_moves(DiagramClass diagram_class) {
  std::vector<MoveKind> kinds{MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert,
                              MoveKind::R2Delete, MoveKind::R3};
  if (diagram_class == DiagramClass::Welded) {
    kinds.push_back(MoveKind::Welded);
  }
  return kinds;
}

}  // namespace vknot
