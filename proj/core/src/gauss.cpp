#include "vknot/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "gauss_text.hpp"
#include "vknot/error.hpp"

namespace vknot {

GaussDiagram::GaussDiagram(std::vector<Endpoint> word, std::map<ChordId, Sign> signs)
    : word_(std::move(word)), signs_(std::move(signs)) {
  std::map<ChordId, std::pair<int, int>> seen;  // over count, under count
  for (const auto& e : word_) {
    if (to_int(e.chord) == 0) {
      throw DiagramError("chord ids must be positive");
    }
    auto& counts = seen[e.chord];
    (e.passage == Passage::Over ? counts.first : counts.second)++;
  }
  for (const auto& [chord, counts] : seen) {
    if (counts.first != 1 || counts.second != 1) {
      throw DiagramError("chord " + std::to_string(to_int(chord)) +
                         " must occur exactly once as O and once as U");
    }
    if (signs_.count(chord) == 0) {
      throw DiagramError("chord " + std::to_string(to_int(chord)) + " has no sign");
    }
  }
  if (signs_.size() != seen.size()) {
    throw DiagramError("sign given for a chord that is not in the word");
  }
}

Sign GaussDiagram::sign(ChordId chord) const {
  auto it = signs_.find(chord);
  if (it == signs_.end()) {
    throw DiagramError("no chord " + std::to_string(to_int(chord)));
  }
  return it->second;
}

std::uint32_t GaussDiagram::max_chord_id() const noexcept {
  return signs_.empty() ? 0u : to_int(signs_.rbegin()->first);
}

GaussDiagram GaussDiagram::canonical() const {
  std::map<ChordId, ChordId> relabel;
  std::vector<Endpoint> word;
  word.reserve(word_.size());
  for (const auto& e : word_) {
    auto [it, inserted] = relabel.try_emplace(e.chord, chord_id(relabel.size() + 1));
    word.push_back({it->second, e.passage});
  }
  std::map<ChordId, Sign> signs;
  for (const auto& [old_id, new_id] : relabel) {
    signs.emplace(new_id, signs_.at(old_id));
  }
  GaussDiagram out;
  out.word_ = std::move(word);
  out.signs_ = std::move(signs);
  return out;
}

bool GaussDiagram::is_canonical() const {
  std::uint32_t next = 1;
  for (const auto& e : word_) {
    const auto id = to_int(e.chord);
    if (id == next) {
      ++next;
    } else if (id > next) {
      return false;
    }
  }
  return true;
}

std::vector<ChordMeta> chord_table(const GaussDiagram& diagram, ArrowConvention convention) {
  std::vector<ChordMeta> table;
  table.reserve(diagram.chord_count());
  std::map<ChordId, std::size_t> index;
  const Passage tail = initial_passage(convention);
  const auto word = diagram.word();
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const auto& e = word[pos];
    auto it = index.find(e.chord);
    if (it == index.end()) {
      const Sign s = diagram.sign(e.chord);
      const Sign left_sign = e.passage == tail ? -s : s;
      index.emplace(e.chord, table.size());
      table.push_back(ChordMeta{e.chord, e.passage == Passage::Over ? 0 : 1, pos, 0, s,
                                left_sign, -left_sign});
    } else {
      table[it->second].right_pos = pos;
    }
  }
  return table;
}

namespace detail {

ParsedWord parse_gauss_word(std::string_view text, bool allow_wildcard) {
  std::vector<RawToken> tokens;
  std::size_t pos = 0;
  auto fail = [](const std::string& what, std::size_t column) -> void {
    throw ParseError("column " + std::to_string(column) + ": " + what, column);
  };
  while (pos < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (std::isspace(c)) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    const std::string_view tok = text.substr(start, end - start);
    const std::size_t column = start + 1;
    if (tok.size() < 3 || (tok.front() != 'O' && tok.front() != 'U')) {
      fail("bad token '" + std::string(tok) + "' (expected O|U, id, +|-)", column);
    }
    const char sign_char = tok.back();
    std::optional<Sign> sign;
    if (sign_char == '+') {
      sign = Sign::Positive;
    } else if (sign_char == '-') {
      sign = Sign::Negative;
    } else if (!(allow_wildcard && sign_char == '*')) {
      fail("bad sign in token '" + std::string(tok) + "'", column + tok.size() - 1);
    }
    const std::string_view digits = tok.substr(1, tok.size() - 2);
    std::uint64_t id = 0;
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(digits[k]))) {
        fail("bad chord id in token '" + std::string(tok) + "'", column + 1 + k);
      }
      id = id * 10 + static_cast<std::uint64_t>(digits[k] - '0');
      if (id > 0xFFFFFFFFu) {
        fail("chord id too large", column + 1);
      }
    }
    if (id == 0) {
      fail("chord id must be >= 1", column + 1);
    }
    const Passage passage = tok.front() == 'O' ? Passage::Over : Passage::Under;
    tokens.push_back(RawToken{{chord_id(static_cast<std::uint32_t>(id)), passage}, sign, column});
    pos = end;
  }

  ParsedWord out;
  struct Seen {
    int over = 0;
    int under = 0;
    std::optional<Sign> sign;
    std::size_t column = 0;
  };
  std::map<ChordId, Seen> seen;
  for (const auto& t : tokens) {
    auto [it, inserted] = seen.try_emplace(t.endpoint.chord);
    Seen& s = it->second;
    if (inserted) {
      s.sign = t.sign;
      s.column = t.column;
    } else if (s.sign != t.sign) {
      fail("sign mismatch within chord " + std::to_string(to_int(t.endpoint.chord)), t.column);
    }
    int& count = t.endpoint.passage == Passage::Over ? s.over : s.under;
    if (++count > 1) {
      fail("duplicate " + std::string(t.endpoint.passage == Passage::Over ? "O" : "U") +
               " passage for chord " + std::to_string(to_int(t.endpoint.chord)),
           t.column);
    }
    out.word.push_back(t.endpoint);
  }
  for (const auto& [chord, s] : seen) {
    if (s.over + s.under != 2) {
      fail("chord " + std::to_string(to_int(chord)) + " appears only once", s.column);
    }
    out.signs.emplace(chord, s.sign);
  }
  return out;
}

}  // namespace detail

GaussDiagram parse_gauss(std::string_view text) {
  auto parsed = detail::parse_gauss_word(text, false);
  std::map<ChordId, Sign> signs;
  for (const auto& [chord, s] : parsed.signs) {
    signs.emplace(chord, *s);
  }
  return GaussDiagram(std::move(parsed.word), std::move(signs));
}

std::string serialize(const GaussDiagram& diagram) {
  const GaussDiagram c = diagram.canonical();
  std::string out;
  out.reserve(c.size() * 4);
  for (const auto& e : c.word()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += e.passage == Passage::Over ? 'O' : 'U';
    out += std::to_string(to_int(e.chord));
    out += c.sign(e.chord) == Sign::Positive ? '+' : '-';
  }
  return out;
}

GaussDiagram reversed(const GaussDiagram& diagram) {
  std::vector<Endpoint> word(diagram.word().rbegin(), diagram.word().rend());
  return GaussDiagram(std::move(word), diagram.signs());
}

GaussDiagram mirrored(const GaussDiagram& diagram) {
  std::map<ChordId, Sign> signs;
  for (const auto& [chord, s] : diagram.signs()) {
    signs.emplace(chord, -s);
  }
  return GaussDiagram(std::vector<Endpoint>(diagram.word().begin(), diagram.word().end()),
                      std::move(signs));
}

GaussDiagram switched(const GaussDiagram& diagram) {
  std::vector<Endpoint> word;
  word.reserve(diagram.size());
  for (const auto& e : diagram.word()) {
    word.push_back({e.chord, opposite(e.passage)});
  }
  std::map<ChordId, Sign> signs;
  for (const auto& [chord, s] : diagram.signs()) {
    signs.emplace(chord, -s);
  }
  return GaussDiagram(std::move(word), std::move(signs));
}

GaussDiagram concat(const GaussDiagram& first, const GaussDiagram& second) {
  const std::uint32_t shift = first.max_chord_id();
  std::vector<Endpoint> word(first.word().begin(), first.word().end());
  word.reserve(first.size() + second.size());
  for (const auto& e : second.word()) {
    word.push_back({chord_id(to_int(e.chord) + shift), e.passage});
  }
  auto signs = first.signs();
  for (const auto& [chord, s] : second.signs()) {
    signs.emplace(chord_id(to_int(chord) + shift), s);
  }
  return GaussDiagram(std::move(word), std::move(signs));
}

GaussDiagram without_chords(const GaussDiagram& diagram, std::span<const ChordId> chords) {
  const std::set<ChordId> drop(chords.begin(), chords.end());
  std::vector<Endpoint> word;
  word.reserve(diagram.size());
  for (const auto& e : diagram.word()) {
    if (!drop.count(e.chord)) {
      word.push_back(e);
    }
  }
  std::map<ChordId, Sign> signs;
  for (const auto& [chord, s] : diagram.signs()) {
    if (!drop.count(chord)) {
      signs.emplace(chord, s);
    }
  }
  return GaussDiagram(std::move(word), std::move(signs));
}

GaussDiagram with_crossings_changed(const GaussDiagram& diagram, std::span<const ChordId> chords) {
  const std::set<ChordId> flip(chords.begin(), chords.end());
  std::vector<Endpoint> word;
  word.reserve(diagram.size());
  for (const auto& e : diagram.word()) {
    word.push_back(flip.count(e.chord) ? Endpoint{e.chord, opposite(e.passage)} : e);
  }
  auto signs = diagram.signs();
  for (auto& [chord, s] : signs) {
    if (flip.count(chord)) {
      s = -s;
    }
  }
  return GaussDiagram(std::move(word), std::move(signs));
}

std::vector<ChordId> chord_ids(const GaussDiagram& diagram) {
  std::vector<ChordId> ids;
  ids.reserve(diagram.chord_count());
  for (const auto& [chord, s] : diagram.signs()) {
    ids.push_back(chord);
  }
  return ids;
}

}  // namespace vknot
