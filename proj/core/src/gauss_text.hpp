#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot::detail {

struct RawToken {
  Endpoint endpoint;
  std::optional<Sign> sign;  // nullopt only for the '*' wildcard
  std::size_t column;        // 1-based
};

struct ParsedWord {
  std::vector<Endpoint> word;
  std::map<ChordId, std::optional<Sign>> signs;
};

/// Tokenizes and checks chord structure. `allow_wildcard` admits '*' as a
/// sign character (pattern files only); both tokens of a chord must agree.
ParsedWord parse_gauss_word(std::string_view text, bool allow_wildcard);

}  // namespace vknot::detail
