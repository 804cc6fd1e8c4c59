#pragma once

#include <array>
#include <string_view>

namespace vknot::detail {

// Contents of patterns/D1.gauss .. D10.gauss, embedded at configure time.
extern const std::array<std::string_view, 10> kPatternSources;

}  // namespace vknot::detail
