#pragma once
// Shared parsing of integer arrays written as JSON or comma-separated text.

#include <cstdint>
#include <string_view>
#include <vector>

namespace indexradix::detail {

std::vector<std::int64_t> parse_integer_array(std::string_view text);

}  // namespace indexradix::detail
