#include "index_text.hpp"

#include <charconv>
#include <json.hpp>
#include <limits>
#include <string>

#include "indexradix/errors.hpp"

namespace indexradix::detail {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_entry(std::string_view token) {
  token = trim(token);
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} ||
      ptr != token.data() + token.size()) {
    throw ParseError("invalid index entry '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::int64_t> parse_integer_array(std::string_view text) {
  text = trim(text);
  std::vector<std::int64_t> out;
  if (!text.empty() && text.front() == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed index list: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("index list must be a JSON array");
    out.reserve(doc.size());
    for (const auto& item : doc) {
      if (!item.is_number_integer()) {
        throw ParseError("index list entries must be integers");
      }
      if (item.is_number_unsigned() &&
          item.get<std::uint64_t>() >
              static_cast<std::uint64_t>(
                  std::numeric_limits<std::int64_t>::max())) {
        throw ParseError("index list entry out of range");
      }
      out.push_back(item.get<std::int64_t>());
    }
    return out;
  }
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_entry(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace indexradix::detail
