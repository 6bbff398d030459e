#include "indexradix/index_repr.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "index_text.hpp"
#include "indexradix/errors.hpp"

namespace indexradix {

bool is_canonical(std::span<const Index> indices) noexcept {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] > kMaxIndex) return false;
    if (i > 0 && indices[i - 1] <= indices[i]) return false;
  }
  return true;
}

IndexList IndexList::from_descending(std::vector<Index> indices) {
  if (!is_canonical(indices)) {
    throw ParseError(
        "index list must be strictly decreasing and non-negative: " +
        to_json(indices));
  }
  return IndexList(std::move(indices));
}

IndexList IndexList::adopt(std::vector<Index> indices) {
  assert(is_canonical(indices));
  return IndexList(std::move(indices));
}

BitVector divide_by_2(const Natural& n) {
  BitVector bits(n.bit_length());
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = n.test_bit(k);
  return bits;
}

Index ilog2(const Natural& n) {
  if (n.is_zero()) throw DomainError("ilog2 is undefined for 0");
  return static_cast<Index>(n.bit_length() - 1);
}

IndexList deconstruct(const Natural& n) {
  std::vector<Index> out;
  out.reserve(n.popcount());
  const auto limbs = n.limbs();
  for (std::size_t i = limbs.size(); i-- > 0;) {
    Limb limb = limbs[i];
    while (limb != 0) {
      const int top = std::bit_width(limb) - 1;
      out.push_back(static_cast<Index>(i * kLimbBits + top));
      limb &= ~(Limb{1} << top);
    }
  }
  return IndexList::adopt(std::move(out));
}

Natural reconstruct_sum(std::span<const Index> indices) {
  if (indices.empty()) return Natural{};
  Index highest = 0;
  for (Index index : indices) {
    if (index < 0) {
      throw ParseError("negative index " + std::to_string(index) +
                       " in integer index list");
    }
    highest = std::max(highest, index);
  }
  // Duplicates can carry past the highest index by at most
  // bit_width(count) positions.
  const std::size_t headroom = std::bit_width(indices.size());
  std::vector<Limb> limbs(
      (static_cast<std::size_t>(highest) + headroom) / kLimbBits + 1, 0);
  for (Index index : indices) {
    std::size_t i = static_cast<std::size_t>(index) / kLimbBits;
    DoubleLimb carry = DoubleLimb{1} << (index % kLimbBits);
    while (carry != 0) {
      carry += limbs[i];
      limbs[i++] = static_cast<Limb>(carry);
      carry >>= kLimbBits;
    }
  }
  return Natural::from_limbs(std::move(limbs));
}

Natural reconstruct_strings(const IndexList& list) {
  Natural sum;
  std::string digits;
  for (Index index : list) {
    digits.assign(1, '1');
    digits.append(static_cast<std::size_t>(index), '0');
    sum += Natural::from_binary(digits);
  }
  return sum;
}

Natural parse_number(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    return parse_number(text, NumberFormat::hex);
  }
  return parse_number(text, NumberFormat::decimal);
}

Natural parse_number(std::string_view text, NumberFormat format) {
  if (text.empty()) throw ParseError("empty number literal");
  if (text.front() == '-') {
    throw ParseError("negative numbers are not supported: " + std::string(text));
  }
  if (format == NumberFormat::hex) {
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
      text.remove_prefix(2);
    }
    if (text.empty()) throw ParseError("hex literal has no digits");
    return Natural::from_hex(text);
  }
  return Natural::from_decimal(text);
}

std::string format_number(const Natural& n, NumberFormat format) {
  if (format == NumberFormat::hex) return "0x" + n.to_hex();
  return n.to_decimal();
}

std::string to_json(const IndexList& list) { return to_json(list.indices()); }

std::string to_json(std::span<const Index> indices) {
  std::string out = "[";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(indices[i]);
  }
  out += ']';
  return out;
}

std::vector<Index> parse_index_values(std::string_view text) {
  std::vector<Index> values = detail::parse_integer_array(text);
  for (Index v : values) {
    if (v < 0) {
      throw ParseError("negative index " + std::to_string(v) +
                       " in integer index list");
    }
    if (v > kMaxIndex) throw ParseError("index exceeds the machine-word bound");
  }
  return values;
}

IndexList parse_index_list(std::string_view text) {
  return IndexList::from_descending(parse_index_values(text));
}

}  // namespace indexradix
