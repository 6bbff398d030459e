#pragma once
// index_repr.hpp - Sparse radix-2 index lists and conversions to and from
// ordinary integers.
//
// A non-negative integer N = sum_k C_k 2^k is stored as the list of exponents
// k whose coefficient C_k is 1, most significant first. Only set bits are
// stored, so the list length is the popcount of N and zero is the empty list.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indexradix/natural.hpp"

namespace indexradix {

using Index = std::int64_t;

// Largest admissible index. Indices stay strictly below 2^63 - 1 so that any
// single carry step (n -> n + 1) is still a valid signed machine word.
inline constexpr Index kMaxIndex = std::numeric_limits<Index>::max() - 1;

// Canonical index list: strictly decreasing, non-negative entries.
class IndexList {
 public:
  IndexList() = default;

  // Validates the canonical form and throws ParseError if it does not hold.
  static IndexList from_descending(std::vector<Index> indices);
  // Adopts indices already known to be canonical (checked in debug builds).
  static IndexList adopt(std::vector<Index> indices);

  std::span<const Index> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  Index operator[](std::size_t i) const noexcept { return indices_[i]; }
  // Most significant index; precondition: !empty().
  Index leading() const noexcept { return indices_.front(); }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }

  friend bool operator==(const IndexList&, const IndexList&) = default;

 private:
  explicit IndexList(std::vector<Index> indices)
      : indices_(std::move(indices)) {}

  std::vector<Index> indices_;
};

bool is_canonical(std::span<const Index> indices) noexcept;

// Coefficient vector, least significant bit first, ending at the MSB.
using BitVector = std::vector<std::uint8_t>;

// Repeated halving: the remainders of n / 2, n / 4, ... in order.
BitVector divide_by_2(const Natural& n);

// floor(log2(n)), exact for every n. Throws DomainError when n is zero.
Index ilog2(const Natural& n);

// Set-bit positions of n, most significant first.
IndexList deconstruct(const Natural& n);

// Sum of 2^index over all entries. Entries need not be canonical: duplicates
// and any order are accepted, which makes this the value function for raw
// index bags too. Throws ParseError on a negative entry.
Natural reconstruct_sum(std::span<const Index> indices);
inline Natural reconstruct_sum(const IndexList& list) {
  return reconstruct_sum(list.indices());
}

// Same value as reconstruct_sum, computed by writing each term as the binary
// digit string "1" followed by `index` zeros, parsing it, and accumulating.
Natural reconstruct_strings(const IndexList& list);

enum class NumberFormat { decimal, hex };

// Parses an unsigned literal. The single-argument form accepts decimal or a
// 0x-prefixed hex literal; with an explicit format, hex may omit the prefix.
Natural parse_number(std::string_view text);
Natural parse_number(std::string_view text, NumberFormat format);
// Decimal digits, or lowercase hex with a 0x prefix.
std::string format_number(const Natural& n,
                          NumberFormat format = NumberFormat::decimal);

// Compact JSON array, e.g. "[6,5,0]".
std::string to_json(const IndexList& list);
std::string to_json(std::span<const Index> indices);

// Parses a JSON array ("[6,5,0]") or a comma-separated list ("6,5,0").
// Entries may be in any order and may repeat; negative values throw.
std::vector<Index> parse_index_values(std::string_view text);
// As above, but additionally requires canonical (strictly decreasing) order.
IndexList parse_index_list(std::string_view text);

}  // namespace indexradix
