#pragma once
// fraction.hpp - Binary fractions as lists of negative indices.
//
// A fraction in [0, 1) is the sum of 2^index over strictly decreasing
// negative indices, e.g. 0.390625 = 2^-2 + 2^-3 + 2^-6 -> [-2,-3,-6].

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indexradix/index_repr.hpp"

namespace indexradix {

// Default cap on the number of emitted fraction bits.
inline constexpr std::size_t kDefaultSensitivity = 64;

class FractionIndexList {
 public:
  FractionIndexList() = default;

  // Throws ParseError unless entries are strictly decreasing, all <= -1, and
  // at most `sensitivity` of them.
  static FractionIndexList from_descending(
      std::vector<Index> indices, std::size_t sensitivity = kDefaultSensitivity);

  std::span<const Index> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t sensitivity() const noexcept { return sensitivity_; }

  // Equality compares the indices only; sensitivity is a construction bound.
  friend bool operator==(const FractionIndexList& a,
                         const FractionIndexList& b) noexcept {
    return a.indices_ == b.indices_;
  }

 private:
  std::vector<Index> indices_;
  std::size_t sensitivity_ = kDefaultSensitivity;
};

// Multiply-by-two bit extraction on the exact rational d / 10^k written in
// `fraction`. Stops when the remainder is zero or `sensitivity` set bits have
// been emitted (truncation, not rounding).
FractionIndexList dec2binary(std::string_view fraction, std::size_t sensitivity);

// Exact decimal expansion, e.g. "0.390625"; "0" for the empty list.
std::string reconstruct_fraction(const FractionIndexList& fraction);

struct RealIndexLists {
  IndexList integer;
  FractionIndexList fraction;

  friend bool operator==(const RealIndexLists&, const RealIndexLists&) = default;
};

// Splits "I.F" (or "I") into the integer part's index list and the fraction
// part's negative index list.
RealIndexLists deconstruct_real(std::string_view text, std::size_t sensitivity);

std::string to_json(const FractionIndexList& fraction);
// Parses "[-2,-3,-6]" (or "-2,-3,-6") into a validated fraction list.
FractionIndexList parse_fraction_list(std::string_view text,
                                      std::size_t sensitivity = kDefaultSensitivity);

}  // namespace indexradix
