#pragma once
// natural.hpp - Arbitrary-precision non-negative integers on 32-bit limbs.
//
// Natural is the coefficient-form counterpart of IndexList: a little-endian
// vector of limbs with no leading zero limb (zero is the empty vector). It
// carries only the arithmetic the rest of the library needs (addition,
// subtraction, small-scalar operations, shifts, radix conversion).
// Multiplication lives in baselines.hpp so that every product in the library
// goes through a named algorithm.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indexradix {

using Limb = std::uint32_t;
using DoubleLimb = std::uint64_t;
inline constexpr int kLimbBits = 32;

class Natural {
 public:
  Natural() = default;
  explicit Natural(std::uint64_t value);

  // Takes ownership of little-endian limbs; leading zero limbs are trimmed.
  static Natural from_limbs(std::vector<Limb> limbs);
  static Natural power_of_two(std::uint64_t exponent);

  // Digit-only parsers (no sign, no prefix). Throw ParseError on an empty
  // string or any character outside the radix.
  static Natural from_decimal(std::string_view digits);
  static Natural from_hex(std::string_view digits);
  static Natural from_binary(std::string_view digits);

  std::string to_decimal() const;
  // Lowercase hex digits without prefix; "0" for zero.
  std::string to_hex() const;

  bool is_zero() const noexcept { return limbs_.empty(); }
  std::size_t bit_length() const noexcept;
  std::size_t popcount() const noexcept;
  bool test_bit(std::size_t position) const noexcept;
  std::span<const Limb> limbs() const noexcept { return limbs_; }
  std::size_t limb_count() const noexcept { return limbs_.size(); }

  // Throws DomainError when the value does not fit.
  std::uint64_t to_u64() const;

  Natural& operator+=(const Natural& rhs);
  // Throws DomainError if rhs > *this.
  Natural& operator-=(const Natural& rhs);
  Natural& add_power_of_two(std::uint64_t exponent);
  Natural& mul_small(Limb factor);
  Natural& add_small(Limb addend);
  // Divides in place and returns the remainder. divisor must be non-zero.
  Limb divmod_small(Limb divisor);
  Natural& shift_left(std::size_t bits);

  friend Natural operator+(Natural lhs, const Natural& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Natural operator-(Natural lhs, const Natural& rhs) {
    lhs -= rhs;
    return lhs;
  }

  friend bool operator==(const Natural&, const Natural&) = default;
  friend std::strong_ordering operator<=>(const Natural& lhs,
                                          const Natural& rhs) noexcept;

 private:
  void trim() noexcept;

  std::vector<Limb> limbs_;
};

}  // namespace indexradix
