#include "indexradix/natural.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "indexradix/errors.hpp"

namespace indexradix {

namespace {

constexpr Limb kDecimalChunk = 1'000'000'000;  // 10^9
constexpr std::size_t kDecimalChunkDigits = 9;

int hex_value(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Natural::Natural(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<Limb>(value));
    value >>= kLimbBits;
  }
}

Natural Natural::from_limbs(std::vector<Limb> limbs) {
  Natural n;
  n.limbs_ = std::move(limbs);
  n.trim();
  return n;
}

Natural Natural::power_of_two(std::uint64_t exponent) {
  Natural n;
  n.limbs_.assign(exponent / kLimbBits + 1, 0);
  n.limbs_.back() = Limb{1} << (exponent % kLimbBits);
  return n;
}

Natural Natural::from_decimal(std::string_view digits) {
  if (digits.empty()) throw ParseError("empty decimal literal");
  Natural n;
  n.limbs_.reserve(digits.size() / 9 + 1);
  std::size_t pos = 0;
  // The first chunk absorbs the remainder so that every later chunk is a full
  // 9 digits.
  std::size_t chunk = digits.size() % kDecimalChunkDigits;
  if (chunk == 0) chunk = kDecimalChunkDigits;
  while (pos < digits.size()) {
    Limb value = 0;
    Limb scale = 1;
    for (std::size_t i = 0; i < chunk; ++i) {
      const char c = digits[pos + i];
      if (c < '0' || c > '9') {
        throw ParseError("invalid decimal digit '" + std::string(1, c) + "'");
      }
      value = value * 10 + static_cast<Limb>(c - '0');
      scale *= 10;
    }
    n.mul_small(scale);
    n.add_small(value);
    pos += chunk;
    chunk = kDecimalChunkDigits;
  }
  return n;
}

Natural Natural::from_hex(std::string_view digits) {
  if (digits.empty()) throw ParseError("empty hex literal");
  std::vector<Limb> limbs((digits.size() + 7) / 8, 0);
  std::size_t bit = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4) {
    const int v = hex_value(*it);
    if (v < 0) {
      throw ParseError("invalid hex digit '" + std::string(1, *it) + "'");
    }
    limbs[bit / kLimbBits] |= static_cast<Limb>(v) << (bit % kLimbBits);
  }
  return from_limbs(std::move(limbs));
}

Natural Natural::from_binary(std::string_view digits) {
  if (digits.empty()) throw ParseError("empty binary literal");
  std::vector<Limb> limbs((digits.size() + kLimbBits - 1) / kLimbBits, 0);
  std::size_t end = digits.size();
  for (Limb& limb : limbs) {
    const std::size_t begin = end >= kLimbBits ? end - kLimbBits : 0;
    Limb value = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const char c = digits[i];
      if (c != '0' && c != '1') {
        throw ParseError("invalid binary digit '" + std::string(1, c) + "'");
      }
      value = (value << 1) | static_cast<Limb>(c - '0');
    }
    limb = value;
    end = begin;
  }
  return from_limbs(std::move(limbs));
}

std::string Natural::to_decimal() const {
  if (is_zero()) return "0";
  Natural work = *this;
  std::vector<Limb> chunks;
  chunks.reserve(limbs_.size() * 10 / 9 + 1);
  while (!work.is_zero()) chunks.push_back(work.divmod_small(kDecimalChunk));

  std::string out = std::to_string(chunks.back());
  for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
    const std::string part = std::to_string(*it);
    out.append(kDecimalChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

std::string Natural::to_hex() const {
  if (is_zero()) return "0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(limbs_.size() * 8);
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    for (int shift = kLimbBits - 4; shift >= 0; shift -= 4) {
      out.push_back(kDigits[(*it >> shift) & 0xF]);
    }
  }
  out.erase(0, out.find_first_not_of('0'));
  return out;
}

std::size_t Natural::bit_length() const noexcept {
  if (is_zero()) return 0;
  return (limbs_.size() - 1) * kLimbBits + std::bit_width(limbs_.back());
}

std::size_t Natural::popcount() const noexcept {
  std::size_t total = 0;
  for (Limb limb : limbs_) total += std::popcount(limb);
  return total;
}

bool Natural::test_bit(std::size_t position) const noexcept {
  const std::size_t limb = position / kLimbBits;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (position % kLimbBits)) & 1U;
}

std::uint64_t Natural::to_u64() const {
  if (limbs_.size() > 2) throw DomainError("value does not fit in 64 bits");
  std::uint64_t value = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    value = (value << kLimbBits) | limbs_[i];
  }
  return value;
}

Natural& Natural::operator+=(const Natural& rhs) {
  if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  DoubleLimb carry = 0;
  std::size_t i = 0;
  for (; i < rhs.limbs_.size(); ++i) {
    carry += static_cast<DoubleLimb>(limbs_[i]) + rhs.limbs_[i];
    limbs_[i] = static_cast<Limb>(carry);
    carry >>= kLimbBits;
  }
  for (; carry != 0 && i < limbs_.size(); ++i) {
    carry += limbs_[i];
    limbs_[i] = static_cast<Limb>(carry);
    carry >>= kLimbBits;
  }
  if (carry != 0) limbs_.push_back(static_cast<Limb>(carry));
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (*this < rhs) throw DomainError("natural subtraction would be negative");
  std::int64_t borrow = 0;
  std::size_t i = 0;
  for (; i < rhs.limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - rhs.limbs_[i] - borrow;
    borrow = d < 0 ? 1 : 0;
    limbs_[i] = static_cast<Limb>(d + (borrow << kLimbBits));
  }
  for (; borrow != 0 && i < limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow;
    borrow = d < 0 ? 1 : 0;
    limbs_[i] = static_cast<Limb>(d + (borrow << kLimbBits));
  }
  trim();
  return *this;
}

Natural& Natural::add_power_of_two(std::uint64_t exponent) {
  std::size_t i = exponent / kLimbBits;
  if (i >= limbs_.size()) limbs_.resize(i + 1, 0);
  DoubleLimb carry = Limb{1} << (exponent % kLimbBits);
  for (; carry != 0 && i < limbs_.size(); ++i) {
    carry += limbs_[i];
    limbs_[i] = static_cast<Limb>(carry);
    carry >>= kLimbBits;
  }
  if (carry != 0) limbs_.push_back(static_cast<Limb>(carry));
  return *this;
}

Natural& Natural::mul_small(Limb factor) {
  if (factor == 0) {
    limbs_.clear();
    return *this;
  }
  DoubleLimb carry = 0;
  for (Limb& limb : limbs_) {
    carry += static_cast<DoubleLimb>(limb) * factor;
    limb = static_cast<Limb>(carry);
    carry >>= kLimbBits;
  }
  if (carry != 0) limbs_.push_back(static_cast<Limb>(carry));
  return *this;
}

Natural& Natural::add_small(Limb addend) {
  DoubleLimb carry = addend;
  for (std::size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
    carry += limbs_[i];
    limbs_[i] = static_cast<Limb>(carry);
    carry >>= kLimbBits;
  }
  if (carry != 0) limbs_.push_back(static_cast<Limb>(carry));
  return *this;
}

Limb Natural::divmod_small(Limb divisor) {
  if (divisor == 0) throw DomainError("division by zero");
  DoubleLimb rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    const DoubleLimb cur = (rem << kLimbBits) | limbs_[i];
    limbs_[i] = static_cast<Limb>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<Limb>(rem);
}

Natural& Natural::shift_left(std::size_t bits) {
  if (is_zero() || bits == 0) return *this;
  const std::size_t limb_shift = bits / kLimbBits;
  const unsigned bit_shift = bits % kLimbBits;
  if (bit_shift != 0) {
    Limb carry = 0;
    for (Limb& limb : limbs_) {
      const Limb next = limb >> (kLimbBits - bit_shift);
      limb = (limb << bit_shift) | carry;
      carry = next;
    }
    if (carry != 0) limbs_.push_back(carry);
  }
  limbs_.insert(limbs_.begin(), limb_shift, 0);
  return *this;
}

std::strong_ordering operator<=>(const Natural& lhs,
                                 const Natural& rhs) noexcept {
  if (lhs.limbs_.size() != rhs.limbs_.size()) {
    return lhs.limbs_.size() <=> rhs.limbs_.size();
  }
  for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
    if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

void Natural::trim() noexcept {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

}  // namespace indexradix
