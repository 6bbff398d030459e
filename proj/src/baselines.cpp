#include "indexradix/baselines.hpp"

#include <algorithm>
#include <bit>

#include "indexradix/errors.hpp"

namespace indexradix {

namespace {

using LimbSpan = std::span<const Limb>;

LimbSpan trimmed(LimbSpan s) {
  while (!s.empty() && s.back() == 0) s = s.first(s.size() - 1);
  return s;
}

// out[0 .. a.size() + b.size()) = a * b; out must be zeroed.
void schoolbook_into(LimbSpan a, LimbSpan b, std::span<Limb> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const DoubleLimb ai = a[i];
    if (ai == 0) continue;
    DoubleLimb carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      carry += ai * b[j] + out[i + j];
      out[i + j] = static_cast<Limb>(carry);
      carry >>= kLimbBits;
    }
    out[i + b.size()] = static_cast<Limb>(carry);
  }
}

// dst[offset ..] += src, growing dst as needed.
void add_at(std::vector<Limb>& dst, LimbSpan src, std::size_t offset) {
  if (dst.size() < offset + src.size() + 1) dst.resize(offset + src.size() + 1, 0);
  DoubleLimb carry = 0;
  std::size_t i = 0;
  for (; i < src.size(); ++i) {
    carry += static_cast<DoubleLimb>(dst[offset + i]) + src[i];
    dst[offset + i] = static_cast<Limb>(carry);
    carry >>= kLimbBits;
  }
  for (std::size_t k = offset + i; carry != 0; ++k) {
    if (k == dst.size()) dst.push_back(0);
    carry += dst[k];
    dst[k] = static_cast<Limb>(carry);
    carry >>= kLimbBits;
  }
}

// dst -= src; requires dst >= src.
void sub_in_place(std::vector<Limb>& dst, LimbSpan src) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < dst.size() && (i < src.size() || borrow != 0); ++i) {
    const std::int64_t s = i < src.size() ? src[i] : 0;
    std::int64_t d = static_cast<std::int64_t>(dst[i]) - s - borrow;
    borrow = d < 0 ? 1 : 0;
    dst[i] = static_cast<Limb>(d + (borrow << kLimbBits));
  }
}

std::vector<Limb> karatsuba(LimbSpan a, LimbSpan b, std::size_t cutoff) {
  a = trimmed(a);
  b = trimmed(b);
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= cutoff) {
    std::vector<Limb> out(a.size() + b.size(), 0);
    schoolbook_into(a, b, out);
    return out;
  }

  const std::size_t half = std::max(a.size(), b.size()) / 2;
  const LimbSpan a0 = a.first(std::min(half, a.size()));
  const LimbSpan a1 = a.size() > half ? a.subspan(half) : LimbSpan{};
  const LimbSpan b0 = b.first(std::min(half, b.size()));
  const LimbSpan b1 = b.size() > half ? b.subspan(half) : LimbSpan{};

  std::vector<Limb> low = karatsuba(a0, b0, cutoff);
  std::vector<Limb> high = karatsuba(a1, b1, cutoff);

  std::vector<Limb> a_sum(a0.begin(), a0.end());
  add_at(a_sum, a1, 0);
  std::vector<Limb> b_sum(b0.begin(), b0.end());
  add_at(b_sum, b1, 0);
  // (a0 + a1)(b0 + b1) - a0 b0 - a1 b1 = a0 b1 + a1 b0
  std::vector<Limb> middle = karatsuba(a_sum, b_sum, cutoff);
  sub_in_place(middle, low);
  sub_in_place(middle, high);

  std::vector<Limb> out(a.size() + b.size() + 1, 0);
  add_at(out, low, 0);
  add_at(out, trimmed(middle), half);
  add_at(out, high, 2 * half);
  return out;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t m) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % m);
}

// Splits n into `width`-bit coefficients, least significant first.
std::vector<std::uint32_t> to_coefficients(const Natural& n, unsigned width,
                                           std::size_t count) {
  std::vector<std::uint32_t> out(count, 0);
  const std::uint32_t mask = (std::uint32_t{1} << width) - 1;
  const std::size_t bits = n.bit_length();
  const auto limbs = n.limbs();
  for (std::size_t k = 0, bit = 0; bit < bits; ++k, bit += width) {
    const std::size_t limb = bit / kLimbBits;
    const unsigned shift = bit % kLimbBits;
    std::uint64_t window = limbs[limb];
    if (limb + 1 < limbs.size()) {
      window |= static_cast<std::uint64_t>(limbs[limb + 1]) << kLimbBits;
    }
    out[k] = static_cast<std::uint32_t>(window >> shift) & mask;
  }
  return out;
}

}  // namespace

Natural schoolbook_mul(const Natural& a, const Natural& b) {
  if (a.is_zero() || b.is_zero()) return Natural{};
  std::vector<Limb> out(a.limb_count() + b.limb_count(), 0);
  schoolbook_into(a.limbs(), b.limbs(), out);
  return Natural::from_limbs(std::move(out));
}

Natural karatsuba_mul(const Natural& a, const Natural& b,
                      const KaratsubaOptions& options) {
  // A cutoff below 2 would let the half-size sums stop shrinking.
  const std::size_t cutoff = std::max<std::size_t>(options.cutoff_limbs, 2);
  return Natural::from_limbs(karatsuba(a.limbs(), b.limbs(), cutoff));
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exponent,
                      std::uint32_t modulus) noexcept {
  std::uint32_t result = 1 % modulus;
  base %= modulus;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

NttPlan plan_ntt(std::size_t max_coeff_count, std::uint32_t modulus,
                 std::uint32_t generator) {
  const std::size_t length = std::bit_ceil(std::max<std::size_t>(max_coeff_count, 1));
  const std::uint64_t order = modulus - 1;
  if (order % length != 0) {
    throw CapacityExceeded("transform length " + std::to_string(length) +
                           " exceeds the 2-adic capacity of modulus " +
                           std::to_string(modulus));
  }
  NttPlan plan;
  plan.modulus_ = modulus;
  plan.length_ = length;
  plan.root_ = pow_mod(generator, order / length, modulus);
  if (pow_mod(plan.root_, length, modulus) != 1 ||
      (length > 1 && pow_mod(plan.root_, length / 2, modulus) != modulus - 1)) {
    throw DomainError("generator " + std::to_string(generator) +
                      " does not yield a primitive root of unity");
  }
  const std::uint32_t root_inverse = pow_mod(plan.root_, modulus - 2, modulus);
  plan.length_inverse_ = pow_mod(static_cast<std::uint32_t>(length % modulus),
                                 modulus - 2, modulus);

  plan.twiddles_.resize(std::max<std::size_t>(length / 2, 1));
  plan.inverse_twiddles_.resize(plan.twiddles_.size());
  std::uint32_t w = 1;
  std::uint32_t w_inv = 1;
  for (std::size_t k = 0; k < plan.twiddles_.size(); ++k) {
    plan.twiddles_[k] = w;
    plan.inverse_twiddles_[k] = w_inv;
    w = mul_mod(w, plan.root_, modulus);
    w_inv = mul_mod(w_inv, root_inverse, modulus);
  }
  return plan;
}

void NttPlan::forward(std::span<std::uint32_t> values) const {
  transform(values, twiddles_);
}

void NttPlan::inverse(std::span<std::uint32_t> values) const {
  transform(values, inverse_twiddles_);
  for (auto& v : values) v = mul_mod(v, length_inverse_, modulus_);
}

void NttPlan::transform(std::span<std::uint32_t> values,
                        const std::vector<std::uint32_t>& twiddles) const {
  if (values.size() != length_) {
    throw DomainError("NTT input length does not match the plan");
  }
  const std::size_t n = length_;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(values[i], values[j]);
  }
  const std::uint32_t p = modulus_;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const std::uint32_t u = values[start + j];
        const std::uint32_t t =
            mul_mod(values[start + j + half], twiddles[j * stride], p);
        const std::uint64_t sum = static_cast<std::uint64_t>(u) + t;
        values[start + j] = static_cast<std::uint32_t>(sum >= p ? sum - p : sum);
        values[start + j + half] = u >= t ? u - t : p - (t - u);
      }
    }
  }
}

unsigned ntt_coefficient_bits(std::size_t a_bits, std::size_t b_bits,
                              const NttOptions& options) {
  const unsigned top = std::clamp(options.max_coefficient_bits, 1U, 16U);
  for (unsigned width = top; width >= 1; --width) {
    const std::uint64_t a_count = (a_bits + width - 1) / width;
    const std::uint64_t b_count = (b_bits + width - 1) / width;
    const std::uint64_t terms = std::max<std::uint64_t>(std::min(a_count, b_count), 1);
    const std::uint64_t max_coeff = (std::uint64_t{1} << width) - 1;
    // Each convolution output sums at most `terms` coefficient products.
    if (terms <= (kDefaultNttModulus - 1) / (max_coeff * max_coeff)) return width;
  }
  return 0;
}

Natural ntt_mul(const Natural& a, const Natural& b, const NttOptions& options) {
  if (a.is_zero() || b.is_zero()) return Natural{};
  const unsigned width = ntt_coefficient_bits(a.bit_length(), b.bit_length(), options);
  if (width == 0) {
    throw CapacityExceeded("operands too long for single-modulus NTT");
  }
  const std::size_t a_count = (a.bit_length() + width - 1) / width;
  const std::size_t b_count = (b.bit_length() + width - 1) / width;
  const NttPlan plan = plan_ntt(a_count + b_count - 1);

  std::vector<std::uint32_t> fa = to_coefficients(a, width, plan.length());
  std::vector<std::uint32_t> fb = to_coefficients(b, width, plan.length());
  plan.forward(fa);
  plan.forward(fb);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    fa[i] = mul_mod(fa[i], fb[i], plan.modulus());
  }
  plan.inverse(fa);

  // Carry the convolution back into 32-bit limbs.
  std::vector<Limb> limbs;
  limbs.reserve((a.bit_length() + b.bit_length()) / kLimbBits + 2);
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  std::uint64_t carry = 0;
  std::uint64_t pending = 0;
  unsigned pending_bits = 0;
  auto emit = [&](std::uint64_t chunk) {
    pending |= chunk << pending_bits;
    pending_bits += width;
    if (pending_bits >= kLimbBits) {
      limbs.push_back(static_cast<Limb>(pending));
      pending >>= kLimbBits;
      pending_bits -= kLimbBits;
    }
  };
  for (std::uint32_t c : fa) {
    carry += c;
    emit(carry & mask);
    carry >>= width;
  }
  while (carry != 0) {
    emit(carry & mask);
    carry >>= width;
  }
  if (pending_bits != 0) limbs.push_back(static_cast<Limb>(pending));
  return Natural::from_limbs(std::move(limbs));
}

}  // namespace indexradix
