#pragma once
// baselines.hpp - Coefficient-form reference multipliers on Natural limbs.
//
// These serve both as correctness oracles for the index-domain multiplier
// and as its benchmark comparators: schoolbook O(n^2), Karatsuba
// O(n^lg 3), and a single-prime Cooley-Tukey number theoretic transform.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "indexradix/natural.hpp"

namespace indexradix {

Natural schoolbook_mul(const Natural& a, const Natural& b);

struct KaratsubaOptions {
  // Operands with at most this many limbs in the shorter factor are
  // multiplied by the schoolbook routine.
  std::size_t cutoff_limbs = 32;
};

Natural karatsuba_mul(const Natural& a, const Natural& b,
                      const KaratsubaOptions& options = {});

// 119 * 2^23 + 1, primitive root 3.
inline constexpr std::uint32_t kDefaultNttModulus = 998244353;
inline constexpr std::uint32_t kDefaultNttGenerator = 3;

// Transform parameters for one power-of-two length. Immutable once built;
// twiddle factors are precomputed so a plan may be shared across threads.
class NttPlan {
 public:
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t root() const noexcept { return root_; }
  std::size_t length() const noexcept { return length_; }

  // In-place transforms over values reduced mod modulus(); the span length
  // must equal length(). inverse() includes the 1/length scaling.
  void forward(std::span<std::uint32_t> values) const;
  void inverse(std::span<std::uint32_t> values) const;

 private:
  friend NttPlan plan_ntt(std::size_t, std::uint32_t, std::uint32_t);

  void transform(std::span<std::uint32_t> values,
                 const std::vector<std::uint32_t>& twiddles) const;

  std::uint32_t modulus_ = kDefaultNttModulus;
  std::uint32_t root_ = 1;
  std::uint32_t length_inverse_ = 1;
  std::size_t length_ = 1;
  std::vector<std::uint32_t> twiddles_;
  std::vector<std::uint32_t> inverse_twiddles_;
};

// Plans the smallest power-of-two transform holding max_coeff_count
// coefficients. `generator` must generate the multiplicative group mod
// `modulus`. Throws CapacityExceeded if that length does not divide
// modulus - 1.
NttPlan plan_ntt(std::size_t max_coeff_count,
                 std::uint32_t modulus = kDefaultNttModulus,
                 std::uint32_t generator = kDefaultNttGenerator);

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exponent,
                      std::uint32_t modulus) noexcept;

struct NttOptions {
  // Upper bound on the coefficient width. The actual width is the largest
  // value not above this for which the convolution cannot wrap the modulus.
  unsigned max_coefficient_bits = 16;
};

// Width in bits of the coefficients ntt_mul would use for operands of the
// given bit lengths, or 0 if no width avoids modular overflow.
unsigned ntt_coefficient_bits(std::size_t a_bits, std::size_t b_bits,
                              const NttOptions& options = {});

// Throws CapacityExceeded if the product cannot be formed exactly with the
// single default modulus.
Natural ntt_mul(const Natural& a, const Natural& b,
                const NttOptions& options = {});

}  // namespace indexradix
