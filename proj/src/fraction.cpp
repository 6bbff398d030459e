#include "indexradix/fraction.hpp"

#include <algorithm>

#include "index_text.hpp"
#include "indexradix/errors.hpp"

namespace indexradix {

namespace {

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

struct DecimalParts {
  std::string_view integer;
  std::string_view fraction;
};

// Splits a non-negative decimal literal "I.F", "I", or ".F".
DecimalParts split_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal literal");
  if (text.front() == '-') {
    throw ParseError("negative values are not supported: " + std::string(text));
  }
  const auto dot = text.find('.');
  DecimalParts parts{text.substr(0, dot), dot == std::string_view::npos
                                              ? std::string_view{}
                                              : text.substr(dot + 1)};
  const bool dotted = dot != std::string_view::npos;
  if (parts.integer.empty() || (dotted && parts.fraction.empty()) ||
      !all_digits(parts.integer) || !all_digits(parts.fraction)) {
    throw ParseError("malformed decimal literal '" + std::string(text) + "'");
  }
  return parts;
}

FractionIndexList extract_bits(std::string_view fraction_digits,
                               std::size_t sensitivity) {
  if (sensitivity == 0) throw DomainError("sensitivity must be at least 1");
  std::vector<Index> out;
  const auto end = fraction_digits.find_last_not_of('0');
  if (end == std::string_view::npos) {
    return FractionIndexList::from_descending({}, sensitivity);
  }
  fraction_digits = fraction_digits.substr(0, end + 1);

  // value = numerator / 10^k, held exactly.
  Natural numerator = Natural::from_decimal(fraction_digits);
  Natural denominator(1);
  for (std::size_t i = 0; i < fraction_digits.size(); ++i) denominator.mul_small(10);

  Index position = 0;
  while (!numerator.is_zero() && out.size() < sensitivity) {
    numerator.shift_left(1);
    --position;
    if (numerator >= denominator) {
      numerator -= denominator;
      out.push_back(position);
    }
  }
  return FractionIndexList::from_descending(std::move(out), sensitivity);
}

}  // namespace

FractionIndexList FractionIndexList::from_descending(std::vector<Index> indices,
                                                     std::size_t sensitivity) {
  if (sensitivity == 0) throw DomainError("sensitivity must be at least 1");
  if (indices.size() > sensitivity) {
    throw ParseError("fraction list longer than its sensitivity bound");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] > -1 || (i > 0 && indices[i - 1] <= indices[i])) {
      throw ParseError(
          "fraction indices must be negative and strictly decreasing");
    }
  }
  FractionIndexList out;
  out.indices_ = std::move(indices);
  out.sensitivity_ = sensitivity;
  return out;
}

FractionIndexList dec2binary(std::string_view fraction, std::size_t sensitivity) {
  const DecimalParts parts = split_decimal(fraction);
  if (parts.integer.find_first_not_of('0') != std::string_view::npos) {
    throw DomainError("fraction must lie in [0, 1): " + std::string(fraction));
  }
  return extract_bits(parts.fraction, sensitivity);
}

std::string reconstruct_fraction(const FractionIndexList& fraction) {
  if (fraction.empty()) return "0";
  // sum 2^index = N / 2^m = N * 5^m / 10^m with m = -(lowest index).
  const auto m = static_cast<std::size_t>(-fraction.indices().back());
  std::vector<Index> shifted;
  shifted.reserve(fraction.size());
  for (Index index : fraction.indices()) {
    shifted.push_back(index + static_cast<Index>(m));
  }
  Natural scaled = reconstruct_sum(shifted);
  for (std::size_t i = 0; i < m; ++i) scaled.mul_small(5);

  std::string digits = scaled.to_decimal();
  digits.insert(0, m - digits.size(), '0');
  digits.erase(digits.find_last_not_of('0') + 1);
  return "0." + digits;
}

RealIndexLists deconstruct_real(std::string_view text, std::size_t sensitivity) {
  const DecimalParts parts = split_decimal(text);
  RealIndexLists out;
  if (!parts.integer.empty()) {
    out.integer = deconstruct(Natural::from_decimal(parts.integer));
  }
  out.fraction = extract_bits(parts.fraction, sensitivity);
  return out;
}

std::string to_json(const FractionIndexList& fraction) {
  return to_json(fraction.indices());
}

FractionIndexList parse_fraction_list(std::string_view text,
                                      std::size_t sensitivity) {
  return FractionIndexList::from_descending(detail::parse_integer_array(text),
                                            sensitivity);
}

}  // namespace indexradix
