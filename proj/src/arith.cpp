#include "indexradix/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>

#include "indexradix/errors.hpp"

namespace indexradix {

namespace {

// Bags up to this size are sorted on the stack.
constexpr std::size_t kSmallBag = 64;
// Index spans below this are bucket-counted on the stack.
constexpr std::size_t kStackSpan = 512;
constexpr std::size_t kStackEntries = std::size_t{1} << 20;

[[noreturn]] void throw_overflow(Index at) {
  throw IndexOverflow("carry out of index " + std::to_string(at) +
                      " exceeds the machine-word index bound");
}

// Dense bucket counting pays off while the index span is not much wider than
// the number of entries.
bool prefer_dense(std::uint64_t span, std::size_t entries) {
  return span <= 4 * static_cast<std::uint64_t>(entries) + 4096;
}

IndexList finish(std::vector<Index>& ascending) {
  std::reverse(ascending.begin(), ascending.end());
  return IndexList::adopt(std::move(ascending));
}

// Carry sweep over entries sorted ascending.
IndexList sweep_sorted(std::span<const Index> sorted) {
  std::vector<Index> out;
  out.reserve(sorted.size());
  std::size_t i = 0;
  std::uint64_t carry = 0;
  Index carry_at = 0;
  while (i < sorted.size() || carry != 0) {
    const Index k = carry != 0 ? carry_at : sorted[i];
    std::uint64_t count = carry;
    while (i < sorted.size() && sorted[i] == k) {
      ++count;
      ++i;
    }
    if (count & 1U) out.push_back(k);
    carry = count >> 1;
    if (carry != 0) {
      if (k == kMaxIndex) throw_overflow(k);
      carry_at = k + 1;
    }
  }
  return finish(out);
}

// Carry sweep over bucket counts; counts[k] is the multiplicity of base + k.
IndexList sweep_dense(std::span<const std::uint64_t> counts, Index base) {
  std::vector<Index> out;
  std::uint64_t carry = 0;
  for (std::size_t k = 0; k < counts.size() || carry != 0; ++k) {
    const std::uint64_t count =
        carry + (k < counts.size() ? counts[k] : std::uint64_t{0});
    const Index index = base + static_cast<Index>(k);
    if (count & 1U) out.push_back(index);
    carry = count >> 1;
    if (carry != 0 && index == kMaxIndex) throw_overflow(index);
  }
  return finish(out);
}

// Bucket counting with counts and output staged on the stack, so the result
// list is the only allocation. fill(counts) adds the multiplicities relative
// to base; total entries must stay below kStackEntries.
template <typename Fill>
IndexList stack_dense(std::size_t span, Index base, Fill&& fill) {
  std::array<std::uint32_t, kStackSpan> counts;
  std::fill_n(counts.begin(), span + 1, 0U);
  fill(counts.data());
  // Carries run at most log2(kStackEntries) + 1 places past the span.
  std::array<Index, kStackSpan + 32> ascending;
  std::size_t n = 0;
  std::uint32_t carry = 0;
  for (std::size_t k = 0; k <= span || carry != 0; ++k) {
    const std::uint32_t count = carry + (k <= span ? counts[k] : 0U);
    const Index index = base + static_cast<Index>(k);
    if (count & 1U) ascending[n++] = index;
    carry = count >> 1;
    if (carry != 0 && index == kMaxIndex) throw_overflow(index);
  }
  return IndexList::adopt(std::vector<Index>(
      std::make_reverse_iterator(ascending.begin() + n),
      std::make_reverse_iterator(ascending.begin())));
}

void check_entry(Index entry) {
  if (entry < 0 || entry > kMaxIndex) {
    throw ParseError("raw index bag entry out of range: " +
                     std::to_string(entry));
  }
}

}  // namespace

RawIndexBag::RawIndexBag(std::vector<Index> entries)
    : entries_(std::move(entries)) {
  for (Index e : entries_) check_entry(e);
}

RawIndexBag concat_add(const IndexList& a, const IndexList& b) {
  std::vector<Index> entries;
  entries.reserve(a.size() + b.size());
  entries.insert(entries.end(), a.begin(), a.end());
  entries.insert(entries.end(), b.begin(), b.end());
  return RawIndexBag(std::move(entries));
}

IndexList normalize(const RawIndexBag& bag) { return normalize(bag.entries()); }

IndexList normalize(std::span<const Index> entries) {
  if (entries.empty()) return {};
  Index lo = entries.front();
  Index hi = entries.front();
  for (Index e : entries) {
    check_entry(e);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }

  const auto span = static_cast<std::uint64_t>(hi - lo);
  if (span < kStackSpan && entries.size() < kStackEntries) {
    return stack_dense(span, lo, [&](std::uint32_t* counts) {
      for (Index e : entries) ++counts[e - lo];
    });
  }

  if (entries.size() <= kSmallBag) {
    std::array<Index, kSmallBag> buf;
    std::copy(entries.begin(), entries.end(), buf.begin());
    std::sort(buf.begin(), buf.begin() + entries.size());
    return sweep_sorted(std::span(buf.data(), entries.size()));
  }

  if (prefer_dense(span, entries.size())) {
    std::vector<std::uint64_t> counts(span + 1, 0);
    for (Index e : entries) ++counts[static_cast<std::size_t>(e - lo)];
    return sweep_dense(counts, lo);
  }

  std::vector<Index> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end());
  return sweep_sorted(sorted);
}

Index look_ahead(Index target, std::span<const Index> occupied) {
  while (std::find(occupied.begin(), occupied.end(), target) != occupied.end()) {
    if (target == kMaxIndex) throw_overflow(target);
    ++target;
  }
  return target;
}

std::vector<Index> simplify_reference(std::span<const Index> entries) {
  std::vector<Index> result;
  for (Index entry : entries) {
    check_entry(entry);
    const Index target = look_ahead(entry, result);
    for (Index step = 0; step < target - entry; ++step) {
      auto it = std::find(result.begin(), result.end(), entry + step);
      if (it != result.end()) result.erase(it);
    }
    result.push_back(target);
  }
  return result;
}

IndexList add(const IndexList& a, const IndexList& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return normalize(concat_add(a, b));
}

RawIndexBag product_bag(const IndexList& a, const IndexList& b) {
  if (!a.empty() && !b.empty() && a.leading() > kMaxIndex - b.leading()) {
    throw IndexOverflow("index sum " + std::to_string(a.leading()) + " + " +
                        std::to_string(b.leading()) +
                        " exceeds the machine-word index bound");
  }
  std::vector<Index> sums;
  sums.reserve(a.size() * b.size());
  for (Index i : a) {
    for (Index j : b) sums.push_back(i + j);
  }
  return RawIndexBag(std::move(sums));
}

IndexList multiply_indices(const IndexList& a, const IndexList& b) {
  if (a.empty() || b.empty()) return {};
  if (a.leading() > kMaxIndex - b.leading()) {
    throw IndexOverflow("index sum " + std::to_string(a.leading()) + " + " +
                        std::to_string(b.leading()) +
                        " exceeds the machine-word index bound");
  }
  const std::size_t pairs = a.size() * b.size();
  const Index a_low = a[a.size() - 1];
  const Index b_low = b[b.size() - 1];
  const auto span =
      static_cast<std::uint64_t>((a.leading() + b.leading()) - (a_low + b_low));

  if (span < kStackSpan && pairs < kStackEntries) {
    return stack_dense(span, a_low + b_low, [&](std::uint32_t* counts) {
      for (Index i : a) {
        std::uint32_t* row = counts + (i - a_low);
        for (Index j : b) ++row[j - b_low];
      }
    });
  }

  if (pairs <= kSmallBag) {
    std::array<Index, kSmallBag> sums;
    std::size_t n = 0;
    for (Index i : a) {
      for (Index j : b) sums[n++] = i + j;
    }
    std::sort(sums.begin(), sums.begin() + n);
    return sweep_sorted(std::span(sums.data(), n));
  }

  if (!prefer_dense(span, pairs)) {
    std::vector<Index> sums;
    sums.reserve(pairs);
    for (Index i : a) {
      for (Index j : b) sums.push_back(i + j);
    }
    std::sort(sums.begin(), sums.end());
    return sweep_sorted(sums);
  }

  // Every pair sum i + j lands in bucket (i - a_low) + (j - b_low).
  std::vector<std::uint64_t> counts(span + 1, 0);
  std::vector<std::size_t> b_offsets;
  b_offsets.reserve(b.size());
  for (Index j : b) b_offsets.push_back(static_cast<std::size_t>(j - b_low));
  for (Index i : a) {
    std::uint64_t* row = counts.data() + (i - a_low);
    for (std::size_t off : b_offsets) ++row[off];
  }
  return sweep_dense(counts, a_low + b_low);
}

Natural multiply_integers(const Natural& a, const Natural& b) {
  return reconstruct_sum(multiply_indices(deconstruct(a), deconstruct(b)));
}

}  // namespace indexradix
