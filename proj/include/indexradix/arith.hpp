#pragma once
// arith.hpp - Addition and multiplication in the index domain.
//
// Addition concatenates the operands' index lists; multiplication forms every
// pairwise index sum (2^i * 2^j = 2^(i+j)). Both produce a RawIndexBag that
// may hold repeated indices, and normalize() folds repeats with
// 2^n + 2^n = 2^(n+1) until every index is unique.

#include <cstddef>
#include <span>
#include <vector>

#include "indexradix/index_repr.hpp"
#include "indexradix/natural.hpp"

namespace indexradix {

// Unordered multiset of non-negative indices; value = sum of 2^entry.
class RawIndexBag {
 public:
  RawIndexBag() = default;
  // Throws ParseError on a negative or out-of-range entry.
  explicit RawIndexBag(std::vector<Index> entries);

  std::span<const Index> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Natural value() const { return reconstruct_sum(entries_); }

 private:
  std::vector<Index> entries_;
};

RawIndexBag concat_add(const IndexList& a, const IndexList& b);

// Carry normalization by bucket counting. Throws IndexOverflow if a carry
// would pass kMaxIndex.
IndexList normalize(const RawIndexBag& bag);
IndexList normalize(std::span<const Index> entries);

// Smallest index >= target that does not occur in `occupied`.
Index look_ahead(Index target, std::span<const Index> occupied);

// Reference normalizer that follows the textbook procedure literally: each
// entry is inserted into a duplicate-free result with look_ahead, clearing
// the occupied run [entry, target) it carries through. Quadratic; kept for
// differential testing against normalize(). Output is in insertion order.
std::vector<Index> simplify_reference(std::span<const Index> entries);

IndexList add(const IndexList& a, const IndexList& b);

// The un-normalized product multiset {i + j : i in a, j in b}.
RawIndexBag product_bag(const IndexList& a, const IndexList& b);

// normalize(product_bag(a, b)), computed without materializing the bag.
// Throws IndexOverflow if a pairwise sum leaves the index range.
IndexList multiply_indices(const IndexList& a, const IndexList& b);

Natural multiply_integers(const Natural& a, const Natural& b);

}  // namespace indexradix
