#include <gtest/gtest.h>

#include "indexradix/arith.hpp"
#include "indexradix/errors.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "worked_examples.hpp"

using namespace indexradix;

namespace {

std::vector<Index> v(const IndexList& l) { return {l.begin(), l.end()}; }
std::vector<Index> v(const RawIndexBag& b) { return {b.entries().begin(), b.entries().end()}; }
IndexList L(std::vector<Index> x) { return IndexList::from_descending(std::move(x)); }

}  // namespace

TEST(ConcatAdd, KeepsDuplicates) {
  EXPECT_EQ(v(concat_add(L({4, 0}), L({4, 2, 0}))), (std::vector<Index>{4, 0, 4, 2, 0}));
  EXPECT_EQ(v(concat_add(L({6, 5, 0}), L({}))), (std::vector<Index>{6, 5, 0}));
  EXPECT_EQ(concat_add(L({4, 0}), L({4, 2, 0})).value(), Natural(38));
}

TEST(ConcatAdd, Rsa100FactorsGivePublishedConcatenation) {
  const RawIndexBag bag = concat_add(L(worked::kFactorAIndices), L(worked::kFactorBIndices));
  EXPECT_EQ(v(bag), worked::kConcatenatedIndices);
  EXPECT_EQ(bag.size(), 169u);
  EXPECT_EQ(bag.value().to_decimal(), worked::kRsa100FactorSum);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(v(normalize(RawIndexBag({4, 0, 4, 2, 0}))), (std::vector<Index>{5, 2, 1}));
  EXPECT_TRUE(normalize(RawIndexBag{}).empty());
  EXPECT_EQ(v(normalize(RawIndexBag({0, 0, 0}))), (std::vector<Index>{1, 0}));
  EXPECT_EQ(v(normalize(RawIndexBag(worked::kConcatenatedIndices))),
            worked::kSimplifiedSumIndices);
}

TEST(Normalize, LongCarryChains) {
  std::vector<Index> ones(4096, 7);
  EXPECT_EQ(v(normalize(ones)), (std::vector<Index>{19}));
  // 2^k - 1 plus 1 ripples all the way up.
  std::vector<Index> ripple;
  for (Index i = 999; i >= 0; --i) ripple.push_back(i);
  ripple.push_back(0);
  EXPECT_EQ(v(normalize(ripple)), (std::vector<Index>{1000}));
}

TEST(Normalize, SparseHugeIndices) {
  const std::vector<Index> bag{Index{1} << 60, 3, Index{1} << 60, 3, 3};
  EXPECT_EQ(v(normalize(bag)), (std::vector<Index>{(Index{1} << 60) + 1, 4, 3}));
  std::vector<Index> wide;
  for (Index i = 0; i < 500; ++i) wide.push_back(i * 1000003);
  wide.push_back(0);
  const IndexList n = normalize(wide);
  EXPECT_EQ(n.size(), 500u);
  EXPECT_EQ(n[n.size() - 1], 1);
}

TEST(Normalize, OverflowAtIndexBound) {
  EXPECT_THROW(normalize(std::vector<Index>{kMaxIndex, kMaxIndex}), IndexOverflow);
  EXPECT_EQ(v(normalize(std::vector<Index>{kMaxIndex - 1, kMaxIndex - 1})),
            (std::vector<Index>{kMaxIndex}));
  EXPECT_THROW(RawIndexBag({-1}), ParseError);
  EXPECT_THROW(normalize(std::vector<Index>{kMaxIndex + 1}), ParseError);
}

TEST(LookAhead, Examples) {
  EXPECT_EQ(look_ahead(4, std::vector<Index>{4, 5, 6}), 7);
  EXPECT_EQ(look_ahead(3, std::vector<Index>{}), 3);
  EXPECT_EQ(look_ahead(0, std::vector<Index>{0}), 1);
  EXPECT_EQ(look_ahead(2, std::vector<Index>{0, 1, 3}), 2);
}

TEST(SimplifyReference, BehavesAsBinaryIncrement) {
  std::vector<Index> r = simplify_reference(std::vector<Index>{4, 0, 4, 2, 0});
  std::sort(r.rbegin(), r.rend());
  EXPECT_EQ(r, (std::vector<Index>{5, 2, 1}));
  r = simplify_reference(worked::kConcatenatedIndices);
  std::sort(r.rbegin(), r.rend());
  EXPECT_EQ(r, worked::kSimplifiedSumIndices);
}

TEST(Add, Examples) {
  EXPECT_EQ(v(add(L({4, 0}), L({4, 2, 0}))), (std::vector<Index>{5, 2, 1}));
  EXPECT_EQ(add(L({9, 3}), L({})), L({9, 3}));
  EXPECT_EQ(add(L({}), L({})), L({}));
  const IndexList sum = add(L(worked::kFactorAIndices), L(worked::kFactorBIndices));
  EXPECT_EQ(reconstruct_sum(sum).to_decimal(), worked::kRsa100FactorSum);
  EXPECT_EQ(v(sum), worked::kSimplifiedSumIndices);
}

TEST(MultiplyIndices, Examples) {
  EXPECT_EQ(v(product_bag(L({4, 0}), L({4, 1, 0}))), (std::vector<Index>{8, 5, 4, 4, 1, 0}));
  EXPECT_EQ(v(multiply_indices(L({4, 0}), L({4, 1, 0}))), (std::vector<Index>{8, 6, 1, 0}));
  EXPECT_TRUE(multiply_indices(L({7, 2}), L({})).empty());
  EXPECT_EQ(multiply_indices(L({7, 2}), L({0})), L({7, 2}));
  const IndexList first = multiply_indices(L({14, 13, 12, 11, 9, 7, 2, 1, 0}),
                                           L({11, 10, 9, 7, 6, 4, 3, 1, 0}));
  EXPECT_EQ(v(first), worked::kFirstSubProductIndices);
  EXPECT_EQ(reconstruct_sum(first).to_decimal(), worked::kFirstSubProduct);
}

TEST(MultiplyIndices, CommutesAndHandlesSparseOperands) {
  const IndexList a = L({Index{1} << 40, 1000, 0});
  const IndexList b = L({Index{1} << 41, 5});
  EXPECT_EQ(multiply_indices(a, b), multiply_indices(b, a));
  EXPECT_EQ(v(multiply_indices(a, b)),
            (std::vector<Index>{(Index{1} << 41) + (Index{1} << 40), (Index{1} << 41) + 1000,
                                Index{1} << 41, (Index{1} << 40) + 5, 1005, 5}));
}

TEST(MultiplyIndices, OverflowIsReported) {
  EXPECT_THROW(multiply_indices(L({kMaxIndex / 2 + 1}), L({kMaxIndex / 2 + 1})),
               IndexOverflow);
  EXPECT_THROW(product_bag(L({kMaxIndex}), L({1})), IndexOverflow);
}

TEST(MultiplyIntegers, Examples) {
  EXPECT_EQ(multiply_integers(Natural(17), Natural(19)), Natural(323));
  EXPECT_EQ(multiply_integers(Natural(12345), Natural(0)), Natural(0));
  EXPECT_EQ(multiply_integers(parse_number(worked::kRsa100FactorA),
                              parse_number(worked::kRsa100FactorB))
                .to_decimal(),
            worked::kRsa100);
}

TEST(ArithProperties, AddAgreesWithGmp) {
  const auto r = properties::add_homomorphism(300, 21);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ArithProperties, MultiplyAgreesWithGmp) {
  const auto r = properties::multiply_homomorphism(300, 22);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ArithProperties, NormalizeLaws) {
  const auto r = properties::normalize_laws(500, 23);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ArithProperties, RoundTripAndPopcount) {
  auto r = properties::round_trip(300, 24);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  r = properties::popcount_length(300, 25);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
