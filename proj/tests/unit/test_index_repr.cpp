#include <gtest/gtest.h>

#include "indexradix/errors.hpp"
#include "indexradix/index_repr.hpp"
#include "oracle.hpp"
#include "worked_examples.hpp"

using namespace indexradix;

namespace {

std::vector<Index> v(const IndexList& l) { return {l.begin(), l.end()}; }

}  // namespace

TEST(Natural, DecimalAndHexRoundTrip) {
  const std::string digits(worked::kRsa100);
  const Natural n = Natural::from_decimal(digits);
  EXPECT_EQ(n.to_decimal(), digits);
  EXPECT_EQ(Natural::from_hex(n.to_hex()), n);
  EXPECT_EQ(Natural(0).to_decimal(), "0");
  EXPECT_EQ(Natural(0).to_hex(), "0");
  EXPECT_EQ(Natural(255).to_hex(), "ff");
}

TEST(Natural, MatchesGmpOnMixedOperations) {
  oracle::Source src(11);
  for (int k = 0; k < 200; ++k) {
    const mpz_class a = src.up_to(700);
    const mpz_class b = src.up_to(700);
    const Natural na = oracle::from_mpz(a);
    const Natural nb = oracle::from_mpz(b);
    EXPECT_EQ(oracle::to_mpz(na + nb), a + b);
    EXPECT_EQ(na.popcount(), mpz_popcount(a.get_mpz_t()));
    if (a >= b) {
      EXPECT_EQ(oracle::to_mpz(na - nb), a - b);
    } else {
      EXPECT_THROW(na - nb, DomainError);
    }
    EXPECT_EQ(na < nb, a < b);
    EXPECT_EQ(na.to_decimal(), a.get_str(10));
  }
}

TEST(Natural, ShiftAndPowersOfTwo) {
  Natural n(3);
  n.shift_left(100);
  EXPECT_EQ(oracle::to_mpz(n), mpz_class(3) << 100);
  EXPECT_EQ(Natural::power_of_two(64).bit_length(), 65u);
  EXPECT_EQ(Natural::from_binary("1100001"), Natural(97));
  EXPECT_THROW(Natural::from_binary("102"), ParseError);
  EXPECT_THROW(Natural::from_decimal(""), ParseError);
  EXPECT_THROW(Natural::power_of_two(70).to_u64(), DomainError);
}

TEST(DivideBy2, EmitsLeastSignificantBitFirst) {
  EXPECT_EQ(divide_by_2(Natural(15)), (BitVector{1, 1, 1, 1}));
  EXPECT_EQ(divide_by_2(Natural(0)), BitVector{});
  EXPECT_EQ(divide_by_2(Natural(38)), (BitVector{0, 1, 1, 0, 0, 1}));
}

TEST(Ilog2, LeadingIndex) {
  EXPECT_EQ(ilog2(Natural(1)), 0);
  EXPECT_EQ(ilog2(Natural(97)), 6);
  Natural big = Natural::power_of_two(330);
  big -= Natural(1);
  EXPECT_EQ(ilog2(big), 329);
  EXPECT_THROW(ilog2(Natural(0)), DomainError);
}

TEST(Deconstruct, SmallValues) {
  EXPECT_EQ(v(deconstruct(Natural(15))), (std::vector<Index>{3, 2, 1, 0}));
  EXPECT_EQ(v(deconstruct(Natural(9))), (std::vector<Index>{3, 0}));
  EXPECT_EQ(v(deconstruct(Natural(97))), (std::vector<Index>{6, 5, 0}));
  EXPECT_TRUE(deconstruct(Natural(0)).empty());
}

TEST(Deconstruct, Rsa100MatchesPublishedList) {
  const IndexList list = deconstruct(parse_number(worked::kRsa100));
  EXPECT_EQ(v(list), worked::kRsa100Indices);
  EXPECT_EQ(list.leading(), 329);
  EXPECT_EQ(list.size(), worked::kRsa100Indices.size());
}

TEST(Reconstruct, SumAcceptsDuplicatesAndAnyOrder) {
  EXPECT_EQ(reconstruct_sum(IndexList::from_descending({5, 2, 1})), Natural(38));
  EXPECT_EQ(reconstruct_sum(IndexList{}), Natural(0));
  const std::vector<Index> raw{4, 0, 4, 2, 0};
  EXPECT_EQ(reconstruct_sum(raw), Natural(38));
  const std::vector<Index> many(1000, 3);
  EXPECT_EQ(reconstruct_sum(many), Natural(8000));
  const std::vector<Index> negative{2, -1};
  EXPECT_THROW(reconstruct_sum(negative), ParseError);
}

TEST(Reconstruct, StringsRoute) {
  EXPECT_EQ(reconstruct_strings(IndexList::from_descending({3, 0})), Natural(9));
  EXPECT_EQ(reconstruct_strings(IndexList::from_descending({0})), Natural(1));
  EXPECT_EQ(reconstruct_strings(IndexList::from_descending({6, 5, 0})), Natural(97));
  const IndexList rsa = IndexList::from_descending(worked::kRsa100Indices);
  EXPECT_EQ(reconstruct_strings(rsa), reconstruct_sum(rsa));
}

TEST(IndexList, RejectsNonCanonicalInput) {
  EXPECT_THROW(IndexList::from_descending({1, 3}), ParseError);
  EXPECT_THROW(IndexList::from_descending({3, 3}), ParseError);
  EXPECT_THROW(IndexList::from_descending({2, -1}), ParseError);
  EXPECT_NO_THROW(IndexList::from_descending({}));
  EXPECT_TRUE(is_canonical(std::vector<Index>{kMaxIndex, 0}));
  EXPECT_FALSE(is_canonical(std::vector<Index>{kMaxIndex + 1}));
}

TEST(ParseNumber, DecimalAndHex) {
  EXPECT_EQ(parse_number("15"), Natural(15));
  EXPECT_EQ(parse_number("0xF"), Natural(15));
  EXPECT_EQ(parse_number("0x26"), Natural(38));
  EXPECT_EQ(parse_number("ff", NumberFormat::hex), Natural(255));
  EXPECT_EQ(parse_number("0", NumberFormat::decimal), Natural(0));
  for (const char* bad : {"", "-5", "12a", "0x", "0xg", " 7", "1.5"}) {
    EXPECT_THROW(parse_number(bad), ParseError) << bad;
  }
}

TEST(FormatNumber, HexOverride) {
  EXPECT_EQ(format_number(Natural(323)), "323");
  EXPECT_EQ(format_number(Natural(323), NumberFormat::hex), "0x143");
  EXPECT_EQ(format_number(Natural(0), NumberFormat::hex), "0x0");
}

TEST(IndexListText, JsonAndCommaForms) {
  EXPECT_EQ(to_json(IndexList::from_descending({6, 5, 0})), "[6,5,0]");
  EXPECT_EQ(to_json(IndexList{}), "[]");
  EXPECT_EQ(v(parse_index_list("[6, 5, 0]")), (std::vector<Index>{6, 5, 0}));
  EXPECT_EQ(v(parse_index_list("8,6,1,0")), (std::vector<Index>{8, 6, 1, 0}));
  EXPECT_TRUE(parse_index_list("[]").empty());
  EXPECT_EQ(parse_index_values("4,0,4,2,0"), (std::vector<Index>{4, 0, 4, 2, 0}));
  EXPECT_THROW(parse_index_list("[0,5]"), ParseError);
  EXPECT_THROW(parse_index_values("[1,-2]"), ParseError);
  EXPECT_THROW(parse_index_values("[1.5]"), ParseError);
  EXPECT_THROW(parse_index_values("1,,2"), ParseError);
  EXPECT_THROW(parse_index_values("[\"3\"]"), ParseError);
  EXPECT_THROW(parse_index_values("[18446744073709551615]"), ParseError);
}

TEST(IndexListText, JsonRoundTrip) {
  oracle::Source src(5);
  for (int k = 0; k < 100; ++k) {
    const IndexList list = deconstruct(oracle::from_mpz(src.up_to(2000)));
    EXPECT_EQ(parse_index_list(to_json(list)), list);
  }
}
