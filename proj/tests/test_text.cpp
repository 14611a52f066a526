#include <gtest/gtest.h>

#include "ffstat/partition.hpp"
#include "ffstat/text.hpp"

using namespace ffstat;

TEST(Text, PrimeFieldShorthand) {
  const Field& F = make_field(2, 1);
  const Poly f = parse_poly("1,0,1", F);
  EXPECT_EQ(f, Poly::monomial(F, 2, F.one()) + Poly::one(F));
  EXPECT_EQ(render_poly(f), "1,0,1");
  EXPECT_EQ(parse_poly(" 1 , 0 , 1 ", F), f);
}

TEST(Text, BracketGrammar) {
  const Field& F = make_field(2, 2);
  const Poly f = parse_poly("[1],[0,1],[1]", F);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.coeff(0), F.one());
  EXPECT_EQ(f.coeff(1), Elem{2});  // the class of x
  EXPECT_EQ(f.coeff(2), F.one());
  EXPECT_EQ(render_poly(f), "[1,0],[0,1],[1,0]");
  EXPECT_EQ(parse_poly(render_poly(f), F), f);
  EXPECT_EQ(parse_poly("[1,0],[0,1],[1,0]", F), f);
  EXPECT_THROW(parse_poly("[1],[0,1,0],[1]", F), std::invalid_argument);
}

TEST(Text, ElementForms) {
  const Field& F9 = make_field(3, 2);
  EXPECT_EQ(parse_elem("[2,1]", F9), Elem{5});
  EXPECT_EQ(render_elem(F9, Elem{5}), "[2,1]");
  EXPECT_EQ(parse_elem("[4]", make_field(5, 1)), Elem{4});
  EXPECT_EQ(parse_elem("4", make_field(5, 1)), Elem{4});
  EXPECT_THROW(parse_elem("2", F9), std::invalid_argument);
  EXPECT_EQ(parse_elem("[1]", F9), F9.one());
  EXPECT_THROW(parse_elem("[1,0,0]", F9), std::invalid_argument);
  EXPECT_THROW(parse_elem("[1,2,0]", F9), std::invalid_argument);
}

TEST(Text, ParseErrors) {
  const Field& F2 = make_field(2, 1);
  EXPECT_THROW(parse_poly("1,3", F2), std::invalid_argument);
  EXPECT_THROW(parse_poly("", F2), std::invalid_argument);
  EXPECT_THROW(parse_poly("1,,1", F2), std::invalid_argument);
  EXPECT_THROW(parse_poly("1,a", F2), std::invalid_argument);
  EXPECT_THROW(parse_poly("-1", F2), std::invalid_argument);
  const Field& F4 = make_field(2, 2);
  EXPECT_THROW(parse_poly("[1],[0,1", F4), std::invalid_argument);
  EXPECT_THROW(parse_poly("[1,0][0,1]", F4), std::invalid_argument);
  EXPECT_THROW(parse_poly("[1,0],", F4), std::invalid_argument);
  EXPECT_THROW(parse_poly("1,0", F4), std::invalid_argument);
  EXPECT_THROW(parse_poly("[1,2]", F4), std::invalid_argument);
}

TEST(Text, ZeroRendering) {
  EXPECT_EQ(render_poly(Poly(make_field(3, 1))), "0");
  EXPECT_EQ(render_poly(Poly(make_field(3, 2))), "[0,0]");
  EXPECT_TRUE(parse_poly("0,0", make_field(3, 1)).is_zero());
}

TEST(TextProperty, RoundTripAllSmallPolys) {
  for (std::uint64_t q : {3u, 4u, 9u}) {
    const Field& F = field_of_order(q);
    for (std::uint64_t idx = 0; idx < q * q * q; ++idx) {
      const Poly f = Poly::from_index(F, 3, idx);
      if (f.is_zero()) continue;
      EXPECT_EQ(parse_poly(render_poly(f), F), f);
    }
  }
}

TEST(PartitionText, ParseAndRender) {
  EXPECT_EQ(Partition::parse("4+1+1").to_string(), "4+1+1");
  EXPECT_EQ(Partition::parse(" 1 + 4 + 1 ").to_string(), "4+1+1");
  EXPECT_EQ(Partition::parse("3").k(), 3);
  EXPECT_THROW(Partition::parse(""), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2++1"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2+0"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,1"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2+"), std::invalid_argument);
}

TEST(PartitionText, MultiplicitiesAndOrder) {
  const Partition p = Partition::parse("2+2+1");
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.multiplicities(), (std::map<int, int>{{1, 1}, {2, 2}}));
  ReverseLex less;
  EXPECT_TRUE(less(Partition({3}), Partition({2, 1})));
  EXPECT_TRUE(less(Partition({2, 1}), Partition({1, 1, 1})));
  EXPECT_FALSE(less(Partition({1, 1, 1}), Partition({3})));
}
