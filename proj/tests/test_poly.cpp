#include <gtest/gtest.h>

#include <initializer_list>

#include "ffstat/poly.hpp"

using namespace ffstat;

namespace {

// Coefficients low-to-high, given as element indices.
Poly P(const Field& F, std::initializer_list<std::uint32_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(Elem{x});
  return Poly(F, v);
}

}  // namespace

TEST(Poly, ZeroAndTrimming) {
  const Field& F = make_field(3, 1);
  const Poly z(F);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), kZeroDegree);
  EXPECT_EQ(P(F, {1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(P(F, {0, 0}).is_zero());
  EXPECT_FALSE(z.is_monic());
  EXPECT_THROW(P(F, {3}), std::invalid_argument);
}

TEST(Poly, MonicIndexRoundTrip) {
  const Field& F = make_field(2, 2);
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    const Poly g = Poly::monic_from_index(F, 3, idx);
    EXPECT_TRUE(g.is_monic());
    EXPECT_EQ(g.degree(), 3);
    EXPECT_EQ(g.monic_index(), idx);
  }
}

TEST(Poly, DivisionExamples) {
  const Field& F3 = make_field(3, 1);
  auto [q, r] = divrem(P(F3, {1, 0, 1}), P(F3, {1, 1}));
  EXPECT_EQ(q, P(F3, {2, 1}));
  EXPECT_EQ(r, P(F3, {2}));

  const Field& F2 = make_field(2, 1);
  auto [q2, r2] = divrem(P(F2, {0, 0, 0, 1}), P(F2, {0, 0, 1}));
  EXPECT_EQ(q2, P(F2, {0, 1}));
  EXPECT_TRUE(r2.is_zero());

  const Field& F5 = make_field(5, 1);
  auto [q3, r3] = divrem(P(F5, {1, 2, 3}), P(F5, {2}));
  EXPECT_EQ(q3, scale(P(F5, {1, 2, 3}), F5.inv(Elem{2})));
  EXPECT_TRUE(r3.is_zero());
}

TEST(Poly, DivisionByZeroThrows) {
  const Field& F = make_field(2, 1);
  EXPECT_THROW(divrem(P(F, {1, 1}), Poly(F)), std::domain_error);
}

TEST(Poly, MixedFieldsRejected) {
  EXPECT_THROW(P(make_field(2, 1), {1}) + P(make_field(3, 1), {1}), std::invalid_argument);
}

TEST(Poly, GcdExamples) {
  const Field& F5 = make_field(5, 1);
  EXPECT_EQ(gcd(P(F5, {4, 0, 1}), P(F5, {4, 1})), P(F5, {4, 1}));
  EXPECT_EQ(gcd(P(F5, {2, 4}), Poly(F5)), P(F5, {3, 1}));
  const Field& F2 = make_field(2, 1);
  EXPECT_TRUE(gcd(P(F2, {1, 1, 1}), P(F2, {1, 1})).is_one());
  EXPECT_THROW(gcd(Poly(F2), Poly(F2)), std::domain_error);
}

TEST(Poly, EvalExamples) {
  const Field& F2 = make_field(2, 1);
  EXPECT_EQ(eval(P(F2, {1, 1, 1}), Elem{1}), Elem{1});
  const Field& F3 = make_field(3, 1);
  EXPECT_EQ(eval(P(F3, {1, 0, 1}), Elem{1}), Elem{2});
  EXPECT_EQ(eval(P(F3, {2, 1, 1}), Elem{0}), Elem{2});
  EXPECT_EQ(eval(Poly(F3), Elem{2}), Elem{0});
}

TEST(Poly, DerivativeInCharP) {
  const Field& F2 = make_field(2, 1);
  EXPECT_TRUE(derivative(P(F2, {1, 0, 1, 0, 1})).is_zero());
  const Field& F3 = make_field(3, 1);
  EXPECT_EQ(derivative(P(F3, {0, 1, 1, 1})), P(F3, {1, 2}));
}

TEST(PolyProperty, RingLawsAndDivision) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const Field& F = field_of_order(q);
    const int len = q <= 3 ? 4 : 3;
    std::uint64_t n = 1;
    for (int i = 0; i < len; ++i) n *= q;
    for (std::uint64_t a = 0; a < n; a += 3)
      for (std::uint64_t b = 1; b < n; b += 5) {
        const Poly x = Poly::from_index(F, len, a), y = Poly::from_index(F, len, b);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x + y) - y, x);
        auto [qq, r] = divrem(x, y);
        EXPECT_EQ(qq * y + r, x);
        EXPECT_LT(r.degree(), y.degree());
        EXPECT_EQ(mulmod(x, x, y), (x * x) % y);
        EXPECT_EQ(powmod(x, 5, y), power(x, 5) % y);
        if (!x.is_zero()) {
          const Poly g = gcd(x, y);
          EXPECT_TRUE(g.is_monic());
          EXPECT_TRUE((x % g).is_zero());
          EXPECT_TRUE((y % g).is_zero());
        }
      }
  }
}

TEST(PolyProperty, LeibnizRule) {
  const Field& F = field_of_order(9);
  for (std::uint64_t a = 0; a < 729; a += 13)
    for (std::uint64_t b = 0; b < 729; b += 17) {
      const Poly x = Poly::from_index(F, 3, a), y = Poly::from_index(F, 3, b);
      EXPECT_EQ(derivative(x * y), derivative(x) * y + x * derivative(y));
    }
}

TEST(PolyProperty, CanonicalOrderIsStrictOnMonics) {
  const Field& F = field_of_order(3);
  for (std::uint64_t i = 0; i + 1 < 27; ++i) {
    const Poly a = Poly::monic_from_index(F, 3, i), b = Poly::monic_from_index(F, 3, i + 1);
    EXPECT_TRUE(canonical_less(a, b));
    EXPECT_FALSE(canonical_less(b, a));
    EXPECT_FALSE(canonical_less(a, a));
  }
}
