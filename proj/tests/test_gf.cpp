#include <gtest/gtest.h>

#include "tetrad/errors.hpp"
#include "tetrad/gf.hpp"

namespace tetrad::gf {
namespace {

FieldElement el(std::uint32_t q, std::uint32_t v) { return FieldElement(PrimeField(q), v); }

TEST(PrimeFieldTest, RejectsCompositeModuli) {
  EXPECT_THROW(PrimeField(4), UsageError);
  EXPECT_THROW(PrimeField(1), UsageError);
  EXPECT_THROW(PrimeField(0), UsageError);
  EXPECT_THROW(PrimeField(9), UsageError);
  EXPECT_NO_THROW(PrimeField(7));
}

TEST(FieldElementTest, Examples) {
  EXPECT_EQ(add(el(5, 3), el(5, 4)).value(), 2u);
  EXPECT_EQ(add(el(2, 1), el(2, 1)).value(), 0u);
  for (std::uint32_t x = 0; x < 3; ++x) EXPECT_EQ(add(el(3, 0), el(3, x)), el(3, x));

  EXPECT_EQ(mul(el(5, 2), el(5, 3)).value(), 1u);
  EXPECT_EQ(mul(el(3, 2), el(3, 2)).value(), 1u);
  for (std::uint32_t q : {2u, 3u, 5u, 7u})
    for (std::uint32_t x = 0; x < q; ++x) EXPECT_EQ(mul(el(q, 1), el(q, x)), el(q, x));

  EXPECT_EQ(inv(el(5, 2)).value(), 3u);
  EXPECT_EQ(inv(el(7, 3)).value(), 5u);
  EXPECT_EQ(inv(el(2, 1)).value(), 1u);

  EXPECT_EQ(neg(el(5, 2)).value(), 3u);
  EXPECT_EQ(neg(el(2, 1)).value(), 1u);
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) EXPECT_EQ(neg(el(q, 0)).value(), 0u);
}

TEST(FieldElementTest, Errors) {
  EXPECT_THROW(inv(el(5, 0)), DivisionByZero);
  EXPECT_THROW(add(el(5, 1), el(7, 1)), UsageError);
  EXPECT_THROW(mul(el(3, 1), el(2, 1)), UsageError);
}

TEST(FieldElementTest, ValuesAreCanonicalResidues) {
  EXPECT_EQ(el(5, 12).value(), 2u);
  EXPECT_EQ(el(7, 7).value(), 0u);
}

class FieldAxiomsTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxiomsTest, HoldExhaustively) {
  const std::uint32_t q = GetParam();
  const PrimeField f(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const FieldElement x(f, a);
    EXPECT_TRUE(add(x, neg(x)).is_zero());
    if (a != 0) {
      EXPECT_EQ(mul(x, inv(x)).value(), 1u);
      EXPECT_EQ(inv(inv(x)), x);
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      const FieldElement y(f, b);
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      for (std::uint32_t c = 0; c < q; ++c) {
        const FieldElement z(f, c);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, FieldAxiomsTest, ::testing::Values(2u, 3u, 5u, 7u));

}  // namespace
}  // namespace tetrad::gf
