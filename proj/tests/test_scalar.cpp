#include <cohtaylor/scalar.hpp>

#include <gtest/gtest.h>

using namespace cohtaylor;

namespace {

Scalar q(Semiring sr, const char* s) { return scalar_parse(sr, s); }

TEST(Scalar, BoolTablesExhaustive) {
  Semiring b = Semiring::Bool;
  Scalar z = scalar_zero(b), o = scalar_one(b);
  EXPECT_EQ(scalar_add(z, z), z);
  EXPECT_EQ(scalar_add(z, o), o);
  EXPECT_EQ(scalar_add(o, z), o);
  EXPECT_EQ(scalar_add(o, o), o);  // idempotent or
  EXPECT_EQ(scalar_mul(z, z), z);
  EXPECT_EQ(scalar_mul(z, o), z);
  EXPECT_EQ(scalar_mul(o, z), z);
  EXPECT_EQ(scalar_mul(o, o), o);
  EXPECT_THROW(scalar_inf(b), Error);
  EXPECT_THROW(scalar_parse(b, "2"), Error);
  EXPECT_THROW(scalar_parse(b, "1/2"), Error);
  EXPECT_EQ(scalar_to_string(o), "1");
}

TEST(Scalar, NatInfArithmetic) {
  Semiring n = Semiring::NatInf;
  EXPECT_EQ(scalar_add(q(n, "2"), q(n, "3")), q(n, "5"));
  EXPECT_EQ(scalar_mul(q(n, "2"), q(n, "3")), q(n, "6"));
  Scalar inf = scalar_inf(n);
  EXPECT_EQ(scalar_add(inf, scalar_zero(n)), inf);
  EXPECT_EQ(scalar_add(inf, q(n, "7")), inf);
  EXPECT_EQ(scalar_mul(inf, q(n, "7")), inf);
  // inf is not absorbing against zero: inf * 0 = 0 on both sides
  EXPECT_EQ(scalar_mul(inf, scalar_zero(n)), scalar_zero(n));
  EXPECT_EQ(scalar_mul(scalar_zero(n), inf), scalar_zero(n));
  EXPECT_EQ(scalar_to_string(inf), "inf");
  EXPECT_EQ(scalar_parse(n, "inf"), inf);
  EXPECT_THROW(scalar_parse(n, "1/2"), Error);
  EXPECT_THROW(scalar_from_ratio(n, mpq_class(1, 2)), Error);
  EXPECT_EQ(scalar_inv(scalar_one(n)), scalar_one(n));
  EXPECT_THROW(scalar_inv(q(n, "2")), Error);
}

TEST(Scalar, RatPosArithmetic) {
  Semiring r = Semiring::RatPos;
  EXPECT_EQ(scalar_add(q(r, "1/2"), q(r, "1/3")), q(r, "5/6"));
  EXPECT_EQ(scalar_mul(q(r, "2/3"), q(r, "3/4")), q(r, "1/2"));
  EXPECT_EQ(scalar_pow(q(r, "1/2"), 3), q(r, "1/8"));
  EXPECT_EQ(scalar_inv(q(r, "2/3")), q(r, "3/2"));
  EXPECT_EQ(scalar_inv_factorial(r, 3), q(r, "1/6"));
  EXPECT_EQ(scalar_mul(scalar_inf(r), scalar_zero(r)), scalar_zero(r));
  EXPECT_EQ(scalar_sum(r, {q(r, "1/6"), q(r, "1/3"), q(r, "1/2")}), scalar_one(r));
}

TEST(Scalar, ParsingCanonicalizesAndValidates) {
  Semiring r = Semiring::RatPos;
  EXPECT_EQ(scalar_to_string(q(r, "6/4")), "3/2");
  EXPECT_EQ(scalar_parse(r, "6/4"), q(r, "3/2"));
  EXPECT_THROW(scalar_parse(r, ""), Error);
  EXPECT_THROW(scalar_parse(r, "-1"), Error);
  EXPECT_THROW(scalar_parse(r, "1/0"), Error);
  EXPECT_THROW(scalar_parse(r, "x"), Error);
}

TEST(Scalar, IntegerEmbeddingRejectsFractions) {
  EXPECT_EQ(scalar_embed_integer(Semiring::NatInf, mpq_class(4, 2)),
            q(Semiring::NatInf, "2"));
  try {
    scalar_embed_integer(Semiring::NatInf, mpq_class(3, 2));
    FAIL() << "expected NonIntegralCoefficient";
  } catch (const Error& e) {
    EXPECT_EQ(e.code, Errc::NonIntegralCoefficient);
  }
}

TEST(Scalar, MixedSemiringsRejected) {
  EXPECT_THROW(scalar_add(scalar_one(Semiring::Bool), scalar_one(Semiring::RatPos)), Error);
}

TEST(Scalar, SemiringParseAliases) {
  EXPECT_EQ(semiring_parse("bool"), Semiring::Bool);
  EXPECT_EQ(semiring_parse("nat-inf"), Semiring::NatInf);
  EXPECT_EQ(semiring_parse("natinf"), Semiring::NatInf);
  EXPECT_EQ(semiring_parse("rat-pos"), Semiring::RatPos);
  EXPECT_EQ(semiring_parse("ratpos"), Semiring::RatPos);
  EXPECT_THROW(semiring_parse("float"), Error);
}

}  // namespace
