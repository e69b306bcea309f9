#include <gtest/gtest.h>

#include <random>

#include "liesc/exact_arith.hpp"
#include "support.hpp"

using namespace liesc;

namespace {

const Domain F2 = Domain::prime(2);
const Domain F3 = Domain::prime(3);
const Domain F5 = Domain::prime(5);
const Domain Q = Domain::rational();

Scalar q(const char* text) { return Scalar::parse(Q, text); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::InternalAssertionFailed;
}

}  // namespace

TEST(Domain, AcceptsPrimesAndRejectsComposites) {
  EXPECT_EQ(Domain::prime(101).modulus(), 101u);
  EXPECT_EQ(code_of([] { Domain::prime(4); }), ErrorCode::InvalidDomain);
  EXPECT_EQ(code_of([] { Domain::prime(1); }), ErrorCode::InvalidDomain);
  EXPECT_EQ(code_of([] { Domain::prime(0); }), ErrorCode::InvalidDomain);
  EXPECT_EQ(code_of([] { Domain::prime((1ULL << 31) + 11); }), ErrorCode::InvalidDomain);
}

TEST(Domain, ParsesNames) {
  EXPECT_EQ(Domain::parse("F5"), F5);
  EXPECT_EQ(Domain::parse("Q"), Q);
  EXPECT_EQ(Domain::parse("F5").name(), "F5");
  EXPECT_EQ(code_of([] { Domain::parse("F6"); }), ErrorCode::InvalidDomain);
  EXPECT_EQ(code_of([] { Domain::parse("R"); }), ErrorCode::InvalidDomain);
  EXPECT_EQ(code_of([] { Domain::parse("F"); }), ErrorCode::InvalidDomain);
}

TEST(Arith, AddWrapsModP) { EXPECT_EQ(arith(Scalar(F5, 2), Scalar(F5, 4), ArithOp::add), Scalar(F5, 1)); }

TEST(Arith, AdditiveIdentity) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Scalar x3 = support::random_scalar(F3, rng);
    EXPECT_EQ(arith(x3, Scalar::zero(F3), ArithOp::add), x3);
    const Scalar xq = support::random_scalar(Q, rng);
    EXPECT_EQ(arith(xq, Scalar::zero(Q), ArithOp::add), xq);
  }
}

TEST(Arith, RationalProductReduces) {
  const Scalar r = arith(q("1/3"), q("3/4"), ArithOp::mul);
  EXPECT_EQ(r, q("1/4"));
  EXPECT_EQ(r.to_string(), "1/4");
}

TEST(Arith, DivisionByZeroAndMismatch) {
  EXPECT_EQ(code_of([] { (void)(Scalar(F5, 3) / Scalar::zero(F5)); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { (void)(q("1/2") / Scalar::zero(Q)); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { (void)Scalar::zero(F5).inverse(); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { (void)(Scalar(F5, 1) + Scalar(F3, 1)); }), ErrorCode::DomainMismatch);
  EXPECT_EQ(code_of([] { (void)(Scalar(F5, 1) * q("1")); }), ErrorCode::DomainMismatch);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(Scalar(F5, 3)), Scalar(F5, 2));
  EXPECT_EQ(inverse(Scalar::one(F2)), Scalar::one(F2));
  EXPECT_EQ(inverse(Scalar::one(F5)), Scalar::one(F5));
  EXPECT_EQ(inverse(Scalar::one(Q)), Scalar::one(Q));
  EXPECT_EQ(inverse(q("2/7")), q("7/2"));
  EXPECT_EQ(inverse(q("-2/7")), q("-7/2"));
}

TEST(FieldAxioms, HoldOnRandomTriples) {
  std::mt19937_64 rng(20240601);
  for (Domain d : {F2, F3, F5, Domain::prime(7), Domain::prime(101), Domain::prime(2147483647), Q}) {
    for (int i = 0; i < 1000; ++i) {
      const Scalar a = support::random_scalar(d, rng);
      const Scalar b = support::random_scalar(d, rng);
      const Scalar c = support::random_scalar(d, rng);
      ASSERT_EQ((a + b) + c, a + (b + c)) << d.name();
      ASSERT_EQ((a * b) * c, a * (b * c)) << d.name();
      ASSERT_EQ(a + b, b + a) << d.name();
      ASSERT_EQ(a * b, b * a) << d.name();
      ASSERT_EQ(a * (b + c), a * b + a * c) << d.name();
      ASSERT_EQ(a - a, Scalar::zero(d)) << d.name();
      ASSERT_EQ(a + (-a), Scalar::zero(d)) << d.name();
      ASSERT_EQ(a * Scalar::one(d), a) << d.name();
      if (!a.is_zero()) {
        ASSERT_EQ(a * a.inverse(), Scalar::one(d)) << d.name();
        ASSERT_EQ((b / a) * a, b) << d.name();
      }
    }
  }
}

TEST(FieldAxioms, LargePrimeProductsDoNotOverflow) {
  const Domain big = Domain::prime(2147483647);
  const Scalar a(big, 2147483646);  // -1
  EXPECT_EQ(a * a, Scalar::one(big));
  EXPECT_EQ(a + a, Scalar(big, 2147483645));
}

TEST(Fermat, LittleTheorem) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 101u}) {
    const Domain d = Domain::prime(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      const Scalar x(d, a);
      EXPECT_EQ(pow(x, p), x);
      if (a != 0) EXPECT_EQ(pow(x, p - 1), Scalar::one(d));
    }
  }
}

TEST(Rational, ExactWithLargeValues) {
  const Scalar two = Scalar(Q, 2);
  const Scalar big = pow(two, 200);
  EXPECT_EQ(big / pow(two, 199), two);
  EXPECT_EQ((big + Scalar::one(Q)) - big, Scalar::one(Q));
  EXPECT_EQ(q("1/3") + q("1/6"), q("1/2"));
  EXPECT_EQ(q("6/8").to_string(), "3/4");
  EXPECT_EQ(q("-4/2").to_string(), "-2");
}

TEST(Parse, PrimeLiterals) {
  EXPECT_EQ(Scalar::parse(F5, "3"), Scalar(F5, 3));
  EXPECT_EQ(Scalar::parse(F5, "0"), Scalar::zero(F5));
  EXPECT_EQ(code_of([] { Scalar::parse(F5, "5"); }), ErrorCode::InvalidScalar);
  EXPECT_EQ(code_of([] { Scalar::parse(F5, "-1"); }), ErrorCode::InvalidScalar);
  EXPECT_EQ(code_of([] { Scalar::parse(F5, "1/2"); }), ErrorCode::InvalidScalar);
  EXPECT_EQ(code_of([] { Scalar::parse(F5, ""); }), ErrorCode::InvalidScalar);
}

TEST(Parse, RationalLiterals) {
  EXPECT_EQ(q("-3/4") * Scalar(Q, 4), Scalar(Q, -3));
  EXPECT_EQ(q("+5"), Scalar(Q, 5));
  EXPECT_EQ(code_of([] { q("1/0"); }), ErrorCode::InvalidScalar);
  EXPECT_EQ(code_of([] { q("abc"); }), ErrorCode::InvalidScalar);
  EXPECT_EQ(code_of([] { q("1.5"); }), ErrorCode::InvalidScalar);
}

TEST(Parse, RoundTripsThroughToString) {
  std::mt19937_64 rng(3);
  for (Domain d : {F3, Domain::prime(101), Q}) {
    for (int i = 0; i < 200; ++i) {
      const Scalar x = support::random_scalar(d, rng);
      EXPECT_EQ(Scalar::parse(d, x.to_string()), x);
    }
  }
}
