#include "preproj/field.hpp"

#include <doctest.h>

using namespace preproj;

TEST_CASE("prime field arithmetic") {
  auto f = FieldSpec::prime(7);
  Scalar a(f, 3), b(f, 5);
  CHECK((a + b) == Scalar(f, 1));
  CHECK((a - b) == Scalar(f, 5));
  CHECK((a * b) == Scalar(f, 1));
  CHECK(a.inv() == b);
  CHECK(Scalar(f, -1) == Scalar(f, 6));
  CHECK(a.pow(6).is_one());
  CHECK(a.pow(-1) == b);
  CHECK_THROWS_AS(Scalar::zero(f).inv(), DivisionByZero);
}

TEST_CASE("GF(2)") {
  auto f = FieldSpec::prime(2);
  CHECK((Scalar::one(f) + Scalar::one(f)).is_zero());
  CHECK(Scalar(f, -1).is_one());
  CHECK_THROWS_AS(half(f), CharTwo);
}

TEST_CASE("rationals") {
  auto q = FieldSpec::rationals();
  Scalar a(q, BigRational(1, 2)), b(q, BigRational(-2, 3));
  CHECK((a + b) == Scalar(q, BigRational(-1, 6)));
  CHECK((a / b) == Scalar(q, BigRational(-3, 4)));
  CHECK(half(q) == a);
  CHECK(b.pow(3) == Scalar(q, BigRational(-8, 27)));
  CHECK(a.str() == "1/2");
}

TEST_CASE("fractions reduce into GF(p)") {
  auto f = FieldSpec::prime(5);
  CHECK(Scalar(f, BigRational(1, 2)) == Scalar(f, 3));
  CHECK_THROWS_AS(Scalar(f, BigRational(1, 5)), FieldError);
}

TEST_CASE("mixing fields") {
  CHECK_THROWS_AS(Scalar(FieldSpec::prime(2), 1) + Scalar(FieldSpec::prime(3), 1), FieldMismatch);
}

TEST_CASE("field names") {
  CHECK(FieldSpec::parse("gf2") == FieldSpec::prime(2));
  CHECK(FieldSpec::parse("GF(3)") == FieldSpec::prime(3));
  CHECK(FieldSpec::parse("gfP:101") == FieldSpec::prime(101));
  CHECK(FieldSpec::parse("rat") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK_THROWS(FieldSpec::parse("gfP:12"));
  CHECK_THROWS(FieldSpec::parse("reals"));
}
