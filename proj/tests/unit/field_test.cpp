#include "support.hpp"

using namespace qha;
using qha::test::code_of;

TEST_SUITE("field") {
  TEST_CASE("rational arithmetic is exact") {
    Field q = Field::rationals();
    Scalar a(q, 1, 3), b(q, 1, 6);
    CHECK((a + b) == Scalar(q, 1, 2));
    CHECK((a * b).str() == "1/18");
    CHECK((a / b) == Scalar(q, 2));
    CHECK(Scalar::parse(q, "-4/6").str() == "-2/3");
  }

  TEST_CASE("prime field residues") {
    Field f = Field::prime(13);
    Scalar x(f, 5);
    CHECK((x * x.inv()).is_one());
    CHECK(Scalar(f, -1).residue_value() == 12);
    CHECK(Scalar(f, 1, 2) == Scalar(f, 7));
    CHECK(Scalar::parse(f, "3 mod 13") == Scalar(f, 3));
    CHECK(x.str() == "5 mod 13");
  }

  TEST_CASE("multiplicative order agrees with repeated multiplication") {
    for (std::uint64_t p : {3u, 5u, 13u, 17u}) {
      Field f = Field::prime(p);
      for (std::uint64_t a = 1; a < p; ++a) {
        std::uint64_t k = 1, v = a;
        while (v != 1) v = v * a % p, ++k;
        CHECK(mult_order(Scalar::residue(f, a)) == k);
      }
    }
    CHECK(mult_order(Scalar(Field::prime(13), 4)) == 6);
  }

  TEST_CASE("errors") {
    CHECK(code_of([] { Field::prime(2); }) == ErrorCode::InvalidField);
    CHECK(code_of([] { Field::prime(15); }) == ErrorCode::InvalidField);
    CHECK(code_of([] { Scalar(Field::prime(7), 0).inv(); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { Scalar::parse(Field::rationals(), "1/0"); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { (void)(Scalar(Field::prime(7), 1) + Scalar(Field::prime(11), 1)); }) ==
          ErrorCode::BackendMismatch);
  }
}
