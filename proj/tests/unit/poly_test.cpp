#include "support.hpp"

using namespace qha;
using qha::test::code_of;

namespace {
Field Q = Field::rationals();
PolyN x(int k, int n = 3) { return PolyN::var(Q, n, k - 1); }
}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("ring arithmetic") {
    PolyN s = x(1) + x(2);
    CHECK(s * s == x(1) * x(1) + x(1) * x(2) * Scalar(Q, 2) + x(2) * x(2));
    CHECK((s - s).is_zero());
    CHECK((s * s).total_degree() == 2);
    PolyN cube = x(1).pow(3) - x(3).pow(3);
    CHECK(cube.exact_divide(x(1) - x(3)) == x(1) * x(1) + x(1) * x(3) + x(3) * x(3));
    PolyN quo;
    CHECK_FALSE((x(1) + PolyN::constant(Q, 3, 1)).try_divide(x(2), quo));
  }

  TEST_CASE("signed permutations act on variables") {
    SignedPerm r0 = SignedPerm::generator(3, 0), r1 = SignedPerm::generator(3, 1);
    CHECK(x(1).act(r0) == -x(1));
    CHECK(x(2).act(r0) == x(2));
    CHECK(x(1).act(r1) == x(2));
    PolyN f = x(1) * x(1) * x(2) + x(3) - x(2) * Scalar(Q, 5);
    for (const auto& u : enumerate_group(3))
      for (const auto& v : {r0, r1, SignedPerm::generator(3, 2)}) {
        REQUIRE(f.act(u * v) == f.act(v).act(u));
        REQUIRE((f * x(2)).act(u) == f.act(u) * x(2).act(u));
      }
  }

  TEST_CASE("rational functions over root denominators") {
    RatFunc a = RatFunc::inverse_root(Q, 3, root_index(3, {Root::Short, 0, -1}));
    RatFunc b = RatFunc::inverse_root(Q, 3, root_index(3, {Root::Short, 1, -1}));
    RatFunc sum = a + b;  // 1/x1 + 1/x2
    CHECK(sum * RatFunc(x(1) * x(2)) == RatFunc(x(1) + x(2)));
    RatFunc d = RatFunc(x(1) - x(2));
    CHECK((RatFunc::one(Q, 3) / d) * d == RatFunc::one(Q, 3));
    CHECK((RatFunc(x(1) * x(1) - x(2) * x(2)) / d).is_polynomial());
    CHECK(code_of([&] { (void)(RatFunc::one(Q, 3) / RatFunc(x(1) + PolyN::constant(Q, 3, 1))); }) ==
          ErrorCode::UnsupportedDenominator);
    CHECK(code_of([&] { (void)(RatFunc::one(Q, 3) / RatFunc::zero(Q, 3)); }) == ErrorCode::DivisionByZero);
  }

  TEST_CASE("root orbit under the group") {
    // w permutes roots up to sign; acting on 1/root stays in the root-denominator class
    RatFunc inv = RatFunc::inverse_root(Q, 3, root_index(3, {Root::Minus, 0, 1}));
    for (const auto& w : enumerate_group(3)) {
      RatFunc moved = inv.act(w);
      CHECK(moved * RatFunc(root_poly(Q, 3, root_index(3, {Root::Minus, 0, 1})).act(w)) == RatFunc::one(Q, 3));
    }
  }
}
