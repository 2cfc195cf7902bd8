#include "support.hpp"

using namespace qha;
using namespace qha::test;

TEST_SUITE("algebra") {
  TEST_CASE("psi squared on distinct connected vertices") {
    Field f = Field::rationals();
    Quiver q = path3();
    AlgebraPtr alg = algebra(f, q, {"a", "b", "c"}, Group::S);
    int idx = alg->orbit().index(tup(q, {"a", "b", "c"}));
    Element e = alg->e(idx);
    Element lhs = multiply(alg->psi(1), alg->psi(1), e);
    // a -> b gives Q_ab(u, v) = v - u
    CHECK(lhs == multiply(alg->y(2), e) - multiply(alg->y(1), e));
    // (b,a,c) sees the arrow reversed
    int jdx = alg->orbit().index(tup(q, {"b", "a", "c"}));
    Element e2 = alg->e(jdx);
    CHECK(multiply(alg->psi(1), alg->psi(1), e2) == multiply(alg->y(1), e2) - multiply(alg->y(2), e2));
    // a and c are not adjacent
    int kdx = alg->orbit().index(tup(q, {"b", "c", "a"}));
    Element e3 = alg->e(kdx);
    CHECK(multiply(alg->psi(2), alg->psi(2), e3) == e3);
  }

  TEST_CASE("nil-Hecke relations at equal vertices") {
    Field f = Field::prime(7);
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"c", "c"}, Group::S);
    int idx = alg->orbit().index(tup(q, {"c", "c"}));
    Element e = alg->e(idx);
    CHECK(multiply(alg->psi(1), alg->psi(1), e).is_zero());
    CHECK(multiply(alg->psi(1), alg->y(1), e) - multiply(alg->y(2), alg->psi(1), e) == -e);
  }

  TEST_CASE("grading") {
    Field f = Field::rationals();
    Quiver q = path3();
    AlgebraPtr alg = algebra(f, q, {"a", "b", "a"}, Group::S);
    auto deg = [&](const Element& a) { return alg->degree(a).value; };
    int ab = alg->orbit().index(tup(q, {"a", "b", "a"}));
    int aa = alg->orbit().index(tup(q, {"a", "a", "b"}));
    CHECK(deg(alg->multiply(alg->psi(1), alg->e(ab))) == 1);
    CHECK(deg(alg->multiply(alg->psi(1), alg->e(aa))) == -2);
    CHECK(deg(alg->multiply(alg->y(3), alg->e(aa))) == 2);
    Element mixed = alg->multiply(alg->psi(1), alg->e(ab)) + alg->multiply(alg->psi(1), alg->e(aa));
    CHECK_FALSE(alg->degree(mixed).homogeneous);
  }

  TEST_CASE("iota flips the sign of psi0") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "c"}, Group::B);
    CHECK(alg->zero_params());
    CHECK(alg->iota(alg->psi(0)) == -alg->psi(0));
    CHECK(alg->iota(alg->psi(1)) == alg->psi(1));
    CHECK(alg->iota(alg->y(1)) == alg->y(1));
    Element p0p1p0 = multiply(alg->psi(0), alg->psi(1), alg->psi(0));
    CHECK(alg->iota(p0p1p0) == p0p1p0);
    AlgebraPtr klr = algebra(f, q, {"a", "c"}, Group::S);
    CHECK(code_of([&] { klr->iota(klr->one()); }) == ErrorCode::ParamsNotZero);
  }

  TEST_CASE("PBW round-trip and unit") {
    Field f = Field::prime(11);
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "a"}, Group::B);
    Scalar one = Scalar::one(f);
    for (const auto& m : enumerate_monomials(*alg, 4, 1)) {
      Element x = alg->monomial(m, one);
      REQUIRE(alg->pbw_expand(alg->monomial_op(m)) == x);
      REQUIRE(alg->multiply(alg->one(), x) == x);
      REQUIRE(alg->multiply(x, alg->one()) == x);
    }
  }

  TEST_CASE("relation suite on a small type B orbit") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "b"}, Group::B);
    auto cases = verify_relations(*alg);
    CHECK(cases.size() > 20);
    for (const auto& c : cases) CHECK_MESSAGE(c.pass, c.relation << " @ " << c.tuple);
  }
}

TEST_SUITE("smash") {
  TEST_CASE("operators compose as maps") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "c"}, Group::B);
    int n = alg->rank();
    PolyVec v;
    for (int idx = 0; idx < alg->orbit().size(); ++idx)
      v[idx] = PolyN::var(f, n, 0).pow(idx % 3 + 1) * Scalar(f, idx + 1) + PolyN::var(f, n, 1);
    std::vector<TwistedOp> ops{alg->psi_op(0), alg->psi_op(1), alg->y_op(2), alg->e_op(3)};
    for (const auto& a : ops)
      for (const auto& b : ops) {
        PolyVec lhs = op_apply(op_compose(a, b), v);
        PolyVec rhs = op_apply(a, op_apply(b, v));
        for (int idx = 0; idx < alg->orbit().size(); ++idx) {
          PolyN l = lhs.count(idx) ? lhs.at(idx) : PolyN(f, n);
          PolyN r = rhs.count(idx) ? rhs.at(idx) : PolyN(f, n);
          REQUIRE(l == r);
        }
      }
  }
}
