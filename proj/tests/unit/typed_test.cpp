#include "support.hpp"

using namespace qha;
using namespace qha::test;

namespace {

void all_pass(const std::vector<CheckCase>& cases) {
  REQUIRE_FALSE(cases.empty());
  for (const auto& c : cases) CHECK_MESSAGE(c.pass, c.relation << " @ " << c.tuple << ": " << c.detail);
}

}  // namespace

TEST_SUITE("typeD") {
  TEST_CASE("W generators are iota-invariant") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "a"}, Group::B);
    WElement P0 = w_generator(alg, WGen::Psi0);
    CHECK(P0.iota_invariant);
    CHECK(P0.elem == multiply(alg->psi(0), alg->psi(1), alg->psi(0)));
    CHECK(w_generator(alg, WGen::Y, 2).iota_invariant);
    CHECK_FALSE(certify_w(alg->psi(0)).iota_invariant);
    all_pass(verify_w_relations(alg));
  }

  TEST_CASE("generator errors") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr one = algebra(f, q, {"a"}, Group::B);
    CHECK(code_of([&] { w_generator(one, WGen::Psi0); }) == ErrorCode::InvalidGenerator);
    Quiver g({"a", "b", "c"}, {{"a", "c"}, {"c", "b"}}, {{"a", "b"}});
    Params p = Params::zero(f, g);
    p.gamma[g.index("c")] = Scalar(f, 1);
    AlgebraPtr nz = Algebra::create(f, g, p, make_orbit(g, tup(g, {"a", "c"}), Group::B), Mode::B);
    CHECK(code_of([&] { w_generator(nz, WGen::Y, 1); }) == ErrorCode::ParamsNotZero);
  }

  TEST_CASE("pi is conjugation by psi0") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "c"}, Group::B);
    CHECK(pi_auto(alg->y(1)) == -alg->y(1));
    CHECK(pi_auto(alg->y(2)) == alg->y(2));
    Element x = multiply(alg->psi(1), alg->y(1), alg->psi(0));
    CHECK(pi_auto(pi_auto(x)) == x);
    FixedPointSplit s = fixed_point_split(x);
    CHECK(s.plus.iota_invariant);
    CHECK(s.plus.elem + s.minus == x);
    CHECK(alg->iota(s.minus) == -s.minus);
    CHECK(certify_w(alg->multiply(s.minus, alg->psi(0))).iota_invariant);
  }

  TEST_CASE("involutions, semidirect law and decompose_D") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "c"}, Group::B);
    all_pass(involution_checks(alg, 20, 5));
    all_pass(semidirect_check(alg, 30, 5));
    std::vector<int> Lambda(q.size(), 0);
    Lambda[q.index("a")] = 1;
    Lambda[q.index("c")] = 2;
    all_pass(decompose_D(alg, split_pairs(q), Lambda, 10, 5));
    CHECK(code_of([&] { decompose_D(alg, Partition::trivial(q), Lambda, 10, 5); }) == ErrorCode::DEqualsOne);
  }

  TEST_CASE("even subgroup of C2^d") {
    CHECK(C2Word{{1, 1}}.even());
    CHECK_FALSE(C2Word{{1, 0, 0}}.even());
  }
}
