#include "support.hpp"

using namespace qha;
using namespace qha::test;

namespace {

void all_pass(const std::vector<CheckCase>& cases) {
  REQUIRE_FALSE(cases.empty());
  for (const auto& c : cases) CHECK_MESSAGE(c.pass, c.relation << " @ " << c.tuple << ": " << c.detail);
}

}  // namespace

TEST_SUITE("decomposition") {
  TEST_CASE("profile system is a valid idempotent system") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "c"}, Group::B);
    ProfileSystem ps = profile_system(alg, split_pairs(q));
    CHECK(ps.prof.profiles.size() == 2);
    CHECK(ps.prof.profiles[ps.corner] == Profile{0, 1});
    all_pass(profile_identities(ps));
    SystemReport rep = validate_system(ps.sys);
    CHECK(rep.valid);
    CHECK(rep.classes.size() == 1);
  }

  TEST_CASE("a corrupted system is rejected") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "c"}, Group::B);
    ProfileSystem ps = profile_system(alg, split_pairs(q));
    IdempotentSystem broken = ps.sys;
    for (auto& p : broken.phi) p = p * Scalar(f, 2);
    CHECK_FALSE(validate_system(broken).valid);
  }

  TEST_CASE("theta and eta are inverse on the corner") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "c"}, Group::B);
    ProfileSystem ps = profile_system(alg, split_pairs(q));
    int other = 1 - ps.corner;
    for (const auto& h : corner_monomials(ps, other, ps.corner, 3, 1)) {
      Element m = theta_map(ps, other, ps.corner, h);
      REQUIRE(eta_map(ps, other, ps.corner, m) == h);
    }
    CHECK(code_of([&] { theta_map(ps, other, ps.corner, alg->one()); }) == ErrorCode::CornerMismatch);
  }

  TEST_CASE("full decomposition, type A and type B") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    for (Group g : {Group::S, Group::B}) {
      AlgebraPtr alg = algebra(f, q, {"a", "c"}, g);
      DecompositionRecord rec = full_decompose(alg, split_pairs(q), 40, 3);
      CHECK(rec.matrix_size == 2);
      CHECK(rec.factor_sizes == std::vector<int>{1, 1});
      CHECK(rec.factor_orbit_sizes == (g == Group::S ? std::vector<int>{1, 1} : std::vector<int>{2, 2}));
      all_pass(rec.cases);
    }
  }

  TEST_CASE("rho is multiplicative on generators") {
    Field f = Field::prime(13);
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "c"}, Group::B);
    Rho rho = make_rho(alg, split_pairs(q));
    all_pass(rho_checks(rho));
    CHECK(code_of([&] { make_rho(algebra(f, q, {"a", "a"}, Group::B), split_pairs(q)); }) ==
          ErrorCode::ComponentEmpty);
  }

  TEST_CASE("cyclotomic transport flags an empty component weight") {
    Field f = Field::rationals();
    Quiver q = two_pairs();
    AlgebraPtr alg = algebra(f, q, {"a", "c"}, Group::B);
    std::vector<int> Lambda(q.size(), 0);
    Lambda[q.index("a")] = 1;
    CycloReport zero = cyclo_transport(alg, split_pairs(q), Lambda);
    all_pass(zero.cases);
    CHECK(zero.quotient_is_zero);
    CHECK(zero.zero_component == 1);
    Lambda[q.index("d")] = 2;
    CycloReport both = cyclo_transport(alg, split_pairs(q), Lambda);
    all_pass(both.cases);
    CHECK_FALSE(both.quotient_is_zero);
  }

  TEST_CASE("orbit bijection counts") {
    Quiver q = two_pairs();
    for (int n = 0; n <= 3; ++n) all_pass(orbit_bijection_check(q, split_pairs(q), n, Group::B));
  }
}
