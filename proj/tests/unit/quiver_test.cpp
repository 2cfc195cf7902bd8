#include <set>

#include "support.hpp"

using namespace qha;
using namespace qha::test;

TEST_SUITE("quiver") {
  TEST_CASE("construction and validation") {
    Quiver q = two_pairs();
    CHECK(q.theta(q.index("a")) == q.index("b"));
    CHECK(q.arrows(q.index("a"), q.index("b")) == 1);
    CHECK(q.d(0, 0) == -2);
    CHECK(code_of([] { Quiver({"a", "b"}, {{"a", "z"}}, {}); }) == ErrorCode::UnknownVertex);
    CHECK(code_of([] { Quiver({"a"}, {{"a", "a"}}, {}); }) == ErrorCode::InvalidQuiver);
    CHECK(code_of([] { Quiver({"a", "a"}, {}, {}); }) == ErrorCode::InvalidQuiver);
    // a -> c with a <-> b forces c -> b
    CHECK(code_of([] { Quiver({"a", "b", "c"}, {{"a", "c"}}, {{"a", "b"}}); }) == ErrorCode::InvalidQuiver);
  }

  TEST_CASE("orbits") {
    Quiver q = two_pairs();
    Orbit o = make_orbit(q, tup(q, {"a", "c"}), Group::B);
    CHECK(o.size() == 8);  // {a,b} x {c,d} in either order
    CHECK(o.contains(tup(q, {"d", "b"})));
    CHECK(make_orbit(q, tup(q, {"a", "c"}), Group::S).size() == 2);
    Orbit big = make_orbit(q, tup(q, {"a", "a", "c"}), Group::B);
    CHECK(big.size() == 3 * 8);
    CHECK(code_of([&] { o.index(tup(q, {"a", "a"})); }) == ErrorCode::OrbitMismatch);
    Quiver p = path3();
    CHECK(code_of([&] { make_orbit(p, tup(p, {"a", "b"}), Group::B); }) == ErrorCode::InvalidQuiver);
  }

  TEST_CASE("profiles count the multinomial") {
    Quiver q = two_pairs();
    Partition part = split_pairs(q);
    Orbit o = make_orbit(q, tup(q, {"a", "a", "c"}), Group::B);
    ProfileData pd = profiles(o, part);
    CHECK(pd.profiles.size() == 3);
    CHECK(pd.sorted == Profile{0, 0, 1});
    for (const auto& f : pd.fibers) CHECK(f.size() == 8);
    ComponentSplit s = orbit_components(q, o, part);
    CHECK(s.sizes == std::vector<int>{2, 1});
    CHECK(s.orbits[0].size() == 4);
    CHECK(s.orbits[1].size() == 2);
  }

  TEST_CASE("partition validation") {
    Quiver q = two_pairs();
    Partition bad = split_pairs(q);
    bad.block[q.index("b")] = 1;  // theta crosses blocks
    CHECK(code_of([&] { bad.validate(q); }) == ErrorCode::NotComponentStable);
  }

  TEST_CASE("gamma conditions") {
    Field f = Field::rationals();
    Quiver q({"a", "b", "c"}, {{"a", "c"}, {"c", "b"}}, {{"a", "b"}});
    Params p = Params::zero(f, q);
    p.gamma[q.index("a")] = p.gamma[q.index("b")] = Scalar(f, 1);
    CHECK(code_of([&] { p.validate(q); }) == ErrorCode::InvalidParams);
    Params ok = Params::zero(f, q);
    ok.gamma[q.index("c")] = Scalar(f, 3);
    CHECK_NOTHROW(ok.validate(q));
  }

  TEST_CASE("Hecke quiver links v and q^2 v") {
    Field f = Field::prime(17);
    Scalar q(f, 2);
    HeckeQuiver h = build_hecke_quiver(f, q, {Scalar(f, 3)}, Scalar(f, 4), HeckeMode::B);
    int n = h.quiver.size();
    std::set<std::uint64_t> seen;
    for (int v = 0; v < n; ++v) {
      seen.insert(h.values[v].residue_value());
      int w = -1;
      for (int u = 0; u < n; ++u)
        if (h.values[u] == h.values[v] * q * q) w = u;
      REQUIRE(w >= 0);
      CHECK(h.quiver.arrows(v, w) == 1);
      CHECK(h.values[h.quiver.theta(v)] == h.values[v].inv());
    }
    CHECK(static_cast<int>(seen.size()) == n);
    CHECK(code_of([&] { build_hecke_quiver(f, Scalar(f, 1), {Scalar(f, 3)}, Scalar(f, 4), HeckeMode::B); }) ==
          ErrorCode::DegenerateQ);
  }

  TEST_CASE("Morita classifier examples") {
    Field f = Field::prime(17);
    auto B = [&](long q, long p, long x) { return classify_morita_B(Scalar(f, x), Scalar(f, q), Scalar(f, p)); };
    CHECK(B(2, 3, 1).label == 'a');
    CHECK(B(2, 3, 3).label == 'c');
    CHECK(B(2, 3, 3).p_power == 1);
    CHECK(B(2, 4, 3).label == 'd');
    CHECK(classify_morita_D(Scalar(f, 3), Scalar(f, 2)).label == 'c');
    Field g = Field::prime(13);
    // 9 has order 3 in F_13, so q itself lies in q^{2Z} and case b folds into a
    MoritaCase folded = classify_morita_D(Scalar(g, 3), Scalar(g, 3));
    CHECK(folded.label == 'a');
    CHECK(folded.b_equivalent_to_a);
    MoritaCase b = classify_morita_D(Scalar(f, 2), Scalar(f, 2));
    CHECK(b.label == 'b');
    CHECK(b.exponent == 1);
    CHECK_FALSE(b.b_equivalent_to_a);  // 4 has order 4 in F_17
    CHECK(code_of([&] { B(2, 1, 3); }) == ErrorCode::DegenerateParams);
    CHECK(code_of([&] { B(2, 3, 0); }) == ErrorCode::DegenerateParams);
    CHECK(code_of([] { classify_morita_D(Scalar(Field::rationals(), 2), Scalar(Field::rationals(), 3)); }) ==
          ErrorCode::NotFiniteField);
  }
}
