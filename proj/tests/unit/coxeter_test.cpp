#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>

#include "support.hpp"

using namespace qha;

namespace {

std::map<SignedPerm, int> cayley_lengths(int n) {
  std::map<SignedPerm, int> dist{{SignedPerm(n), 0}};
  std::queue<SignedPerm> todo;
  todo.push(SignedPerm(n));
  while (!todo.empty()) {
    SignedPerm w = todo.front();
    todo.pop();
    for (int a = 0; a < n; ++a) {
      SignedPerm v = w * SignedPerm::generator(n, a);
      if (dist.emplace(v, dist[w] + 1).second) todo.push(v);
    }
  }
  return dist;
}

// every reduced word of w, by peeling right descents
std::vector<Word> reduced_words(const SignedPerm& w) {
  int n = w.rank();
  if (w.is_identity()) return {Word{}};
  std::vector<Word> out;
  for (int a = 0; a < n; ++a) {
    SignedPerm v = w * SignedPerm::generator(n, a);
    if (length(v) >= length(w)) continue;
    for (Word u : reduced_words(v)) {
      u.push_back(a);
      out.push_back(std::move(u));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("coxeter") {
  TEST_CASE("length matches the Cayley graph") {
    for (int n = 1; n <= 4; ++n) {
      auto dist = cayley_lengths(n);
      long order = 1;
      for (int i = 1; i <= n; ++i) order *= 2 * i;
      CHECK(static_cast<long>(dist.size()) == order);
      for (const auto& [w, l] : dist) {
        REQUIRE(length(w) == l);
        REQUIRE(SignedPerm::from_word(n, canonical_word(w)) == w);
      }
    }
  }

  TEST_CASE("enumeration of B_n and S_n") {
    auto b3 = enumerate_group(3);
    CHECK(std::set<SignedPerm>(b3.begin(), b3.end()).size() == 48);
    auto s4 = enumerate_group(4, true);
    CHECK(std::set<SignedPerm>(s4.begin(), s4.end()).size() == 24);
    for (const auto& w : s4) CHECK(w.is_unsigned());
  }

  TEST_CASE("canonical word of t_2") {
    // t_2 = r1 r0 r1 negates 2
    SignedPerm t2 = SignedPerm::from_images({1, -2});
    CHECK(canonical_word(t2) == Word{1, 0, 1});
    CHECK(r0_count(t2) == 1);
    CHECK_FALSE(in_Dn(t2));
    CHECK(in_Dn(SignedPerm::from_images({-1, -2})));
  }

  TEST_CASE("action on indices") {
    SignedPerm r0 = SignedPerm::generator(2, 0), r1 = SignedPerm::generator(2, 1);
    CHECK(r0(1) == -1);
    CHECK(r1(1) == 2);
    CHECK((r1 * r0)(1) == -2);  // r0 first
    CHECK((r1 * r0).inverse() * (r1 * r0) == SignedPerm(2));
  }

  TEST_CASE("block embedding") {
    SignedPerm u = SignedPerm::from_images({-1}), v = SignedPerm::from_images({2, 1});
    SignedPerm big = embed_blocks({u, v});
    CHECK(big.images() == std::vector<int>{-1, 3, 2});
    CHECK(length(big) == length(u) + length(v));
    CHECK(embed_word({0}, 2) == Word{2, 1, 0, 1, 2});
    CHECK(embed_word({1}, 2) == Word{3});
    // not parabolic: the second block's r0 is t_2 = r1 r0 r1, of length 3 in B_2
    SignedPerm t2 = embed_blocks({SignedPerm(1), SignedPerm::generator(1, 0)});
    CHECK(t2.images() == std::vector<int>{1, -2});
    CHECK(length(t2) == 3);
  }

  TEST_CASE("minimal coset representative sorts the profile") {
    std::vector<int> prof{1, 0, 1, 0};
    SignedPerm pi = min_coset_rep(prof);
    std::vector<int> sorted(4);
    for (int k = 1; k <= 4; ++k) sorted[pi(k) - 1] = prof[k - 1];
    CHECK(sorted == std::vector<int>{0, 0, 1, 1});
    CHECK(pi.is_unsigned());
    CHECK(length(pi) == 3);  // inversions of 1010
  }

  TEST_CASE("exchange condition") {
    for (const auto& w : enumerate_group(4))
      for (int a = 0; a < 4; ++a) REQUIRE(std::abs(length(w * SignedPerm::generator(4, a)) - length(w)) == 1);
  }

  TEST_CASE("r0 count does not depend on the reduced word") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& w : enumerate_group(n))
        for (const Word& u : reduced_words(w)) {
          REQUIRE(SignedPerm::from_word(n, u) == w);
          REQUIRE(std::count(u.begin(), u.end(), 0) == r0_count(w));
        }
  }

  TEST_CASE("block embedding is an injective homomorphism") {
    for (auto [n1, n2] : {std::pair{1, 4}, {2, 3}, {3, 2}, {2, 2}}) {
      auto g1 = enumerate_group(n1), g2 = enumerate_group(n2);
      std::set<SignedPerm> images;
      for (const auto& u : g1)
        for (const auto& v : g2) images.insert(embed_blocks({u, v}));
      CHECK(images.size() == g1.size() * g2.size());
      for (std::size_t k = 0; k < g1.size(); k += 5)
        for (std::size_t l = 0; l < g2.size(); l += 7) {
          const auto &u = g1[k], &v = g2[l], &u2 = g1[(k * 3 + 1) % g1.size()], &v2 = g2[(l * 5 + 2) % g2.size()];
          REQUIRE(embed_blocks({u * u2, v * v2}) == embed_blocks({u, v}) * embed_blocks({u2, v2}));
        }
    }
  }

  TEST_CASE("rank bound") { CHECK_THROWS(SignedPerm(kMaxRank + 1)); }
}
