#pragma once

#include <doctest.h>

#include "qha/suites.hpp"

namespace qha::test {

inline ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no qha::Error thrown");
  return ErrorCode::ConfigError;
}

// a -> b -> c, no involution
inline Quiver path3() { return Quiver({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {}); }

// a <-> b swapped by theta with a -> b, c <-> d swapped, no arrows on c, d
inline Quiver two_pairs() { return Quiver({"a", "b", "c", "d"}, {{"a", "b"}}, {{"a", "b"}, {"c", "d"}}); }

inline Tuple tup(const Quiver& q, std::initializer_list<const char*> names) {
  Tuple t;
  for (const char* s : names) t.push_back(q.index(s));
  return t;
}

inline AlgebraPtr algebra(Field f, const Quiver& q, std::initializer_list<const char*> seed, Group g) {
  Params p = Params::zero(f, q);
  return Algebra::create(f, q, p, make_orbit(q, tup(q, seed), g), g == Group::S ? Mode::A : Mode::B);
}

inline Partition split_pairs(const Quiver& q) {
  Partition part;
  part.d = 2;
  part.block.assign(q.size(), 0);
  part.block[q.index("c")] = part.block[q.index("d")] = 1;
  return part;
}

}  // namespace qha::test
