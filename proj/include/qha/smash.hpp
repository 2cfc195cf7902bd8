#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "qha/coxeter.hpp"
#include "qha/poly.hpp"
#include "qha/quiver.hpp"

namespace qha {

// The orbit together with the quiver data needed to move tuples around.
class TupleSpace {
 public:
  TupleSpace(Field f, Quiver q, Orbit orbit);
  Field field() const { return field_; }
  int rank() const { return orbit_.rank(); }
  const Quiver& quiver() const { return quiver_; }
  const Orbit& orbit() const { return orbit_; }
  int size() const { return orbit_.size(); }
  // index of w.i; throws OrbitMismatch when w.i leaves the orbit
  int act(const SignedPerm& w, int idx) const;
  std::string tuple_str(int idx) const { return qha::tuple_str(quiver_, orbit_.tuple(idx)); }

 private:
  Field field_;
  Quiver quiver_;
  Orbit orbit_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<SignedPerm, int>, int> cache_;
};

using SpacePtr = std::shared_ptr<const TupleSpace>;

struct OpKey {
  int source;
  SignedPerm w;
  friend auto operator<=>(const OpKey&, const OpKey&) = default;
  friend bool operator==(const OpKey&, const OpKey&) = default;
};

// Vector of K[x,beta]: tuple index -> polynomial.
using PolyVec = std::map<int, PolyN>;

// Finite sum of terms c * w * 1_i acting on K[x,beta].
class TwistedOp {
 public:
  TwistedOp() = default;
  explicit TwistedOp(SpacePtr space) : space_(std::move(space)) {}
  static TwistedOp identity(SpacePtr space);
  static TwistedOp projection(SpacePtr space, int idx);
  static TwistedOp term(SpacePtr space, int idx, const SignedPerm& w, RatFunc c);

  const SpacePtr& space() const { return space_; }
  const std::map<OpKey, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(int source, const SignedPerm& w) const;

  void add_term(int source, const SignedPerm& w, const RatFunc& c);
  TwistedOp operator+(const TwistedOp& o) const;
  TwistedOp operator-(const TwistedOp& o) const;
  TwistedOp operator*(const Scalar& c) const;
  TwistedOp& operator+=(const TwistedOp& o);
  TwistedOp& operator-=(const TwistedOp& o);
  // f * op: multiplies every coefficient on the left.
  TwistedOp left_multiply(const RatFunc& f) const;

  friend bool operator==(const TwistedOp& a, const TwistedOp& b);
  std::string str() const;

 private:
  void check_space(const TwistedOp& o) const;
  SpacePtr space_;
  std::map<OpKey, RatFunc> terms_;
};

TwistedOp op_compose(const TwistedOp& a, const TwistedOp& b);  // a after b
PolyVec op_apply(const TwistedOp& a, const PolyVec& v);
inline bool op_equal(const TwistedOp& a, const TwistedOp& b) { return a == b; }

}  // namespace qha
