#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qha/coxeter.hpp"
#include "qha/poly.hpp"
#include "qha/quiver.hpp"
#include "qha/smash.hpp"

namespace qha {

// A: KLR algebra H_alpha (no psi_0, S_n orbit). B: V_beta(Gamma, lambda, gamma).
enum class Mode { A, B };

struct PBWMonomial {
  Monomial exps;  // exponents of y_1..y_n
  SignedPerm w;
  int tuple = 0;
  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Element {
 public:
  Element() = default;
  explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<PBWMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const PBWMonomial& m) const;

  void add_term(const PBWMonomial& m, const Scalar& c);
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Scalar& c) const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend bool operator==(const Element& a, const Element& b);

  std::string str() const;

 private:
  void check(const Element& o) const;
  AlgebraPtr alg_;
  std::map<PBWMonomial, Scalar> terms_;
};

struct Degree {
  bool homogeneous = true;
  std::optional<int> value;  // empty for the zero element or when not homogeneous
};

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static AlgebraPtr create(Field f, Quiver q, Params params, Orbit orbit, Mode mode,
                           std::map<std::pair<int, int>, PolyN> p_overrides = {});

  Field field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const Params& params() const { return params_; }
  const PFamily& pfamily() const { return pfam_; }
  const Orbit& orbit() const { return space_->orbit(); }
  const SpacePtr& space() const { return space_; }
  Mode mode() const { return mode_; }
  int rank() const { return space_->rank(); }
  int tuple_act(const SignedPerm& w, int idx) const { return space_->act(w, idx); }
  int gen_act(int a, int idx) const;  // r_a . i
  int vertex(int idx, int pos) const { return orbit().tuple(idx)[pos - 1]; }  // pos 1-based
  std::string tuple_str(int idx) const { return space_->tuple_str(idx); }

  // generator operators; y and psi are summed over all tuples
  TwistedOp e_op(int idx) const;
  TwistedOp y_op(int a) const;
  TwistedOp psi_op(int b) const;
  TwistedOp psi_op_at(int b, int idx) const;
  TwistedOp poly_op(const PolyN& f) const;  // f(x) * identity
  // psi_{a_1} ... psi_{a_k} e(i)
  const TwistedOp& word_op(int idx, const Word& word) const;
  TwistedOp monomial_op(const PBWMonomial& m) const;
  TwistedOp op(const Element& a) const;
  RatFunc leading(int idx, const SignedPerm& w) const;

  Element pbw_expand(const TwistedOp& op) const;
  Element multiply(const Element& a, const Element& b) const;

  // elements
  Element zero() const;
  Element one() const;
  Element e(int idx) const;
  Element y(int a) const;
  Element psi(int b) const;
  Element monomial(const PBWMonomial& m, const Scalar& c) const;
  Element monomial(const Monomial& exps, const SignedPerm& w, int idx) const;
  Element poly_e(const PolyN& f, int idx) const;  // f(y) e(i)
  Element scalar(const Scalar& c) const;

  int letter_degree(int letter, int idx) const;
  int degree(const PBWMonomial& m) const;
  Degree degree(const Element& a) const;

  bool zero_params() const { return mode_ == Mode::B && params_.is_zero(); }
  Element iota(const Element& a) const;

  std::string monomial_str(const PBWMonomial& m) const;

 private:
  Algebra(Field f, Quiver q, Params params, Orbit orbit, Mode mode, PFamily pfam);
  TwistedOp psi_op_uncached(int b, int idx) const;
  std::shared_ptr<const Algebra> self() const { return shared_from_this(); }

  Field field_;
  Quiver quiver_;
  Params params_;
  PFamily pfam_;
  Mode mode_;
  SpacePtr space_;

  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<int, int>, TwistedOp> psi_cache_;
  mutable std::map<int, TwistedOp> psi_full_cache_;
  mutable std::map<std::pair<int, Word>, TwistedOp> word_cache_;
  mutable std::map<SignedPerm, Word> cw_cache_;

 public:
  const Word& cword(const SignedPerm& w) const;
};

inline Element multiply(const Element& a, const Element& b) { return a.algebra()->multiply(a, b); }
inline Element multiply(const Element& a, const Element& b, const Element& c) {
  return multiply(a, multiply(b, c));
}

// All PBW monomials with length(w) <= max_len and |a| <= max_ydeg.
std::vector<PBWMonomial> enumerate_monomials(const Algebra& alg, int max_len, int max_ydeg);

}  // namespace qha
