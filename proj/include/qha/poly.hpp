#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qha/coxeter.hpp"
#include "qha/field.hpp"

namespace qha {

// Exponent vector of at most kMaxRank variables, one byte each.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int k, int e = 1);  // x_{k+1}^e, k zero-based
  static Monomial from_exponents(const std::vector<int>& e);

  int exponent(int k) const { return e_[k]; }
  int degree() const { return deg_; }
  std::vector<int> exponents(int n) const;
  bool divides(const Monomial& o) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);  // requires divides
  // grlex with x1 > x2 > ...: larger compares greater
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  std::string str(const char* var = "x") const;

 private:
  std::array<std::uint8_t, kMaxRank> e_{};
  std::uint16_t deg_ = 0;
};

// Sparse polynomial in x_1..x_n; terms sorted by decreasing grlex.
class PolyN {
 public:
  using Term = std::pair<Monomial, Scalar>;

  PolyN() = default;
  PolyN(Field f, int n) : field_(f), n_(n) {}
  static PolyN constant(Field f, int n, const Scalar& c);
  static PolyN constant(Field f, int n, long c) { return constant(f, n, Scalar(f, c)); }
  static PolyN var(Field f, int n, int k);  // x_{k+1}
  static PolyN monomial(Field f, int n, const Monomial& m, const Scalar& c);

  Field field() const { return field_; }
  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;

  PolyN operator+(const PolyN& o) const;
  PolyN operator-(const PolyN& o) const;
  PolyN operator-() const;
  PolyN operator*(const PolyN& o) const;
  PolyN operator*(const Scalar& c) const;
  PolyN& operator+=(const PolyN& o) { return *this = *this + o; }
  PolyN& operator-=(const PolyN& o) { return *this = *this - o; }
  PolyN& operator*=(const PolyN& o) { return *this = *this * o; }
  PolyN mul_monomial(const Monomial& m, const Scalar& c) const;
  PolyN pow(int e) const;

  friend bool operator==(const PolyN& a, const PolyN& b);

  // ^w f with x_k -> x_{w(k)} and x_{-m} = -x_m.
  PolyN act(const SignedPerm& w) const;
  // f(g_1, ..., g_n); all g share a variable count, which becomes the result's.
  PolyN substitute(const std::vector<PolyN>& images) const;
  // Exact quotient; throws NotDivisible if g does not divide *this.
  PolyN exact_divide(const PolyN& g) const;
  bool try_divide(const PolyN& g, PolyN& quotient) const;

  std::string str(const char* var = "x") const;

 private:
  void check_same(const PolyN& o) const;
  static PolyN from_unsorted(Field f, int n, std::vector<Term> terms);
  Field field_;
  int n_ = 0;
  std::vector<Term> terms_;
};

PolyN exact_divide(const PolyN& f, const PolyN& g);

// Positive roots of B_n as linear forms: x_a, x_a - x_b, x_a + x_b (a < b).
struct Root {
  enum Kind : std::uint8_t { Short, Minus, Plus } kind;
  int a, b;
};
int root_count(int n);
Root root_at(int n, int idx);
int root_index(int n, Root r);
PolyN root_poly(Field f, int n, int idx);

// Rational function whose denominator is a product of positive roots.
// Every coefficient arising in the realisation has this shape, and the
// shape is stable under the B_n action, so the normal form needs only
// exact division by linear forms.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(PolyN num);  // NOLINT: polynomials embed
  RatFunc(PolyN num, std::vector<std::uint8_t> den_exponents);
  static RatFunc zero(Field f, int n) { return RatFunc(PolyN(f, n)); }
  static RatFunc one(Field f, int n) { return RatFunc(PolyN::constant(f, n, 1)); }
  static RatFunc inverse_root(Field f, int n, int root, int e = 1);

  const PolyN& num() const { return num_; }
  PolyN den() const;
  const std::vector<std::uint8_t>& den_exponents() const { return den_; }
  Field field() const { return num_.field(); }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator*(const Scalar& c) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  // Division by a function whose numerator is a constant times a product of roots.
  RatFunc operator/(const RatFunc& o) const;
  RatFunc act(const SignedPerm& w) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;
  std::string den_str() const;

 private:
  void normalize();
  PolyN num_;
  std::vector<std::uint8_t> den_;  // exponent per root index
};

}  // namespace qha
