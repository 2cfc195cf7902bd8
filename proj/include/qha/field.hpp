#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "qha/error.hpp"

namespace qha {

// Ground field: the rationals (characteristic 0) or F_p for an odd prime p < 2^31.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Field f, long v);
  Scalar(Field f, long num, long den);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(Field f, std::uint64_t r);
  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  // "a/b", "a", "r mod p"; a bare integer is read in the supplied field.
  static Scalar parse(Field f, const std::string& text);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;
  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  // Arbitrary but fixed total order, used only for deterministic containers.
  std::strong_ordering operator<=>(const Scalar& o) const;

  // Serialized form: "a/b" for rationals ("a" when b = 1), "r mod p" for F_p.
  std::string str() const;
  // Coefficient form without the modulus, used inside polynomial text.
  std::string coeff_str() const;

 private:
  void check_same(const Scalar& o) const;
  Field field_;
  std::variant<mpq_class, std::uint64_t> v_{mpq_class(0)};
};

// Least k >= 1 with a^k = 1, for a nonzero prime-field element.
std::uint64_t mult_order(const Scalar& a);

}  // namespace qha
