#include "qha/field.hpp"

#include <regex>
#include <vector>

namespace qha {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 reduce(long v, u64 p) {
  long m = v % static_cast<long>(p);
  if (m < 0) m += static_cast<long>(p);
  return static_cast<u64>(m);
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(u64 p) {
  if (p == 2) throw Error(ErrorCode::InvalidField, "characteristic 2 is not supported");
  if (p >= (u64(1) << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not an odd prime below 2^31");
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_rational())
    v_ = mpq_class(v);
  else
    v_ = reduce(v, f.characteristic());
}

Scalar::Scalar(Field f, long num, long den) : Scalar(f, num) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  *this = *this / Scalar(f, den);
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  mpq_class c = q;
  c.canonicalize();
  s.v_ = c;
  return s;
}

Scalar Scalar::residue(Field f, u64 r) {
  if (f.is_rational()) throw Error(ErrorCode::WrongBackend, "residue in Q");
  Scalar s;
  s.field_ = f;
  s.v_ = r % f.characteristic();
  return s;
}

Scalar Scalar::parse(Field f, const std::string& text) {
  static const std::regex mod_re(R"(\s*(-?\d+)\s*mod\s*(\d+)\s*)");
  static const std::regex rat_re(R"(\s*(-?\d+)\s*(?:/\s*(\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, mod_re)) {
    Field g = Field::prime(std::stoull(m[2]));
    if (g != f) throw Error(ErrorCode::BackendMismatch, "scalar '" + text + "' is not in " + f.name());
    return Scalar(f, std::stol(m[1]));
  }
  if (!std::regex_match(text, m, rat_re)) throw Error(ErrorCode::ParseError, "bad scalar '" + text + "'");
  if (f.is_rational()) {
    mpq_class q(mpz_class(m[1].str()), m[2].matched ? mpz_class(m[2].str()) : mpz_class(1));
    if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
    return rational(q);
  }
  Scalar num(f, std::stol(m[1]));
  if (!m[2].matched) return num;
  return num / Scalar(f, std::stol(m[2]));
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<u64>(v_) == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<u64>(v_) == 1;
}

const mpq_class& Scalar::rational_value() const {
  if (!field_.is_rational()) throw Error(ErrorCode::WrongBackend, "not a rational");
  return std::get<mpq_class>(v_);
}

u64 Scalar::residue_value() const {
  if (field_.is_rational()) throw Error(ErrorCode::WrongBackend, "not a residue");
  return std::get<u64>(v_);
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw Error(ErrorCode::BackendMismatch, field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
  } else {
    u64 p = field_.characteristic();
    r.v_ = (std::get<u64>(v_) + std::get<u64>(o.v_)) % p;
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.v_ = mpq_class(-std::get<mpq_class>(v_));
  } else {
    u64 p = field_.characteristic();
    r.v_ = (p - std::get<u64>(v_)) % p;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
  else
    r.v_ = mulmod(std::get<u64>(v_), std::get<u64>(o.v_), field_.characteristic());
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
  } else {
    u64 p = field_.characteristic();
    r.v_ = powmod(std::get<u64>(v_), p - 2, p);
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inv();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r = one(field_), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_.is_rational()) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
  return std::get<u64>(v_) == std::get<u64>(o.v_);
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  if (auto c = field_.characteristic() <=> o.field_.characteristic(); c != 0) return c;
  if (field_.is_rational()) {
    int c = cmp(std::get<mpq_class>(v_), std::get<mpq_class>(o.v_));
    return c <=> 0;
  }
  return std::get<u64>(v_) <=> std::get<u64>(o.v_);
}

std::string Scalar::coeff_str() const {
  if (field_.is_rational()) {
    const auto& q = std::get<mpq_class>(v_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  return std::to_string(std::get<u64>(v_));
}

std::string Scalar::str() const {
  if (field_.is_rational()) return coeff_str();
  return coeff_str() + " mod " + std::to_string(field_.characteristic());
}

u64 mult_order(const Scalar& a) {
  if (a.field().is_rational()) throw Error(ErrorCode::WrongBackend, "multiplicative order over Q");
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "order of zero");
  u64 p = a.field().characteristic();
  u64 ord = p - 1;
  u64 r = a.residue_value();
  for (u64 f : prime_factors(p - 1)) {
    while (ord % f == 0 && powmod(r, ord / f, p) == 1) ord /= f;
  }
  return ord;
}

}  // namespace qha
