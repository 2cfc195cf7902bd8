#include "qha/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace qha {

Monomial Monomial::var(int k, int e) {
  Monomial m;
  m.e_[k] = static_cast<std::uint8_t>(e);
  m.deg_ = static_cast<std::uint16_t>(e);
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& e) {
  if (e.size() > kMaxRank) throw Error(ErrorCode::SizeMismatch, "too many variables");
  Monomial m;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] < 0 || e[k] > 255) throw Error(ErrorCode::SizeMismatch, "exponent out of range");
    m.e_[k] = static_cast<std::uint8_t>(e[k]);
    m.deg_ = static_cast<std::uint16_t>(m.deg_ + e[k]);
  }
  return m;
}

std::vector<int> Monomial::exponents(int n) const { return {e_.begin(), e_.begin() + n}; }

bool Monomial::divides(const Monomial& o) const {
  for (int k = 0; k < kMaxRank; ++k)
    if (e_[k] > o.e_[k]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int k = 0; k < kMaxRank; ++k) {
    int s = a.e_[k] + b.e_[k];
    if (s > 255) throw Error(ErrorCode::SizeMismatch, "exponent overflow");
    m.e_[k] = static_cast<std::uint8_t>(s);
  }
  m.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int k = 0; k < kMaxRank; ++k) m.e_[k] = static_cast<std::uint8_t>(a.e_[k] - b.e_[k]);
  m.deg_ = static_cast<std::uint16_t>(a.deg_ - b.deg_);
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.deg_ <=> b.deg_; c != 0) return c;
  return a.e_ <=> b.e_;
}

std::string Monomial::str(const char* var) const {
  std::string s;
  for (int k = 0; k < kMaxRank; ++k) {
    if (!e_[k]) continue;
    if (!s.empty()) s += "*";
    s += var + std::to_string(k + 1);
    if (e_[k] > 1) s += "^" + std::to_string(e_[k]);
  }
  return s;
}

// ---------------------------------------------------------------- PolyN

PolyN PolyN::from_unsorted(Field f, int n, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  PolyN p(f, n);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second.is_zero(); });
  return p;
}

PolyN PolyN::constant(Field f, int n, const Scalar& c) {
  PolyN p(f, n);
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

PolyN PolyN::var(Field f, int n, int k) {
  if (k < 0 || k >= n) throw Error(ErrorCode::SizeMismatch, "variable index out of range");
  PolyN p(f, n);
  p.terms_.push_back({Monomial::var(k), Scalar::one(f)});
  return p;
}

PolyN PolyN::monomial(Field f, int n, const Monomial& m, const Scalar& c) {
  PolyN p(f, n);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

bool PolyN::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0);
}

Scalar PolyN::constant_term() const { return coefficient(Monomial()); }

Scalar PolyN::coefficient(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return Scalar::zero(field_);
}

int PolyN::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

void PolyN::check_same(const PolyN& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::SizeMismatch, "polynomials in different variable counts");
  if (field_ != o.field_) throw Error(ErrorCode::BackendMismatch, "polynomials over different fields");
}

PolyN PolyN::operator+(const PolyN& o) const {
  check_same(o);
  PolyN r(field_, n_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin(), j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first > j->first)) {
      r.terms_.push_back(*i++);
    } else if (i == terms_.end() || j->first > i->first) {
      r.terms_.push_back(*j++);
    } else {
      Scalar c = i->second + j->second;
      if (!c.is_zero()) r.terms_.push_back({i->first, c});
      ++i, ++j;
    }
  }
  return r;
}

PolyN PolyN::operator-() const {
  PolyN r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

PolyN PolyN::operator-(const PolyN& o) const { return *this + (-o); }

PolyN PolyN::operator*(const Scalar& c) const {
  if (c.is_zero()) return PolyN(field_, n_);
  PolyN r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

PolyN PolyN::mul_monomial(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return PolyN(field_, n_);
  PolyN r = *this;
  for (auto& t : r.terms_) {
    t.first = t.first * m;
    t.second *= c;
  }
  return r;
}

PolyN PolyN::operator*(const PolyN& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return PolyN(field_, n_);
  if (terms_.size() == 1) return o.mul_monomial(terms_[0].first, terms_[0].second);
  if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].first, o.terms_[0].second);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.push_back({a.first * b.first, a.second * b.second});
  return from_unsorted(field_, n_, std::move(out));
}

PolyN PolyN::pow(int e) const {
  PolyN r = constant(field_, n_, 1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool operator==(const PolyN& a, const PolyN& b) {
  if (a.terms_.empty() && b.terms_.empty()) return a.n_ == b.n_;
  return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const PolyN::Term& x, const PolyN::Term& y) { return x.first == y.first && x.second == y.second; });
}

PolyN PolyN::act(const SignedPerm& w) const {
  if (w.rank() != n_) throw Error(ErrorCode::SizeMismatch, "action of a group of another rank");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(n_, 0);
    int sign = 1;
    for (int k = 0; k < n_; ++k) {
      int img = w(k + 1);
      int ek = m.exponent(k);
      e[std::abs(img) - 1] = ek;
      if (img < 0 && (ek & 1)) sign = -sign;
    }
    out.push_back({Monomial::from_exponents(e), sign > 0 ? c : -c});
  }
  return from_unsorted(field_, n_, std::move(out));
}

PolyN PolyN::substitute(const std::vector<PolyN>& images) const {
  if (static_cast<int>(images.size()) != n_) throw Error(ErrorCode::SizeMismatch, "substitution arity");
  if (images.empty()) return *this;
  int m = images[0].n_;
  Field f = images[0].field_;
  std::vector<std::vector<PolyN>> powers(n_);
  PolyN result(f, m);
  for (const auto& [mono, c] : terms_) {
    PolyN t = constant(f, m, c);
    for (int k = 0; k < n_; ++k) {
      int e = mono.exponent(k);
      if (!e) continue;
      auto& pw = powers[k];
      if (pw.empty()) pw.push_back(constant(f, m, 1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[k]);
      t *= pw[e];
    }
    result += t;
  }
  return result;
}

bool PolyN::try_divide(const PolyN& g, PolyN& quotient) const {
  check_same(g);
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  PolyN r = *this;
  std::vector<Term> q;
  const auto& [lm, lc] = g.leading();
  Scalar lc_inv = lc.inv();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!lm.divides(rm)) return false;
    Monomial t = rm / lm;
    Scalar c = rc * lc_inv;
    q.push_back({t, c});
    r -= g.mul_monomial(t, c);
  }
  quotient = from_unsorted(field_, n_, std::move(q));
  return true;
}

PolyN PolyN::exact_divide(const PolyN& g) const {
  PolyN q;
  if (!try_divide(g, q)) throw Error(ErrorCode::NotDivisible, str() + " by " + g.str());
  return q;
}

PolyN exact_divide(const PolyN& f, const PolyN& g) { return f.exact_divide(g); }

std::string PolyN::str(const char* var) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.coeff_str();
    bool neg = field_.is_rational() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    std::string ms = m.str(var);
    if (ms.empty())
      s += cs;
    else if (cs == "1")
      s += ms;
    else
      s += cs + "*" + ms;
  }
  return s;
}

// ---------------------------------------------------------------- roots

int root_count(int n) { return n * n; }

Root root_at(int n, int idx) {
  if (idx < n) return {Root::Short, idx, -1};
  int p = (idx - n) / 2;
  Root::Kind kind = ((idx - n) % 2) ? Root::Plus : Root::Minus;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, --p)
      if (p == 0) return {kind, a, b};
  throw Error(ErrorCode::SizeMismatch, "root index out of range");
}

int root_index(int n, Root r) {
  if (r.kind == Root::Short) return r.a;
  int p = 0;
  for (int a = 0; a < r.a; ++a) p += n - 1 - a;
  p += r.b - r.a - 1;
  return n + 2 * p + (r.kind == Root::Plus ? 1 : 0);
}

PolyN root_poly(Field f, int n, int idx) {
  Root r = root_at(n, idx);
  PolyN p = PolyN::var(f, n, r.a);
  if (r.kind == Root::Minus) p -= PolyN::var(f, n, r.b);
  if (r.kind == Root::Plus) p += PolyN::var(f, n, r.b);
  return p;
}

namespace {

// w applied to a root: returns (sign, index of the positive root).
std::pair<int, int> act_root(const SignedPerm& w, int n, int idx) {
  Root r = root_at(n, idx);
  int ia = w(r.a + 1);
  int sa = ia > 0 ? 1 : -1, ma = std::abs(ia) - 1;
  if (r.kind == Root::Short) return {sa, ma};
  int ib = w(r.b + 1);
  int sb = ib > 0 ? 1 : -1, mb = std::abs(ib) - 1;
  int c = r.kind == Root::Plus ? 1 : -1;
  int sign = ma < mb ? sa : c * sb;
  Root::Kind kind = c * sa * sb > 0 ? Root::Plus : Root::Minus;
  return {sign, root_index(n, {kind, std::min(ma, mb), std::max(ma, mb)})};
}

PolyN mul_roots(PolyN p, const std::vector<int>& exps) {
  int n = p.nvars();
  for (std::size_t r = 0; r < exps.size(); ++r)
    for (int k = 0; k < exps[r]; ++k) p *= root_poly(p.field(), n, static_cast<int>(r));
  return p;
}

}  // namespace

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(PolyN num) : num_(std::move(num)), den_(root_count(num_.nvars()), 0) {}

RatFunc::RatFunc(PolyN num, std::vector<std::uint8_t> den) : num_(std::move(num)), den_(std::move(den)) {
  if (static_cast<int>(den_.size()) != root_count(num_.nvars()))
    throw Error(ErrorCode::SizeMismatch, "denominator exponent vector");
  normalize();
}

RatFunc RatFunc::inverse_root(Field f, int n, int root, int e) {
  std::vector<std::uint8_t> den(root_count(n), 0);
  den[root] = static_cast<std::uint8_t>(e);
  return RatFunc(PolyN::constant(f, n, 1), std::move(den));
}

PolyN RatFunc::den() const {
  std::vector<int> e(den_.begin(), den_.end());
  return mul_roots(PolyN::constant(field(), nvars(), 1), e);
}

bool RatFunc::is_polynomial() const {
  return std::all_of(den_.begin(), den_.end(), [](auto e) { return e == 0; });
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    std::fill(den_.begin(), den_.end(), 0);
    return;
  }
  int n = nvars();
  for (std::size_t r = 0; r < den_.size(); ++r) {
    if (!den_[r]) continue;
    PolyN rp = root_poly(field(), n, static_cast<int>(r));
    PolyN q;
    while (den_[r] && num_.try_divide(rp, q)) {
      num_ = std::move(q);
      --den_[r];
    }
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) {
    RatFunc r;
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    r.normalize();
    return r;
  }
  std::vector<int> ea(den_.size()), eb(den_.size());
  std::vector<std::uint8_t> e(den_.size());
  for (std::size_t k = 0; k < den_.size(); ++k) {
    e[k] = std::max(den_[k], o.den_[k]);
    ea[k] = e[k] - den_[k];
    eb[k] = e[k] - o.den_[k];
  }
  RatFunc r;
  r.num_ = mul_roots(num_, ea) + mul_roots(o.num_, eb);
  r.den_ = std::move(e);
  r.normalize();
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const Scalar& c) const {
  RatFunc r = *this;
  r.num_ = r.num_ * c;
  if (r.num_.is_zero()) std::fill(r.den_.begin(), r.den_.end(), 0);
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  RatFunc r;
  r.num_ = num_ * o.num_;
  r.den_.resize(den_.size());
  for (std::size_t k = 0; k < den_.size(); ++k) {
    int s = den_[k] + o.den_[k];
    if (s > 255) throw Error(ErrorCode::SizeMismatch, "denominator exponent overflow");
    r.den_[k] = static_cast<std::uint8_t>(s);
  }
  if (!is_polynomial() || !o.is_polynomial()) r.normalize();
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
  int n = nvars();
  PolyN rest = o.num_;
  std::vector<int> f(den_.size(), 0);
  for (std::size_t r = 0; r < den_.size(); ++r) {
    PolyN rp = root_poly(field(), n, static_cast<int>(r)), q;
    while (rest.try_divide(rp, q)) {
      rest = std::move(q);
      ++f[r];
    }
  }
  if (!rest.is_constant())
    throw Error(ErrorCode::UnsupportedDenominator, "divisor numerator " + o.num_.str() + " is not a product of roots");
  std::vector<int> oe(o.den_.begin(), o.den_.end());
  RatFunc r;
  r.num_ = mul_roots(num_, oe) * rest.constant_term().inv();
  r.den_.resize(den_.size());
  for (std::size_t k = 0; k < den_.size(); ++k) r.den_[k] = static_cast<std::uint8_t>(den_[k] + f[k]);
  r.normalize();
  return r;
}

RatFunc RatFunc::act(const SignedPerm& w) const {
  int n = nvars();
  RatFunc r;
  r.num_ = num_.act(w);
  r.den_.assign(den_.size(), 0);
  int sign = 1;
  for (std::size_t k = 0; k < den_.size(); ++k) {
    if (!den_[k]) continue;
    auto [s, idx] = act_root(w, n, static_cast<int>(k));
    r.den_[idx] = den_[k];
    if (s < 0 && (den_[k] & 1)) sign = -sign;
  }
  if (sign < 0) r.num_ = -r.num_;
  return r;
}

std::string RatFunc::den_str() const {
  std::string s;
  int n = nvars();
  for (std::size_t k = 0; k < den_.size(); ++k) {
    if (!den_[k]) continue;
    if (!s.empty()) s += "*";
    Root r = root_at(n, static_cast<int>(k));
    std::string f = "x" + std::to_string(r.a + 1);
    if (r.kind != Root::Short)
      f = "(" + f + (r.kind == Root::Plus ? " + x" : " - x") + std::to_string(r.b + 1) + ")";
    s += f;
    if (den_[k] > 1) s += "^" + std::to_string(den_[k]);
  }
  return s.empty() ? "1" : s;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_str() + ")";
}

}  // namespace qha
