#include "qha/algebra.hpp"

#include <algorithm>
#include <functional>

namespace qha {

// ---------------------------------------------------------------- Element

Scalar Element::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(alg_->field()) : it->second;
}

void Element::add_term(const PBWMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Element::check(const Element& o) const {
  if (alg_ && o.alg_ && alg_ != o.alg_) throw Error(ErrorCode::DescriptorMismatch, "elements of different algebras");
}

Element& Element::operator+=(const Element& o) {
  check(o);
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check(o);
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  return r += o;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  return r -= o;
}

Element Element::operator-() const {
  Element r(alg_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element Element::operator*(const Scalar& c) const {
  Element r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

bool operator==(const Element& a, const Element& b) {
  a.check(b);
  return a.terms_ == b.terms_;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.coeff_str();
    bool neg = c.field().is_rational() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (cs != "1") s += cs + "*";
    s += alg_->monomial_str(m);
  }
  return s;
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(Field f, Quiver q, Params params, Orbit orbit, Mode mode, PFamily pfam)
    : field_(f), quiver_(q), params_(std::move(params)), pfam_(std::move(pfam)), mode_(mode),
      space_(std::make_shared<TupleSpace>(f, std::move(q), std::move(orbit))) {}

AlgebraPtr Algebra::create(Field f, Quiver q, Params params, Orbit orbit, Mode mode,
                           std::map<std::pair<int, int>, PolyN> p_overrides) {
  if (params.field != f) throw Error(ErrorCode::BackendMismatch, "parameters over another field");
  params.validate(q);
  if (mode == Mode::B && !q.has_involution())
    throw Error(ErrorCode::InvalidQuiver, "type B needs an arrow-compatible involution");
  Group want = mode == Mode::A ? Group::S : Group::B;
  if (orbit.group() != want)
    throw Error(ErrorCode::NotFullOrbit, std::string("mode needs a ") + group_tag(want) + "-orbit");
  if (orbit.size() == 0) throw Error(ErrorCode::NotFullOrbit, "empty orbit");
  if (!(make_orbit(q, orbit.tuple(0), want) == orbit))
    throw Error(ErrorCode::NotFullOrbit, "tuple set is not a single orbit");
  PFamily pf(q, f, std::move(p_overrides));
  return AlgebraPtr(new Algebra(f, std::move(q), std::move(params), std::move(orbit), mode, std::move(pf)));
}

int Algebra::gen_act(int a, int idx) const { return tuple_act(SignedPerm::generator(rank(), a), idx); }

const Word& Algebra::cword(const SignedPerm& w) const {
  std::lock_guard lock(mu_);
  auto it = cw_cache_.find(w);
  if (it == cw_cache_.end()) it = cw_cache_.emplace(w, canonical_word(w)).first;
  return it->second;
}

TwistedOp Algebra::e_op(int idx) const { return TwistedOp::projection(space_, idx); }

TwistedOp Algebra::y_op(int a) const {
  int n = rank();
  if (a < 1 || a > n) throw Error(ErrorCode::InvalidGenerator, "y_" + std::to_string(a));
  return poly_op(PolyN::var(field_, n, a - 1));
}

TwistedOp Algebra::poly_op(const PolyN& f) const {
  TwistedOp op(space_);
  RatFunc c(f);
  for (int i = 0; i < space_->size(); ++i) op.add_term(i, SignedPerm(rank()), c);
  return op;
}

TwistedOp Algebra::psi_op_uncached(int b, int idx) const {
  int n = rank();
  Field f = field_;
  TwistedOp op(space_);
  if (b == 0) {
    int i1 = vertex(idx, 1);
    const Scalar& g = params_.gamma[i1];
    RatFunc gx = RatFunc::inverse_root(f, n, 0) * g;
    PolyN alpha = alpha_poly(quiver_, params_, i1).substitute({PolyN::var(f, n, 0)});
    op.add_term(idx, SignedPerm(n), gx);
    op.add_term(idx, SignedPerm::generator(n, 0), RatFunc(alpha) - gx);
    return op;
  }
  int ib = vertex(idx, b), ib1 = vertex(idx, b + 1);
  SignedPerm rb = SignedPerm::generator(n, b);
  if (ib == ib1) {
    RatFunc dd = RatFunc::inverse_root(f, n, root_index(n, {Root::Minus, b - 1, b}));
    op.add_term(idx, rb, dd);
    op.add_term(idx, SignedPerm(n), -dd);
  } else {
    PolyN p = pfam_(ib, ib1).substitute({PolyN::var(f, n, b), PolyN::var(f, n, b - 1)});
    op.add_term(idx, rb, RatFunc(p));
  }
  return op;
}

TwistedOp Algebra::psi_op_at(int b, int idx) const {
  int n = rank();
  if (b < 0 || b >= n || (b == 0 && mode_ == Mode::A))
    throw Error(ErrorCode::InvalidGenerator, "psi_" + std::to_string(b));
  std::lock_guard lock(mu_);
  auto it = psi_cache_.find({b, idx});
  if (it == psi_cache_.end()) it = psi_cache_.emplace(std::make_pair(b, idx), psi_op_uncached(b, idx)).first;
  return it->second;
}

TwistedOp Algebra::psi_op(int b) const {
  std::lock_guard lock(mu_);
  auto it = psi_full_cache_.find(b);
  if (it != psi_full_cache_.end()) return it->second;
  TwistedOp op(space_);
  for (int i = 0; i < space_->size(); ++i) op += psi_op_at(b, i);
  return psi_full_cache_.emplace(b, std::move(op)).first->second;
}

const TwistedOp& Algebra::word_op(int idx, const Word& word) const {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(idx, word);
  auto it = word_cache_.find(key);
  if (it != word_cache_.end()) return it->second;
  TwistedOp op;
  if (word.empty()) {
    op = e_op(idx);
  } else {
    Word rest(word.begin() + 1, word.end());
    op = op_compose(psi_op(word.front()), word_op(idx, rest));
  }
  return word_cache_.emplace(std::move(key), std::move(op)).first->second;
}

TwistedOp Algebra::monomial_op(const PBWMonomial& m) const {
  const TwistedOp& base = word_op(m.tuple, cword(m.w));
  if (m.exps.degree() == 0) return base;
  return base.left_multiply(RatFunc(PolyN::monomial(field_, rank(), m.exps, Scalar::one(field_))));
}

RatFunc Algebra::leading(int idx, const SignedPerm& w) const {
  return word_op(idx, cword(w)).coefficient(idx, w);
}

TwistedOp Algebra::op(const Element& a) const {
  if (a.algebra() && a.algebra().get() != this) throw Error(ErrorCode::DescriptorMismatch, "foreign element");
  std::map<std::pair<int, SignedPerm>, PolyN> grouped;
  for (const auto& [m, c] : a.terms()) {
    auto [it, ins] = grouped.try_emplace({m.tuple, m.w}, PolyN(field_, rank()));
    it->second += PolyN::monomial(field_, rank(), m.exps, c);
  }
  TwistedOp out(space_);
  for (const auto& [k, p] : grouped) out += word_op(k.first, cword(k.second)).left_multiply(RatFunc(p));
  return out;
}

Element Algebra::pbw_expand(const TwistedOp& input) const {
  TwistedOp rest = input;
  Element out(self());
  while (!rest.is_zero()) {
    const OpKey* best = nullptr;
    int best_len = -1;
    for (const auto& [k, c] : rest.terms()) {
      int l = length(k.w);
      if (l > best_len || (l == best_len && std::tie(cword(k.w), k.source) < std::tie(cword(best->w), best->source))) {
        best = &k;
        best_len = l;
      }
    }
    OpKey key = *best;
    if (mode_ == Mode::A && !key.w.is_unsigned())
      throw Error(ErrorCode::NotInAlgebra, "signed group element " + key.w.str() + " in type A");
    RatFunc c = rest.terms().at(key);
    RatFunc p;
    try {
      p = c / leading(key.source, key.w);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedDenominator) throw;
      throw Error(ErrorCode::NotInAlgebra, e.what());
    }
    if (!p.is_polynomial())
      throw Error(ErrorCode::NotInAlgebra, "coefficient " + p.str() + " at " + key.w.str() + " is not polynomial");
    for (const auto& [mono, coeff] : p.num().terms()) out.add_term({mono, key.w, key.source}, coeff);
    rest -= word_op(key.source, cword(key.w)).left_multiply(p);
    if (rest.terms().count(key)) throw Error(ErrorCode::NotInAlgebra, "extraction did not clear a slot");
  }
  return out;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  if (a.algebra().get() != this || b.algebra().get() != this)
    throw Error(ErrorCode::DescriptorMismatch, "multiplying elements of different algebras");
  if (a.is_zero() || b.is_zero()) return zero();
  return pbw_expand(op_compose(op(a), op(b)));
}

Element Algebra::zero() const { return Element(self()); }

Element Algebra::scalar(const Scalar& c) const { return one() * c; }

Element Algebra::one() const {
  Element r(self());
  for (int i = 0; i < space_->size(); ++i) r.add_term({Monomial(), SignedPerm(rank()), i}, Scalar::one(field_));
  return r;
}

Element Algebra::e(int idx) const {
  if (idx < 0 || idx >= space_->size()) throw Error(ErrorCode::InvalidGenerator, "e(i) outside the orbit");
  Element r(self());
  r.add_term({Monomial(), SignedPerm(rank()), idx}, Scalar::one(field_));
  return r;
}

Element Algebra::y(int a) const {
  if (a < 1 || a > rank()) throw Error(ErrorCode::InvalidGenerator, "y_" + std::to_string(a));
  Element r(self());
  for (int i = 0; i < space_->size(); ++i) r.add_term({Monomial::var(a - 1), SignedPerm(rank()), i}, Scalar::one(field_));
  return r;
}

Element Algebra::psi(int b) const {
  int n = rank();
  if (b < 0 || b >= n || (b == 0 && mode_ == Mode::A))
    throw Error(ErrorCode::InvalidGenerator, "psi_" + std::to_string(b));
  Element r(self());
  for (int i = 0; i < space_->size(); ++i) r.add_term({Monomial(), SignedPerm::generator(n, b), i}, Scalar::one(field_));
  return r;
}

Element Algebra::monomial(const PBWMonomial& m, const Scalar& c) const {
  Element r(self());
  r.add_term(m, c);
  return r;
}

Element Algebra::monomial(const Monomial& exps, const SignedPerm& w, int idx) const {
  return monomial(PBWMonomial{exps, w, idx}, Scalar::one(field_));
}

Element Algebra::poly_e(const PolyN& f, int idx) const {
  Element r(self());
  for (const auto& [m, c] : f.terms()) r.add_term({m, SignedPerm(rank()), idx}, c);
  return r;
}

int Algebra::letter_degree(int letter, int idx) const {
  if (letter == 0) return d_vertex(quiver_, params_, vertex(idx, 1));
  return quiver_.d(vertex(idx, letter), vertex(idx, letter + 1));
}

int Algebra::degree(const PBWMonomial& m) const {
  int deg = 2 * m.exps.degree();
  int cur = m.tuple;
  const Word& w = cword(m.w);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    deg += letter_degree(*it, cur);
    cur = gen_act(*it, cur);
  }
  return deg;
}

Degree Algebra::degree(const Element& a) const {
  Degree d;
  for (const auto& [m, c] : a.terms()) {
    int k = degree(m);
    if (!d.value)
      d.value = k;
    else if (*d.value != k)
      return Degree{false, std::nullopt};
  }
  return d;
}

Element Algebra::iota(const Element& a) const {
  if (!zero_params()) throw Error(ErrorCode::ParamsNotZero, "iota needs type B mode with lambda = gamma = 0");
  Element r(self());
  for (const auto& [m, c] : a.terms()) r.add_term(m, r0_count(m.w) % 2 ? -c : c);
  return r;
}

std::string Algebra::monomial_str(const PBWMonomial& m) const {
  std::string s = m.exps.str("y");
  if (!m.w.is_identity()) s += (s.empty() ? "" : "*") + std::string("psi") + word_str(cword(m.w));
  s += (s.empty() ? "" : "*") + std::string("e") + tuple_str(m.tuple);
  return s;
}

std::vector<PBWMonomial> enumerate_monomials(const Algebra& alg, int max_len, int max_ydeg) {
  int n = alg.rank();
  std::vector<SignedPerm> group;
  for (const auto& w : enumerate_group(n, alg.mode() == Mode::A))
    if (length(w) <= max_len) group.push_back(w);
  std::vector<Monomial> exps;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      exps.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[k] = v;
      rec(k + 1, left - v);
    }
    e[k] = 0;
  };
  rec(0, max_ydeg);
  std::vector<PBWMonomial> out;
  for (int i = 0; i < alg.orbit().size(); ++i)
    for (const auto& w : group)
      for (const auto& m : exps) out.push_back({m, w, i});
  return out;
}

}  // namespace qha
