#include "qha/smash.hpp"

namespace qha {

TupleSpace::TupleSpace(Field f, Quiver q, Orbit orbit)
    : field_(f), quiver_(std::move(q)), orbit_(std::move(orbit)) {}

int TupleSpace::act(const SignedPerm& w, int idx) const {
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find({w, idx});
    if (it != cache_.end()) return it->second;
  }
  int r = orbit_.index(act_tuple(quiver_, w, orbit_.tuple(idx)));
  std::lock_guard lock(mu_);
  cache_.emplace(std::make_pair(w, idx), r);
  return r;
}

TwistedOp TwistedOp::identity(SpacePtr space) {
  TwistedOp op(space);
  for (int i = 0; i < space->size(); ++i)
    op.terms_.emplace(OpKey{i, SignedPerm(space->rank())}, RatFunc::one(space->field(), space->rank()));
  return op;
}

TwistedOp TwistedOp::projection(SpacePtr space, int idx) {
  return term(space, idx, SignedPerm(space->rank()), RatFunc::one(space->field(), space->rank()));
}

TwistedOp TwistedOp::term(SpacePtr space, int idx, const SignedPerm& w, RatFunc c) {
  TwistedOp op(std::move(space));
  op.add_term(idx, w, c);
  return op;
}

RatFunc TwistedOp::coefficient(int source, const SignedPerm& w) const {
  auto it = terms_.find({source, w});
  if (it == terms_.end()) return RatFunc::zero(space_->field(), space_->rank());
  return it->second;
}

void TwistedOp::add_term(int source, const SignedPerm& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(OpKey{source, w}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TwistedOp::check_space(const TwistedOp& o) const {
  if (space_ != o.space_ && space_ && o.space_ &&
      !(space_->orbit() == o.space_->orbit() && space_->field() == o.space_->field()))
    throw Error(ErrorCode::OrbitMismatch, "operators over different orbits");
}

TwistedOp& TwistedOp::operator+=(const TwistedOp& o) {
  check_space(o);
  if (!space_) space_ = o.space_;
  for (const auto& [k, c] : o.terms_) add_term(k.source, k.w, c);
  return *this;
}

TwistedOp& TwistedOp::operator-=(const TwistedOp& o) {
  check_space(o);
  if (!space_) space_ = o.space_;
  for (const auto& [k, c] : o.terms_) add_term(k.source, k.w, -c);
  return *this;
}

TwistedOp TwistedOp::operator+(const TwistedOp& o) const {
  TwistedOp r = *this;
  return r += o;
}

TwistedOp TwistedOp::operator-(const TwistedOp& o) const {
  TwistedOp r = *this;
  return r -= o;
}

TwistedOp TwistedOp::operator*(const Scalar& c) const {
  TwistedOp r(space_);
  if (c.is_zero()) return r;
  for (const auto& [k, f] : terms_) r.terms_.emplace(k, f * c);
  return r;
}

TwistedOp TwistedOp::left_multiply(const RatFunc& f) const {
  TwistedOp r(space_);
  if (f.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, f * c);
  return r;
}

bool operator==(const TwistedOp& a, const TwistedOp& b) {
  a.check_space(b);
  return a.terms_ == b.terms_;
}

TwistedOp op_compose(const TwistedOp& a, const TwistedOp& b) {
  if (a.space() && b.space() && a.space() != b.space() &&
      !(a.space()->orbit() == b.space()->orbit()))
    throw Error(ErrorCode::OrbitMismatch, "composing operators over different orbits");
  const SpacePtr& sp = a.space() ? a.space() : b.space();
  TwistedOp r(sp);
  if (a.is_zero() || b.is_zero()) return r;
  const auto& at = a.terms();
  for (const auto& [kb, cb] : b.terms()) {
    int target = sp->act(kb.w, kb.source);
    for (auto it = at.lower_bound(OpKey{target, SignedPerm()}); it != at.end() && it->first.source == target; ++it) {
      const auto& [ka, ca] = *it;
      r.add_term(kb.source, ka.w * kb.w, ca * cb.act(ka.w));
    }
  }
  return r;
}

PolyVec op_apply(const TwistedOp& a, const PolyVec& v) {
  const SpacePtr& sp = a.space();
  std::map<int, RatFunc> acc;
  for (const auto& [k, c] : a.terms()) {
    auto it = v.find(k.source);
    if (it == v.end() || it->second.is_zero()) continue;
    int target = sp->act(k.w, k.source);
    RatFunc t = c * RatFunc(it->second.act(k.w));
    auto [pos, inserted] = acc.try_emplace(target, t);
    if (!inserted) pos->second += t;
  }
  PolyVec out;
  for (auto& [idx, f] : acc) {
    if (!f.is_polynomial()) throw Error(ErrorCode::NonPolynomialImage, f.str());
    if (!f.is_zero()) out.emplace(idx, f.num());
  }
  return out;
}

std::string TwistedOp::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "{" + space_->tuple_str(k.source) + ", " + k.w.str() + ", " + c.num().str() + ", " + c.den().str() + "}";
  }
  return s;
}

}  // namespace qha
