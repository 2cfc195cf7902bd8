#include "qha/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "qha/error.hpp"

namespace qha {

void add_check(std::vector<CheckCase>& out, std::string name, std::string subject, bool pass, std::string detail) {
  out.push_back(CheckCase{std::move(name), std::move(subject), "", pass, std::move(detail)});
}

namespace {

Element sum_of(const AlgebraPtr& alg, const std::vector<int>& idxs) {
  Element r = alg->zero();
  for (int i : idxs) r += alg->e(i);
  return r;
}

Element word_element(const Algebra& alg, const Word& word, const std::vector<int>& idxs) {
  TwistedOp op(alg.space());
  for (int i : idxs) op += alg.word_op(i, word);
  return alg.pbw_expand(op);
}

std::vector<int> all_indices(const Algebra& alg) {
  std::vector<int> v(alg.orbit().size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int target_of(const Algebra& alg, const PBWMonomial& m) { return alg.tuple_act(m.w, m.tuple); }

// every term y^a psi_w e(i) has i in src and w.i in tgt
bool supported_in(const Algebra& alg, const Element& a, const std::set<int>& src, const std::set<int>& tgt) {
  for (const auto& [m, c] : a.terms())
    if (!src.contains(m.tuple) || !tgt.contains(target_of(alg, m))) return false;
  return true;
}

std::string profile_str(const Profile& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k] + 1);
  return s + ")";
}

long multinomial(const std::vector<int>& sizes) {
  long r = 1;
  int n = 0;
  for (int s : sizes)
    for (int k = 1; k <= s; ++k) r = r * (++n) / k;
  return r;
}

long group_order(Group g, int n) {
  long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  if (g != Group::S) r <<= n;
  if (g == Group::D && n > 0) r >>= 1;
  return r;
}

std::string degree_str(const Degree& d) {
  if (!d.homogeneous) return "inhomogeneous";
  return d.value ? std::to_string(*d.value) : "zero";
}

bool degree_zero(const Algebra& alg, const Element& a) {
  Degree d = alg.degree(a);
  return d.homogeneous && (!d.value || *d.value == 0);
}

}  // namespace

// ---------------------------------------------------------------- validate_system

SystemReport validate_system(const IdempotentSystem& s, int span_len, int span_ydeg) {
  SystemReport rep;
  const Algebra& alg = *s.alg;
  auto ok = [&](std::string name, const std::string& who, bool pass, std::string detail = {}) {
    if (!pass) rep.valid = false;
    add_check(rep.cases, std::move(name), who, pass, std::move(detail));
  };
  std::size_t m = s.idempotents.size();
  Element total = alg.zero();
  for (const auto& e : s.idempotents) total += e;
  ok("system_complete", "-", total == alg.one());
  for (std::size_t a = 0; a < m; ++a) {
    const auto& e = s.idempotents[a];
    const std::string& who = s.labels[a];
    for (std::size_t b = 0; b < m; ++b) {
      Element p = alg.multiply(s.idempotents[b], e);
      ok("system_orthogonal[" + s.labels[b] + "]", who, a == b ? p == e : p.is_zero());
    }
    Element phipsi = alg.multiply(s.phi[a], s.psi[a]);
    ok("phi_psi_e", who, alg.multiply(phipsi, e) == e);
    ok("e_phi_psi", who, alg.multiply(e, phipsi) == e);
    Element eps = multiply(s.psi[a], e, s.phi[a]);
    ok("epsilon_idempotent", who, alg.multiply(eps, eps) == eps);
    ok("e_phi_eq_phi_eps", who, alg.multiply(e, s.phi[a]) == alg.multiply(s.phi[a], eps));
    ok("psi_phi_eps", who, multiply(s.psi[a], s.phi[a], eps) == eps);
    auto it = std::find(rep.classes.begin(), rep.classes.end(), eps);
    if (it == rep.classes.end()) {
      rep.classes.push_back(eps);
      rep.fibers.push_back({static_cast<int>(a)});
    } else {
      rep.fibers[it - rep.classes.begin()].push_back(static_cast<int>(a));
    }
  }
  if (rep.classes.size() <= 1) {
    rep.strong_disjoint_note = "single class";
    return rep;
  }
  // truncated spanning-set check of hat(eps) A hat(eps') = 0
  rep.strong_disjoint_note = "checked on PBW monomials with length <= " + std::to_string(span_len) +
                             " and y-degree <= " + std::to_string(span_ydeg);
  std::vector<Element> hats;
  for (const auto& f : rep.fibers) {
    Element h = alg.zero();
    for (int a : f) h += s.idempotents[a];
    hats.push_back(h);
  }
  auto span = enumerate_monomials(alg, span_len, span_ydeg);
  for (std::size_t x = 0; x < hats.size() && rep.strong_disjoint; ++x)
    for (std::size_t y = 0; y < hats.size() && rep.strong_disjoint; ++y) {
      if (x == y) continue;
      for (const auto& mono : span) {
        Element v = multiply(hats[x], alg.monomial(mono, Scalar::one(alg.field())), hats[y]);
        if (!v.is_zero()) {
          rep.strong_disjoint = false;
          rep.strong_disjoint_note += "; nonzero at " + alg.monomial_str(mono);
          break;
        }
      }
    }
  return rep;
}

// ---------------------------------------------------------------- profile systems

ProfileSystem profile_system(AlgebraPtr alg, const Partition& part) {
  part.validate(alg->quiver());
  ProfileSystem ps;
  ps.part = part;
  ps.prof = profiles(alg->orbit(), part);
  ps.sys.alg = alg;
  auto all = all_indices(*alg);
  for (std::size_t t = 0; t < ps.prof.profiles.size(); ++t) {
    const Profile& p = ps.prof.profiles[t];
    SignedPerm pi = min_coset_rep(p);
    Word w = canonical_word(pi);
    Word rev(w.rbegin(), w.rend());
    ps.pi.push_back(pi);
    ps.words.push_back(w);
    ps.sys.labels.push_back(profile_str(p));
    ps.sys.idempotents.push_back(sum_of(alg, ps.prof.fibers[t]));
    ps.sys.psi.push_back(word_element(*alg, w, all));
    ps.sys.phi.push_back(word_element(*alg, rev, all));
  }
  ps.corner = ps.prof.index_of(ps.prof.sorted);
  return ps;
}

std::vector<CheckCase> profile_identities(const ProfileSystem& ps) {
  std::vector<CheckCase> out;
  const Algebra& alg = *ps.sys.alg;
  int n = alg.rank();
  const Element& ecorner = ps.corner_unit();
  for (std::size_t t = 0; t < ps.prof.profiles.size(); ++t) {
    const Profile& p = ps.prof.profiles[t];
    const std::string who = ps.sys.labels[t];
    const Element& e = ps.sys.idempotents[t];
    const Element& psi = ps.sys.psi[t];
    const Element& phi = ps.sys.phi[t];
    Element phipsi = alg.multiply(phi, psi);
    add_check(out, "phit_psit_e(t)", who, alg.multiply(phipsi, e) == e);
    add_check(out, "e(t)_phit_psit", who, alg.multiply(e, phipsi) == e);
    add_check(out, "psit_e(t)_phit", who, multiply(psi, e, phi) == ecorner);
    add_check(out, "psit_phit_e(tbeta)", who, multiply(psi, phi, ecorner) == ecorner);
    for (int a = 1; a < n; ++a) {
      if (p[a - 1] == p[a]) continue;
      Element sq = multiply(alg.psi(a), alg.psi(a), e);
      add_check(out, "psi2_e(t)[a=" + std::to_string(a) + "]", who, sq == e);
    }
    // y_a commutes through phi_t onto the corner idempotent
    Element phi_c = alg.multiply(phi, ecorner);
    for (int a = 1; a <= n; ++a) {
      Element lhs = alg.multiply(alg.y(a), phi_c);
      Element rhs = multiply(phi, alg.y(ps.pi[t](a)), ecorner);
      add_check(out, "ya_phit[a=" + std::to_string(a) + "]", who, lhs == rhs);
    }
    for (int a = 1; a + 2 <= n; ++a) {
      if (p[a - 1] == p[a + 1]) continue;
      Element l = multiply(alg.psi(a + 1), alg.psi(a), alg.multiply(alg.psi(a + 1), e));
      Element r = multiply(alg.psi(a), alg.psi(a + 1), alg.multiply(alg.psi(a), e));
      add_check(out, "psi_braid_exact[a=" + std::to_string(a) + "]", who, l == r);
    }
    Element psi_e = alg.multiply(psi, e);
    Element e_phi = alg.multiply(e, phi);
    add_check(out, "degree0_e(t)", who, degree_zero(alg, e), degree_str(alg.degree(e)));
    add_check(out, "degree0_psit_e(t)", who, degree_zero(alg, psi_e), degree_str(alg.degree(psi_e)));
    add_check(out, "degree0_e(t)_phit", who, degree_zero(alg, e_phi), degree_str(alg.degree(e_phi)));
  }
  return out;
}

// ---------------------------------------------------------------- theta / eta

namespace {
std::set<int> fiber_set(const ProfileSystem& ps, int t) {
  return {ps.prof.fibers[t].begin(), ps.prof.fibers[t].end()};
}
}  // namespace

Element theta_map(const ProfileSystem& ps, int tp, int t, const Element& h) {
  const Algebra& alg = *ps.sys.alg;
  if (!supported_in(alg, h, fiber_set(ps, t), fiber_set(ps, tp)))
    throw Error(ErrorCode::CornerMismatch, "element is not in e(t')Ae(t)");
  return multiply(ps.sys.psi[tp], h, ps.sys.phi[t]);
}

Element eta_map(const ProfileSystem& ps, int tp, int t, const Element& m) {
  const Algebra& alg = *ps.sys.alg;
  auto c = fiber_set(ps, ps.corner);
  if (!supported_in(alg, m, c, c)) throw Error(ErrorCode::CornerMismatch, "matrix entry outside the corner");
  return multiply(ps.sys.phi[tp], m, ps.sys.psi[t]);
}

MatrixElement theta_all(const ProfileSystem& ps, const Element& a) {
  const Algebra& alg = *ps.sys.alg;
  MatrixElement out;
  int N = static_cast<int>(ps.prof.profiles.size());
  for (int tp = 0; tp < N; ++tp)
    for (int t = 0; t < N; ++t) {
      Element h = multiply(ps.sys.idempotents[tp], a, ps.sys.idempotents[t]);
      if (h.is_zero()) continue;
      Element v = theta_map(ps, tp, t, h);
      if (!v.is_zero()) out.emplace(std::pair{tp, t}, std::move(v));
    }
  (void)alg;
  return out;
}

Element eta_all(const ProfileSystem& ps, const MatrixElement& m) {
  Element r = ps.sys.alg->zero();
  for (const auto& [k, v] : m) r += eta_map(ps, k.first, k.second, v);
  return r;
}

std::vector<Element> corner_monomials(const ProfileSystem& ps, int tp, int t, int max_len, int max_ydeg) {
  const Algebra& alg = *ps.sys.alg;
  auto src = fiber_set(ps, t), tgt = fiber_set(ps, tp);
  std::vector<Element> out;
  for (const auto& m : enumerate_monomials(alg, max_len, max_ydeg))
    if (src.contains(m.tuple) && tgt.contains(target_of(alg, m)))
      out.push_back(alg.monomial(m, Scalar::one(alg.field())));
  return out;
}

// ---------------------------------------------------------------- tensors

void TensorElement::add_term(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r = factors_.empty() ? o : *this;
  if (!factors_.empty())
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  TensorElement r(factors_.empty() ? o.factors_ : factors_);
  r.terms_ = terms_;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

TensorElement TensorElement::operator*(const Scalar& c) const {
  TensorElement r(factors_);
  for (const auto& [k, v] : terms_) r.add_term(k, v * c);
  return r;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.coeff_str() + "*(";
    for (std::size_t j = 0; j < k.size(); ++j) s += (j ? " (x) " : "") + factors_[j]->monomial_str(k[j]);
    s += ")";
  }
  return s;
}

TensorElement tensor_of(const std::vector<Element>& parts) {
  std::vector<AlgebraPtr> fs;
  for (const auto& p : parts) fs.push_back(p.algebra());
  TensorElement r(fs);
  if (parts.empty()) return r;
  Field f = fs[0]->field();
  std::vector<std::pair<TensorElement::Key, Scalar>> acc{{{}, Scalar::one(f)}};
  for (const auto& p : parts) {
    std::vector<std::pair<TensorElement::Key, Scalar>> next;
    for (const auto& [k, c] : acc)
      for (const auto& [m, v] : p.terms()) {
        auto k2 = k;
        k2.push_back(m);
        next.emplace_back(std::move(k2), c * v);
      }
    acc = std::move(next);
  }
  for (const auto& [k, c] : acc) r.add_term(k, c);
  return r;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
  const auto& fs = a.factors().empty() ? b.factors() : a.factors();
  TensorElement r(fs);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      std::vector<Element> parts;
      bool zero = false;
      for (std::size_t j = 0; j < fs.size() && !zero; ++j) {
        const Algebra& alg = *fs[j];
        if (kb[j].tuple < 0 || target_of(alg, kb[j]) != ka[j].tuple) {
          zero = true;
          break;
        }
        Scalar one = Scalar::one(alg.field());
        parts.push_back(alg.multiply(alg.monomial(ka[j], one), alg.monomial(kb[j], one)));
        if (parts.back().is_zero()) zero = true;
      }
      if (zero) continue;
      r = r + tensor_of(parts) * (ca * cb);
    }
  return r;
}

// ---------------------------------------------------------------- rho

Rho make_rho(AlgebraPtr big, const Partition& part) {
  Rho rho;
  rho.big = big;
  rho.ps = profile_system(big, part);
  rho.split = orbit_components(big->quiver(), big->orbit(), part);
  Mode mode = big->mode();
  int off = 0;
  for (int j = 0; j < part.d; ++j) {
    if (rho.split.sizes[j] == 0)
      throw Error(ErrorCode::ComponentEmpty, "component " + std::to_string(j + 1) + " carries no vertex of the orbit");
    rho.offsets.push_back(off);
    off += rho.split.sizes[j];
    rho.factors.push_back(Algebra::create(big->field(), rho.split.quivers[j],
                                          big->params().restrict_to(rho.split.vertex_map[j]), rho.split.orbits[j],
                                          mode));
  }
  return rho;
}

int Rho::concat_index(const std::vector<int>& factor_tuples) const {
  Tuple t;
  for (std::size_t j = 0; j < factors.size(); ++j)
    for (int v : factors[j]->orbit().tuple(factor_tuples[j])) t.push_back(split.vertex_map[j][v]);
  return big->orbit().index(t);
}

namespace {

// factor tuple indices of a corner tuple
std::vector<int> split_index(const Rho& rho, int idx) {
  const Tuple& t = rho.big->orbit().tuple(idx);
  std::vector<int> out;
  for (std::size_t j = 0; j < rho.factors.size(); ++j) {
    const auto& vm = rho.split.vertex_map[j];
    Tuple local;
    for (int k = 0; k < rho.split.sizes[j]; ++k) {
      int v = t[rho.offsets[j] + k];
      auto it = std::find(vm.begin(), vm.end(), v);
      if (it == vm.end()) throw Error(ErrorCode::NotInCorner, "tuple " + rho.big->tuple_str(idx) + " off the corner");
      local.push_back(static_cast<int>(it - vm.begin()));
    }
    out.push_back(rho.factors[j]->orbit().index(local));
  }
  return out;
}

const std::vector<int>& corner_tuples(const Rho& rho) { return rho.ps.prof.fibers[rho.ps.corner]; }

}  // namespace

Element Rho::image_e(int j, int idx) const {
  Element r = big->zero();
  for (int i : corner_tuples(*this))
    if (split_index(*this, i)[j] == idx) r += big->e(i);
  return r;
}

Element Rho::image_y(int j, int a) const {
  Element r = big->zero();
  Scalar one = Scalar::one(big->field());
  for (int i : corner_tuples(*this))
    r += big->monomial(PBWMonomial{Monomial::var(offsets[j] + a - 1), SignedPerm(big->rank()), i}, one);
  return r;
}

Element Rho::image_psi(int j, int b) const {
  Word w = b == 0 ? embed_word(Word{0}, offsets[j]) : Word{offsets[j] + b};
  return word_element(*big, w, corner_tuples(*this));
}

Element Rho::image_monomial(int j, const PBWMonomial& m) const {
  const Algebra& fac = *factors[j];
  Element r = image_e(j, target_of(fac, m));
  for (int a = 1; a <= fac.rank(); ++a)
    for (int k = 0; k < m.exps.exponent(a - 1); ++k) r = big->multiply(r, image_y(j, a));
  for (int letter : fac.cword(m.w)) r = big->multiply(r, image_psi(j, letter));
  return big->multiply(r, image_e(j, m.tuple));
}

Element Rho::expand(const TensorElement& a) const {
  Element r = big->zero();
  int n = big->rank();
  for (const auto& [key, c] : a.terms()) {
    std::vector<int> exps(n, 0);
    std::vector<int> tuples;
    Word word;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const Algebra& fac = *factors[j];
      for (int k = 0; k < fac.rank(); ++k) exps[offsets[j] + k] = key[j].exps.exponent(k);
      Word wj = embed_word(fac.cword(key[j].w), offsets[j]);
      word.insert(word.end(), wj.begin(), wj.end());
      tuples.push_back(key[j].tuple);
    }
    int idx = concat_index(tuples);
    PolyN y = PolyN::monomial(big->field(), n, Monomial::from_exponents(exps), Scalar::one(big->field()));
    r += big->pbw_expand(op_compose(big->poly_op(y), big->word_op(idx, word))) * c;
  }
  return r;
}

Element Rho::hom(const TensorElement& a) const {
  Element r = big->zero();
  for (const auto& [key, c] : a.terms()) {
    Element p = corner_unit();
    for (std::size_t j = 0; j < factors.size(); ++j) p = big->multiply(p, image_monomial(static_cast<int>(j), key[j]));
    r += p * c;
  }
  return r;
}

TensorElement Rho::inverse(const Element& a) const {
  std::set<int> c(corner_tuples(*this).begin(), corner_tuples(*this).end());
  if (!supported_in(*big, a, c, c)) throw Error(ErrorCode::NotInCorner, "element outside e(t^beta) A e(t^beta)");
  TensorElement out(factors);
  Element rest = a;
  int n = big->rank();
  for (int guard = 0; !rest.is_zero(); ++guard) {
    if (guard > 100000) throw Error(ErrorCode::NotBlockSupported, "inverse did not terminate");
    // a term of maximal length: lower terms of its preimage never reach that length
    auto best = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (length(it->first.w) > length(best->first.w)) best = it;
    const PBWMonomial& m = best->first;
    std::vector<int> ft = split_index(*this, m.tuple);
    TensorElement::Key key;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      int nj = factors[j]->rank(), off = offsets[j];
      std::vector<int> images, exps;
      for (int k = 1; k <= nj; ++k) {
        int im = m.w(off + k);
        int ab = std::abs(im) - off;
        if (ab < 1 || ab > nj)
          throw Error(ErrorCode::NotBlockSupported, "group part " + m.w.str() + " mixes components");
        images.push_back(im > 0 ? ab : -ab);
        exps.push_back(m.exps.exponent(off + k - 1));
      }
      key.push_back(PBWMonomial{Monomial::from_exponents(exps), SignedPerm::from_images(images), ft[j]});
    }
    (void)n;
    TensorElement single(factors);
    single.add_term(key, Scalar::one(big->field()));
    Element img = expand(single);
    Scalar lead = img.coefficient(m);
    if (lead.is_zero()) throw Error(ErrorCode::NotBlockSupported, "no preimage for " + big->monomial_str(m));
    Scalar coef = best->second / lead;
    out.add_term(key, coef);
    rest -= img * coef;
  }
  return out;
}

TensorElement Rho::unit() const {
  std::vector<Element> parts;
  for (const auto& f : factors) parts.push_back(f->one());
  return tensor_of(parts);
}

namespace {

// Factor generators evaluated through rho inside the big algebra.
class RhoContext {
 public:
  using Value = Element;
  RhoContext(const Rho& rho, int j) : rho_(rho), j_(j) {}
  Element one() const { return rho_.corner_unit(); }
  Element zero() const { return rho_.big->zero(); }
  Element e(int idx) const { return rho_.image_e(j_, idx); }
  Element y(int a) const { return rho_.image_y(j_, a); }
  Element psi(int b) const { return rho_.image_psi(j_, b); }
  Element poly_e(const PolyN& f, int idx) const {
    const Algebra& big = *rho_.big;
    int n = big.rank();
    std::vector<PolyN> images;
    for (int a = 0; a < rho_.factors[j_]->rank(); ++a) images.push_back(PolyN::var(big.field(), n, rho_.offsets[j_] + a));
    PolyN g = f.substitute(images);
    Element r = big.zero();
    Element ei = e(idx);
    for (const auto& [m, c] : ei.terms()) r += big.poly_e(g, m.tuple) * c;
    return r;
  }
  Element mul(const Element& a, const Element& b) const { return rho_.big->multiply(a, b); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element scale(const Element& a, const Scalar& c) const { return a * c; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string homogeneity(const Element& lhs, const Element& rhs) const {
    return degree_mismatch(*rho_.big, lhs, rhs);
  }

 private:
  const Rho& rho_;
  int j_;
};

std::string factor_tag(int j) { return "[" + std::to_string(j + 1) + "]"; }

}  // namespace

std::vector<CheckCase> rho_checks(const Rho& rho) {
  std::vector<CheckCase> out;
  int d = static_cast<int>(rho.factors.size());
  bool typeb = rho.big->mode() == Mode::B;
  for (int j = 0; j < d; ++j) {
    const Algebra& fac = *rho.factors[j];
    RhoContext ctx(rho, j);
    RelationData rd = relation_data(fac);
    std::vector<RelationCase> rel;
    type_a_relations(rd, ctx, rel);
    if (typeb) type_b_relations(rd, ctx, rel);
    for (auto& c : rel) {
      c.relation = "rho" + factor_tag(j) + ":" + c.relation;
      out.push_back(std::move(c));
    }
    // grading: each generator image has the degree of the generator
    for (int idx = 0; idx < fac.orbit().size(); ++idx) {
      std::string who = fac.tuple_str(idx);
      for (int b = typeb ? 0 : 1; b < fac.rank(); ++b) {
        PBWMonomial m{Monomial{}, SignedPerm::generator(fac.rank(), b), idx};
        Degree dg = rho.big->degree(rho.image_monomial(j, m));
        int want = fac.degree(m);
        add_check(out, "rho" + factor_tag(j) + ":degree_psi[b=" + std::to_string(b) + "]", who,
                  dg.homogeneous && dg.value && *dg.value == want, degree_str(dg) + " vs " + std::to_string(want));
      }
    }
  }
  // cross-factor commutation
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      auto gens = [&](int f) {
        std::vector<std::pair<std::string, Element>> g;
        const Algebra& fac = *rho.factors[f];
        for (int a = 1; a <= fac.rank(); ++a) g.emplace_back("y" + std::to_string(a), rho.image_y(f, a));
        for (int b = typeb ? 0 : 1; b < fac.rank(); ++b)
          g.emplace_back("psi" + std::to_string(b), rho.image_psi(f, b));
        for (int idx = 0; idx < fac.orbit().size(); ++idx) g.emplace_back("e" + fac.tuple_str(idx), rho.image_e(f, idx));
        return g;
      };
      for (const auto& [na, ga] : gens(j))
        for (const auto& [nb, gb] : gens(k))
          add_check(out, "rho_commute" + factor_tag(j) + factor_tag(k), na + "," + nb,
                    rho.big->multiply(ga, gb) == rho.big->multiply(gb, ga));
    }
  return out;
}

// ---------------------------------------------------------------- composite

TensorMatrix composite(const Rho& rho, const Element& a) {
  TensorMatrix out;
  for (auto& [k, v] : theta_all(rho.ps, a)) {
    TensorElement t = rho.inverse(v);
    if (!t.is_zero()) out.emplace(k, std::move(t));
  }
  return out;
}

TensorMatrix tensor_matmul(const TensorMatrix& a, const TensorMatrix& b) {
  TensorMatrix out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      if (ka.second != kb.first) continue;
      TensorElement p = tensor_multiply(va, vb);
      if (p.is_zero()) continue;
      auto key = std::pair{ka.first, kb.second};
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, std::move(p));
      else
        it->second = it->second + p;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

namespace {

bool matrices_equal(const TensorMatrix& a, const TensorMatrix& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || !(it->second == v)) return false;
  }
  return true;
}

template <class T>
std::vector<T> sample(std::vector<T> pool, int count, std::mt19937_64& rng) {
  if (count < 0 || static_cast<int>(pool.size()) <= count) return pool;
  for (int k = 0; k < count; ++k) std::swap(pool[k], pool[k + rng() % (pool.size() - k)]);
  pool.resize(count);
  return pool;
}

}  // namespace

DecompositionRecord full_decompose(AlgebraPtr alg, const Partition& part, int samples, unsigned seed) {
  DecompositionRecord rec;
  std::mt19937_64 rng(seed);
  Rho rho = make_rho(alg, part);
  const ProfileSystem& ps = rho.ps;
  const Algebra& big = *alg;
  int N = static_cast<int>(ps.prof.profiles.size());
  int n = big.rank();
  rec.matrix_size = N;
  for (const auto& p : ps.prof.profiles) rec.profiles.push_back(profile_str(p));
  rec.corner = profile_str(ps.prof.sorted);
  rec.factor_sizes = rho.split.sizes;
  for (const auto& o : rho.split.orbits) rec.factor_orbit_sizes.push_back(o.size());
  auto& out = rec.cases;

  // bookkeeping
  add_check(out, "matrix_size_multinomial", "-", N == multinomial(rho.split.sizes),
            std::to_string(N) + " vs " + std::to_string(multinomial(rho.split.sizes)));
  long prod = 1, fac_rank = 1;
  for (std::size_t j = 0; j < rho.factors.size(); ++j) {
    prod *= rho.split.orbits[j].size();
    fac_rank *= rho.split.orbits[j].size() * group_order(big.orbit().group(), rho.split.sizes[j]);
  }
  for (int t = 0; t < N; ++t)
    add_check(out, "fiber_size", rec.profiles[t], static_cast<long>(ps.prof.fibers[t].size()) == prod);
  long total = big.orbit().size() * group_order(big.orbit().group(), n);
  add_check(out, "rank_bookkeeping", "-", total == static_cast<long>(N) * N * fac_rank,
            std::to_string(total) + " = " + std::to_string(N) + "^2 * " + std::to_string(fac_rank));

  // idempotent system
  for (auto& c : profile_identities(ps)) out.push_back(std::move(c));
  SystemReport sr = validate_system(ps.sys);
  for (auto& c : sr.cases) out.push_back(std::move(c));
  add_check(out, "single_class", "-", sr.classes.size() == 1 && sr.classes[0] == ps.corner_unit());

  // theta and eta
  // exhaustive up to the longest element for n <= 2, sampled beyond
  int len = n <= 2 ? n * n : 5, ydeg = 2;
  int per_pair = std::max(1, (std::max(samples, 200) + N * N - 1) / (N * N));
  for (int tp = 0; tp < N; ++tp)
    for (int t = 0; t < N; ++t) {
      auto mons = corner_monomials(ps, tp, t, len, ydeg);
      if (n > 2) mons = sample(std::move(mons), per_pair, rng);
      bool ok = true;
      std::string detail;
      for (const auto& h : mons) {
        Element th = theta_map(ps, tp, t, h);
        if (!(eta_map(ps, tp, t, th) == h)) ok = false, detail = h.str();
        if (!(theta_map(ps, tp, t, eta_map(ps, tp, t, th)) == th)) ok = false, detail = h.str();
        if (!ok) break;
      }
      add_check(out, "theta_eta_inverse", rec.profiles[tp] + "<-" + rec.profiles[t], ok,
                std::to_string(mons.size()) + " elements" + (detail.empty() ? "" : "; fails at " + detail));
    }
  {
    int pairs = std::max(1, samples / 4);
    bool ok = true;
    std::string detail;
    for (int k = 0; k < pairs && ok; ++k) {
      int t1 = rng() % N, t2 = rng() % N, t3 = rng() % N;
      auto m1 = corner_monomials(ps, t1, t2, 3, 1), m2 = corner_monomials(ps, t2, t3, 3, 1);
      if (m1.empty() || m2.empty()) continue;
      const Element& h1 = m1[rng() % m1.size()];
      const Element& h2 = m2[rng() % m2.size()];
      Element lhs = theta_map(ps, t1, t3, big.multiply(h1, h2));
      Element rhs = big.multiply(theta_map(ps, t1, t2, h1), theta_map(ps, t2, t3, h2));
      if (!(lhs == rhs)) ok = false, detail = h1.str() + " ; " + h2.str();
    }
    add_check(out, "theta_multiplicative", "-", ok, detail);
  }

  // rho
  for (auto& c : rho_checks(rho)) out.push_back(std::move(c));
  {
    std::vector<std::vector<PBWMonomial>> pools;
    for (const auto& f : rho.factors) pools.push_back(enumerate_monomials(*f, 3, 1));
    std::vector<TensorElement::Key> keys{{}};
    for (const auto& pool : pools) {
      std::vector<TensorElement::Key> next;
      for (const auto& k : keys)
        for (const auto& m : pool) {
          auto k2 = k;
          k2.push_back(m);
          next.push_back(std::move(k2));
        }
      keys = std::move(next);
    }
    keys = sample(std::move(keys), samples, rng);
    bool ok = true, hom_ok = true;
    std::string detail;
    for (const auto& k : keys) {
      TensorElement x(rho.factors);
      x.add_term(k, Scalar::one(big.field()));
      Element img = rho.expand(x);
      if (!(rho.inverse(img) == x)) ok = false, detail = x.str();
      if (!(rho.hom(x) == img)) hom_ok = false, detail = x.str();
      if (!ok || !hom_ok) break;
    }
    add_check(out, "rho_roundtrip_tensor", "-", ok, std::to_string(keys.size()) + " monomials " + detail);
    add_check(out, "rho_basis_route_eq_hom_route", "-", hom_ok, detail);
    auto cm = sample(corner_monomials(ps, ps.corner, ps.corner, n <= 2 ? n * n : 5, 1), samples, rng);
    ok = true;
    detail.clear();
    for (const auto& c : cm)
      if (!(rho.expand(rho.inverse(c)) == c)) {
        ok = false, detail = c.str();
        break;
      }
    add_check(out, "rho_roundtrip_corner", "-", ok, std::to_string(cm.size()) + " elements " + detail);
  }

  // generator images
  for (std::size_t j = 0; j < rho.factors.size(); ++j) {
    const Algebra& fac = *rho.factors[j];
    std::string tag = "^(" + std::to_string(j + 1) + ")";
    for (int a = 1; a <= fac.rank(); ++a)
      rec.generator_images.emplace_back("y" + std::to_string(a) + tag, rho.image_y(j, a).str());
    for (int b = big.mode() == Mode::B ? 0 : 1; b < fac.rank(); ++b)
      rec.generator_images.emplace_back("psi" + std::to_string(b) + tag, rho.image_psi(j, b).str());
  }

  // composite A -> Mat(tensor) on generator products
  {
    std::vector<std::pair<std::string, Element>> gens;
    for (int a = 1; a <= n; ++a) gens.emplace_back("y" + std::to_string(a), big.y(a));
    for (int b = big.mode() == Mode::B ? 0 : 1; b < n; ++b) gens.emplace_back("psi" + std::to_string(b), big.psi(b));
    for (int t = 0; t < N; ++t) gens.emplace_back("e" + rec.profiles[t], ps.sys.idempotents[t]);
    std::vector<TensorMatrix> images;
    for (const auto& g : gens) images.push_back(composite(rho, g.second));
    for (std::size_t x = 0; x < gens.size(); ++x)
      for (std::size_t y = 0; y < gens.size(); ++y) {
        TensorMatrix lhs = composite(rho, big.multiply(gens[x].second, gens[y].second));
        TensorMatrix rhs = tensor_matmul(images[x], images[y]);
        add_check(out, "composite_multiplicative", gens[x].first + "*" + gens[y].first, matrices_equal(lhs, rhs));
      }
    TensorMatrix id;
    for (int t = 0; t < N; ++t) id.emplace(std::pair{t, t}, rho.unit());
    add_check(out, "composite_unit", "-", matrices_equal(composite(rho, big.one()), id));
  }
  std::sort(out.begin(), out.end(), [](const CheckCase& a, const CheckCase& b) {
    return std::tie(a.relation, a.tuple, a.branch) < std::tie(b.relation, b.tuple, b.branch);
  });
  return rec;
}

// ---------------------------------------------------------------- cyclotomic transport

CycloReport cyclo_transport(AlgebraPtr alg, const Partition& part, const std::vector<int>& Lambda) {
  CycloReport rep;
  const Algebra& big = *alg;
  const Quiver& q = big.quiver();
  if (static_cast<int>(Lambda.size()) != q.size()) throw Error(ErrorCode::SizeMismatch, "Lambda has wrong length");
  Rho rho = make_rho(alg, part);
  const ProfileSystem& ps = rho.ps;
  int n = big.rank();
  int N = static_cast<int>(ps.prof.profiles.size());
  SignedPerm id(n);
  Scalar one = Scalar::one(big.field());
  auto ypow_e = [&](int b, int k, int idx) { return big.monomial(PBWMonomial{Monomial::var(b - 1, k), id, idx}, one); };
  auto& out = rep.cases;

  // forward: y1^L e(i) = phi_t y_{pi_t(1)}^L e(pi_t.i) psi_t e(t)
  for (int t = 0; t < N; ++t)
    for (int i : ps.prof.fibers[t]) {
      int L = Lambda[big.vertex(i, 1)];
      int b = ps.pi[t](1);
      int ip = big.tuple_act(ps.pi[t], i);
      Element lhs = ypow_e(1, L, i);
      Element rhs = multiply(ps.sys.phi[t], ypow_e(b, L, ip), big.multiply(ps.sys.psi[t], ps.sys.idempotents[t]));
      add_check(out, "cyclo_forward", big.tuple_str(i), lhs == rhs);
      // the corner generator is a tensor ideal generator placed in one factor
      TensorElement img = rho.inverse(ypow_e(b, L, ip));
      TensorElement unit_i = rho.inverse(big.e(ip));
      auto ft = unit_i.terms().begin()->first;
      int j = 0;
      while (j + 1 < part.d && rho.offsets[j + 1] < b) ++j;
      bool ok = b == rho.offsets[j] + 1 && img.terms().size() == 1;
      if (ok) {
        auto key = img.terms().begin()->first;
        for (int k = 0; k < part.d; ++k) {
          Monomial want = k == j ? Monomial::var(0, L) : Monomial{};
          ok = ok && key[k].exps == want && key[k].w.is_identity() && key[k].tuple == ft[k].tuple;
        }
      }
      add_check(out, "cyclo_forward_in_tensor_ideal", big.tuple_str(i), ok, img.str());
    }

  // backward: phi_{t'} y_b^L e(i) psi_t = y1^L e(pi_{t'}^{-1}.i) phi_{t'} psi_t
  for (int i : ps.prof.fibers[ps.corner])
    for (int j = 0; j < part.d; ++j) {
      int b = rho.offsets[j] + 1;
      int L = Lambda[big.vertex(i, b)];
      for (int tp = 0; tp < N; ++tp) {
        if (ps.prof.profiles[tp][0] != j) continue;
        int ipp = big.tuple_act(ps.pi[tp].inverse(), i);
        for (int t = 0; t < N; ++t) {
          Element lhs = multiply(ps.sys.phi[tp], ypow_e(b, L, i), ps.sys.psi[t]);
          Element rhs = multiply(ypow_e(1, L, ipp), ps.sys.phi[tp], ps.sys.psi[t]);
          add_check(out, "cyclo_backward[j=" + std::to_string(j + 1) + "]",
                    big.tuple_str(i) + ":" + ps.sys.labels[tp] + "," + ps.sys.labels[t], lhs == rhs);
        }
      }
    }

  // a component with Lambda = 0 on it kills the quotient: its generators are idempotents
  for (int j = 0; j < part.d; ++j) {
    bool zero = true;
    for (int v : part.vertices_of(j)) zero = zero && Lambda[v] == 0;
    if (!zero) continue;
    rep.quotient_is_zero = true;
    if (rep.zero_component < 0) rep.zero_component = j;
    int b = rho.offsets[j] + 1;
    for (int i : ps.prof.fibers[ps.corner])
      add_check(out, "cyclo_generator_is_idempotent[j=" + std::to_string(j + 1) + "]", big.tuple_str(i),
                ypow_e(b, 0, i) == big.e(i));
  }
  std::sort(out.begin(), out.end(), [](const CheckCase& a, const CheckCase& b) {
    return std::tie(a.relation, a.tuple) < std::tie(b.relation, b.tuple);
  });
  return rep;
}

// ---------------------------------------------------------------- orbits

namespace {

std::vector<Orbit> all_orbits(const Quiver& q, int n, Group g) {
  std::vector<Orbit> out;
  if (n == 0) return out;
  std::set<Tuple> seen;
  Tuple t(n, 0);
  int m = q.size();
  if (m == 0) return out;
  while (true) {
    if (!seen.contains(t)) {
      Orbit o = make_orbit(q, t, g);
      for (const auto& s : o.tuples()) seen.insert(s);
      out.push_back(std::move(o));
    }
    int k = n - 1;
    while (k >= 0 && t[k] == m - 1) t[k--] = 0;
    if (k < 0) break;
    ++t[k];
  }
  return out;
}

long binom(long a, long b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

int base_orbit_count(const Quiver& q, Group g) {
  if (g == Group::S) return q.size();
  int c = 0;
  for (int v = 0; v < q.size(); ++v) c += q.theta(v) >= v;
  return c;
}

void compositions(int n, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= n; ++k) {
    cur.push_back(k);
    compositions(n - k, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CheckCase> orbit_bijection_check(const Quiver& q, const Partition& part, int n, Group g) {
  part.validate(q);
  std::vector<CheckCase> out;
  std::string who = "n=" + std::to_string(n) + "," + group_tag(g);
  int omega = base_orbit_count(q, g);
  if (n == 0) {
    add_check(out, "orbit_bijection", who, true, "single empty orbit on both sides");
    add_check(out, "orbit_count_formula", who, binom(omega - 1, 0) == 1, "1");
    return out;
  }
  auto orbits = all_orbits(q, n, g);
  using Key = std::pair<std::vector<int>, std::vector<Tuple>>;
  std::set<Key> left;
  bool rebuild_ok = true;
  std::string detail;
  for (const auto& o : orbits) {
    ComponentSplit s = orbit_components(q, o, part);
    Key k{s.sizes, {}};
    Tuple seed;
    for (int j = 0; j < part.d; ++j) {
      Tuple first = s.sizes[j] ? s.orbits[j].tuple(0) : Tuple{};
      k.second.push_back(first);
      for (int v : first) seed.push_back(s.vertex_map[j][v]);
    }
    if (!(make_orbit(q, seed, g) == o)) rebuild_ok = false, detail = tuple_str(q, o.tuple(0));
    left.insert(std::move(k));
  }
  add_check(out, "orbit_rebuild", who, rebuild_ok, detail);
  add_check(out, "orbit_injective", who, left.size() == orbits.size());

  std::set<Key> right;
  long right_count = 0;
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(n, part.d, cur, comps);
  std::vector<Quiver> sub;
  for (int j = 0; j < part.d; ++j) sub.push_back(q.induced(part.vertices_of(j)));
  for (const auto& c : comps) {
    std::vector<std::vector<Tuple>> choices;
    long cnt = 1;
    for (int j = 0; j < part.d; ++j) {
      std::vector<Tuple> firsts;
      if (c[j] == 0)
        firsts.push_back({});
      else
        for (const auto& o : all_orbits(sub[j], c[j], g)) firsts.push_back(o.tuple(0));
      cnt *= static_cast<long>(firsts.size());
      choices.push_back(std::move(firsts));
    }
    right_count += cnt;
    std::vector<std::vector<Tuple>> acc{{}};
    for (const auto& ch : choices) {
      std::vector<std::vector<Tuple>> next;
      for (const auto& a : acc)
        for (const auto& t : ch) {
          auto a2 = a;
          a2.push_back(t);
          next.push_back(std::move(a2));
        }
      acc = std::move(next);
    }
    for (auto& a : acc) right.insert(Key{c, std::move(a)});
  }
  add_check(out, "orbit_bijection", who, left == right,
            std::to_string(orbits.size()) + " orbits vs " + std::to_string(right_count) + " component tuples");
  long formula = binom(omega + n - 1, n);
  add_check(out, "orbit_count_formula", who, formula == static_cast<long>(orbits.size()),
            std::to_string(formula) + " vs " + std::to_string(orbits.size()));
  return out;
}

}  // namespace qha
