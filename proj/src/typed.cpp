#include "qha/typed.hpp"

#include <random>
#include <tuple>

#include "qha/error.hpp"

namespace qha {

namespace {

void require_zero(const Algebra& alg) {
  if (!alg.zero_params()) throw Error(ErrorCode::ParamsNotZero, "needs type B mode with lambda = gamma = 0");
}

bool even_terms(const Element& a) {
  for (const auto& [m, c] : a.terms())
    if (r0_count(m.w) % 2) return false;
  return true;
}

std::vector<PBWMonomial> sample_monomials(const Algebra& alg, int count, std::mt19937_64& rng) {
  auto pool = enumerate_monomials(alg, std::min(alg.rank() * alg.rank(), 5), 2);
  std::vector<PBWMonomial> out;
  for (int k = 0; k < count; ++k) out.push_back(pool[rng() % pool.size()]);
  return out;
}

// a random element: combination of up to three PBW monomials
Element sample_element(const Algebra& alg, const std::vector<PBWMonomial>& pool, std::mt19937_64& rng) {
  Element r = alg.zero();
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < terms; ++k)
    r += alg.monomial(pool[rng() % pool.size()], Scalar(alg.field(), static_cast<long>(rng() % 7) - 3));
  return r;
}

void sort_cases(std::vector<CheckCase>& out) {
  std::stable_sort(out.begin(), out.end(), [](const CheckCase& a, const CheckCase& b) {
    return std::tie(a.relation, a.tuple, a.branch) < std::tie(b.relation, b.tuple, b.branch);
  });
}

}  // namespace

WElement certify_w(const Element& a) { return WElement{a, even_terms(a)}; }

WElement w_generator(const AlgebraPtr& alg, WGen g, int index) {
  require_zero(*alg);
  int n = alg->rank();
  switch (g) {
    case WGen::E:
      if (index < 0 || index >= alg->orbit().size()) throw Error(ErrorCode::InvalidGenerator, "e(" + std::to_string(index) + ")");
      return certify_w(alg->e(index));
    case WGen::Y:
      return certify_w(alg->y(index));
    case WGen::Psi:
      if (index < 1 || index >= n) throw Error(ErrorCode::InvalidGenerator, "psi_" + std::to_string(index) + " is not a W generator");
      return certify_w(alg->psi(index));
    case WGen::Psi0:
      if (n < 2) throw Error(ErrorCode::InvalidGenerator, "Psi0 needs rank at least 2");
      return certify_w(multiply(alg->psi(0), alg->psi(1), alg->psi(0)));
  }
  throw Error(ErrorCode::InvalidGenerator, "unknown generator");
}

std::vector<CheckCase> verify_w_relations(const AlgebraPtr& alg) {
  require_zero(*alg);
  std::vector<CheckCase> out;
  OpContext ctx(*alg);
  RelationData rd = relation_data(*alg);
  type_a_relations(rd, ctx, out);
  int n = alg->rank();
  if (n >= 2) {
    type_d_relations(rd, ctx, out);
    WElement P = w_generator(alg, WGen::Psi0);
    add_check(out, "Psi0_iota_invariant", "-", P.iota_invariant && alg->iota(P.elem) == P.elem);
    const Quiver& q = alg->quiver();
    for (int idx = 0; idx < alg->orbit().size(); ++idx) {
      Degree d = alg->degree(alg->multiply(P.elem, alg->e(idx)));
      int want = q.d(q.theta(alg->vertex(idx, 1)), alg->vertex(idx, 2));
      add_check(out, "Psi0_degree", alg->tuple_str(idx), d.homogeneous && d.value && *d.value == want,
                std::to_string(want));
    }
  }
  for (int a = 1; a <= n; ++a) add_check(out, "w_generator_invariant", "y" + std::to_string(a), w_generator(alg, WGen::Y, a).iota_invariant);
  for (int b = 1; b < n; ++b) add_check(out, "w_generator_invariant", "psi" + std::to_string(b), w_generator(alg, WGen::Psi, b).iota_invariant);
  sort_cases(out);
  return out;
}

Element pi_auto(const Element& a) {
  const Algebra& alg = *a.algebra();
  require_zero(alg);
  Element p0 = alg.psi(0);
  return multiply(p0, a, p0);
}

WElement pi_auto(const WElement& a) { return certify_w(pi_auto(a.elem)); }

FixedPointSplit fixed_point_split(const Element& a) {
  const Algebra& alg = *a.algebra();
  require_zero(alg);
  Element plus = alg.zero(), minus = alg.zero();
  for (const auto& [m, c] : a.terms()) (r0_count(m.w) % 2 ? minus : plus).add_term(m, c);
  return {certify_w(plus), minus};
}

std::vector<CheckCase> involution_checks(const AlgebraPtr& algp, int samples, unsigned seed) {
  const Algebra& alg = *algp;
  require_zero(alg);
  std::mt19937_64 rng(seed);
  std::vector<CheckCase> out;
  Field f = alg.field();
  Scalar half = Scalar(f, 1) / Scalar(f, 2);
  auto pool = enumerate_monomials(alg, std::min(alg.rank() * alg.rank(), 5), 2);
  bool inv_i = true, inv_p = true, commute = true, sign = true, mult = true, split = true, minus_inv = true;
  std::string detail;
  for (int k = 0; k < samples; ++k) {
    Element a = sample_element(alg, pool, rng), b = sample_element(alg, pool, rng);
    inv_i = inv_i && alg.iota(alg.iota(a)) == a;
    inv_p = inv_p && pi_auto(pi_auto(a)) == a;
    commute = commute && alg.iota(pi_auto(a)) == pi_auto(alg.iota(a));
    mult = mult && alg.iota(alg.multiply(a, b)) == alg.multiply(alg.iota(a), alg.iota(b));
    auto [plus, minus] = fixed_point_split(a);
    Element ia = alg.iota(a);
    split = split && plus.iota_invariant && plus.elem == (a + ia) * half && minus == (a - ia) * half &&
            plus.elem + minus == a && alg.iota(minus) == -minus;
    minus_inv = minus_inv && certify_w(alg.multiply(minus, alg.psi(0))).iota_invariant;
  }
  // sign rule: psi0 -> -psi0 applied letter by letter
  for (const auto& m : pool) {
    Element r = alg.monomial(PBWMonomial{m.exps, SignedPerm(alg.rank()), alg.tuple_act(m.w, m.tuple)}, Scalar::one(f));
    for (int letter : alg.cword(m.w)) r = alg.multiply(r, letter == 0 ? -alg.psi(0) : alg.psi(letter));
    r = alg.multiply(r, alg.e(m.tuple));
    if (!(r == alg.iota(alg.monomial(m, Scalar::one(f))))) {
      sign = false;
      detail = alg.monomial_str(m);
      break;
    }
  }
  std::string who = std::to_string(samples) + " samples";
  add_check(out, "iota_involutive", who, inv_i);
  add_check(out, "pi_involutive", who, inv_p);
  add_check(out, "iota_pi_commute", who, commute);
  add_check(out, "iota_multiplicative", who, mult);
  add_check(out, "iota_parity_eq_sign_rule", std::to_string(pool.size()) + " monomials", sign, detail);
  add_check(out, "fixed_point_split", who, split);
  add_check(out, "minus_psi0_invariant", who, minus_inv);
  int n = alg.rank();
  for (int idx = 0; idx < alg.orbit().size(); ++idx) {
    Element lhs = pi_auto(alg.multiply(alg.y(1), alg.e(idx)));
    Element rhs = -alg.multiply(alg.y(1), alg.e(alg.gen_act(0, idx)));
    add_check(out, "pi_y1", alg.tuple_str(idx), lhs == rhs);
  }
  if (n >= 2) {
    WElement P = w_generator(algp, WGen::Psi0);
    add_check(out, "pi_Psi0_is_psi1", "-", pi_auto(P.elem) == alg.psi(1));
    add_check(out, "pi_psi1_is_Psi0", "-", pi_auto(alg.psi(1)) == P.elem);
  }
  for (int b = 2; b < n; ++b) add_check(out, "pi_fixes_psib", "psi" + std::to_string(b), pi_auto(alg.psi(b)) == alg.psi(b));
  return out;
}

std::vector<CheckCase> semidirect_check(const AlgebraPtr& algp, int samples, unsigned seed) {
  const Algebra& alg = *algp;
  require_zero(alg);
  std::mt19937_64 rng(seed);
  std::vector<CheckCase> out;
  Element p0 = alg.psi(0);
  // a = x0 (x) 1 + x1 (x) pi with x1 = minus * psi0
  auto parts = [&](const Element& a) {
    auto [plus, minus] = fixed_point_split(a);
    return std::array<Element, 2>{plus.elem, alg.multiply(minus, p0)};
  };
  auto psi0_pow = [&](const Element& x, int e) { return e ? alg.multiply(x, p0) : x; };
  auto pool = enumerate_monomials(alg, std::min(alg.rank() * alg.rank(), 5), 2);
  bool ok = true, inv = true;
  std::string detail;
  for (int k = 0; k < samples && ok; ++k) {
    Element a = sample_element(alg, pool, rng), b = sample_element(alg, pool, rng);
    auto xa = parts(a), xb = parts(b);
    inv = inv && certify_w(xa[0]).iota_invariant && certify_w(xa[1]).iota_invariant;
    std::array<Element, 2> prod{alg.zero(), alg.zero()};
    for (int e = 0; e < 2; ++e)
      for (int e2 = 0; e2 < 2; ++e2) {
        // (x (x) pi^e)(x' (x) pi^e') = (x psi0^e x' psi0^e) (x) pi^(e+e')
        Element twisted = e ? multiply(p0, xb[e2], p0) : xb[e2];
        prod[(e + e2) % 2] += alg.multiply(xa[e], twisted);
      }
    Element back = prod[0] + psi0_pow(prod[1], 1);
    if (!(back == alg.multiply(a, b))) ok = false, detail = a.str() + " ; " + b.str();
  }
  add_check(out, "semidirect_law", std::to_string(samples) + " pairs", ok, detail);
  add_check(out, "semidirect_parts_invariant", std::to_string(samples) + " pairs", inv);
  add_check(out, "semidirect_pi_square", "-", alg.multiply(p0, p0) == alg.one());
  return out;
}

bool C2Word::even() const {
  int s = 0;
  for (int e : eps) s += e;
  return s % 2 == 0;
}

namespace {

TensorElement iota_tensor(const TensorElement& x) {
  TensorElement r(x.factors());
  for (const auto& [key, c] : x.terms()) {
    int s = 0;
    for (const auto& m : key) s += r0_count(m.w);
    r.add_term(key, s % 2 ? -c : c);
  }
  return r;
}

TensorElement generator_tensor(const Rho& rho, int j, const Element& g) {
  std::vector<Element> parts;
  for (std::size_t k = 0; k < rho.factors.size(); ++k)
    parts.push_back(static_cast<int>(k) == j ? g : rho.factors[k]->one());
  return tensor_of(parts);
}

// per-factor pi according to eps
TensorElement pi_tensor(const C2Word& w, const TensorElement& x) {
  TensorElement r(x.factors());
  for (const auto& [key, c] : x.terms()) {
    std::vector<Element> parts;
    for (std::size_t j = 0; j < key.size(); ++j) {
      const Algebra& fac = *x.factors()[j];
      Element m = fac.monomial(key[j], Scalar::one(fac.field()));
      parts.push_back(w.eps[j] ? pi_auto(m) : m);
    }
    r = r + tensor_of(parts) * c;
  }
  return r;
}

}  // namespace

std::vector<CheckCase> decompose_D(const AlgebraPtr& alg, const Partition& part,
                                   const std::optional<std::vector<int>>& Lambda, int samples, unsigned seed) {
  require_zero(*alg);
  if (Lambda && part.d == 1)
    throw Error(ErrorCode::DEqualsOne, "the cyclotomic statement needs at least two components");
  std::vector<CheckCase> out;
  std::mt19937_64 rng(seed);
  Rho rho = make_rho(alg, part);
  const Algebra& big = *alg;
  int d = part.d;

  // rho o iota^tensor = iota o rho on generators
  for (int j = 0; j < d; ++j) {
    const Algebra& fac = *rho.factors[j];
    std::vector<std::pair<std::string, Element>> gens;
    for (int a = 1; a <= fac.rank(); ++a) gens.emplace_back("y" + std::to_string(a), fac.y(a));
    for (int b = 0; b < fac.rank(); ++b) gens.emplace_back("psi" + std::to_string(b), fac.psi(b));
    for (int idx = 0; idx < fac.orbit().size(); ++idx) gens.emplace_back("e" + fac.tuple_str(idx), fac.e(idx));
    for (const auto& [name, g] : gens) {
      TensorElement x = generator_tensor(rho, j, g);
      add_check(out, "rho_iota_commute[" + std::to_string(j + 1) + "]", name,
                big.iota(rho.expand(x)) == rho.expand(iota_tensor(x)));
    }
  }

  // fixed points of iota^tensor: parity of the total r0 count
  std::vector<std::vector<PBWMonomial>> pools;
  for (const auto& f : rho.factors) pools.push_back(sample_monomials(*f, samples, rng));
  bool parity = true, conj = true;
  std::vector<C2Word> words;
  for (int mask = 0; mask < (1 << d); ++mask) {
    C2Word w;
    for (int j = 0; j < d; ++j) w.eps.push_back((mask >> j) & 1);
    words.push_back(w);
  }
  for (int k = 0; k < samples; ++k) {
    TensorElement::Key key;
    int s = 0;
    for (int j = 0; j < d; ++j) {
      key.push_back(pools[j][k]);
      s += r0_count(pools[j][k].w);
    }
    TensorElement x(rho.factors);
    x.add_term(key, Scalar::one(big.field()));
    Element img = rho.expand(x);
    parity = parity && big.iota(img) == (s % 2 ? -img : img);
    if (k < 20) {
      const C2Word& w = words[k % words.size()];
      if (!w.even()) continue;
      Element P = rho.corner_unit();
      for (int j = 0; j < d; ++j)
        if (w.eps[j]) P = big.multiply(P, rho.image_psi(j, 0));
      conj = conj && rho.expand(pi_tensor(w, x)) == multiply(P, img, P);
    }
  }
  add_check(out, "tensor_fixed_points_parity", std::to_string(samples) + " samples", parity);
  add_check(out, "even_subgroup_acts_by_conjugation", "-", conj);
  for (const auto& w : words) {
    std::vector<Element> parts;
    for (int j = 0; j < d; ++j) parts.push_back(w.eps[j] ? rho.factors[j]->psi(0) : rho.factors[j]->one());
    TensorElement x = tensor_of(parts);
    std::string who;
    for (int e : w.eps) who += std::to_string(e);
    add_check(out, "c2_word_parity", who, (iota_tensor(x) == x) == w.even());
  }

  // xi-conjugation moves Lambda-tilde generators onto Lambda generators
  if (Lambda) {
    const Quiver& q = big.quiver();
    const auto& L = *Lambda;
    if (static_cast<int>(L.size()) != q.size()) throw Error(ErrorCode::SizeMismatch, "Lambda has wrong length");
    int n = big.rank();
    Scalar one = Scalar::one(big.field());
    const auto& corner = rho.ps.prof.fibers[rho.ps.corner];
    for (int i : corner)
      for (int j = 0; j < d; ++j) {
        int jp = (j + 1) % d;
        int b = rho.offsets[j] + 1, bp = rho.offsets[jp] + 1;
        std::vector<int> images(n);
        for (int k = 1; k <= n; ++k) images[k - 1] = (k == b || k == bp) ? -k : k;
        int ipp = big.tuple_act(SignedPerm::from_images(images), i);
        Element xi = big.multiply(rho.image_psi(j, 0), rho.image_psi(jp, 0));
        int v = big.vertex(i, b);
        int lt = std::min(L[v], L[q.theta(v)]);
        auto gen = [&](int k, int idx) { return big.monomial(PBWMonomial{Monomial::var(b - 1, k), SignedPerm(n), idx}, one); };
        Element lhs = multiply(xi, gen(lt, i), xi);
        Element rhs = gen(lt, ipp) * Scalar(big.field(), lt % 2 ? -1 : 1);
        std::string who = big.tuple_str(i) + ",j=" + std::to_string(j + 1);
        add_check(out, "xi_conjugation", who, lhs == rhs);
        // either a Lambda generator here, or the xi-conjugate of one at i''
        bool here = lt == L[v];
        bool there = lt == L[big.vertex(ipp, b)] && multiply(xi, gen(L[big.vertex(ipp, b)], ipp), xi) ==
                                                        gen(lt, i) * Scalar(big.field(), lt % 2 ? -1 : 1);
        add_check(out, "lambda_tilde_in_lambda_ideal", who, here || there, here ? "direct" : "via xi");
      }
  }
  sort_cases(out);
  return out;
}

}  // namespace qha
