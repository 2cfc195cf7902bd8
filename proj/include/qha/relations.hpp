#pragma once

#include <string>
#include <vector>

#include "qha/algebra.hpp"

namespace qha {

struct RelationCase {
  std::string relation;
  std::string tuple;
  std::string branch;
  bool pass = false;
  std::string detail;
};

// Vertex data the relations are stated over; tuples to check are orbit indices.
struct RelationData {
  Field field;
  const Quiver* quiver;
  const Params* params;
  const Orbit* orbit;
  std::vector<int> tuples;
};

RelationData relation_data(const Algebra& alg);

// Context over which relations are evaluated. It supplies the generators'
// images and the ring operations:
//   one(), zero(), e(idx), y(a), psi(b), poly_e(f, idx), mul, add, sub, scale,
//   equal, homogeneity(lhs, rhs) -> "" when fine.

namespace rel_detail {

inline PolyN xvar(Field f, int n, int a) { return PolyN::var(f, n, a - 1); }

// Q_{ij}(L1, L2) for linear forms in x_1..x_n.
inline PolyN q_at(const RelationData& rd, int i, int j, const PolyN& l1, const PolyN& l2) {
  return q_poly(*rd.quiver, rd.field, i, j).substitute({l1, l2});
}

template <class Ctx, class V>
void record(std::vector<RelationCase>& out, Ctx& ctx, const RelationData& rd, const std::string& name, int idx,
            const std::string& branch, const V& lhs, const V& rhs) {
  RelationCase c{name, idx < 0 ? "-" : tuple_str(*rd.quiver, rd.orbit->tuple(idx)), branch, false, {}};
  c.pass = ctx.equal(lhs, rhs);
  if (!c.pass)
    c.detail = "lhs != rhs";
  else
    c.detail = ctx.homogeneity(lhs, rhs);
  if (!c.detail.empty()) c.pass = false;
  out.push_back(std::move(c));
}

inline int tuple_gen(const RelationData& rd, int a, int idx) {
  int n = rd.orbit->rank();
  return rd.orbit->index(act_tuple(*rd.quiver, SignedPerm::generator(n, a), rd.orbit->tuple(idx)));
}

}  // namespace rel_detail

template <class Ctx>
void type_a_relations(const RelationData& rd, Ctx& ctx, std::vector<RelationCase>& out) {
  using namespace rel_detail;
  const Quiver& q = *rd.quiver;
  int n = rd.orbit->rank();
  Field f = rd.field;
  {
    auto sum = ctx.zero();
    for (int j = 0; j < rd.orbit->size(); ++j) sum = ctx.add(sum, ctx.e(j));
    record(out, ctx, rd, "idempotents_sum", -1, "", sum, ctx.one());
  }
  for (int idx : rd.tuples) {
    const Tuple& t = rd.orbit->tuple(idx);
    auto e = ctx.e(idx);
    for (int j = 0; j < rd.orbit->size(); ++j)
      record(out, ctx, rd, "idempotents_orth[" + tuple_str(q, rd.orbit->tuple(j)) + "]", idx,
             j == idx ? "equal" : "distinct", ctx.mul(ctx.e(j), e), j == idx ? e : ctx.zero());
    for (int a = 1; a <= n; ++a) {
      record(out, ctx, rd, "y_e_commute[a=" + std::to_string(a) + "]", idx, "", ctx.mul(ctx.y(a), e),
             ctx.mul(e, ctx.y(a)));
      for (int b = a + 1; b <= n; ++b)
        record(out, ctx, rd, "y_commute[a=" + std::to_string(a) + ",b=" + std::to_string(b) + "]", idx, "",
               ctx.mul(ctx.y(a), ctx.mul(ctx.y(b), e)), ctx.mul(ctx.y(b), ctx.mul(ctx.y(a), e)));
    }
    for (int a = 1; a < n; ++a) {
      std::string as = std::to_string(a);
      int ra = tuple_gen(rd, a, idx);
      record(out, ctx, rd, "psia_e(i)[a=" + as + "]", idx, "", ctx.mul(ctx.psi(a), e),
             ctx.mul(ctx.e(ra), ctx.psi(a)));
      bool same = t[a - 1] == t[a];
      for (int b = 1; b <= n; ++b) {
        int rb = b == a ? a + 1 : b == a + 1 ? a : b;
        auto lhs = ctx.sub(ctx.mul(ctx.psi(a), ctx.mul(ctx.y(b), e)), ctx.mul(ctx.y(rb), ctx.mul(ctx.psi(a), e)));
        auto rhs = ctx.zero();
        std::string branch = "zero";
        if (same && b == a) rhs = ctx.scale(e, Scalar(f, -1)), branch = "b=a";
        if (same && b == a + 1) rhs = e, branch = "b=a+1";
        record(out, ctx, rd, "psib_yj[a=" + as + ",b=" + std::to_string(b) + "]", idx, branch, lhs, rhs);
      }
      for (int b = a + 2; b < n; ++b)
        record(out, ctx, rd, "psia_psib[a=" + as + ",b=" + std::to_string(b) + "]", idx, "",
               ctx.mul(ctx.psi(a), ctx.mul(ctx.psi(b), e)), ctx.mul(ctx.psi(b), ctx.mul(ctx.psi(a), e)));
      PolyN qa = q_at(rd, t[a - 1], t[a], xvar(f, n, a), xvar(f, n, a + 1));
      record(out, ctx, rd, "psia2[a=" + as + "]", idx, same ? "equal" : "distinct",
             ctx.mul(ctx.psi(a), ctx.mul(ctx.psi(a), e)), ctx.poly_e(qa, idx));
    }
    for (int b = 1; b + 2 <= n; ++b) {
      auto p = [&](int k) { return ctx.psi(k); };
      auto lhs = ctx.sub(ctx.mul(p(b + 1), ctx.mul(p(b), ctx.mul(p(b + 1), e))),
                         ctx.mul(p(b), ctx.mul(p(b + 1), ctx.mul(p(b), e))));
      auto rhs = ctx.zero();
      std::string branch = "zero";
      if (t[b - 1] == t[b + 1]) {
        PolyN num = q_at(rd, t[b - 1], t[b], xvar(f, n, b), xvar(f, n, b + 1)) -
                    q_at(rd, t[b - 1], t[b], xvar(f, n, b + 2), xvar(f, n, b + 1));
        rhs = ctx.poly_e(num.exact_divide(xvar(f, n, b) - xvar(f, n, b + 2)), idx);
        branch = "i_b=i_b+2";
      }
      record(out, ctx, rd, "psi_tresse3[b=" + std::to_string(b) + "]", idx, branch, lhs, rhs);
    }
  }
}

template <class Ctx>
void type_b_relations(const RelationData& rd, Ctx& ctx, std::vector<RelationCase>& out) {
  using namespace rel_detail;
  const Quiver& q = *rd.quiver;
  const Params& pr = *rd.params;
  int n = rd.orbit->rank();
  Field f = rd.field;
  if (n == 0) return;
  for (int idx : rd.tuples) {
    const Tuple& t = rd.orbit->tuple(idx);
    auto e = ctx.e(idx);
    auto psi0 = ctx.psi(0);
    int i1 = t[0];
    const Scalar& g1 = pr.gamma[i1];
    record(out, ctx, rd, "psi0_e(i)", idx, "", ctx.mul(psi0, e), ctx.mul(ctx.e(tuple_gen(rd, 0, idx)), psi0));
    for (int b = 2; b < n; ++b)
      record(out, ctx, rd, "psi0_psib[b=" + std::to_string(b) + "]", idx, "",
             ctx.mul(psi0, ctx.mul(ctx.psi(b), e)), ctx.mul(ctx.psi(b), ctx.mul(psi0, e)));
    record(out, ctx, rd, "psi0_y1", idx, g1.is_zero() ? "gamma=0" : "gamma!=0",
           ctx.add(ctx.mul(psi0, ctx.mul(ctx.y(1), e)), ctx.mul(ctx.y(1), ctx.mul(psi0, e))),
           ctx.scale(e, Scalar(f, 2) * g1));
    for (int a = 2; a <= n; ++a)
      record(out, ctx, rd, "psi0_yj[a=" + std::to_string(a) + "]", idx, "",
             ctx.mul(psi0, ctx.mul(ctx.y(a), e)), ctx.mul(ctx.y(a), ctx.mul(psi0, e)));
    {
      auto rhs = ctx.zero();
      if (g1.is_zero()) {
        int lt = pr.lambda[q.theta(i1)];
        PolyN y1d = xvar(f, n, 1).pow(d_vertex(q, pr, i1)) * Scalar(f, lt % 2 ? -1 : 1);
        rhs = ctx.poly_e(y1d, idx);
      }
      record(out, ctx, rd, "psi0square", idx, g1.is_zero() ? "gamma=0" : "gamma!=0", ctx.mul(psi0, ctx.mul(psi0, e)),
             rhs);
    }
    if (n >= 2) {
      int i2 = t[1];
      const Scalar& g2 = pr.gamma[i2];
      auto p1 = ctx.psi(1);
      auto lhs = ctx.sub(ctx.mul(psi0, ctx.mul(p1, ctx.mul(psi0, ctx.mul(p1, e)))),
                         ctx.mul(p1, ctx.mul(psi0, ctx.mul(p1, ctx.mul(psi0, e)))));
      auto rhs = ctx.zero();
      std::string branch = std::string("g1") + (g1.is_zero() ? "=0" : "!=0") + ",g2" + (g2.is_zero() ? "=0" : "!=0");
      PolyN y1 = xvar(f, n, 1), y2 = xvar(f, n, 2);
      if (g1.is_zero() && q.theta(i1) == i2) {
        int d = d_vertex(q, pr, i1);
        int lt = pr.lambda[q.theta(i1)];
        PolyN num = (-y1).pow(d) - y2.pow(d);
        PolyN c = num.exact_divide(y1 + y2) * Scalar(f, lt % 2 ? -1 : 1);
        rhs = ctx.mul(ctx.poly_e(c, tuple_gen(rd, 1, idx)), ctx.mul(p1, e));
        branch += ",theta(i1)=i2";
      } else if (!g2.is_zero()) {
        PolyN diff = q_at(rd, i2, i1, y1, -y2) - q_at(rd, i2, i1, y1, y2);
        // when gamma_{i1} = 0 the y1 in (y1 psi0 - gamma) cancels against the denominator
        if (g1.is_zero()) {
          PolyN c = diff.exact_divide(y2) * g2;
          rhs = ctx.mul(ctx.poly_e(c, tuple_gen(rd, 0, idx)), ctx.mul(psi0, e));
        } else {
          PolyN c = diff.exact_divide(y1 * y2) * g2;
          rhs = ctx.sub(ctx.mul(ctx.poly_e(c * y1, tuple_gen(rd, 0, idx)), ctx.mul(psi0, e)),
                        ctx.poly_e(c * g1, idx));
        }
      }
      record(out, ctx, rd, "braid4", idx, branch, lhs, rhs);
    }
  }
}

// Relations of the type D algebra W_delta; ctx.Psi0() supplies the image of Psi_0.
template <class Ctx>
void type_d_relations(const RelationData& rd, Ctx& ctx, std::vector<RelationCase>& out) {
  using namespace rel_detail;
  const Quiver& q = *rd.quiver;
  int n = rd.orbit->rank();
  Field f = rd.field;
  if (n < 2) return;
  auto P0 = ctx.Psi0();
  for (int idx : rd.tuples) {
    const Tuple& t = rd.orbit->tuple(idx);
    auto e = ctx.e(idx);
    int s0i = rd.orbit->index(act_s0(q, t));
    int ti1 = q.theta(t[0]);
    record(out, ctx, rd, "psi0_e(i)D", idx, "", ctx.mul(P0, e), ctx.mul(ctx.e(s0i), P0));
    for (int b = 1; b < n; ++b) {
      if (b == 2) continue;
      record(out, ctx, rd, "psi0_psibD[b=" + std::to_string(b) + "]", idx, "", ctx.mul(P0, ctx.mul(ctx.psi(b), e)),
             ctx.mul(ctx.psi(b), ctx.mul(P0, e)));
    }
    bool adj = ti1 == t[1];
    for (int a = 1; a <= 2; ++a) {
      int ra = a == 1 ? 2 : 1;
      record(out, ctx, rd, "psi0_y1D[a=" + std::to_string(a) + "]", idx, adj ? "theta(i1)=i2" : "zero",
             ctx.add(ctx.mul(P0, ctx.mul(ctx.y(a), e)), ctx.mul(ctx.y(ra), ctx.mul(P0, e))), adj ? e : ctx.zero());
    }
    for (int a = 3; a <= n; ++a)
      record(out, ctx, rd, "psi0_yjD[a=" + std::to_string(a) + "]", idx, "", ctx.mul(P0, ctx.mul(ctx.y(a), e)),
             ctx.mul(ctx.y(a), ctx.mul(P0, e)));
    PolyN y1 = xvar(f, n, 1), y2 = xvar(f, n, 2);
    PolyN qsq = q_at(rd, ti1, t[1], -y1, y2);
    record(out, ctx, rd, "psi0squareD", idx, qsq.is_zero() ? "zero" : "nonzero", ctx.mul(P0, ctx.mul(P0, e)),
           ctx.poly_e(qsq, idx));
    if (n >= 3) {
      auto p2 = ctx.psi(2);
      auto lhs = ctx.sub(ctx.mul(P0, ctx.mul(p2, ctx.mul(P0, e))), ctx.mul(p2, ctx.mul(P0, ctx.mul(p2, e))));
      auto rhs = ctx.zero();
      std::string branch = "zero";
      if (ti1 == t[2]) {
        PolyN y3 = xvar(f, n, 3);
        PolyN num = q_at(rd, ti1, t[1], -y1, y2) - q_at(rd, ti1, t[1], y3, y2);
        rhs = ctx.poly_e(num.exact_divide(y1 + y3), idx);
        branch = "theta(i1)=i3";
      }
      record(out, ctx, rd, "braid3D", idx, branch, lhs, rhs);
    }
  }
}

// Operator context: evaluates relations as twisted-operator identities.
class OpContext {
 public:
  using Value = TwistedOp;
  explicit OpContext(const Algebra& alg, bool check_degrees = true) : alg_(alg), degrees_(check_degrees) {}
  TwistedOp one() const { return TwistedOp::identity(alg_.space()); }
  TwistedOp zero() const { return TwistedOp(alg_.space()); }
  TwistedOp e(int idx) const { return alg_.e_op(idx); }
  TwistedOp y(int a) const { return alg_.y_op(a); }
  TwistedOp psi(int b) const { return alg_.psi_op(b); }
  TwistedOp Psi0() const { return op_compose(psi(0), op_compose(psi(1), psi(0))); }
  TwistedOp poly_e(const PolyN& f, int idx) const { return e(idx).left_multiply(RatFunc(f)); }
  TwistedOp mul(const TwistedOp& a, const TwistedOp& b) const { return op_compose(a, b); }
  TwistedOp add(const TwistedOp& a, const TwistedOp& b) const { return a + b; }
  TwistedOp sub(const TwistedOp& a, const TwistedOp& b) const { return a - b; }
  TwistedOp scale(const TwistedOp& a, const Scalar& c) const { return a * c; }
  bool equal(const TwistedOp& a, const TwistedOp& b) const { return a == b; }
  std::string homogeneity(const TwistedOp& lhs, const TwistedOp& rhs) const;

 private:
  const Algebra& alg_;
  bool degrees_;
};

// Element context: relations checked in the algebra through multiply.
class ElementContext {
 public:
  using Value = Element;
  explicit ElementContext(const Algebra& alg) : alg_(alg) {}
  Element one() const { return alg_.one(); }
  Element zero() const { return alg_.zero(); }
  Element e(int idx) const { return alg_.e(idx); }
  Element y(int a) const { return alg_.y(a); }
  Element psi(int b) const { return alg_.psi(b); }
  Element Psi0() const { return alg_.multiply(psi(0), alg_.multiply(psi(1), psi(0))); }
  Element poly_e(const PolyN& f, int idx) const { return alg_.poly_e(f, idx); }
  Element mul(const Element& a, const Element& b) const { return alg_.multiply(a, b); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element scale(const Element& a, const Scalar& c) const { return a * c; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string homogeneity(const Element& lhs, const Element& rhs) const;

 private:
  const Algebra& alg_;
};

std::string degree_mismatch(const Algebra& alg, const Element& lhs, const Element& rhs);

// psi0 y1^L e(i) psi0 = (-y1)^L e(r0.i) with L = Lambda at i_1, for every tuple.
std::vector<RelationCase> cyclo_identity_checks(const Algebra& alg, const std::vector<int>& Lambda);

// Full defining-relation suite of the algebra, as operator identities.
std::vector<RelationCase> verify_relations(const Algebra& alg, bool check_degrees = true);

}  // namespace qha
