#include "qha/relations.hpp"

#include <numeric>

#include "qha/error.hpp"

namespace qha {

RelationData relation_data(const Algebra& alg) {
  RelationData rd{alg.field(), &alg.quiver(), &alg.params(), &alg.orbit(), {}};
  rd.tuples.resize(alg.orbit().size());
  std::iota(rd.tuples.begin(), rd.tuples.end(), 0);
  return rd;
}

std::string degree_mismatch(const Algebra& alg, const Element& lhs, const Element& rhs) {
  Degree dl = alg.degree(lhs), dr = alg.degree(rhs);
  if (!dl.homogeneous) return "lhs not homogeneous";
  if (!dr.homogeneous) return "rhs not homogeneous";
  if (dl.value && dr.value && *dl.value != *dr.value)
    return "degrees differ: " + std::to_string(*dl.value) + " vs " + std::to_string(*dr.value);
  return {};
}

std::string OpContext::homogeneity(const TwistedOp& lhs, const TwistedOp& rhs) const {
  if (!degrees_) return {};
  return degree_mismatch(alg_, alg_.pbw_expand(lhs), alg_.pbw_expand(rhs));
}

std::string ElementContext::homogeneity(const Element& lhs, const Element& rhs) const {
  return degree_mismatch(alg_, lhs, rhs);
}

std::vector<RelationCase> verify_relations(const Algebra& alg, bool check_degrees) {
  std::vector<RelationCase> out;
  RelationData rd = relation_data(alg);
  OpContext ctx(alg, check_degrees);
  type_a_relations(rd, ctx, out);
  if (alg.mode() == Mode::B) type_b_relations(rd, ctx, out);
  return out;
}

}  // namespace qha

namespace qha {

std::vector<RelationCase> cyclo_identity_checks(const Algebra& alg, const std::vector<int>& Lambda) {
  if (!alg.zero_params()) throw Error(ErrorCode::ParamsNotZero, "cyclotomic identity needs lambda = gamma = 0");
  if (static_cast<int>(Lambda.size()) != alg.quiver().size())
    throw Error(ErrorCode::SizeMismatch, "Lambda has wrong length");
  std::vector<RelationCase> out;
  int n = alg.rank();
  Scalar one = Scalar::one(alg.field());
  Element p0 = alg.psi(0);
  for (int idx = 0; idx < alg.orbit().size(); ++idx) {
    int L = Lambda[alg.vertex(idx, 1)];
    Element g = alg.monomial(PBWMonomial{Monomial::var(0, L), SignedPerm(n), idx}, one);
    Element lhs = multiply(p0, g, p0);
    Element rhs = alg.monomial(PBWMonomial{Monomial::var(0, L), SignedPerm(n), alg.gen_act(0, idx)},
                               Scalar(alg.field(), L % 2 ? -1 : 1));
    bool ok = lhs == rhs;
    out.push_back(RelationCase{"psi0_cyclo_conjugate", alg.tuple_str(idx), "L=" + std::to_string(L), ok,
                               ok ? "" : "lhs != rhs"});
  }
  return out;
}

}  // namespace qha
