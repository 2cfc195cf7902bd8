#include "qha/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qha {

Quiver::Quiver(std::vector<std::string> vertices,
               const std::vector<std::pair<std::string, std::string>>& arrows,
               const std::vector<std::pair<std::string, std::string>>& involution)
    : names_(std::move(vertices)) {
  int n = size();
  for (int v = 0; v < n; ++v)
    if (!index_.emplace(names_[v], v).second)
      throw Error(ErrorCode::InvalidQuiver, "duplicate vertex '" + names_[v] + "'");
  arrows_.assign(n, std::vector<int>(n, 0));
  for (const auto& [s, t] : arrows) ++arrows_[index(s)][index(t)];
  theta_.resize(n);
  for (int v = 0; v < n; ++v) theta_[v] = v;
  for (const auto& [a, b] : involution) {
    int i = index(a), j = index(b);
    theta_[i] = j;
    theta_[j] = i;
  }
  if (involution.empty()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (arrows_[i][j] != arrows_[j][i]) involutive_ = false;
  }
  validate();
}

int Quiver::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "'" + name + "'");
  return it->second;
}

void Quiver::validate() const {
  int n = size();
  for (int i = 0; i < n; ++i) {
    if (theta_[theta_[i]] != i) throw Error(ErrorCode::InvalidQuiver, "theta is not an involution");
    if (arrows_[i][i]) throw Error(ErrorCode::InvalidQuiver, "loop at '" + names_[i] + "'");
  }
  if (!involutive_) return;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (arrows_[i][j] != arrows_[theta_[j]][theta_[i]])
        throw Error(ErrorCode::InvalidQuiver,
                    "arrows " + names_[i] + "->" + names_[j] + " not compatible with theta");
}

Quiver Quiver::induced(const std::vector<int>& vertices) const {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> arr, inv;
  std::set<int> keep(vertices.begin(), vertices.end());
  for (int v : vertices) {
    names.push_back(names_[v]);
    if (!keep.count(theta_[v])) throw Error(ErrorCode::NotComponentStable, "vertex set not theta-stable");
    if (v < theta_[v]) inv.push_back({names_[v], names_[theta_[v]]});
  }
  for (int a : vertices)
    for (int b : vertices)
      for (int k = 0; k < arrows_[a][b]; ++k) arr.push_back({names_[a], names_[b]});
  Quiver out(std::move(names), arr, inv);
  if (!involutive_) out.involutive_ = false;
  return out;
}

// ---------------------------------------------------------------- params

Params Params::zero(Field f, const Quiver& q) {
  return {f, std::vector<int>(q.size(), 0), std::vector<Scalar>(q.size(), Scalar::zero(f))};
}

bool Params::is_zero() const {
  return std::all_of(lambda.begin(), lambda.end(), [](int l) { return l == 0; }) &&
         std::all_of(gamma.begin(), gamma.end(), [](const Scalar& g) { return g.is_zero(); });
}

void Params::validate(const Quiver& q) const {
  int n = q.size();
  if (static_cast<int>(lambda.size()) != n || static_cast<int>(gamma.size()) != n)
    throw Error(ErrorCode::InvalidParams, "parameter vectors do not match the vertex count");
  for (int i = 0; i < n; ++i) {
    if (lambda[i] < 0) throw Error(ErrorCode::InvalidParams, "negative lambda");
    if (gamma[i].field() != field) throw Error(ErrorCode::BackendMismatch, "gamma outside the ground field");
    int t = q.theta(i);
    if (!(gamma[i] == gamma[t])) throw Error(ErrorCode::InvalidParams, "gamma not theta-invariant at " + q.name(i));
    if (t != i && !gamma[i].is_zero())
      throw Error(ErrorCode::InvalidParams, "gamma nonzero at non-fixed vertex " + q.name(i));
    if (t == i && gamma[i].is_zero() && lambda[i] + lambda[t] != 0)
      throw Error(ErrorCode::InvalidParams, "gamma = 0 at fixed vertex " + q.name(i) + " with d != 0");
  }
}

Params Params::restrict_to(const std::vector<int>& vertices) const {
  Params p{field, {}, {}};
  for (int v : vertices) {
    p.lambda.push_back(lambda.at(v));
    p.gamma.push_back(gamma.at(v));
  }
  return p;
}

int d_vertex(const Quiver& q, const Params& p, int i) {
  return p.gamma[i].is_zero() ? p.lambda[i] + p.lambda[q.theta(i)] : -2;
}

// ---------------------------------------------------------------- Q, P, alpha

namespace {

PolyN u_minus_v(Field f) { return PolyN::var(f, 2, 0) - PolyN::var(f, 2, 1); }

PolyN swap_uv(const PolyN& p) {
  return p.substitute({PolyN::var(p.field(), 2, 1), PolyN::var(p.field(), 2, 0)});
}

PolyN neg_swap_uv(const PolyN& p) {
  return p.substitute({-PolyN::var(p.field(), 2, 1), -PolyN::var(p.field(), 2, 0)});
}

}  // namespace

PolyN q_poly(const Quiver& q, Field f, int i, int j) {
  if (i < 0 || j < 0 || i >= q.size() || j >= q.size()) throw Error(ErrorCode::UnknownVertex, "index");
  if (i == j) return PolyN(f, 2);
  PolyN r = u_minus_v(f).pow(q.dot(i, j));
  return q.arrows(i, j) % 2 ? -r : r;
}

PolyN p_poly_default(const Quiver& q, Field f, int i, int j) {
  if (i < 0 || j < 0 || i >= q.size() || j >= q.size()) throw Error(ErrorCode::UnknownVertex, "index");
  if (i == j) return PolyN(f, 2);
  return u_minus_v(f).pow(q.arrows(j, i));
}

PFamily::PFamily(const Quiver& q, Field f, std::map<std::pair<int, int>, PolyN> overrides)
    : quiver_(q), field_(f), overrides_(std::move(overrides)) {
  if (overrides_.empty()) return;
  std::string err = check();
  if (!err.empty()) throw Error(ErrorCode::InvalidPFamily, err);
}

PolyN PFamily::operator()(int i, int j) const {
  auto it = overrides_.find({i, j});
  if (it != overrides_.end()) return it->second;
  return p_poly_default(quiver_, field_, i, j);
}

std::string PFamily::check() const {
  const Quiver& q = quiver_;
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) {
      PolyN pij = (*this)(i, j);
      std::string at = " at (" + q.name(i) + "," + q.name(j) + ")";
      if (i == j && !pij.is_zero()) return "P_ii != 0" + at;
      if (!(neg_swap_uv(pij) == pij)) return "P(u,v) != P(-v,-u)" + at;
      if (!(pij == (*this)(q.theta(j), q.theta(i)))) return "P_ij != P_theta(j)theta(i)" + at;
      if (!(pij * swap_uv((*this)(j, i)) == q_poly(q, field_, i, j))) return "P_ij(u,v)P_ji(v,u) != Q_ij" + at;
    }
  return {};
}

PolyN alpha_poly(const Quiver& q, const Params& p, int i) {
  if (!p.gamma[i].is_zero()) return PolyN(p.field, 1);
  return PolyN::monomial(p.field, 1, Monomial::var(0, p.lambda[q.theta(i)]), Scalar::one(p.field));
}

// ---------------------------------------------------------------- orbits

char group_tag(Group g) { return g == Group::S ? 'S' : g == Group::B ? 'B' : 'D'; }

Group parse_group(const std::string& s) {
  if (s == "S" || s == "A") return Group::S;
  if (s == "B") return Group::B;
  if (s == "D") return Group::D;
  throw Error(ErrorCode::ConfigError, "unknown group '" + s + "'");
}

Tuple act_tuple(const Quiver& q, const SignedPerm& w, const Tuple& t) {
  int n = w.rank();
  if (static_cast<int>(t.size()) != n) throw Error(ErrorCode::SizeMismatch, "tuple length");
  Tuple r(n);
  for (int k = 1; k <= n; ++k) {
    int m = w(k);
    r[std::abs(m) - 1] = m < 0 ? q.theta(t[k - 1]) : t[k - 1];
  }
  return r;
}

Tuple act_s0(const Quiver& q, const Tuple& t) {
  Tuple r = t;
  r[0] = q.theta(t[1]);
  r[1] = q.theta(t[0]);
  return r;
}

Orbit::Orbit(Group g, int n, std::vector<Tuple> tuples) : group_(g), n_(n), tuples_(std::move(tuples)) {
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  for (int i = 0; i < size(); ++i) {
    if (static_cast<int>(tuples_[i].size()) != n) throw Error(ErrorCode::SizeMismatch, "tuple length");
    index_[tuples_[i]] = i;
  }
}

int Orbit::find(const Tuple& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? -1 : it->second;
}

int Orbit::index(const Tuple& t) const {
  int i = find(t);
  if (i < 0) throw Error(ErrorCode::OrbitMismatch, "tuple outside the orbit");
  return i;
}

Orbit make_orbit(const Quiver& q, const Tuple& seed, Group g) {
  int n = static_cast<int>(seed.size());
  for (int v : seed)
    if (v < 0 || v >= q.size()) throw Error(ErrorCode::UnknownVertex, "seed entry");
  if (g != Group::S && !q.has_involution())
    throw Error(ErrorCode::InvalidQuiver, "signed orbits need an arrow-compatible involution");
  std::set<Tuple> seen{seed};
  std::vector<Tuple> todo{seed};
  std::vector<std::function<Tuple(const Tuple&)>> gens;
  for (int a = 1; a < n; ++a)
    gens.push_back([a](const Tuple& t) {
      Tuple r = t;
      std::swap(r[a - 1], r[a]);
      return r;
    });
  if (g == Group::B && n >= 1)
    gens.push_back([&q](const Tuple& t) {
      Tuple r = t;
      r[0] = q.theta(t[0]);
      return r;
    });
  if (g == Group::D && n >= 2) gens.push_back([&q](const Tuple& t) { return act_s0(q, t); });
  while (!todo.empty()) {
    Tuple t = std::move(todo.back());
    todo.pop_back();
    for (auto& gen : gens) {
      Tuple r = gen(t);
      if (seen.insert(r).second) todo.push_back(std::move(r));
    }
  }
  return Orbit(g, n, {seen.begin(), seen.end()});
}

std::string tuple_str(const Quiver& q, const Tuple& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + q.name(t[k]);
  return s + ")";
}

// ---------------------------------------------------------------- partitions

Partition Partition::trivial(const Quiver& q) { return {std::vector<int>(q.size(), 0), 1}; }

void Partition::validate(const Quiver& q) const {
  if (static_cast<int>(block.size()) != q.size()) throw Error(ErrorCode::NotComponentStable, "partition size");
  for (int v = 0; v < q.size(); ++v) {
    if (block[v] < 0 || block[v] >= d) throw Error(ErrorCode::NotComponentStable, "block index");
    if (block[q.theta(v)] != block[v])
      throw Error(ErrorCode::NotComponentStable, "theta crosses blocks at " + q.name(v));
    for (int w = 0; w < q.size(); ++w)
      if (block[w] != block[v] && q.arrows(v, w))
        throw Error(ErrorCode::NotComponentStable, "arrow " + q.name(v) + "->" + q.name(w) + " crosses blocks");
  }
}

std::vector<int> Partition::vertices_of(int j) const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(block.size()); ++v)
    if (block[v] == j) out.push_back(v);
  return out;
}

ComponentSplit orbit_components(const Quiver& q, const Orbit& beta, const Partition& part) {
  part.validate(q);
  int d = part.d, n = beta.rank();
  ComponentSplit out;
  std::vector<int> local(q.size(), -1);
  for (int j = 0; j < d; ++j) {
    out.vertex_map.push_back(part.vertices_of(j));
    for (int k = 0; k < static_cast<int>(out.vertex_map[j].size()); ++k) local[out.vertex_map[j][k]] = k;
    out.quivers.push_back(q.induced(out.vertex_map[j]));
  }
  std::vector<std::set<Tuple>> parts(d);
  for (int idx = 0; idx < beta.size(); ++idx) {
    const Tuple& t = beta.tuple(idx);
    std::vector<Tuple> sub(d);
    for (int v : t) sub[part.block[v]].push_back(local[v]);
    std::vector<int> sizes;
    for (auto& s : sub) sizes.push_back(static_cast<int>(s.size()));
    if (idx == 0)
      out.sizes = sizes;
    else if (sizes != out.sizes)
      throw Error(ErrorCode::NotFullOrbit, "component counts vary over the orbit");
    for (int j = 0; j < d; ++j) parts[j].insert(sub[j]);
  }
  if (beta.size() == 0) out.sizes.assign(d, 0);
  if (n == 0) parts.assign(d, {Tuple{}});
  Group g = beta.group();
  Tuple concat;
  for (int j = 0; j < d; ++j) {
    Orbit o(g, out.sizes[j], {parts[j].begin(), parts[j].end()});
    Orbit closure = make_orbit(out.quivers[j], o.tuple(0), g);
    if (!(closure == o)) throw Error(ErrorCode::NotFullOrbit, "component set is not a single orbit");
    for (int v : o.tuple(0)) concat.push_back(out.vertex_map[j][v]);
    out.orbits.push_back(std::move(o));
  }
  if (!(make_orbit(q, concat, beta.group()) == beta))
    throw Error(ErrorCode::NotFullOrbit, "component orbits do not rebuild the orbit");
  return out;
}

Profile profile_of(const Partition& part, const Tuple& t) {
  Profile p;
  for (int v : t) p.push_back(part.block[v]);
  return p;
}

int ProfileData::index_of(const Profile& t) const {
  auto it = std::lower_bound(profiles.begin(), profiles.end(), t);
  if (it == profiles.end() || *it != t) return -1;
  return static_cast<int>(it - profiles.begin());
}

ProfileData profiles(const Orbit& beta, const Partition& part) {
  ProfileData out;
  if (beta.size() == 0) return out;
  out.sorted = profile_of(part, beta.tuple(0));
  std::sort(out.sorted.begin(), out.sorted.end());
  Profile p = out.sorted;
  do out.profiles.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  out.fibers.assign(out.profiles.size(), {});
  for (int idx = 0; idx < beta.size(); ++idx) {
    int k = out.index_of(profile_of(part, beta.tuple(idx)));
    if (k < 0) throw Error(ErrorCode::NotFullOrbit, "profile with different component counts");
    out.fibers[k].push_back(idx);
  }
  return out;
}

// ---------------------------------------------------------------- Hecke-type quivers

namespace {

void require_prime(const Scalar& s) {
  if (s.field().is_rational()) throw Error(ErrorCode::NotFiniteField, "Hecke-type data needs a prime field");
}

bool in_cyclic(const Scalar& x, const Scalar& g) {
  if (x.is_zero()) return false;
  // the subgroup of order m in a cyclic group is the set of m-th roots of unity
  return x.pow(static_cast<long>(mult_order(g))).is_one();
}

// k in [0, ord g) with g^k = x, or -1.
long dlog(const Scalar& x, const Scalar& g) {
  Scalar cur = Scalar::one(g.field());
  long ord = static_cast<long>(mult_order(g));
  for (long k = 0; k < ord; ++k, cur *= g)
    if (cur == x) return k;
  return -1;
}

// x = sign * g^k
bool signed_member(const Scalar& x, const Scalar& g, int& sign, long& k) {
  if (in_cyclic(x, g)) {
    sign = 1;
    k = dlog(x, g);
    return true;
  }
  if (in_cyclic(-x, g)) {
    sign = -1;
    k = dlog(-x, g);
    return true;
  }
  return false;
}

}  // namespace

HeckeQuiver build_hecke_quiver(Field f, const Scalar& q, const std::vector<Scalar>& xs, const Scalar& p,
                               HeckeMode mode) {
  if (f.is_rational()) throw Error(ErrorCode::NotFiniteField, "Hecke-type quivers need a prime field");
  Scalar q2 = q * q;
  if (q.is_zero() || q2.is_one()) throw Error(ErrorCode::DegenerateQ, "q^2 = 1 or q = 0");
  if (mode == HeckeMode::B && (p.is_zero() || (p * p).is_one()))
    throw Error(ErrorCode::DegenerateParams, "p^2 = 1 or p = 0");
  std::vector<std::set<std::uint64_t>> sets;
  for (const Scalar& x : xs) {
    if (x.is_zero()) throw Error(ErrorCode::DegenerateParams, "x = 0");
    std::set<std::uint64_t> s;
    for (Scalar start : {x, x.inv()}) {
      Scalar v = start;
      do {
        s.insert(v.residue_value());
        v *= q2;
      } while (!(v == start));
    }
    for (const auto& other : sets)
      for (auto v : s)
        if (other.count(v)) throw Error(ErrorCode::OverlappingOrbitSets, "I_x sets intersect");
    sets.push_back(std::move(s));
  }
  std::set<std::uint64_t> all;
  for (const auto& s : sets) all.insert(s.begin(), s.end());
  HeckeQuiver out;
  std::vector<std::string> names;
  for (auto v : all) {
    names.push_back(std::to_string(v));
    out.values.push_back(Scalar::residue(f, v));
  }
  std::vector<std::pair<std::string, std::string>> arrows, inv;
  for (const Scalar& v : out.values) {
    Scalar w = v * q2, t = v.inv();
    arrows.push_back({std::to_string(v.residue_value()), std::to_string(w.residue_value())});
    if (v.residue_value() < t.residue_value())
      inv.push_back({std::to_string(v.residue_value()), std::to_string(t.residue_value())});
  }
  out.quiver = Quiver(names, arrows, inv);
  out.params = Params::zero(f, out.quiver);
  if (mode == HeckeMode::B) {
    for (int i = 0; i < out.quiver.size(); ++i) {
      const Scalar& v = out.values[i];
      if (v == p || v == -p) out.params.lambda[i] = 1;
      if (out.quiver.theta(i) == i) out.params.gamma[i] = Scalar::one(f);
    }
  }
  out.params.validate(out.quiver);
  return out;
}

std::string MoritaCase::str() const {
  std::string s(1, label);
  if (label == 'a' || label == 'b')
    s += " (x = " + std::string(sign < 0 ? "-" : "") + "q^" + std::to_string(exponent) + ")";
  if (label == 'c' && p_power != 0)
    s += " (x = " + std::string(sign < 0 ? "-" : "") + "p^" + std::to_string(p_power) + "*q^" +
         std::to_string(exponent) + ")";
  return s;
}

MoritaCase classify_morita_D(const Scalar& x, const Scalar& q) {
  require_prime(q);
  if (x.field() != q.field()) throw Error(ErrorCode::BackendMismatch, "classifier inputs");
  if (q.is_zero() || (q * q).is_one() || x.is_zero())
    throw Error(ErrorCode::DegenerateParams, "q^2 = 1 or zero input");
  Scalar q2 = q * q;
  MoritaCase c;
  c.b_equivalent_to_a = mult_order(q2) % 2 == 1;
  long k = 0;
  if (signed_member(x, q2, c.sign, k)) {
    c.label = 'a';
    c.exponent = 2 * k;
  } else if (signed_member(x / q, q2, c.sign, k)) {
    c.label = 'b';
    c.exponent = 2 * k + 1;
  } else {
    c.label = 'c';
    c.sign = 1;
  }
  return c;
}

MoritaCase classify_morita_B(const Scalar& x, const Scalar& q, const Scalar& p) {
  require_prime(q);
  if (p.field() != q.field()) throw Error(ErrorCode::BackendMismatch, "classifier inputs");
  if (p.is_zero() || (p * p).is_one()) throw Error(ErrorCode::DegenerateParams, "p^2 = 1 or p = 0");
  MoritaCase c = classify_morita_D(x, q);
  Scalar q2 = q * q;
  c.c_reduces = in_cyclic(p * p, q2);
  if (c.label != 'c') return c;
  long k = 0;
  if (signed_member(x / p, q2, c.sign, k)) {
    c.p_power = 1;
  } else if (signed_member(x * p, q2, c.sign, k)) {
    c.p_power = -1;
  } else {
    c.label = 'd';
    c.sign = 1;
    return c;
  }
  c.exponent = 2 * k;
  return c;
}

std::optional<std::vector<int>> find_isomorphism(const Quiver& a, const Quiver& b) {
  int n = a.size();
  if (n != b.size()) return std::nullopt;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n) return true;
    if (map[v] >= 0) return extend(v + 1);
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      int tv = a.theta(v), tw = b.theta(w);
      if ((tv == v) != (tw == w)) continue;
      if (tv != v && (map[tv] >= 0 || used[tw])) continue;
      map[v] = w;
      used[w] = true;
      if (tv != v) {
        map[tv] = tw;
        used[tw] = true;
      }
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        if (map[u] < 0) continue;
        for (int x : {v, tv})
          if (a.arrows(u, x) != b.arrows(map[u], map[x]) || a.arrows(x, u) != b.arrows(map[x], map[u])) ok = false;
      }
      if (ok && extend(v + 1)) return true;
      map[v] = -1;
      used[w] = false;
      if (tv != v) {
        map[tv] = -1;
        used[tw] = false;
      }
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace qha
