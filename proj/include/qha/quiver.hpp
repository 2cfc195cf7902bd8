#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qha/coxeter.hpp"
#include "qha/field.hpp"
#include "qha/poly.hpp"

namespace qha {

// Loop-free quiver on named vertices with an arrow-compatible involution.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices,
         const std::vector<std::pair<std::string, std::string>>& arrows,
         const std::vector<std::pair<std::string, std::string>>& involution);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_.at(v); }
  int index(const std::string& name) const;
  int theta(int v) const { return theta_.at(v); }
  int arrows(int i, int j) const { return arrows_.at(i).at(j); }  // |i->j|
  int dot(int i, int j) const { return arrows(i, j) + arrows(j, i); }
  int d(int i, int j) const { return i == j ? -2 : dot(i, j); }
  // False for a plain quiver given without an involution whose arrows are not
  // compatible with the identity; such quivers only support type A.
  bool has_involution() const { return involutive_; }

  // Full subquiver on the given vertices (kept in the given order).
  Quiver induced(const std::vector<int>& vertices) const;

 private:
  void validate() const;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> arrows_;
  std::vector<int> theta_;
  bool involutive_ = true;
};

// lambda in N^I, gamma in K^I.
struct Params {
  Field field;
  std::vector<int> lambda;
  std::vector<Scalar> gamma;

  static Params zero(Field f, const Quiver& q);
  bool is_zero() const;
  void validate(const Quiver& q) const;
  Params restrict_to(const std::vector<int>& vertices) const;
};

int d_vertex(const Quiver& q, const Params& p, int i);

// Bivariate polynomials use x1 = u, x2 = v.
PolyN q_poly(const Quiver& q, Field f, int i, int j);

// P-family with optional per-pair overrides, validated on construction.
class PFamily {
 public:
  PFamily() = default;
  PFamily(const Quiver& q, Field f, std::map<std::pair<int, int>, PolyN> overrides = {});
  PolyN operator()(int i, int j) const;
  // Symmetry and factorisation identities for every pair; empty string when all hold.
  std::string check() const;

 private:
  Quiver quiver_;
  Field field_;
  std::map<std::pair<int, int>, PolyN> overrides_;
};

PolyN p_poly_default(const Quiver& q, Field f, int i, int j);
PolyN alpha_poly(const Quiver& q, const Params& p, int i);  // univariate in x1

enum class Group { S, B, D };
char group_tag(Group g);
Group parse_group(const std::string& s);

using Tuple = std::vector<int>;  // vertex indices

Tuple act_tuple(const Quiver& q, const SignedPerm& w, const Tuple& t);
Tuple act_s0(const Quiver& q, const Tuple& t);  // (theta i2, theta i1, i3, ...)

// Finite orbit of tuples under S_n, B_n or D_n, stored sorted.
class Orbit {
 public:
  Orbit() = default;
  Orbit(Group g, int n, std::vector<Tuple> tuples);

  Group group() const { return group_; }
  int rank() const { return n_; }
  int size() const { return static_cast<int>(tuples_.size()); }
  const Tuple& tuple(int idx) const { return tuples_.at(idx); }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  int find(const Tuple& t) const;  // -1 if absent
  int index(const Tuple& t) const;  // throws OrbitMismatch if absent
  bool contains(const Tuple& t) const { return find(t) >= 0; }
  friend bool operator==(const Orbit& a, const Orbit& b) {
    return a.group_ == b.group_ && a.n_ == b.n_ && a.tuples_ == b.tuples_;
  }

 private:
  Group group_ = Group::B;
  int n_ = 0;
  std::vector<Tuple> tuples_;
  std::map<Tuple, int> index_;
};

Orbit make_orbit(const Quiver& q, const Tuple& seed, Group g);
std::string tuple_str(const Quiver& q, const Tuple& t);

// Vertex -> block in 0..d-1; blocks must be theta-stable with no arrows between them.
struct Partition {
  std::vector<int> block;
  int d = 1;
  static Partition trivial(const Quiver& q);
  void validate(const Quiver& q) const;
  std::vector<int> vertices_of(int j) const;
};

struct ComponentSplit {
  std::vector<int> sizes;             // n_j
  std::vector<Quiver> quivers;        // induced quivers Gamma^(j)
  std::vector<std::vector<int>> vertex_map;  // local index -> global index
  std::vector<Orbit> orbits;          // beta^(j), tuples in local indices
};

ComponentSplit orbit_components(const Quiver& q, const Orbit& beta, const Partition& part);

using Profile = std::vector<int>;  // entries 0..d-1

struct ProfileData {
  std::vector<Profile> profiles;       // sorted; profiles[0] is not necessarily t^beta
  Profile sorted;                      // t^beta
  std::vector<std::vector<int>> fibers;  // tuple indices per profile
  int index_of(const Profile& t) const;
};

Profile profile_of(const Partition& part, const Tuple& t);
ProfileData profiles(const Orbit& beta, const Partition& part);

// ---------------------------------------------------------------- Hecke-type data

enum class HeckeMode { B, D };

struct HeckeQuiver {
  Quiver quiver;
  Params params;
  std::vector<Scalar> values;  // scalar of each vertex
};

HeckeQuiver build_hecke_quiver(Field f, const Scalar& q, const std::vector<Scalar>& xs,
                               const Scalar& p, HeckeMode mode);

struct MoritaCase {
  char label = 'd';
  int sign = 1;       // x = sign * ...
  long exponent = 0;  // power of q
  int p_power = 0;    // +-1 in case c
  bool b_equivalent_to_a = false;  // ord(q^2) odd
  bool c_reduces = false;          // p^2 in q^{2Z} (type B only)
  std::string str() const;
};

MoritaCase classify_morita_B(const Scalar& x, const Scalar& q, const Scalar& p);
MoritaCase classify_morita_D(const Scalar& x, const Scalar& q);

// Vertex bijection respecting arrows and theta, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Quiver& a, const Quiver& b);

}  // namespace qha
