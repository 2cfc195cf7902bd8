#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qha/algebra.hpp"
#include "qha/relations.hpp"

namespace qha {

using CheckCase = RelationCase;  // {name, subject, branch, pass, detail}

void add_check(std::vector<CheckCase>& out, std::string name, std::string subject, bool pass,
               std::string detail = {});

// ---------------------------------------------------------------- generic idempotent systems

struct IdempotentSystem {
  AlgebraPtr alg;
  std::vector<std::string> labels;
  std::vector<Element> idempotents;
  std::vector<Element> phi;
  std::vector<Element> psi;
};

struct SystemReport {
  std::vector<CheckCase> cases;
  bool valid = true;                       // every structural identity holds
  std::vector<Element> classes;            // J: distinct epsilons
  std::vector<std::vector<int>> fibers;    // I_eps per class
  bool strong_disjoint = true;             // eps^ A eps'^ = 0, on the truncated spanning set
  std::string strong_disjoint_note;
};

SystemReport validate_system(const IdempotentSystem& s, int span_len = 3, int span_ydeg = 1);

// ---------------------------------------------------------------- profile systems

struct ProfileSystem {
  IdempotentSystem sys;
  Partition part;
  ProfileData prof;
  std::vector<SignedPerm> pi;  // pi_t
  std::vector<Word> words;     // canonical word of pi_t
  int corner = 0;              // index of t^beta
  Element corner_unit() const { return sys.idempotents[corner]; }
};

ProfileSystem profile_system(AlgebraPtr alg, const Partition& part);
// phit_psit, psit_et_phit, psi2_e(t), ya_phit, braid exactness, degree-0 certificates.
std::vector<CheckCase> profile_identities(const ProfileSystem& ps);

// theta_{t't}(h) = psi_{t'} h phi_t and its inverse eta_{t't}(m) = phi_{t'} m psi_t.
Element theta_map(const ProfileSystem& ps, int tp, int t, const Element& h);
Element eta_map(const ProfileSystem& ps, int tp, int t, const Element& m);

using MatrixElement = std::map<std::pair<int, int>, Element>;
MatrixElement theta_all(const ProfileSystem& ps, const Element& a);
Element eta_all(const ProfileSystem& ps, const MatrixElement& m);

// Corner spanning set y^a psi_w e(i) with i in fiber t and w.i in fiber t'.
std::vector<Element> corner_monomials(const ProfileSystem& ps, int tp, int t, int max_len, int max_ydeg);

// ---------------------------------------------------------------- tensor products

class TensorElement {
 public:
  using Key = std::vector<PBWMonomial>;
  TensorElement() = default;
  explicit TensorElement(std::vector<AlgebraPtr> factors) : factors_(std::move(factors)) {}

  const std::vector<AlgebraPtr>& factors() const { return factors_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Scalar& c);
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator*(const Scalar& c) const;
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }
  std::string str() const;

 private:
  std::vector<AlgebraPtr> factors_;
  std::map<Key, Scalar> terms_;
};

TensorElement tensor_of(const std::vector<Element>& parts);
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);

// ---------------------------------------------------------------- rho

struct Rho {
  AlgebraPtr big;
  ProfileSystem ps;
  ComponentSplit split;
  std::vector<AlgebraPtr> factors;
  std::vector<int> offsets;  // n_1 + ... + n_{j-1}

  Element corner_unit() const { return ps.corner_unit(); }
  int concat_index(const std::vector<int>& factor_tuples) const;
  Element image_e(int j, int idx) const;
  Element image_y(int j, int a) const;
  Element image_psi(int j, int b) const;
  Element image_monomial(int j, const PBWMonomial& m) const;  // homomorphic route

  Element expand(const TensorElement& a) const;          // basis matching
  Element hom(const TensorElement& a) const;             // product of generator images
  TensorElement inverse(const Element& a) const;         // basis matching back
  TensorElement unit() const;
};

Rho make_rho(AlgebraPtr big, const Partition& part);
// Factor relations, cross-factor commutation and grading of the images.
std::vector<CheckCase> rho_checks(const Rho& rho);

struct DecompositionRecord {
  int matrix_size = 0;
  std::vector<std::string> profiles;
  std::string corner;
  std::vector<int> factor_sizes;
  std::vector<int> factor_orbit_sizes;
  std::vector<std::pair<std::string, std::string>> generator_images;
  std::vector<CheckCase> cases;
};

// Full A -> Mat(tensor) record with its verification.
DecompositionRecord full_decompose(AlgebraPtr alg, const Partition& part, int samples, unsigned seed);

using TensorMatrix = std::map<std::pair<int, int>, TensorElement>;
TensorMatrix composite(const Rho& rho, const Element& a);
TensorMatrix tensor_matmul(const TensorMatrix& a, const TensorMatrix& b);

// Generator transport between the cyclotomic ideals.
struct CycloReport {
  std::vector<CheckCase> cases;
  bool quotient_is_zero = false;
  int zero_component = -1;
};
CycloReport cyclo_transport(AlgebraPtr alg, const Partition& part, const std::vector<int>& Lambda);

// Orbits of I^n against tuples of component orbits.
std::vector<CheckCase> orbit_bijection_check(const Quiver& q, const Partition& part, int n, Group g);

}  // namespace qha
