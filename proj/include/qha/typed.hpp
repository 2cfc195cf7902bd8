#pragma once

#include <optional>
#include <vector>

#include "qha/decomposition.hpp"

namespace qha {

// An element of V_beta(Gamma, 0, 0) certified to be iota-invariant.
struct WElement {
  Element elem;
  bool iota_invariant = false;
  std::string str() const { return elem.str() + (iota_invariant ? " [iota-invariant: true]" : " [iota-invariant: false]"); }
};

WElement certify_w(const Element& a);

enum class WGen { E, Y, Psi, Psi0 };
// Psi0 is psi0 psi1 psi0; Psi takes b >= 1, Y takes a >= 1, E a tuple index.
WElement w_generator(const AlgebraPtr& alg, WGen g, int index = 0);

std::vector<CheckCase> verify_w_relations(const AlgebraPtr& alg);

// conjugation by psi0
Element pi_auto(const Element& a);
WElement pi_auto(const WElement& a);

// a = plus + minus with iota(minus) = -minus; minus * psi0 is again iota-invariant
struct FixedPointSplit {
  WElement plus;
  Element minus;
};
FixedPointSplit fixed_point_split(const Element& a);

// iota and pi coherence plus the split on sampled elements
std::vector<CheckCase> involution_checks(const AlgebraPtr& alg, int samples, unsigned seed);
std::vector<CheckCase> semidirect_check(const AlgebraPtr& alg, int samples, unsigned seed);

// C2^d element; the even subgroup has an even number of ones
struct C2Word {
  std::vector<int> eps;
  bool even() const;
};

std::vector<CheckCase> decompose_D(const AlgebraPtr& alg, const Partition& part,
                                   const std::optional<std::vector<int>>& Lambda, int samples, unsigned seed);

}  // namespace qha
