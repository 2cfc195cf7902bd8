#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qha/error.hpp"

namespace qha {

inline constexpr int kMaxRank = 8;

using Word = std::vector<int>;  // letters 0..n-1, letter a stands for r_a

// Element of the hyperoctahedral group B_n acting on {±1..±n}.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(int n);  // identity
  static SignedPerm from_images(const std::vector<int>& images);
  static SignedPerm generator(int n, int a);  // r_0 or r_a
  static SignedPerm from_word(int n, const Word& w);

  int rank() const noexcept { return n_; }
  int operator()(int i) const;  // i in ±1..±n
  std::vector<int> images() const;
  SignedPerm inverse() const;
  bool is_identity() const;
  bool is_unsigned() const;  // element of S_n
  int negative_count() const;

  friend SignedPerm operator*(const SignedPerm& u, const SignedPerm& v);  // u∘v
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

  std::string str() const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::int8_t, kMaxRank> im_{};
};

int length(const SignedPerm& w);
Word canonical_word(const SignedPerm& w);
int r0_count(const SignedPerm& w);
bool in_Dn(const SignedPerm& w);
std::string word_str(const Word& w);

// Word of the coset representative t_a^eps r_a ... r_{i-1} in R^(i).
Word coset_word(int i, int a, bool eps);
// All elements of B_n (or S_n when unsigned_only), enumerated through R^(n)...R^(1).
std::vector<SignedPerm> enumerate_group(int n, bool unsigned_only = false);

// Block-diagonal embedding B_{n_1} x ... x B_{n_d} -> B_n.
SignedPerm embed_blocks(const std::vector<SignedPerm>& ws);
// Image of a word of the j-th block in the generators of B_n (offset k = n_1+..+n_{j-1}).
Word embed_word(const Word& w, int offset);

// Minimal element of S_n sorting the profile t stably: (pi_t . t)_{pi_t(k)} = t_k.
SignedPerm min_coset_rep(const std::vector<int>& profile);

}  // namespace qha
