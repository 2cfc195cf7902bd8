#include "qha/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace qha {

SignedPerm::SignedPerm(int n) : n_(static_cast<std::uint8_t>(n)) {
  if (n < 0 || n > kMaxRank) throw Error(ErrorCode::SizeMismatch, "rank out of range");
  for (int i = 0; i < n; ++i) im_[i] = static_cast<std::int8_t>(i + 1);
}

SignedPerm SignedPerm::from_images(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  SignedPerm w(n);
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    int m = std::abs(images[i]);
    if (m < 1 || m > n || seen[m]) throw Error(ErrorCode::SizeMismatch, "not a signed permutation");
    seen[m] = true;
    w.im_[i] = static_cast<std::int8_t>(images[i]);
  }
  return w;
}

SignedPerm SignedPerm::generator(int n, int a) {
  if (a < 0 || a >= std::max(n, 1) || n == 0) throw Error(ErrorCode::SizeMismatch, "bad generator index");
  SignedPerm w(n);
  if (a == 0)
    w.im_[0] = -1;
  else
    std::swap(w.im_[a - 1], w.im_[a]);
  return w;
}

SignedPerm SignedPerm::from_word(int n, const Word& word) {
  SignedPerm w(n);
  for (int a : word) w = w * generator(n, a);
  return w;
}

int SignedPerm::operator()(int i) const {
  return i > 0 ? im_[i - 1] : -im_[-i - 1];
}

std::vector<int> SignedPerm::images() const { return {im_.begin(), im_.begin() + n_}; }

SignedPerm SignedPerm::inverse() const {
  SignedPerm r(n_);
  for (int i = 1; i <= n_; ++i) {
    int m = im_[i - 1];
    r.im_[std::abs(m) - 1] = static_cast<std::int8_t>(m > 0 ? i : -i);
  }
  return r;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (im_[i] != i + 1) return false;
  return true;
}

bool SignedPerm::is_unsigned() const { return negative_count() == 0; }

int SignedPerm::negative_count() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) c += im_[i] < 0;
  return c;
}

SignedPerm operator*(const SignedPerm& u, const SignedPerm& v) {
  if (u.n_ != v.n_) throw Error(ErrorCode::SizeMismatch, "composing different ranks");
  SignedPerm r(u.n_);
  for (int i = 1; i <= u.n_; ++i) r.im_[i - 1] = static_cast<std::int8_t>(u(v(i)));
  return r;
}

std::string SignedPerm::str() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(im_[i]);
  return s + "]";
}

int length(const SignedPerm& w) {
  int n = w.rank(), l = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (i < j && w(i) > w(j)) ++l;
      if (w(-i) > w(j)) ++l;
    }
  return l;
}

Word coset_word(int i, int a, bool eps) {
  Word w;
  if (eps) {
    for (int k = a - 1; k >= 1; --k) w.push_back(k);
    w.push_back(0);
    for (int k = 1; k <= a - 1; ++k) w.push_back(k);
  }
  for (int k = a; k <= i - 1; ++k) w.push_back(k);
  return w;
}

Word canonical_word(const SignedPerm& w) {
  int n = w.rank();
  Word out;
  SignedPerm cur = w;
  for (int i = n; i >= 1; --i) {
    int m = cur(i);
    Word u = coset_word(i, std::abs(m), m < 0);
    out.insert(out.end(), u.begin(), u.end());
    cur = SignedPerm::from_word(n, u).inverse() * cur;
  }
  return out;
}

int r0_count(const SignedPerm& w) {
  Word cw = canonical_word(w);
  return static_cast<int>(std::count(cw.begin(), cw.end(), 0));
}

bool in_Dn(const SignedPerm& w) { return w.negative_count() % 2 == 0; }

std::string word_str(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

std::vector<SignedPerm> enumerate_group(int n, bool unsigned_only) {
  std::vector<Word> words{Word{}};
  for (int i = n; i >= 1; --i) {
    std::vector<Word> next;
    for (const Word& prefix : words)
      for (int a = 1; a <= i; ++a)
        for (int eps = 0; eps <= (unsigned_only ? 0 : 1); ++eps) {
          Word w = prefix;
          Word u = coset_word(i, a, eps);
          w.insert(w.end(), u.begin(), u.end());
          next.push_back(std::move(w));
        }
    words = std::move(next);
  }
  std::vector<SignedPerm> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(SignedPerm::from_word(n, w));
  return out;
}

SignedPerm embed_blocks(const std::vector<SignedPerm>& ws) {
  std::vector<int> images;
  int offset = 0;
  for (const auto& w : ws) {
    for (int i = 1; i <= w.rank(); ++i) {
      int m = w(i);
      images.push_back(m > 0 ? m + offset : m - offset);
    }
    offset += w.rank();
  }
  return SignedPerm::from_images(images);
}

Word embed_word(const Word& w, int offset) {
  Word out;
  for (int a : w) {
    if (a == 0) {
      for (int k = offset; k >= 1; --k) out.push_back(k);
      out.push_back(0);
      for (int k = 1; k <= offset; ++k) out.push_back(k);
    } else {
      out.push_back(a + offset);
    }
  }
  return out;
}

SignedPerm min_coset_rep(const std::vector<int>& profile) {
  int n = static_cast<int>(profile.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return profile[a] < profile[b]; });
  std::vector<int> images(n);
  for (int pos = 0; pos < n; ++pos) images[order[pos]] = pos + 1;
  return SignedPerm::from_images(images);
}

}  // namespace qha
