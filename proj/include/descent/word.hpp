#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace descent {

/// Freely reduced word in the free group F_n.  Letters are signed generator
/// indices: +i stands for x_i, -i for x_i^{-1}, with 1 <= i <= rank.
/// The empty letter sequence is the identity.
class Word {
 public:
  Word() : rank_(1) {}
  explicit Word(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("Word: rank must be >= 1");
  }

  /// Builds the freely reduced word from an arbitrary letter sequence.
  Word(int rank, std::vector<int> const& raw) : Word(rank) {
    letters_.reserve(raw.size());
    for (int s : raw) push(s);
  }

  static Word generator(int rank, int i) {
    Word w(rank);
    w.push(i);
    return w;
  }

  int rank() const { return rank_; }
  std::vector<int> const& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  /// Appends one letter, cancelling against the current last letter.
  void push(int s) {
    if (s == 0 || std::abs(s) > rank_)
      throw std::invalid_argument("Word: letter index out of range");
    if (!letters_.empty() && letters_.back() == -s)
      letters_.pop_back();
    else
      letters_.push_back(s);
  }

  friend bool operator==(Word const& a, Word const& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend auto operator<=>(Word const& a, Word const& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

  std::string str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (size_t k = 0; k < letters_.size(); ++k) {
      if (k) os << '*';
      os << 'x' << std::abs(letters_[k]);
      if (letters_[k] < 0) os << "^-1";
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << w.str();
  }

 private:
  int rank_;
  std::vector<int> letters_;
};

inline Word reduce(std::vector<int> const& raw, int rank) {
  return Word(rank, raw);
}

inline void check_rank(Word const& a, Word const& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
}

inline Word multiply(Word const& a, Word const& b) {
  check_rank(a, b);
  Word r = a;
  for (int s : b.letters()) r.push(s);
  return r;
}

inline Word invert(Word const& a) {
  Word r(a.rank());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
    r.push(-*it);
  return r;
}

inline Word conjugate(Word const& w, Word const& a) {  // w a w^{-1}
  return multiply(multiply(w, a), invert(w));
}

inline Word power(Word const& a, int e) {
  Word base = e < 0 ? invert(a) : a;
  Word r(a.rank());
  for (int k = 0; k < std::abs(e); ++k) r = multiply(r, base);
  return r;
}

/// Splits w as p * c * p^{-1} with c cyclically reduced; returns (c, p).
inline std::pair<Word, Word> cyclic_reduce_with_prefix(Word const& w) {
  auto const& ls = w.letters();
  size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == -ls[j - 1]) ++i, --j;
  Word core(w.rank()), prefix(w.rank());
  for (size_t k = i; k < j; ++k) core.push(ls[k]);
  for (size_t k = 0; k < i; ++k) prefix.push(ls[k]);
  return {core, prefix};
}

inline Word cyclic_reduce(Word const& w) {
  return cyclic_reduce_with_prefix(w).first;
}

/// Decides conjugacy of a and b and, on success, returns w with a = w b w^{-1}.
/// Two cyclically reduced words are conjugate iff one is a cyclic rotation of
/// the other; the witness is assembled from the reduction prefixes and the
/// rotation offset.
inline std::optional<Word> conjugate_test(Word const& a, Word const& b) {
  check_rank(a, b);
  auto [ca, pa] = cyclic_reduce_with_prefix(a);
  auto [cb, pb] = cyclic_reduce_with_prefix(b);
  if (ca.length() != cb.length()) return std::nullopt;
  size_t n = ca.length();
  if (n == 0) return multiply(pa, invert(pb));
  auto const& u = ca.letters();
  auto const& v = cb.letters();
  for (size_t k = 0; k < n; ++k) {
    bool match = true;
    for (size_t t = 0; t < n && match; ++t) match = u[t] == v[(t + k) % n];
    if (!match) continue;
    // ca = v[k..] v[..k] = c1^{-1} cb c1 with c1 the first k letters of cb
    Word c1(b.rank());
    for (size_t t = 0; t < k; ++t) c1.push(v[t]);
    Word w = multiply(multiply(pa, invert(c1)), invert(pb));
    if (conjugate(w, b) == a) return w;
  }
  return std::nullopt;
}

/// Endomorphism of F_n given by the images of the n generators; used for
/// automorphisms throughout (braid actions, inner automorphisms).
struct FreeMap {
  int rank = 1;
  std::vector<Word> images;

  static FreeMap identity(int rank) {
    FreeMap f;
    f.rank = rank;
    for (int i = 1; i <= rank; ++i) f.images.push_back(Word::generator(rank, i));
    return f;
  }

  Word const& image(int i) const { return images.at(static_cast<size_t>(i) - 1); }

  friend bool operator==(FreeMap const& a, FreeMap const& b) = default;
};

inline Word apply_map(FreeMap const& f, Word const& w) {
  if (f.rank != w.rank()) throw std::invalid_argument("rank mismatch");
  Word r(f.rank);
  for (int s : w.letters()) {
    Word const& im = f.image(std::abs(s));
    if (s > 0)
      for (int t : im.letters()) r.push(t);
    else
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
        r.push(-*it);
  }
  return r;
}

/// f after g: (compose_maps(f,g))(w) = f(g(w)).
inline FreeMap compose_maps(FreeMap const& f, FreeMap const& g) {
  if (f.rank != g.rank) throw std::invalid_argument("rank mismatch");
  FreeMap r;
  r.rank = f.rank;
  for (auto const& im : g.images) r.images.push_back(apply_map(f, im));
  return r;
}

inline FreeMap map_power(FreeMap const& f, int e, FreeMap const& finv) {
  FreeMap r = FreeMap::identity(f.rank);
  FreeMap const& base = e < 0 ? finv : f;
  for (int k = 0; k < std::abs(e); ++k) r = compose_maps(r, base);
  return r;
}

/// Returns w with f(x_i) = w x_i w^{-1} for all i, when f is an inner
/// automorphism.  The witness is pinned down structurally: f(x_1) reduced must
/// equal p x_1 p^{-1}, which forces w = p x_1^k; the exponent k is then read
/// off the other generator images.
inline std::optional<Word> is_inner(FreeMap const& f) {
  for (auto const& im : f.images)
    if (im.is_identity())
      throw std::invalid_argument("is_inner: generator image is empty (not injective)");
  int n = f.rank;
  Word const& u = f.image(1);
  if (u.length() % 2 == 0) return std::nullopt;
  size_t h = u.length() / 2;
  if (u.letters()[h] != 1) return std::nullopt;
  Word p(n);
  for (size_t t = 0; t < h; ++t) p.push(u.letters()[t]);
  if (conjugate(p, Word::generator(n, 1)) != u) return std::nullopt;

  auto try_witness = [&](Word const& w) -> bool {
    for (int i = 1; i <= n; ++i)
      if (conjugate(w, Word::generator(n, i)) != f.image(i)) return false;
    return true;
  };

  if (n == 1) {
    Word id(n);
    return try_witness(id) ? std::optional<Word>(id) : std::nullopt;
  }
  // w = p x_1^k; recover k from g = p^{-1} f(x_2) p = x_1^k x_2 x_1^{-k}
  Word g = multiply(multiply(invert(p), f.image(2)), p);
  auto const& gl = g.letters();
  if (gl.size() % 2 == 0) return std::nullopt;
  size_t gh = gl.size() / 2;
  if (std::abs(gl[gh]) != 2) return std::nullopt;
  int k = 0;
  for (size_t t = 0; t < gh; ++t) {
    if (std::abs(gl[t]) != 1) return std::nullopt;
    k += gl[t] > 0 ? 1 : -1;
  }
  Word w = multiply(p, power(Word::generator(n, 1), k));
  if (try_witness(w)) return w;
  return std::nullopt;
}

}  // namespace descent
