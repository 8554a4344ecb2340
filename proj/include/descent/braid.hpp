#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "descent/abelian_action.hpp"
#include "descent/stallings.hpp"
#include "descent/word.hpp"

namespace descent {

/// Braid word in B_s (s = strands, Artin generators sigma_1..sigma_{s-1}).
/// No normal form is imposed; equality of braids is decided through the
/// Artin representation.
///
/// Convention: B_s acts on the free group of rank s-1 generated by the
/// puncture loops x_1..x_{s-1}, with the loop around the last puncture
/// implicit as x_s = (x_1...x_{s-1})^{-1}.  Generators sigma_i for
/// i <= s-2 act by the table sigma_i(x_i) = x_i x_{i+1} x_i^{-1},
/// sigma_i(x_{i+1}) = x_i; the last generator sigma_{s-1} exchanges x_{s-1}
/// with the implicit loop, so its image expands x_s.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;  // signed indices in +-[1..strands-1]

  BraidWord() = default;
  BraidWord(int s, std::vector<int> ls) : strands(s), letters(std::move(ls)) {
    if (s < 2) throw std::invalid_argument("BraidWord: strands must be >= 2");
    for (int l : letters)
      if (l == 0 || std::abs(l) >= s)
        throw std::invalid_argument("BraidWord: generator index out of range");
  }

  int rank() const { return strands - 1; }

  std::string str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (size_t k = 0; k < letters.size(); ++k) {
      if (k) os << '*';
      os << 's' << std::abs(letters[k]);
      if (letters[k] < 0) os << "^-1";
    }
    return os.str();
  }
};

/// Word for the implicit last puncture loop x_s = (x_1...x_{s-1})^{-1}.
inline Word last_puncture_loop(int strands) {
  Word w(strands - 1);
  for (int i = strands - 1; i >= 1; --i) w.push(-i);
  return w;
}

namespace detail {

inline FreeMap artin_generator(int strands, int i) {
  int r = strands - 1;
  FreeMap f = FreeMap::identity(r);
  if (i < r) {
    f.images[static_cast<size_t>(i) - 1] =
        conjugate(Word::generator(r, i), Word::generator(r, i + 1));
    f.images[static_cast<size_t>(i)] = Word::generator(r, i);
  } else {
    // sigma_{s-1}: x_{s-1} -> x_{s-1} x_s x_{s-1}^{-1} with x_s expanded
    f.images[static_cast<size_t>(r) - 1] =
        conjugate(Word::generator(r, r), last_puncture_loop(strands));
  }
  return f;
}

inline FreeMap artin_generator_inverse(int strands, int i) {
  // sigma_i^{-1}: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
  int r = strands - 1;
  FreeMap f = FreeMap::identity(r);
  if (i < r) {
    f.images[static_cast<size_t>(i) - 1] = Word::generator(r, i + 1);
    f.images[static_cast<size_t>(i)] =
        conjugate(invert(Word::generator(r, i + 1)), Word::generator(r, i));
  } else {
    // sigma_{s-1}^{-1}: x_{s-1} -> x_s (expanded)
    f.images[static_cast<size_t>(r) - 1] = last_puncture_loop(strands);
  }
  return f;
}

}  // namespace detail

/// Artin representation: homomorphism BraidWord -> Aut(F_{s-1}), letters
/// composed left to right with the leftmost applied last.
inline FreeMap artin_rep(BraidWord const& b) {
  FreeMap f = FreeMap::identity(b.rank());
  for (int l : b.letters) {
    FreeMap g = l > 0 ? detail::artin_generator(b.strands, l)
                      : detail::artin_generator_inverse(b.strands, -l);
    f = compose_maps(f, g);
  }
  return f;
}

/// Strand permutation, tracked independently of the Artin representation:
/// sigma_i acts as the transposition (i, i+1) on strand endpoints.
inline std::vector<int> strand_permutation(BraidWord const& b) {
  std::vector<int> p(static_cast<size_t>(b.strands));
  for (int i = 0; i < b.strands; ++i) p[static_cast<size_t>(i)] = i;
  for (int l : b.letters) std::swap(p[static_cast<size_t>(std::abs(l)) - 1], p[static_cast<size_t>(std::abs(l))]);
  return p;
}

struct RelationReport {
  std::string relation;
  bool holds = false;
};

/// Verifies the braid relations as FreeMap equalities:
/// far commutation for |i-j| >= 2 and sigma_i sigma_{i+1} sigma_i =
/// sigma_{i+1} sigma_i sigma_{i+1}.
inline std::vector<RelationReport> braid_relations_check(int strands) {
  if (strands < 2 || strands > 8)
    throw std::invalid_argument("braid_relations_check: strands out of supported range");
  std::vector<RelationReport> out;
  int ng = strands - 1;
  for (int i = 1; i <= ng; ++i)
    for (int j = i + 2; j <= ng; ++j) {
      auto lhs = artin_rep(BraidWord(strands, {i, j}));
      auto rhs = artin_rep(BraidWord(strands, {j, i}));
      std::ostringstream os;
      os << "s" << i << "*s" << j << " = s" << j << "*s" << i;
      out.push_back({os.str(), lhs == rhs});
    }
  for (int i = 1; i + 1 <= ng; ++i) {
    auto lhs = artin_rep(BraidWord(strands, {i, i + 1, i}));
    auto rhs = artin_rep(BraidWord(strands, {i + 1, i, i + 1}));
    std::ostringstream os;
    os << "s" << i << "*s" << i + 1 << "*s" << i << " = s" << i + 1 << "*s" << i << "*s" << i + 1;
    out.push_back({os.str(), lhs == rhs});
  }
  return out;
}

struct PurityCertificate {
  bool pure = false;
  std::vector<std::optional<Word>> witnesses;  // conjugators per puncture loop
};

/// Pure iff the image of every puncture loop (including the implicit one) is
/// conjugate to itself.
inline PurityCertificate is_pure(BraidWord const& b) {
  FreeMap f = artin_rep(b);
  PurityCertificate cert;
  cert.pure = true;
  for (int i = 1; i <= b.rank(); ++i) {
    auto w = conjugate_test(f.image(i), Word::generator(b.rank(), i));
    cert.pure = cert.pure && w.has_value();
    cert.witnesses.push_back(w);
  }
  Word xs = last_puncture_loop(b.strands);
  auto w = conjugate_test(apply_map(f, xs), xs);
  cert.pure = cert.pure && w.has_value();
  cert.witnesses.push_back(w);
  return cert;
}

// ---------------------------------------------------------------------------
// The four-punctured-sphere computation: B_4 acting on F_3, the index-2
// kernel R_2, and the induced SL_2(Z) matrices on the elliptic quotient.
// ---------------------------------------------------------------------------

/// R_2: kernel of the length-mod-2 map F_3 -> Z/2 (even-length words), as a
/// complete 2-state graph.
inline SubgroupGraph elliptic_kernel_subgroup() {
  std::vector<Word> gens;
  gens.push_back(Word(3, {2, -1}));
  gens.push_back(Word(3, {3, -1}));
  gens.push_back(Word(3, {1, 1}));
  gens.push_back(Word(3, {1, 2}));
  gens.push_back(Word(3, {1, 3}));
  return SubgroupGraph(3, gens);
}

/// Squares of the four puncture loops; their normal closure cuts R_2 down to
/// the rank-2 homology of the compactified double cover.
inline std::vector<Word> elliptic_relators() {
  std::vector<Word> rel;
  rel.push_back(Word(3, {1, 1}));
  rel.push_back(Word(3, {2, 2}));
  rel.push_back(Word(3, {3, 3}));
  rel.push_back(power(invert(Word(3, {1, 2, 3})), 2));  // x_4^2
  return rel;
}

inline std::vector<Word> elliptic_basis() {
  return {Word(3, {2, 1}), Word(3, {3, 1})};
}

/// 2x2 matrix of a B_4 braid on the elliptic quotient in basis (x2*x1, x3*x1).
inline IntMatrix elliptic_matrix(BraidWord const& b) {
  if (b.strands != 4) throw std::invalid_argument("elliptic_matrix: expects a B_4 braid");
  return abelian_quotient_matrix(elliptic_kernel_subgroup(), elliptic_relators(),
                                 artin_rep(b), elliptic_basis());
}

struct KernelWordReport {
  std::string name;
  bool preserves_r2 = false;
  std::optional<Word> inner_witness;
  IntMatrix matrix;
  bool matrix_identity = false;
};

/// The two defining relators of Mod(S_{0,4}) as B_4 words.
inline std::vector<std::pair<std::string, BraidWord>> spherical_kernel_words() {
  std::vector<int> full;
  for (int k = 0; k < 4; ++k) {
    full.push_back(1);
    full.push_back(2);
    full.push_back(3);
  }
  return {{"(s1*s2*s3)^4", BraidWord(4, full)},
          {"s1*s2*s3^2*s2*s1", BraidWord(4, {1, 2, 3, 3, 2, 1})}};
}

inline KernelWordReport kernel_word_report(std::string name, BraidWord const& b) {
  KernelWordReport rep;
  rep.name = std::move(name);
  FreeMap f = artin_rep(b);
  SubgroupGraph r2 = elliptic_kernel_subgroup();
  rep.preserves_r2 = equal_subgroups(image_subgroup(f, r2), r2);
  rep.inner_witness = is_inner(f);
  rep.matrix = elliptic_matrix(b);
  rep.matrix_identity = rep.matrix == identity_matrix(rep.matrix.size());
  return rep;
}

inline std::vector<KernelWordReport> spherical_kernel_check(int strands) {
  if (strands != 4)
    throw std::invalid_argument("spherical_kernel_check: only strands = 4 is supported");
  std::vector<KernelWordReport> out;
  for (auto const& [name, b] : spherical_kernel_words())
    out.push_back(kernel_word_report(name, b));
  return out;
}

}  // namespace descent
