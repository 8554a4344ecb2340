#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "descent/snf.hpp"
#include "descent/stallings.hpp"
#include "descent/word.hpp"

namespace descent {

/// The abelianization of a finite-index subgroup modulo extra relators,
/// together with the matrix an automorphism induces on its free part.
struct AbelianQuotient {
  std::vector<Int> torsion;       // invariant factors > 1
  int free_rank = 0;
  IntMatrix action;               // free-part matrix in the SNF basis
  std::vector<std::vector<Int>> basis_rows;  // free-part coordinates of the Schreier generators
};

namespace detail {

inline std::vector<Int> abelianize(Word const& w, int k) {
  std::vector<Int> v(static_cast<size_t>(k), 0);
  for (int s : w.letters()) v[static_cast<size_t>(std::abs(s)) - 1] += s > 0 ? 1 : -1;
  return v;
}

}  // namespace detail

/// Matrix of the action of `f` on sub^{ab} / <relator images>, in a basis of
/// the free part computed by Smith normal form.  The relator lattice is
/// generated by the images of t r t^{-1} over all coset representatives t, so
/// it equals the image of the normal closure of the relators in the ambient
/// free group.  Also reports torsion invariants and the free-part coordinates
/// of each Schreier generator (so callers can change basis reproducibly).
inline AbelianQuotient abelian_quotient_action(SubgroupGraph const& sub,
                                               std::vector<Word> const& relators,
                                               FreeMap const& f) {
  if (!sub.index()) throw std::invalid_argument("abelian_quotient_action: infinite index");
  if (!equal_subgroups(image_subgroup(f, sub), sub))
    throw std::invalid_argument("abelian_quotient_action: map does not preserve subgroup");

  auto gens = sub.schreier_generators();
  int k = static_cast<int>(gens.size());
  auto reps = sub.coset_representatives();

  // Lattice of relator images in Z^k.
  std::vector<std::vector<Int>> lattice;
  for (auto const& t : reps)
    for (auto const& r : relators) {
      Word c = conjugate(t, r);
      if (!sub.membership(c))
        throw std::invalid_argument("abelian_quotient_action: relator conjugate not in subgroup");
      lattice.push_back(detail::abelianize(sub.rewrite(c), k));
    }

  IntMatrix A(static_cast<size_t>(k), std::vector<Int>(lattice.size(), 0));
  for (size_t c = 0; c < lattice.size(); ++c)
    for (int i = 0; i < k; ++i) A[static_cast<size_t>(i)][c] = lattice[c][static_cast<size_t>(i)];
  auto snf = smith_normal_form(A);

  // In coordinates y = U x the lattice is spanned by d_i e_i.
  std::vector<int> free_idx;
  AbelianQuotient q;
  for (int i = 0; i < k; ++i) {
    Int d = i < static_cast<int>(snf.diag.size()) ? snf.diag[static_cast<size_t>(i)] : Int(0);
    if (d == 0)
      free_idx.push_back(i);
    else if (d > 1)
      q.torsion.push_back(d);
  }
  q.free_rank = static_cast<int>(free_idx.size());

  // Action matrix M on Z^k: column j = abelianized rewrite of f(g_j).
  IntMatrix M(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k), 0));
  for (int j = 0; j < k; ++j) {
    Word img = apply_map(f, gens[static_cast<size_t>(j)]);
    auto v = detail::abelianize(sub.rewrite(img), k);
    for (int i = 0; i < k; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = v[static_cast<size_t>(i)];
  }
  // f must carry the relator lattice into itself for the quotient action to
  // be well-defined.
  auto in_lattice = [&](std::vector<Int> const& v) {
    std::vector<Int> y(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) y[static_cast<size_t>(i)] += snf.u[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
    for (int i = 0; i < k; ++i) {
      Int d = i < static_cast<int>(snf.diag.size()) ? snf.diag[static_cast<size_t>(i)] : Int(0);
      if (d == 0) {
        if (y[static_cast<size_t>(i)] != 0) return false;
      } else if (y[static_cast<size_t>(i)] % d != 0) {
        return false;
      }
    }
    return true;
  };
  for (auto const& t : reps)
    for (auto const& r : relators) {
      Word img = apply_map(f, conjugate(t, r));
      if (!sub.membership(img) || !in_lattice(detail::abelianize(sub.rewrite(img), k)))
        throw std::invalid_argument("abelian_quotient_action: map does not preserve relator lattice");
    }

  IntMatrix uinv = mat_inverse_unimodular(snf.u);
  IntMatrix Mp = mat_mul(mat_mul(snf.u, M), uinv);
  q.action.assign(static_cast<size_t>(q.free_rank), std::vector<Int>(static_cast<size_t>(q.free_rank), 0));
  for (int i = 0; i < q.free_rank; ++i)
    for (int j = 0; j < q.free_rank; ++j)
      q.action[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          Mp[static_cast<size_t>(free_idx[static_cast<size_t>(i)])][static_cast<size_t>(free_idx[static_cast<size_t>(j)])];

  // Free-part coordinates of each Schreier generator (rows), for basis changes.
  for (int j = 0; j < k; ++j) {
    std::vector<Int> e(static_cast<size_t>(k), 0);
    e[static_cast<size_t>(j)] = 1;
    std::vector<Int> y(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) y[static_cast<size_t>(i)] = snf.u[static_cast<size_t>(i)][static_cast<size_t>(j)];
    std::vector<Int> row;
    for (int i : free_idx) row.push_back(y[static_cast<size_t>(i)]);
    q.basis_rows.push_back(row);
  }
  return q;
}

/// Free-part coordinates of a subgroup element, in the same SNF basis used by
/// abelian_quotient_action.
inline std::vector<Int> free_part_coords(SubgroupGraph const& sub,
                                         std::vector<Word> const& relators,
                                         Word const& w) {
  auto q = abelian_quotient_action(sub, relators, FreeMap::identity(sub.rank()));
  auto v = detail::abelianize(sub.rewrite(w), static_cast<int>(q.basis_rows.size()));
  std::vector<Int> out(static_cast<size_t>(q.free_rank), 0);
  for (size_t j = 0; j < q.basis_rows.size(); ++j)
    for (int i = 0; i < q.free_rank; ++i)
      out[static_cast<size_t>(i)] += v[j] * q.basis_rows[j][static_cast<size_t>(i)];
  return out;
}

/// Matrix of `f` expressed in a caller-supplied basis of the free part.  The
/// basis words must be subgroup elements whose free-part coordinate matrix is
/// unimodular.
inline IntMatrix abelian_quotient_matrix(SubgroupGraph const& sub,
                                         std::vector<Word> const& relators,
                                         FreeMap const& f,
                                         std::vector<Word> const& basis) {
  auto q = abelian_quotient_action(sub, relators, f);
  if (static_cast<int>(basis.size()) != q.free_rank)
    throw std::invalid_argument("abelian_quotient_matrix: basis size != free rank");
  size_t r = basis.size();
  IntMatrix B(r, std::vector<Int>(r, 0));
  int k = static_cast<int>(q.basis_rows.size());
  for (size_t j = 0; j < r; ++j) {
    auto v = detail::abelianize(sub.rewrite(basis[j]), k);
    for (int i = 0; i < q.free_rank; ++i) {
      Int acc = 0;
      for (int t = 0; t < k; ++t) acc += v[static_cast<size_t>(t)] * q.basis_rows[static_cast<size_t>(t)][static_cast<size_t>(i)];
      B[static_cast<size_t>(i)][j] = acc;
    }
  }
  Int det = mat_det(B);
  if (det != 1 && det != -1)
    throw std::invalid_argument("abelian_quotient_matrix: supplied words are not a basis");
  return mat_mul(mat_mul(mat_inverse_unimodular(B), q.action), B);
}

}  // namespace descent
