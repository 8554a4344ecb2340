#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace descent {

using Int = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix identity_matrix(size_t n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix mat_mul(IntMatrix const& a, IntMatrix const& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix r(n, std::vector<Int>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
  return r;
}

struct SmithForm {
  IntMatrix d;  // diagonal form, u*a*v = d
  IntMatrix u;  // unimodular row transform
  IntMatrix v;  // unimodular column transform
  std::vector<Int> diag;
};

/// Smith normal form by repeated gcd elimination.  Desk-scale matrices only.
inline SmithForm smith_normal_form(IntMatrix a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  SmithForm s;
  s.u = identity_matrix(rows);
  s.v = identity_matrix(cols);

  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : s.v) std::swap(row[i], row[j]);
  };
  auto addmul_row = [&](size_t dst, size_t src, Int const& c) {
    for (size_t j = 0; j < cols; ++j) a[dst][j] += c * a[src][j];
    for (size_t j = 0; j < rows; ++j) s.u[dst][j] += c * s.u[src][j];
  };
  auto addmul_col = [&](size_t dst, size_t src, Int const& c) {
    for (size_t i = 0; i < rows; ++i) a[i][dst] += c * a[i][src];
    for (size_t i = 0; i < cols; ++i) s.v[i][dst] += c * s.v[i][src];
  };
  auto negate_row = [&](size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : s.u[i]) x = -x;
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot of least absolute value
    size_t pi = t, pj = t;
    Int best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
          best = abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i)
      if (a[i][t] != 0) {
        addmul_row(i, t, -(a[i][t] / a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
    for (size_t j = t + 1; j < cols; ++j)
      if (a[t][j] != 0) {
        addmul_col(j, t, -(a[t][j] / a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // remainders left, pick a smaller pivot next round

    // divisibility fix-up: pivot must divide the rest of the block
    bool divides = true;
    for (size_t i = t + 1; i < rows && divides; ++i)
      for (size_t j = t + 1; j < cols && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          addmul_row(t, i, 1);
          divides = false;
        }
    if (!divides) continue;
    if (a[t][t] < 0) negate_row(t);
    ++t;
  }
  s.d = a;
  for (size_t i = 0; i < rows && i < cols; ++i) s.diag.push_back(a[i][i]);
  return s;
}

/// Solves b = M x over the integers when M is square unimodular.
inline IntMatrix mat_inverse_unimodular(IntMatrix const& m) {
  auto s = smith_normal_form(m);
  for (auto const& d : s.diag)
    if (d != 1) throw std::invalid_argument("matrix is not unimodular");
  // u m v = 1  =>  m^{-1} = v u
  return mat_mul(s.v, s.u);
}

/// Exact signed determinant (Bareiss fraction-free elimination).
inline Int mat_det(IntMatrix m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace descent
