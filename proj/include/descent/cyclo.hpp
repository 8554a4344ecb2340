#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace descent {

using Rational = boost::multiprecision::cpp_rational;

// --- dense polynomials over Q ------------------------------------------------

using QPoly = std::vector<Rational>;  // c[i] = coefficient of x^i

inline void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qp_mul(QPoly const& a, QPoly const& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

inline QPoly qp_sub(QPoly a, QPoly const& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qp_trim(a);
  return a;
}

/// Division with remainder; the divisor need not be monic.
inline std::pair<QPoly, QPoly> qp_divmod(QPoly a, QPoly const& b) {
  if (b.empty()) throw std::invalid_argument("qp_divmod: division by zero polynomial");
  QPoly q;
  while (a.size() >= b.size()) {
    Rational lead = a.back() / b.back();
    size_t shift = a.size() - b.size();
    if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
    q[shift] += lead;
    QPoly scaled(shift, Rational(0));
    for (auto const& c : b) scaled.push_back(c * lead);
    a = qp_sub(a, scaled);
    if (a.size() >= shift + b.size()) a.resize(shift + b.size() - 1);  // guard rounding
    qp_trim(a);
  }
  qp_trim(q);
  return {q, a};
}

inline long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  if (m > 1) result -= result / m;
  return result;
}

/// The n-th cyclotomic polynomial, by dividing x^n - 1 by the lower ones.
/// Cached per thread; conductors in play are tiny.
inline QPoly const& cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  thread_local std::map<long, QPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  QPoly num(static_cast<size_t>(n) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) {
      auto [q, r] = qp_divmod(num, cyclotomic_polynomial(d));
      if (!r.empty()) throw std::logic_error("cyclotomic_polynomial: non-exact division");
      num = q;
    }
  return cache.emplace(n, std::move(num)).first->second;
}

// --- elements of Q(zeta_n) ---------------------------------------------------

/// Exact element of the cyclotomic field Q(zeta_n), as a vector of rational
/// coordinates in the power basis 1, z, ..., z^{phi(n)-1} (reduced modulo the
/// n-th cyclotomic polynomial).
class CycloElem {
 public:
  CycloElem() : n_(1), c_{Rational(0)} {}
  CycloElem(long n, std::vector<Rational> coords) : n_(n), c_(std::move(coords)) {
    if (static_cast<long>(c_.size()) != euler_phi(n))
      throw std::invalid_argument("CycloElem: wrong coordinate length");
  }

  static CycloElem from_rational(long n, Rational q) {
    std::vector<Rational> c(static_cast<size_t>(euler_phi(n)), Rational(0));
    c[0] = std::move(q);
    return CycloElem(n, std::move(c));
  }
  static CycloElem zero(long n) { return from_rational(n, Rational(0)); }
  static CycloElem one(long n) { return from_rational(n, Rational(1)); }

  /// zeta_n^k as an element of conductor n.
  static CycloElem root_of_unity(long n, long k) {
    k %= n;
    if (k < 0) k += n;
    QPoly p(static_cast<size_t>(k) + 1, Rational(0));
    p[static_cast<size_t>(k)] = 1;
    return from_poly(n, std::move(p));
  }

  long conductor() const { return n_; }
  std::vector<Rational> const& coords() const { return c_; }

  bool is_zero() const {
    for (auto const& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  Rational rational_value() const {
    if (!is_rational()) throw std::invalid_argument("CycloElem: not rational");
    return c_[0];
  }

  friend bool operator==(CycloElem const& a, CycloElem const& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  friend CycloElem operator+(CycloElem const& a, CycloElem const& b) {
    check(a, b);
    auto c = a.c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return CycloElem(a.n_, std::move(c));
  }
  friend CycloElem operator-(CycloElem const& a, CycloElem const& b) {
    check(a, b);
    auto c = a.c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return CycloElem(a.n_, std::move(c));
  }
  friend CycloElem operator-(CycloElem const& a) {
    auto c = a.c_;
    for (auto& x : c) x = -x;
    return CycloElem(a.n_, std::move(c));
  }
  friend CycloElem operator*(CycloElem const& a, CycloElem const& b) {
    check(a, b);
    return from_poly(a.n_, qp_mul(a.c_, b.c_));
  }

  CycloElem inverse() const {
    if (is_zero()) throw std::invalid_argument("CycloElem: zero inverse");
    // extended gcd of this (as a polynomial) against Phi_n
    QPoly r0 = cyclotomic_polynomial(n_), r1 = c_;
    qp_trim(r1);
    QPoly s0 = {}, s1 = {Rational(1)};  // coefficients of the input polynomial
    while (!r1.empty()) {
      auto [q, r] = qp_divmod(r0, r1);
      QPoly s2 = qp_sub(s0, qp_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("CycloElem: cyclotomic polynomial not coprime");
    for (auto& x : s0) x /= r0[0];
    return from_poly(n_, std::move(s0));
  }

  CycloElem pow(long e) const {
    CycloElem base = e < 0 ? inverse() : *this;
    CycloElem r = one(n_);
    for (long k = 0; k < (e < 0 ? -e : e); ++k) r = r * base;
    return r;
  }

  /// Conductor-raising embedding zeta_n = zeta_N^{N/n}.
  CycloElem embed(long bigger) const {
    if (bigger % n_ != 0) throw std::invalid_argument("CycloElem: conductor must divide target");
    long f = bigger / n_;
    QPoly p;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      size_t e = i * static_cast<size_t>(f);
      if (p.size() <= e) p.resize(e + 1, Rational(0));
      p[e] += c_[i];
    }
    return from_poly(bigger, std::move(p));
  }

  /// Galois twist zeta -> zeta^k (requires gcd(k, n) = 1).
  CycloElem galois(long k) const {
    long kk = ((k % n_) + n_) % n_;
    if (std::gcd(kk, n_) != 1) throw std::invalid_argument("CycloElem: k not coprime to conductor");
    QPoly p;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      size_t e = (i * static_cast<size_t>(kk)) % static_cast<size_t>(n_);
      if (p.size() <= e) p.resize(e + 1, Rational(0));
      p[e] += c_[i];
    }
    return from_poly(n_, std::move(p));
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      os << c_[i];
      if (i >= 1) os << "*z" << n_ << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  long n_;
  std::vector<Rational> c_;

  static void check(CycloElem const& a, CycloElem const& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("CycloElem: conductor mismatch");
  }

  static CycloElem from_poly(long n, QPoly p) {
    auto [q, r] = qp_divmod(std::move(p), cyclotomic_polynomial(n));
    (void)q;
    r.resize(static_cast<size_t>(euler_phi(n)), Rational(0));
    return CycloElem(n, std::move(r));
  }
};

}  // namespace descent
