#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent/cyclo.hpp"
#include "descent/fingroup.hpp"

namespace descent {

/// Field descriptor for Q(zeta_n)[t]/(t^m - c).  Degree m = 1 models the
/// plain cyclotomic field (t is then identified with c, and elements are
/// constant in t).
struct KummerField {
  long n = 1;
  int m = 1;
  CycloElem c = CycloElem::one(1);

  KummerField() = default;
  KummerField(long conductor, int degree, CycloElem constant)
      : n(conductor), m(degree), c(std::move(constant)) {
    if (degree < 1) throw std::invalid_argument("KummerField: degree must be >= 1");
    if (c.conductor() != n) throw std::invalid_argument("KummerField: constant conductor mismatch");
  }
  static KummerField cyclotomic(long conductor) {
    return KummerField(conductor, 1, CycloElem::one(conductor));
  }

  friend bool operator==(KummerField const& a, KummerField const& b) {
    return a.n == b.n && a.m == b.m && a.c == b.c;
  }
};

/// Exact element of Q(zeta_n)[t]/(t^m - c).  Field axioms hold contingent on
/// irreducibility of t^m - c, which is not proven up front: a reducible
/// modulus surfaces as a non-unit gcd during inversion and is reported as a
/// "not a field" error.
class KummerElem {
 public:
  KummerElem() : fld_(), coeff_{CycloElem::zero(1)} {}
  KummerElem(KummerField fld, std::vector<CycloElem> coeff)
      : fld_(std::move(fld)), coeff_(std::move(coeff)) {
    if (static_cast<int>(coeff_.size()) != fld_.m)
      throw std::invalid_argument("KummerElem: wrong coefficient length");
    for (auto const& c : coeff_)
      if (c.conductor() != fld_.n) throw std::invalid_argument("KummerElem: conductor mismatch");
  }

  static KummerElem from_cyclo(KummerField const& fld, CycloElem x) {
    std::vector<CycloElem> c(static_cast<size_t>(fld.m), CycloElem::zero(fld.n));
    c[0] = std::move(x);
    return KummerElem(fld, std::move(c));
  }
  static KummerElem from_rational(KummerField const& fld, Rational q) {
    return from_cyclo(fld, CycloElem::from_rational(fld.n, std::move(q)));
  }
  static KummerElem zero(KummerField const& fld) { return from_rational(fld, Rational(0)); }
  static KummerElem one(KummerField const& fld) { return from_rational(fld, Rational(1)); }
  static KummerElem zeta(KummerField const& fld, long k) {
    return from_cyclo(fld, CycloElem::root_of_unity(fld.n, k));
  }
  /// The radical generator t (for m = 1 this is the constant c itself).
  static KummerElem radical(KummerField const& fld) {
    if (fld.m == 1) return from_cyclo(fld, fld.c);
    std::vector<CycloElem> c(static_cast<size_t>(fld.m), CycloElem::zero(fld.n));
    c[1] = CycloElem::one(fld.n);
    return KummerElem(fld, std::move(c));
  }

  KummerField const& field() const { return fld_; }
  std::vector<CycloElem> const& coeff() const { return coeff_; }

  bool is_zero() const {
    for (auto const& c : coeff_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(KummerElem const& a, KummerElem const& b) {
    return a.fld_ == b.fld_ && a.coeff_ == b.coeff_;
  }

  friend KummerElem operator+(KummerElem const& a, KummerElem const& b) {
    check(a, b);
    auto c = a.coeff_;
    for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + b.coeff_[i];
    return KummerElem(a.fld_, std::move(c));
  }
  friend KummerElem operator-(KummerElem const& a, KummerElem const& b) {
    check(a, b);
    auto c = a.coeff_;
    for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] - b.coeff_[i];
    return KummerElem(a.fld_, std::move(c));
  }
  friend KummerElem operator-(KummerElem const& a) {
    auto c = a.coeff_;
    for (auto& x : c) x = -x;
    return KummerElem(a.fld_, std::move(c));
  }

  friend KummerElem operator*(KummerElem const& a, KummerElem const& b) {
    check(a, b);
    size_t m = static_cast<size_t>(a.fld_.m);
    std::vector<CycloElem> prod(2 * m, CycloElem::zero(a.fld_.n));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) prod[i + j] = prod[i + j] + a.coeff_[i] * b.coeff_[j];
    // reduce t^{m+k} = c * t^k
    std::vector<CycloElem> c(m, CycloElem::zero(a.fld_.n));
    for (size_t e = 0; e < 2 * m; ++e) {
      if (prod[e].is_zero()) continue;
      if (e < m)
        c[e] = c[e] + prod[e];
      else
        c[e - m] = c[e - m] + prod[e] * a.fld_.c;
    }
    return KummerElem(a.fld_, std::move(c));
  }

  KummerElem inverse() const {
    if (is_zero()) throw std::invalid_argument("KummerElem: zero inverse");
    if (fld_.m == 1) return from_cyclo(fld_, coeff_[0].inverse());
    // extended gcd in Q(zeta_n)[t] against t^m - c
    using KPoly = std::vector<CycloElem>;
    auto trim = [](KPoly& p) {
      while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    auto sub = [&](KPoly a, KPoly const& b) {
      if (a.size() < b.size()) a.resize(b.size(), CycloElem::zero(fld_.n));
      for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
      trim(a);
      return a;
    };
    auto mul = [&](KPoly const& a, KPoly const& b) {
      if (a.empty() || b.empty()) return KPoly{};
      KPoly r(a.size() + b.size() - 1, CycloElem::zero(fld_.n));
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
      trim(r);
      return r;
    };
    auto divmod = [&](KPoly a, KPoly const& b) {
      KPoly q;
      while (a.size() >= b.size() && !b.empty()) {
        CycloElem lead = a.back() * b.back().inverse();
        size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, CycloElem::zero(fld_.n));
        q[shift] = q[shift] + lead;
        KPoly scaled(shift, CycloElem::zero(fld_.n));
        for (auto const& x : b) scaled.push_back(x * lead);
        a = sub(std::move(a), scaled);
      }
      trim(q);
      return std::pair<KPoly, KPoly>{q, a};
    };

    KPoly modulus(static_cast<size_t>(fld_.m) + 1, CycloElem::zero(fld_.n));
    modulus[0] = -fld_.c;
    modulus[static_cast<size_t>(fld_.m)] = CycloElem::one(fld_.n);
    KPoly r0 = modulus, r1 = coeff_;
    trim(r1);
    KPoly s0 = {}, s1 = {CycloElem::one(fld_.n)};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      KPoly s2 = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.size() != 1)
      throw std::domain_error("KummerElem: t^m - c is reducible (not a field)");
    CycloElem unit = r0[0].inverse();
    s0.resize(static_cast<size_t>(fld_.m), CycloElem::zero(fld_.n));
    for (auto& x : s0) x = x * unit;
    return KummerElem(fld_, std::move(s0));
  }

  KummerElem pow(long e) const {
    KummerElem base = e < 0 ? inverse() : *this;
    KummerElem r = one(fld_);
    for (long k = 0; k < (e < 0 ? -e : e); ++k) r = r * base;
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeff_.size(); ++i) {
      if (coeff_[i].is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << coeff_[i].str() << ")";
      if (i >= 1) os << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  KummerField fld_;
  std::vector<CycloElem> coeff_;

  static void check(KummerElem const& a, KummerElem const& b) {
    if (!(a.fld_ == b.fld_)) throw std::invalid_argument("KummerElem: field mismatch");
  }
};

/// Field automorphism: zeta_n -> zeta_n^k together with the image of t.
/// The t-image must satisfy (image)^m = sigma(c) (verified at construction).
class FieldAut {
 public:
  FieldAut() = default;
  FieldAut(KummerField fld, long k, KummerElem t_image)
      : fld_(std::move(fld)), k_(((k % fld_.n) + fld_.n) % fld_.n), t_(std::move(t_image)) {
    if (std::gcd(k_, fld_.n) != 1)
      throw std::invalid_argument("FieldAut: exponent not coprime to conductor");
    KummerElem sigma_c = KummerElem::from_cyclo(fld_, fld_.c.galois(k_));
    if (!(t_.pow(fld_.m) == sigma_c))
      throw std::invalid_argument("FieldAut: t-image does not satisfy t^m = sigma(c)");
  }
  static FieldAut identity(KummerField const& fld) {
    return FieldAut(fld, 1, KummerElem::radical(fld));
  }
  /// Automorphism of a plain cyclotomic field (m = 1).
  static FieldAut cyclotomic(KummerField const& fld, long k) {
    if (fld.m != 1) throw std::invalid_argument("FieldAut: field has a radical layer");
    return FieldAut(fld, k, KummerElem::from_cyclo(fld, fld.c.galois(k)));
  }

  KummerField const& field() const { return fld_; }
  long zeta_exponent() const { return k_; }
  KummerElem const& t_image() const { return t_; }

  CycloElem operator()(CycloElem const& x) const { return x.galois(k_); }

  KummerElem operator()(KummerElem const& x) const {
    if (!(x.field() == fld_)) throw std::invalid_argument("FieldAut: field mismatch");
    KummerElem acc = KummerElem::zero(fld_);
    KummerElem tp = KummerElem::one(fld_);
    for (int j = 0; j < fld_.m; ++j) {
      acc = acc + KummerElem::from_cyclo(fld_, x.coeff()[static_cast<size_t>(j)].galois(k_)) * tp;
      tp = tp * t_;
    }
    return acc;
  }

  friend bool operator==(FieldAut const& a, FieldAut const& b) {
    return a.fld_ == b.fld_ && a.k_ == b.k_ && a.t_ == b.t_;
  }
  friend bool operator<(FieldAut const& a, FieldAut const& b) {
    if (a.k_ != b.k_) return a.k_ < b.k_;
    // compare t-image coordinates lexicographically for deterministic closures
    for (size_t i = 0; i < a.t_.coeff().size(); ++i) {
      auto const& ca = a.t_.coeff()[i].coords();
      auto const& cb = b.t_.coeff()[i].coords();
      if (ca != cb) return ca < cb;
    }
    return false;
  }

  std::string str() const {
    std::ostringstream os;
    os << "z" << fld_.n << " -> z" << fld_.n << "^" << k_;
    if (fld_.m > 1) os << ", t -> " << t_.str();
    return os.str();
  }

 private:
  KummerField fld_;
  long k_ = 1;
  KummerElem t_;
};

/// f after g.
inline FieldAut compose_aut(FieldAut const& f, FieldAut const& g) {
  if (!(f.field() == g.field())) throw std::invalid_argument("compose_aut: field mismatch");
  return FieldAut(f.field(), f.zeta_exponent() * g.zeta_exponent(), f(g.t_image()));
}

struct AutGroupReport {
  std::vector<FieldAut> closure;
  FinGroup table;
  bool matches_expected = false;
};

/// Closes a generating set under composition and compares the resulting
/// abstract group with an expected table.
inline AutGroupReport verify_aut_group(std::vector<FieldAut> const& gens,
                                       FinGroup const& expected, size_t bound = 256) {
  if (gens.empty()) throw std::invalid_argument("verify_aut_group: no generators");
  AutGroupReport rep;
  std::vector<FieldAut> elems{FieldAut::identity(gens[0].field())};
  bool grown = true;
  while (grown) {
    grown = false;
    for (size_t i = 0; i < elems.size(); ++i)
      for (auto const& g : gens) {
        FieldAut h = compose_aut(elems[i], g);
        bool known = false;
        for (auto const& x : elems) known = known || x == h;
        if (!known) {
          elems.push_back(h);
          grown = true;
          if (elems.size() > bound) throw std::invalid_argument("verify_aut_group: bound exceeded");
        }
      }
  }
  rep.closure = elems;
  int n = static_cast<int>(elems.size());
  rep.table.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  rep.table.inv.assign(static_cast<size_t>(n), -1);
  auto index_of = [&](FieldAut const& a) {
    for (int i = 0; i < n; ++i)
      if (elems[static_cast<size_t>(i)] == a) return i;
    throw std::logic_error("verify_aut_group: closure not closed");
  };
  for (int a = 0; a < n; ++a) {
    rep.table.labels.push_back(elems[static_cast<size_t>(a)].str());
    for (int b = 0; b < n; ++b)
      rep.table.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          index_of(compose_aut(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rep.table.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0)
        rep.table.inv[static_cast<size_t>(a)] = b;
  rep.matches_expected = isomorphic(rep.table, expected);
  return rep;
}

}  // namespace descent
