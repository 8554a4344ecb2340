#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "descent/fingroup.hpp"
#include "descent/hom.hpp"

namespace descent {

/// Finite model of 1 -> P -> E -> Q -> 1 with P a designated normal subgroup.
struct ExtensionModel {
  FinGroup e;
  Subset p;
  Quotient q;  // E/P with projection

  ExtensionModel() = default;
  ExtensionModel(FinGroup ambient, Subset sub) : e(std::move(ambient)), p(std::move(sub)) {
    if (!is_subgroup(e, p)) throw std::invalid_argument("ExtensionModel: P is not a subgroup");
    if (!is_normal(e, p)) throw std::invalid_argument("ExtensionModel: P is not normal");
    q = quotient_group(e, p);
  }
};

/// A cover model: designated subgroups H <= E and R <= P.
struct CoverModel {
  ExtensionModel ext;
  Subset h, r;

  CoverModel() = default;
  CoverModel(ExtensionModel m, Subset hh, Subset rr)
      : ext(std::move(m)), h(std::move(hh)), r(std::move(rr)) {
    if (!is_subgroup(ext.e, h) || !is_subgroup(ext.e, r))
      throw std::invalid_argument("CoverModel: H and R must be subgroups");
    if (!subset_leq(r, ext.p)) throw std::invalid_argument("CoverModel: R must lie in P");
  }
};

/// Per-condition report for the "defined over" test:
/// (1) H n P = R; (2) H normalizes R; (3) H normal => R normal in P
/// (an implication: vacuous when H is not normal); (4) the projection maps H
/// onto Q with kernel R.
struct DefinedOverReport {
  bool c1 = false;
  bool c2 = false;
  bool c3_vacuous = false;
  bool c3 = false;
  bool c4 = false;
  bool all() const { return c1 && c2 && (c3_vacuous || c3) && c4; }
};

inline DefinedOverReport defined_over_check(CoverModel const& c) {
  auto const& g = c.ext.e;
  DefinedOverReport rep;
  rep.c1 = intersect(c.h, c.ext.p) == c.r;

  rep.c2 = true;
  for (int x : c.h)
    for (int a : c.r) rep.c2 = rep.c2 && subset_contains(c.r, g.conj(x, a));

  bool h_normal = is_normal(g, c.h);
  rep.c3_vacuous = !h_normal;
  if (h_normal) {
    rep.c3 = true;
    for (int x : c.ext.p)
      for (int a : c.r) rep.c3 = rep.c3 && subset_contains(c.r, g.conj(x, a));
  }

  // (4): proj|H surjects onto Q with kernel H n P
  std::set<int> image;
  for (int x : c.h) image.insert(c.ext.q.proj[static_cast<size_t>(x)]);
  bool onto = static_cast<int>(image.size()) == c.ext.q.group.size();
  Subset ker;
  for (int x : c.h)
    if (c.ext.q.proj[static_cast<size_t>(x)] == 0) ker.push_back(x);
  rep.c4 = onto && ker == c.r;
  return rep;
}

struct RegularityReport {
  size_t index_e_h = 0;
  size_t index_p_r = 0;
  bool equal = false;
};

/// The index identity [E:H] = [P:R] that regularity forces.
inline RegularityReport regularity_index_check(CoverModel const& c) {
  RegularityReport rep;
  rep.index_e_h = static_cast<size_t>(c.ext.e.size()) / c.h.size();
  rep.index_p_r = c.ext.p.size() / c.r.size();
  rep.equal = rep.index_e_h == rep.index_p_r;
  return rep;
}

struct GaloisClosureReport {
  Subset h_hat;  // normal core of H in E
  Subset r_hat;  // normal core of R in P
  bool intersection_identity = false;  // h_hat n P = r_hat
  bool regular_closure = false;        // h_hat * R = H  (G-cover criterion)
};

inline GaloisClosureReport galois_closure(CoverModel const& c) {
  auto const& g = c.ext.e;
  GaloisClosureReport rep;
  rep.h_hat = normal_core_in(g, whole_subset(g), c.h);
  rep.r_hat = normal_core_in(g, c.ext.p, c.r);
  rep.intersection_identity = intersect(rep.h_hat, c.ext.p) == rep.r_hat;
  rep.regular_closure = product_set(g, rep.h_hat, c.r) == c.h;
  return rep;
}

/// Quotient automorphism induced by an automorphism of E preserving a normal
/// subgroup n (given element-wise); verified to round-trip with the
/// projection.
inline std::vector<int> induced_quotient_aut(FinGroup const& e, std::vector<int> const& aut,
                                             Subset const& nsub) {
  if (static_cast<int>(aut.size()) != e.size())
    throw std::invalid_argument("induced_quotient_aut: map must cover E");
  for (int a = 0; a < e.size(); ++a)
    for (int b = 0; b < e.size(); ++b)
      if (aut[static_cast<size_t>(e.op(a, b))] !=
          e.op(aut[static_cast<size_t>(a)], aut[static_cast<size_t>(b)]))
        throw std::invalid_argument("induced_quotient_aut: not a homomorphism");
  for (int x : nsub)
    if (!subset_contains(nsub, aut[static_cast<size_t>(x)]))
      throw std::invalid_argument("induced_quotient_aut: normal subgroup not preserved");

  auto q = quotient_group(e, nsub);
  int m = q.group.size();
  std::vector<int> bar(static_cast<size_t>(m), -1);
  for (int x = 0; x < e.size(); ++x) {
    int from = q.proj[static_cast<size_t>(x)];
    int to = q.proj[static_cast<size_t>(aut[static_cast<size_t>(x)])];
    if (bar[static_cast<size_t>(from)] == -1)
      bar[static_cast<size_t>(from)] = to;
    else if (bar[static_cast<size_t>(from)] != to)
      throw std::logic_error("induced_quotient_aut: map not constant on cosets");
  }
  std::set<int> im(bar.begin(), bar.end());
  if (static_cast<int>(im.size()) != m)
    throw std::logic_error("induced_quotient_aut: induced map not bijective");
  return bar;
}

struct AscentResult {
  bool ok = false;
  Subset h_prime;
  std::optional<std::pair<int, int>> failing_pair;  // (i, j) with g_i g_j not in g_{ij} H
  bool intersection_ok = false;                     // H' n P = R
  bool defined_over_ok = false;                     // (1)-(4) against (E', P, H', R)
};

/// Group-ascent construction: given a cover model inside E' (with designated
/// E <= E' normal), and transversal elements g_1..g_k of E in E' with images
/// forming a transversal of E'/E, tries H' = union of g_i H.  H' is a group
/// exactly when the cocycle condition g_i g_j in g_{ij} H holds throughout.
inline AscentResult ascend_group(FinGroup const& eprime, Subset const& esub, Subset const& p,
                                 Subset const& h, Subset const& r,
                                 std::vector<int> const& transversal) {
  if (!is_subgroup(eprime, esub) || !is_normal(eprime, esub))
    throw std::invalid_argument("ascend_group: E must be a normal subgroup of E'");
  if (!is_subgroup(eprime, h) || !subset_leq(h, esub))
    throw std::invalid_argument("ascend_group: H must be a subgroup of E");

  // transversal validity: images in E'/E are pairwise distinct and cover
  auto qe = quotient_group(eprime, esub);
  std::set<int> classes;
  for (int t : transversal) classes.insert(qe.proj[static_cast<size_t>(t)]);
  if (static_cast<int>(classes.size()) != static_cast<int>(transversal.size()) ||
      static_cast<int>(classes.size()) != qe.group.size())
    throw std::invalid_argument("ascend_group: not a transversal of E in E'");
  std::vector<int> rep_of_class(static_cast<size_t>(qe.group.size()), -1);
  for (int t : transversal) rep_of_class[static_cast<size_t>(qe.proj[static_cast<size_t>(t)])] = t;

  AscentResult res;
  // each transversal element must normalize H
  for (int t : transversal)
    for (int x : h)
      if (!subset_contains(h, eprime.conj(t, x))) {
        res.ok = false;
        res.failing_pair = std::nullopt;
        return res;
      }

  // cocycle condition: g_i g_j in g_{ij} H
  for (size_t i = 0; i < transversal.size(); ++i)
    for (size_t j = 0; j < transversal.size(); ++j) {
      int gi = transversal[i], gj = transversal[j];
      int prod = eprime.op(gi, gj);
      int gij = rep_of_class[static_cast<size_t>(qe.proj[static_cast<size_t>(prod)])];
      int delta = eprime.op(eprime.inverse(gij), prod);
      if (!subset_contains(h, delta)) {
        res.ok = false;
        res.failing_pair = {static_cast<int>(i), static_cast<int>(j)};
        return res;
      }
    }

  std::set<int> hp;
  for (int t : transversal)
    for (int x : h) hp.insert(eprime.op(t, x));
  res.h_prime.assign(hp.begin(), hp.end());
  res.ok = is_subgroup(eprime, res.h_prime);
  if (!res.ok) return res;

  res.intersection_ok = intersect(res.h_prime, p) == r;
  ExtensionModel m(eprime, p);
  res.defined_over_ok = defined_over_check(CoverModel(m, res.h_prime, r)).all();
  return res;
}

}  // namespace descent
