#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent/cohomology.hpp"
#include "descent/extension.hpp"
#include "descent/fingroup.hpp"
#include "descent/hom.hpp"
#include "descent/permgroup.hpp"

namespace descent {

/// Everything the descent-obstruction pipeline needs around a monodromy
/// representation psi: P -> S_d inside an extension 1 -> P -> E -> Q -> 1:
/// the image G, its normalizer N and centralizer C in S_d, the subgroups
/// CG and Z(G) of N, and the quotients N/C, N/CG, N/G and CG/G.
struct MonodromyContext {
  ExtensionModel model;
  GroupHom psi;

  PermGroup g_grp, n_grp, c_grp;
  TabulatedGroup n_tab;                            // N tabulated
  Subset g_in_n, c_in_n, cg_in_n, z_in_n;          // subgroups of the N table
  Quotient n_mod_c, n_mod_cg, n_mod_g;             // quotients of the N table
  SubTable cg_tab;                                 // CG as its own table
  Quotient cg_mod_g;                               // CG/G (quotient of cg_tab)
  SubTable z_tab;                                  // Z(G), abelian

  int n_index(Perm const& p) const { return n_tab.index_of(p); }
};

inline MonodromyContext build_monodromy_context(
    ExtensionModel model, GroupHom psi,
    std::optional<PermGroup> normalizer_overgroup = std::nullopt) {
  if (psi.domain() != model.p)
    throw std::invalid_argument("build_monodromy_context: psi must be defined on P");
  MonodromyContext ctx;
  ctx.model = std::move(model);
  ctx.psi = std::move(psi);
  ctx.g_grp = ctx.psi.image();
  ctx.n_grp = normalizer_in_sd(ctx.g_grp, normalizer_overgroup);
  ctx.c_grp = centralizer_in_sd(ctx.g_grp, normalizer_overgroup);
  ctx.n_tab = tabulate(ctx.n_grp);

  auto subset_of = [&](PermGroup const& grp) {
    std::set<int> s;
    for (auto const& p : grp.closure()) s.insert(ctx.n_tab.index_of(p));
    return Subset(s.begin(), s.end());
  };
  ctx.g_in_n = subset_of(ctx.g_grp);
  ctx.c_in_n = subset_of(ctx.c_grp);
  ctx.cg_in_n = product_set(ctx.n_tab.table, ctx.c_in_n, ctx.g_in_n);
  ctx.z_in_n = intersect(ctx.c_in_n, ctx.g_in_n);  // Z(G) = Cen_G(G)

  ctx.n_mod_c = quotient_group(ctx.n_tab.table, ctx.c_in_n);
  ctx.n_mod_cg = quotient_group(ctx.n_tab.table, ctx.cg_in_n);
  ctx.n_mod_g = quotient_group(ctx.n_tab.table, ctx.g_in_n);
  ctx.cg_tab = sub_table(ctx.n_tab.table, ctx.cg_in_n);

  Subset g_in_cg;
  for (int x : ctx.g_in_n) g_in_cg.push_back(ctx.cg_tab.from_parent.at(x));
  ctx.cg_mod_g = quotient_group(ctx.cg_tab.table, g_in_cg);
  ctx.z_tab = sub_table(ctx.n_tab.table, ctx.z_in_n);
  return ctx;
}

/// Group-of-moduli condition: for every U in E there is phi_U in N with
/// psi(U x U^{-1}) = phi_U psi(x) phi_U^{-1} for all x in P.
struct CModReport {
  bool holds = false;
  int failing_u = -1;             // E element with no phi_U, when !holds
  std::vector<int> phi_u;         // representative phi_U per E element (N index)
  std::vector<int> phi_bar;       // induced map E -> N/C (class index)
};

inline CModReport cmod_check(MonodromyContext const& ctx) {
  auto const& e = ctx.model.e;
  CModReport rep;
  rep.phi_u.assign(static_cast<size_t>(e.size()), -1);
  rep.phi_bar.assign(static_cast<size_t>(e.size()), -1);
  for (int u = 0; u < e.size(); ++u) {
    std::optional<int> found;
    for (int cand = 0; cand < ctx.n_tab.table.size() && !found; ++cand) {
      Perm const& phi = ctx.n_tab.elems[static_cast<size_t>(cand)];
      Perm phii = phi.inverse();
      bool ok = true;
      for (int x : ctx.model.p) {
        int cx = e.conj(u, x);
        if (!subset_contains(ctx.model.p, cx)) {
          ok = false;
          break;
        }
        if (!(ctx.psi(cx) == phi * ctx.psi(x) * phii)) {
          ok = false;
          break;
        }
      }
      if (ok) found = cand;
    }
    if (!found) {
      rep.holds = false;
      rep.failing_u = u;
      return rep;
    }
    rep.phi_u[static_cast<size_t>(u)] = *found;
    rep.phi_bar[static_cast<size_t>(u)] = ctx.n_mod_c.proj[static_cast<size_t>(*found)];
  }
  rep.holds = true;
  return rep;
}

/// The unique homomorphism lambda: Q -> N/CG under phi_bar; fails loudly when
/// phi_bar is not constant on P-cosets modulo CG.
struct LambdaReport {
  bool ok = false;
  std::vector<int> lambda;  // per Q element, an N/CG class
  std::string issue;
};

inline LambdaReport unique_lambda(MonodromyContext const& ctx, CModReport const& cmod) {
  LambdaReport rep;
  if (!cmod.holds) {
    rep.issue = "CMod fails";
    return rep;
  }
  auto const& e = ctx.model.e;
  rep.lambda.assign(static_cast<size_t>(ctx.model.q.group.size()), -1);
  for (int u = 0; u < e.size(); ++u) {
    int qc = ctx.model.q.proj[static_cast<size_t>(u)];
    int cls = ctx.n_mod_cg.proj[static_cast<size_t>(cmod.phi_u[static_cast<size_t>(u)])];
    if (rep.lambda[static_cast<size_t>(qc)] == -1)
      rep.lambda[static_cast<size_t>(qc)] = cls;
    else if (rep.lambda[static_cast<size_t>(qc)] != cls) {
      rep.issue = "phi_bar is not constant on P-cosets modulo CG";
      return rep;
    }
  }
  for (int a = 0; a < ctx.model.q.group.size(); ++a)
    for (int b = 0; b < ctx.model.q.group.size(); ++b)
      if (rep.lambda[static_cast<size_t>(ctx.model.q.group.op(a, b))] !=
          ctx.n_mod_cg.group.op(rep.lambda[static_cast<size_t>(a)], rep.lambda[static_cast<size_t>(b)])) {
        rep.issue = "lambda is not a homomorphism";
        return rep;
      }
  rep.ok = true;
  return rep;
}

/// All homomorphisms Lambda: Q -> N/G projecting to lambda under N/G -> N/CG.
inline std::vector<std::vector<int>> enumerate_lifts(MonodromyContext const& ctx,
                                                     std::vector<int> const& lambda) {
  int nq = ctx.model.q.group.size();
  // class map N/G -> N/CG via representatives
  std::vector<int> ng_to_ncg(static_cast<size_t>(ctx.n_mod_g.group.size()), -1);
  for (int x = 0; x < ctx.n_tab.table.size(); ++x)
    ng_to_ncg[static_cast<size_t>(ctx.n_mod_g.proj[static_cast<size_t>(x)])] =
        ctx.n_mod_cg.proj[static_cast<size_t>(x)];

  std::vector<std::vector<int>> fibers(static_cast<size_t>(nq));
  for (int q = 0; q < nq; ++q)
    for (int c = 0; c < ctx.n_mod_g.group.size(); ++c)
      if (ng_to_ncg[static_cast<size_t>(c)] == lambda[static_cast<size_t>(q)])
        fibers[static_cast<size_t>(q)].push_back(c);

  std::vector<std::vector<int>> lifts;
  std::vector<int> cur(static_cast<size_t>(nq), -1);
  cur[0] = 0;  // normalized: identity to identity coset
  std::function<void(int)> rec = [&](int q) {
    if (q == nq) {
      for (int a = 0; a < nq; ++a)
        for (int b = 0; b < nq; ++b)
          if (cur[static_cast<size_t>(ctx.model.q.group.op(a, b))] !=
              ctx.n_mod_g.group.op(cur[static_cast<size_t>(a)], cur[static_cast<size_t>(b)]))
            return;
      lifts.push_back(cur);
      return;
    }
    for (int c : fibers[static_cast<size_t>(q)]) {
      cur[static_cast<size_t>(q)] = c;
      rec(q + 1);
    }
  };
  rec(1);
  return lifts;
}

/// Module structures derived from lambda / a lift Lambda.
inline GModule action_on_center(MonodromyContext const& ctx, std::vector<int> const& lambda) {
  GModule mod;
  mod.m = ctx.z_tab.table;
  mod.q = ctx.model.q.group;
  mod.act.assign(static_cast<size_t>(mod.q.size()), {});
  for (int q = 0; q < mod.q.size(); ++q) {
    // any representative of lambda(q) in N; conjugation fixes Z(G) modulo CG
    int rep = -1;
    for (int x = 0; x < ctx.n_tab.table.size() && rep < 0; ++x)
      if (ctx.n_mod_cg.proj[static_cast<size_t>(x)] == lambda[static_cast<size_t>(q)]) rep = x;
    auto& row = mod.act[static_cast<size_t>(q)];
    row.resize(static_cast<size_t>(mod.m.size()));
    for (int z = 0; z < mod.m.size(); ++z) {
      int zi = ctx.z_tab.to_parent[static_cast<size_t>(z)];
      row[static_cast<size_t>(z)] = ctx.z_tab.from_parent.at(ctx.n_tab.table.conj(rep, zi));
    }
  }
  mod.validate();
  return mod;
}

inline GModule action_on_cg_mod_g(MonodromyContext const& ctx, std::vector<int> const& lift) {
  GModule mod;
  mod.m = ctx.cg_mod_g.group;
  mod.q = ctx.model.q.group;
  mod.act.assign(static_cast<size_t>(mod.q.size()), {});
  for (int q = 0; q < mod.q.size(); ++q) {
    int rep = -1;  // representative of Lambda(q) in N; conjugation by G fixes CG/G
    for (int x = 0; x < ctx.n_tab.table.size() && rep < 0; ++x)
      if (ctx.n_mod_g.proj[static_cast<size_t>(x)] == lift[static_cast<size_t>(q)]) rep = x;
    auto& row = mod.act[static_cast<size_t>(q)];
    row.resize(static_cast<size_t>(mod.m.size()));
    for (int c = 0; c < mod.m.size(); ++c) {
      // act on a CG representative of the class
      int cg_rep = -1;
      for (int y = 0; y < ctx.cg_tab.table.size() && cg_rep < 0; ++y)
        if (ctx.cg_mod_g.proj[static_cast<size_t>(y)] == c) cg_rep = ctx.cg_tab.to_parent[static_cast<size_t>(y)];
      int conj = ctx.n_tab.table.conj(rep, cg_rep);
      row[static_cast<size_t>(c)] = ctx.cg_mod_g.proj[static_cast<size_t>(ctx.cg_tab.from_parent.at(conj))];
    }
  }
  mod.validate();
  return mod;
}

struct ObstructionResult {
  bool ok = false;
  std::string issue;
  Cochain2 omega;        // valued in z_tab indices
  GModule center_module; // L-action of Q on Z(G)
  std::vector<int> phi_u;  // chosen phi_u per Q element (N indices)
};

/// The 2-cocycle Omega(u,v) = phi_u phi_v phi_{uv}^{-1} (psi(s(u)s(v)s(uv)^{-1}))^{-1},
/// with phi_u in N satisfying phi_u = Lambda(u) mod G and phi_u = phi_bar(s(u)) mod C
/// (unique modulo Z(G), verified).  Optional shifts replace phi_u by phi_u * z.
inline ObstructionResult obstruction_cocycle(MonodromyContext const& ctx, CModReport const& cmod,
                                             std::vector<int> const& lift,
                                             std::vector<int> const& section,
                                             std::vector<int> const& shifts = {}) {
  ObstructionResult res;
  auto const& e = ctx.model.e;
  auto const& ntab = ctx.n_tab.table;
  int nq = ctx.model.q.group.size();
  if (static_cast<int>(section.size()) != nq || section[0] != 0)
    throw std::invalid_argument("obstruction_cocycle: section must be normalized (s(1) = 1)");
  for (int q = 0; q < nq; ++q)
    if (ctx.model.q.proj[static_cast<size_t>(section[static_cast<size_t>(q)])] != q)
      throw std::invalid_argument("obstruction_cocycle: section does not split the projection");

  std::vector<int> phi(static_cast<size_t>(nq), -1);
  for (int q = 0; q < nq; ++q) {
    std::vector<int> sols;
    for (int x = 0; x < ntab.size(); ++x)
      if (ctx.n_mod_g.proj[static_cast<size_t>(x)] == lift[static_cast<size_t>(q)] &&
          ctx.n_mod_c.proj[static_cast<size_t>(x)] ==
              cmod.phi_bar[static_cast<size_t>(section[static_cast<size_t>(q)])])
        sols.push_back(x);
    if (sols.empty()) {
      res.issue = "no phi_u satisfies both congruences at q = " + std::to_string(q);
      return res;
    }
    // uniqueness modulo Z(G)
    std::set<int> coset;
    for (int z : ctx.z_in_n) coset.insert(ntab.op(sols[0], z));
    if (Subset(coset.begin(), coset.end()) != sols) {
      res.issue = "phi_u solutions are not a single Z(G)-coset at q = " + std::to_string(q);
      return res;
    }
    phi[static_cast<size_t>(q)] = sols[0];
  }
  phi[0] = 0;  // identity representative for the identity class
  if (!shifts.empty()) {
    for (int q = 1; q < nq; ++q)
      phi[static_cast<size_t>(q)] =
          ntab.op(phi[static_cast<size_t>(q)],
                  ctx.z_tab.to_parent[static_cast<size_t>(shifts[static_cast<size_t>(q)])]);
  }

  res.center_module = action_on_center(ctx, [&] {
    std::vector<int> lambda(static_cast<size_t>(nq));
    for (int q = 0; q < nq; ++q) lambda[static_cast<size_t>(q)] = ctx.n_mod_cg.proj[static_cast<size_t>(phi[static_cast<size_t>(q)])];
    return lambda;
  }());

  res.omega = zero_cochain2(res.center_module);
  for (int u = 0; u < nq; ++u)
    for (int v = 0; v < nq; ++v) {
      int uv = ctx.model.q.group.op(u, v);
      int su = section[static_cast<size_t>(u)], sv = section[static_cast<size_t>(v)];
      int suv = section[static_cast<size_t>(uv)];
      int defect = e.op(e.op(su, sv), e.inverse(suv));  // in P
      if (!subset_contains(ctx.model.p, defect))
        throw std::logic_error("obstruction_cocycle: section defect escaped P");
      int psi_defect = ctx.n_index(ctx.psi(defect));
      int val = ntab.op(ntab.op(ntab.op(phi[static_cast<size_t>(u)], phi[static_cast<size_t>(v)]),
                                ntab.inverse(phi[static_cast<size_t>(uv)])),
                        ntab.inverse(psi_defect));
      if (!subset_contains(ctx.z_in_n, val)) {
        res.issue = "Omega value escapes Z(G): inconsistent CMod data";
        return res;
      }
      res.omega[static_cast<size_t>(u)][static_cast<size_t>(v)] = ctx.z_tab.from_parent.at(val);
    }
  if (!is_cocycle2(res.center_module, res.omega)) {
    res.issue = "Omega is not a 2-cocycle for the center action";
    return res;
  }
  res.phi_u = phi;
  res.ok = true;
  return res;
}

/// Action of Q on the full centralizer C via a lift Lambda (conjugation by
/// representatives; well-defined since G fixes C pointwise).
inline GModule action_on_centralizer(MonodromyContext const& ctx, std::vector<int> const& lift) {
  GModule mod;
  SubTable ctab = sub_table(ctx.n_tab.table, ctx.c_in_n);
  mod.m = ctab.table;
  mod.q = ctx.model.q.group;
  mod.act.assign(static_cast<size_t>(mod.q.size()), {});
  for (int q = 0; q < mod.q.size(); ++q) {
    int rep = -1;
    for (int x = 0; x < ctx.n_tab.table.size() && rep < 0; ++x)
      if (ctx.n_mod_g.proj[static_cast<size_t>(x)] == lift[static_cast<size_t>(q)]) rep = x;
    auto& row = mod.act[static_cast<size_t>(q)];
    row.resize(static_cast<size_t>(mod.m.size()));
    for (int c = 0; c < mod.m.size(); ++c)
      row[static_cast<size_t>(c)] =
          ctab.from_parent.at(ctx.n_tab.table.conj(rep, ctab.to_parent[static_cast<size_t>(c)]));
  }
  mod.validate();
  return mod;
}

/// Least-centralizer-element section CG/G -> C.
inline std::vector<int> centralizer_section(MonodromyContext const& ctx) {
  std::vector<int> csec(static_cast<size_t>(ctx.cg_mod_g.group.size()), -1);
  for (int c : ctx.c_in_n) {
    int cls = ctx.cg_mod_g.proj[static_cast<size_t>(ctx.cg_tab.from_parent.at(c))];
    if (csec[static_cast<size_t>(cls)] == -1) csec[static_cast<size_t>(cls)] = c;
  }
  for (int v : csec)
    if (v == -1) throw std::logic_error("centralizer_section: CG/G class with no C element");
  return csec;
}

/// Connecting map of 1 -> Z(G) -> C -> CG/G -> 1:
/// (delta theta)(u,v) = theta~(u) . (u . theta~(v)) . theta~(uv)^{-1},
/// lifted through the supplied section and valued in Z(G) (verified).
inline Cochain2 connecting_delta1(MonodromyContext const& ctx, std::vector<int> const& lift,
                                  Cochain1 const& theta, std::vector<int> const& csec) {
  auto const& ntab = ctx.n_tab.table;
  int nq = ctx.model.q.group.size();
  std::vector<int> nrep(static_cast<size_t>(nq), -1);
  for (int q = 0; q < nq; ++q)
    for (int x = 0; x < ntab.size() && nrep[static_cast<size_t>(q)] < 0; ++x)
      if (ctx.n_mod_g.proj[static_cast<size_t>(x)] == lift[static_cast<size_t>(q)])
        nrep[static_cast<size_t>(q)] = x;
  Cochain2 delta(static_cast<size_t>(nq), std::vector<int>(static_cast<size_t>(nq), 0));
  for (int u = 0; u < nq; ++u)
    for (int v = 0; v < nq; ++v) {
      int uv = ctx.model.q.group.op(u, v);
      int tu = csec[static_cast<size_t>(theta[static_cast<size_t>(u)])];
      int tv = csec[static_cast<size_t>(theta[static_cast<size_t>(v)])];
      int tuv = csec[static_cast<size_t>(theta[static_cast<size_t>(uv)])];
      int acted = ntab.conj(nrep[static_cast<size_t>(u)], tv);
      int val = ntab.op(ntab.op(tu, acted), ntab.inverse(tuv));
      if (!subset_contains(ctx.z_in_n, val))
        throw std::invalid_argument("connecting_delta1: value escapes Z(G) (inconsistent action data)");
      delta[static_cast<size_t>(u)][static_cast<size_t>(v)] = ctx.z_tab.from_parent.at(val);
    }
  return delta;
}

struct DefinabilityResult {
  bool definable = false;
  std::optional<Cochain1> theta;     // witness 1-cocycle over CG/G
  size_t cocycles_scanned = 0;
};

/// Tests whether some 1-cocycle theta over CG/G cancels Omega:
/// delta_1(theta) + Omega is a coboundary (written additively; the
/// multiplicative form is Omega^{-1} in the image of delta_1).
inline DefinabilityResult definability_test(MonodromyContext const& ctx,
                                            std::vector<int> const& lift,
                                            ObstructionResult const& obs) {
  GModule star = action_on_cg_mod_g(ctx, lift);
  auto csec = centralizer_section(ctx);
  DefinabilityResult res;
  for (auto const& theta : all_cocycles1(star)) {
    ++res.cocycles_scanned;
    Cochain2 delta = connecting_delta1(ctx, lift, theta, csec);
    if (!is_cocycle2(obs.center_module, delta))
      throw std::logic_error("definability_test: delta_1(theta) is not a 2-cocycle");
    Cochain2 sum = add2(obs.center_module, delta, obs.omega);
    if (coboundary_witness2(obs.center_module, sum)) {
      res.definable = true;
      res.theta = theta;
      return res;
    }
  }
  res.definable = false;
  return res;
}

/// With a homomorphic section s: Q -> E, searches full homomorphic lifts
/// phi: Q -> N of phi_bar o s; nonempty exactly when the cover ascends.
struct SplitCriterionResult {
  bool applicable = false;  // section was a homomorphism
  std::vector<std::vector<int>> lifts;  // each: Q -> N element indices
};

inline SplitCriterionResult split_criterion(MonodromyContext const& ctx, CModReport const& cmod,
                                            std::vector<int> const& section) {
  SplitCriterionResult res;
  auto const& e = ctx.model.e;
  int nq = ctx.model.q.group.size();
  for (int a = 0; a < nq; ++a)
    for (int b = 0; b < nq; ++b)
      if (section[static_cast<size_t>(ctx.model.q.group.op(a, b))] !=
          e.op(section[static_cast<size_t>(a)], section[static_cast<size_t>(b)]))
        return res;  // not a homomorphism: inapplicable
  res.applicable = true;

  auto const& ntab = ctx.n_tab.table;
  std::vector<std::vector<int>> fibers(static_cast<size_t>(nq));
  for (int q = 0; q < nq; ++q)
    for (int x = 0; x < ntab.size(); ++x)
      if (ctx.n_mod_c.proj[static_cast<size_t>(x)] ==
          cmod.phi_bar[static_cast<size_t>(section[static_cast<size_t>(q)])])
        fibers[static_cast<size_t>(q)].push_back(x);

  std::vector<int> cur(static_cast<size_t>(nq), 0);
  std::function<void(int)> rec = [&](int q) {
    if (q == nq) {
      for (int a = 0; a < nq; ++a)
        for (int b = 0; b < nq; ++b)
          if (cur[static_cast<size_t>(ctx.model.q.group.op(a, b))] !=
              ntab.op(cur[static_cast<size_t>(a)], cur[static_cast<size_t>(b)]))
            return;
      res.lifts.push_back(cur);
      return;
    }
    for (int x : fibers[static_cast<size_t>(q)]) {
      cur[static_cast<size_t>(q)] = x;
      rec(q + 1);
    }
  };
  rec(1);
  return res;
}

/// Homomorphic sections Q -> E of the projection, if any (split extensions).
inline std::vector<std::vector<int>> homomorphic_sections(ExtensionModel const& model) {
  int nq = model.q.group.size();
  std::vector<std::vector<int>> fibers(static_cast<size_t>(nq));
  for (int x = 0; x < model.e.size(); ++x)
    fibers[static_cast<size_t>(model.q.proj[static_cast<size_t>(x)])].push_back(x);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(nq), 0);
  std::function<void(int)> rec = [&](int q) {
    if (q == nq) {
      for (int a = 0; a < nq; ++a)
        for (int b = 0; b < nq; ++b)
          if (cur[static_cast<size_t>(model.q.group.op(a, b))] !=
              model.e.op(cur[static_cast<size_t>(a)], cur[static_cast<size_t>(b)]))
            return;
      out.push_back(cur);
      return;
    }
    for (int x : fibers[static_cast<size_t>(q)]) {
      cur[static_cast<size_t>(q)] = x;
      rec(q + 1);
    }
  };
  rec(1);
  return out;
}

}  // namespace descent
