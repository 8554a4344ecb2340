#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "descent/fingroup.hpp"

namespace descent {

inline constexpr std::uint64_t kCochainEnumerationBound = 1u << 24;

/// Finite coefficient group with a left action of Q by automorphisms.
/// The coefficient FinGroup is used additively (op = +, element 0 = zero) when
/// it is abelian; 1-cocycle machinery also accepts non-abelian coefficients
/// (sets of cocycles only, no cohomology group).
struct GModule {
  FinGroup m;
  FinGroup q;
  std::vector<std::vector<int>> act;  // act[q][m] -> m

  int act_on(int u, int x) const { return act[static_cast<size_t>(u)][static_cast<size_t>(x)]; }

  void validate() const {
    if (static_cast<int>(act.size()) != q.size())
      throw std::invalid_argument("GModule: action table size mismatch");
    for (int x = 0; x < m.size(); ++x)
      if (act_on(0, x) != x) throw std::invalid_argument("GModule: identity acts nontrivially");
    for (int u = 0; u < q.size(); ++u) {
      std::set<int> img;
      for (int x = 0; x < m.size(); ++x) img.insert(act_on(u, x));
      if (static_cast<int>(img.size()) != m.size())
        throw std::invalid_argument("GModule: action not bijective");
      for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y)
          if (act_on(u, m.op(x, y)) != m.op(act_on(u, x), act_on(u, y)))
            throw std::invalid_argument("GModule: action not by automorphisms");
    }
    for (int u = 0; u < q.size(); ++u)
      for (int v = 0; v < q.size(); ++v)
        for (int x = 0; x < m.size(); ++x)
          if (act_on(q.op(u, v), x) != act_on(u, act_on(v, x)))
            throw std::invalid_argument("GModule: action not associative");
  }

  static GModule trivial(FinGroup coeff, FinGroup acting) {
    GModule g;
    g.m = std::move(coeff);
    g.q = std::move(acting);
    g.act.assign(static_cast<size_t>(g.q.size()), {});
    for (auto& row : g.act) {
      row.resize(static_cast<size_t>(g.m.size()));
      for (int x = 0; x < g.m.size(); ++x) row[static_cast<size_t>(x)] = x;
    }
    return g;
  }
};

/// Normalized cochains: value 0 at identity arguments.
using Cochain1 = std::vector<int>;               // indexed by Q
using Cochain2 = std::vector<std::vector<int>>;  // indexed by Q x Q

inline Cochain1 zero_cochain1(GModule const& mod) {
  return Cochain1(static_cast<size_t>(mod.q.size()), 0);
}

inline Cochain2 zero_cochain2(GModule const& mod) {
  return Cochain2(static_cast<size_t>(mod.q.size()),
                  std::vector<int>(static_cast<size_t>(mod.q.size()), 0));
}

inline bool is_normalized1(GModule const& mod, Cochain1 const& c) {
  return static_cast<int>(c.size()) == mod.q.size() && c[0] == 0;
}

inline bool is_normalized2(GModule const& mod, Cochain2 const& c) {
  if (static_cast<int>(c.size()) != mod.q.size()) return false;
  for (int u = 0; u < mod.q.size(); ++u) {
    if (static_cast<int>(c[static_cast<size_t>(u)].size()) != mod.q.size()) return false;
    if (c[static_cast<size_t>(u)][0] != 0 || c[0][static_cast<size_t>(u)] != 0) return false;
  }
  return true;
}

/// c(uv) = c(u) + u.c(v), written multiplicatively in that order so it is
/// also correct for non-abelian coefficients.
inline bool is_cocycle1(GModule const& mod, Cochain1 const& c) {
  if (!is_normalized1(mod, c)) return false;
  for (int u = 0; u < mod.q.size(); ++u)
    for (int v = 0; v < mod.q.size(); ++v)
      if (c[static_cast<size_t>(mod.q.op(u, v))] !=
          mod.m.op(c[static_cast<size_t>(u)], mod.act_on(u, c[static_cast<size_t>(v)])))
        return false;
  return true;
}

/// c(u,v) + c(uv,w) = u.c(v,w) + c(u,vw), abelian coefficients.
inline bool is_cocycle2(GModule const& mod, Cochain2 const& c) {
  if (!is_normalized2(mod, c)) return false;
  for (int u = 0; u < mod.q.size(); ++u)
    for (int v = 0; v < mod.q.size(); ++v)
      for (int w = 0; w < mod.q.size(); ++w) {
        int lhs = mod.m.op(c[static_cast<size_t>(u)][static_cast<size_t>(v)],
                           c[static_cast<size_t>(mod.q.op(u, v))][static_cast<size_t>(w)]);
        int rhs = mod.m.op(mod.act_on(u, c[static_cast<size_t>(v)][static_cast<size_t>(w)]),
                           c[static_cast<size_t>(u)][static_cast<size_t>(mod.q.op(v, w))]);
        if (lhs != rhs) return false;
      }
  return true;
}

inline Cochain1 coboundary1(GModule const& mod, int m0) {
  Cochain1 c(static_cast<size_t>(mod.q.size()));
  for (int u = 0; u < mod.q.size(); ++u)
    c[static_cast<size_t>(u)] = mod.m.op(m0, mod.m.inverse(mod.act_on(u, m0)));
  return c;
}

inline Cochain2 coboundary2(GModule const& mod, Cochain1 const& b) {
  Cochain2 c = zero_cochain2(mod);
  for (int u = 0; u < mod.q.size(); ++u)
    for (int v = 0; v < mod.q.size(); ++v) {
      int val = mod.m.op(mod.act_on(u, b[static_cast<size_t>(v)]),
                         mod.m.inverse(b[static_cast<size_t>(mod.q.op(u, v))]));
      c[static_cast<size_t>(u)][static_cast<size_t>(v)] = mod.m.op(val, b[static_cast<size_t>(u)]);
    }
  return c;
}

inline Cochain2 add2(GModule const& mod, Cochain2 const& a, Cochain2 const& b) {
  Cochain2 c = zero_cochain2(mod);
  for (int u = 0; u < mod.q.size(); ++u)
    for (int v = 0; v < mod.q.size(); ++v)
      c[static_cast<size_t>(u)][static_cast<size_t>(v)] =
          mod.m.op(a[static_cast<size_t>(u)][static_cast<size_t>(v)],
                   b[static_cast<size_t>(u)][static_cast<size_t>(v)]);
  return c;
}

namespace detail {

template <typename F>
void for_each_normalized1(GModule const& mod, F&& fn) {
  int slots = mod.q.size() - 1;
  std::uint64_t total = 1;
  for (int k = 0; k < slots; ++k) {
    total *= static_cast<std::uint64_t>(mod.m.size());
    if (total > kCochainEnumerationBound)
      throw std::invalid_argument("cochain enumeration bound exceeded");
  }
  Cochain1 c(static_cast<size_t>(mod.q.size()), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int k = 0; k < slots; ++k) {
      c[static_cast<size_t>(k + 1)] = static_cast<int>(rest % static_cast<std::uint64_t>(mod.m.size()));
      rest /= static_cast<std::uint64_t>(mod.m.size());
    }
    fn(c);
  }
}

template <typename F>
void for_each_normalized2(GModule const& mod, F&& fn) {
  int side = mod.q.size() - 1;
  int slots = side * side;
  std::uint64_t total = 1;
  for (int k = 0; k < slots; ++k) {
    total *= static_cast<std::uint64_t>(mod.m.size());
    if (total > kCochainEnumerationBound)
      throw std::invalid_argument("cochain enumeration bound exceeded");
  }
  Cochain2 c(static_cast<size_t>(mod.q.size()),
             std::vector<int>(static_cast<size_t>(mod.q.size()), 0));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int k = 0; k < slots; ++k) {
      int u = k / side + 1, v = k % side + 1;
      c[static_cast<size_t>(u)][static_cast<size_t>(v)] =
          static_cast<int>(rest % static_cast<std::uint64_t>(mod.m.size()));
      rest /= static_cast<std::uint64_t>(mod.m.size());
    }
    fn(c);
  }
}

}  // namespace detail

inline std::vector<Cochain1> all_cocycles1(GModule const& mod) {
  std::vector<Cochain1> out;
  detail::for_each_normalized1(mod, [&](Cochain1 const& c) {
    if (is_cocycle1(mod, c)) out.push_back(c);
  });
  return out;
}

/// Witness b with coboundary2(b) = c, when one exists.
inline std::optional<Cochain1> coboundary_witness2(GModule const& mod, Cochain2 const& c) {
  std::optional<Cochain1> found;
  detail::for_each_normalized1(mod, [&](Cochain1 const& b) {
    if (!found && coboundary2(mod, b) == c) found = b;
  });
  return found;
}

inline bool cohomologous2(GModule const& mod, Cochain2 const& a, Cochain2 const& b) {
  Cochain2 diff = zero_cochain2(mod);
  for (int u = 0; u < mod.q.size(); ++u)
    for (int v = 0; v < mod.q.size(); ++v)
      diff[static_cast<size_t>(u)][static_cast<size_t>(v)] =
          mod.m.op(a[static_cast<size_t>(u)][static_cast<size_t>(v)],
                   mod.m.inverse(b[static_cast<size_t>(u)][static_cast<size_t>(v)]));
  return coboundary_witness2(mod, diff).has_value();
}

struct CohomologyGroup {
  std::vector<Cochain1> reps1;  // for h1
  std::vector<Cochain2> reps2;  // for h2
  size_t cocycles = 0;
  size_t coboundaries = 0;
  size_t order = 0;
};

inline CohomologyGroup h1(GModule const& mod) {
  if (!mod.m.is_abelian()) throw std::invalid_argument("h1: coefficients must be abelian");
  CohomologyGroup out;
  std::set<Cochain1> bds;
  for (int m0 = 0; m0 < mod.m.size(); ++m0) bds.insert(coboundary1(mod, m0));
  std::set<Cochain1> seen;
  detail::for_each_normalized1(mod, [&](Cochain1 const& c) {
    if (!is_cocycle1(mod, c)) return;
    ++out.cocycles;
    Cochain1 best = c;
    for (auto const& b : bds) {
      Cochain1 shifted(c.size());
      for (size_t u = 0; u < c.size(); ++u) shifted[u] = mod.m.op(c[u], b[u]);
      best = std::min(best, shifted);
    }
    if (seen.insert(best).second) out.reps1.push_back(best);
  });
  out.coboundaries = bds.size();
  out.order = out.reps1.size();
  return out;
}

inline CohomologyGroup h2(GModule const& mod) {
  if (!mod.m.is_abelian()) throw std::invalid_argument("h2: coefficients must be abelian");
  CohomologyGroup out;
  std::set<Cochain2> bds;
  detail::for_each_normalized1(mod, [&](Cochain1 const& b) { bds.insert(coboundary2(mod, b)); });
  std::set<Cochain2> seen;
  detail::for_each_normalized2(mod, [&](Cochain2 const& c) {
    if (!is_cocycle2(mod, c)) return;
    ++out.cocycles;
    Cochain2 best = c;
    for (auto const& b : bds) best = std::min(best, add2(mod, c, b));
    if (seen.insert(best).second) out.reps2.push_back(best);
  });
  out.coboundaries = bds.size();
  out.order = out.reps2.size();
  return out;
}

}  // namespace descent
