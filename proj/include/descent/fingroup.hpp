#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent/permgroup.hpp"

namespace descent {

/// Finite group as an explicit multiplication table with element labels.
/// Element 0 is the identity.
struct FinGroup {
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(mul.size()); }
  int op(int a, int b) const { return mul[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int inverse(int a) const { return inv[static_cast<size_t>(a)]; }
  int conj(int g, int x) const { return op(op(g, x), inverse(g)); }  // g x g^{-1}
  std::string label(int a) const {
    return static_cast<size_t>(a) < labels.size() ? labels[static_cast<size_t>(a)]
                                                  : "#" + std::to_string(a);
  }

  /// Validates associativity, identity and inverses over the full table.
  void validate() const {
    int n = size();
    for (int a = 0; a < n; ++a) {
      if (op(0, a) != a || op(a, 0) != a) throw std::invalid_argument("FinGroup: bad identity");
      if (op(a, inverse(a)) != 0) throw std::invalid_argument("FinGroup: bad inverse");
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (op(op(a, b), c) != op(a, op(b, c)))
            throw std::invalid_argument("FinGroup: not associative");
    }
  }

  bool is_abelian() const {
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < a; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

  static FinGroup cyclic(int n) {
    FinGroup g;
    g.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    g.inv.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
      g.inv[static_cast<size_t>(a)] = (n - a) % n;
      g.labels.push_back(a == 0 ? "e" : "g^" + std::to_string(a));
      for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    }
    return g;
  }
};

/// A finite group presented concretely: table plus the permutation realizing
/// each element (when built from a PermGroup).
struct TabulatedGroup {
  FinGroup table;
  std::vector<Perm> elems;  // aligned with table indices; may be empty
  int index_of(Perm const& p) const {
    auto it = std::find(elems.begin(), elems.end(), p);
    if (it == elems.end()) throw std::invalid_argument("TabulatedGroup: element not found");
    return static_cast<int>(it - elems.begin());
  }
};

inline TabulatedGroup tabulate(PermGroup const& g) {
  TabulatedGroup t;
  auto const& cl = g.closure();
  t.elems = cl;
  std::map<Perm, int> idx;
  for (size_t i = 0; i < cl.size(); ++i) idx[cl[i]] = static_cast<int>(i);
  int n = static_cast<int>(cl.size());
  t.table.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  t.table.inv.resize(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    t.table.inv[static_cast<size_t>(a)] = idx.at(cl[static_cast<size_t>(a)].inverse());
    t.table.labels.push_back(cl[static_cast<size_t>(a)].str());
    for (int b = 0; b < n; ++b)
      t.table.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          idx.at(cl[static_cast<size_t>(a)] * cl[static_cast<size_t>(b)]);
  }
  return t;
}

// --- subgroup machinery on element-index sets ------------------------------

using Subset = std::vector<int>;  // sorted element indices

inline bool subset_contains(Subset const& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline Subset closure_of(FinGroup const& g, Subset seed) {
  std::set<int> cur(seed.begin(), seed.end());
  cur.insert(0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> elems(cur.begin(), cur.end());
    for (int a : elems)
      for (int b : elems) {
        if (cur.insert(g.op(a, b)).second) changed = true;
        if (cur.insert(g.inverse(a)).second) changed = true;
      }
  }
  return Subset(cur.begin(), cur.end());
}

inline bool is_subgroup(FinGroup const& g, Subset const& s) {
  if (s.empty() || s[0] != 0) return false;
  for (int a : s)
    for (int b : s)
      if (!subset_contains(s, g.op(a, b))) return false;
  for (int a : s)
    if (!subset_contains(s, g.inverse(a))) return false;
  return true;
}

inline bool is_normal(FinGroup const& g, Subset const& s) {
  for (int x = 0; x < g.size(); ++x)
    for (int a : s)
      if (!subset_contains(s, g.conj(x, a))) return false;
  return true;
}

inline Subset whole_subset(FinGroup const& g) {
  Subset s(static_cast<size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) s[static_cast<size_t>(i)] = i;
  return s;
}

inline Subset intersect(Subset const& a, Subset const& b) {
  Subset r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline bool subset_leq(Subset const& a, Subset const& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Product set A*B = {ab}.
inline Subset product_set(FinGroup const& g, Subset const& a, Subset const& b) {
  std::set<int> r;
  for (int x : a)
    for (int y : b) r.insert(g.op(x, y));
  return Subset(r.begin(), r.end());
}

/// Left cosets of a subgroup within `ambient` (a subgroup containing it),
/// deterministically ordered by minimal element; the subgroup itself first.
inline std::vector<Subset> left_cosets(FinGroup const& g, Subset const& ambient,
                                       Subset const& sub) {
  std::vector<Subset> cosets;
  std::set<int> used;
  for (int x : ambient) {
    if (used.count(x)) continue;
    std::set<int> c;
    for (int h : sub) c.insert(g.op(x, h));
    for (int y : c) used.insert(y);
    cosets.emplace_back(c.begin(), c.end());
  }
  return cosets;
}

/// Normal core: intersection of the conjugates of `sub` over `ambient`.
inline Subset normal_core_in(FinGroup const& g, Subset const& ambient, Subset const& sub) {
  Subset core = sub;
  for (int x : ambient) {
    std::set<int> conj;
    for (int a : sub) conj.insert(g.conj(x, a));
    core = intersect(core, Subset(conj.begin(), conj.end()));
  }
  return core;
}

inline Subset normalizer_in(FinGroup const& g, Subset const& ambient, Subset const& sub) {
  Subset n;
  for (int x : ambient) {
    bool ok = true;
    for (int a : sub) ok = ok && subset_contains(sub, g.conj(x, a));
    if (ok) n.push_back(x);
  }
  return n;
}

/// All subgroups, by closing unions of cyclic subgroups to a fixpoint.
/// Desk-scale orders only.
inline std::vector<Subset> all_subgroups(FinGroup const& g) {
  std::set<Subset> found;
  found.insert(Subset{0});
  for (int x = 0; x < g.size(); ++x) found.insert(closure_of(g, {x}));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Subset> cur(found.begin(), found.end());
    for (auto const& a : cur)
      for (int x = 0; x < g.size(); ++x) {
        Subset seed = a;
        seed.push_back(x);
        Subset c = closure_of(g, seed);
        if (found.insert(c).second) changed = true;
      }
  }
  return std::vector<Subset>(found.begin(), found.end());
}

/// A subgroup re-tabulated as its own FinGroup, with index maps to and from
/// the parent group.
struct SubTable {
  FinGroup table;
  std::vector<int> to_parent;
  std::map<int, int> from_parent;
};

inline SubTable sub_table(FinGroup const& g, Subset const& s) {
  if (!is_subgroup(g, s)) throw std::invalid_argument("sub_table: not a subgroup");
  SubTable t;
  t.to_parent = s;
  for (size_t i = 0; i < s.size(); ++i) t.from_parent[s[i]] = static_cast<int>(i);
  int n = static_cast<int>(s.size());
  t.table.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  t.table.inv.resize(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    t.table.inv[static_cast<size_t>(a)] = t.from_parent.at(g.inverse(s[static_cast<size_t>(a)]));
    t.table.labels.push_back(g.label(s[static_cast<size_t>(a)]));
    for (int b = 0; b < n; ++b)
      t.table.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          t.from_parent.at(g.op(s[static_cast<size_t>(a)], s[static_cast<size_t>(b)]));
  }
  return t;
}

/// Quotient by a normal subgroup: multiplication table on coset labels plus
/// the projection map (element index -> coset index).
struct Quotient {
  FinGroup group;
  std::vector<int> proj;  // size = ambient group order
};

inline Quotient quotient_group(FinGroup const& g, Subset const& normal_sub) {
  if (!is_subgroup(g, normal_sub)) throw std::invalid_argument("quotient_group: not a subgroup");
  if (!is_normal(g, normal_sub)) throw std::invalid_argument("quotient_group: subgroup not normal");
  auto cosets = left_cosets(g, whole_subset(g), normal_sub);
  Quotient q;
  q.proj.assign(static_cast<size_t>(g.size()), -1);
  for (size_t c = 0; c < cosets.size(); ++c)
    for (int x : cosets[c]) q.proj[static_cast<size_t>(x)] = static_cast<int>(c);
  int n = static_cast<int>(cosets.size());
  q.group.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  q.group.inv.resize(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    int ra = cosets[static_cast<size_t>(a)][0];
    q.group.inv[static_cast<size_t>(a)] = q.proj[static_cast<size_t>(g.inverse(ra))];
    q.group.labels.push_back("[" + g.label(ra) + "]");
    for (int b = 0; b < n; ++b) {
      int rb = cosets[static_cast<size_t>(b)][0];
      q.group.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          q.proj[static_cast<size_t>(g.op(ra, rb))];
    }
  }
  // well-definedness: the product of cosets must not depend on representatives
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (q.proj[static_cast<size_t>(g.op(a, b))] !=
          q.group.op(q.proj[static_cast<size_t>(a)], q.proj[static_cast<size_t>(b)]))
        throw std::logic_error("quotient_group: projection is not a homomorphism");
  return q;
}

/// Isomorphism search between small groups by brute-force generator images.
inline bool isomorphic(FinGroup const& a, FinGroup const& b) {
  if (a.size() != b.size()) return false;
  int n = a.size();
  // find a small generating set of a
  Subset gens;
  Subset have{0};
  for (int x = 0; x < n && static_cast<int>(have.size()) < n; ++x) {
    if (subset_contains(have, x)) continue;
    gens.push_back(x);
    Subset seed = have;
    seed.push_back(x);
    have = closure_of(a, seed);
  }
  // assign images recursively
  std::vector<int> img(static_cast<size_t>(gens.size()), -1);
  auto order_of = [](FinGroup const& g, int x) {
    int o = 1, c = x;
    while (c != 0) {
      c = g.op(c, x);
      ++o;
    }
    return o;
  };
  std::function<bool(size_t)> assign = [&](size_t k) -> bool {
    if (k == gens.size()) {
      // build the map by words and verify
      std::map<int, int> f{{0, 0}};
      std::vector<int> frontier{0};
      std::vector<std::pair<int, int>> genpairs;
      for (size_t t = 0; t < gens.size(); ++t) genpairs.push_back({gens[t], img[t]});
      bool grown = true;
      while (grown) {
        grown = false;
        std::vector<std::pair<int, int>> items(f.begin(), f.end());
        for (auto [x, y] : items)
          for (auto [gx, gy] : genpairs) {
            int nx = a.op(x, gx), ny = b.op(y, gy);
            auto it = f.find(nx);
            if (it == f.end()) {
              f[nx] = ny;
              grown = true;
            } else if (it->second != ny) {
              return false;
            }
          }
      }
      if (static_cast<int>(f.size()) != n) return false;
      std::set<int> targets;
      for (auto& [x, y] : f) targets.insert(y);
      if (static_cast<int>(targets.size()) != n) return false;
      for (auto& [x, y] : f)
        for (auto& [u, v] : f)
          if (f.at(a.op(x, u)) != b.op(y, v)) return false;
      return true;
    }
    for (int y = 0; y < n; ++y) {
      if (order_of(a, gens[k]) != order_of(b, y)) continue;
      img[k] = y;
      if (assign(k + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

}  // namespace descent
