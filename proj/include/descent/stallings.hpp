#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "descent/word.hpp"

namespace descent {

/// Folded basepointed labeled graph (Stallings graph) for a finitely
/// generated subgroup of F_n.  States are 0..size-1 with basepoint 0; edges
/// carry labels 1..n and are deterministic in both directions.  Basepoint
/// loops read off exactly the subgroup elements.
class SubgroupGraph {
 public:
  SubgroupGraph(int rank, std::vector<Word> const& generators) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("SubgroupGraph: rank must be >= 1");
    for (auto const& g : generators)
      if (g.rank() != rank) throw std::invalid_argument("rank mismatch");
    build(generators);
  }

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(out_.size()); }

  int step(int state, int letter) const {  // -1 when the edge is absent
    return letter > 0 ? out_[state][letter - 1] : in_[state][-letter - 1];
  }

  bool membership(Word const& w) const {
    if (w.rank() != rank_) throw std::invalid_argument("rank mismatch");
    int cur = 0;
    for (int s : w.letters()) {
      cur = step(cur, s);
      if (cur < 0) return false;
    }
    return cur == 0;
  }

  bool complete() const {
    for (auto const& row : out_)
      for (int t : row)
        if (t < 0) return false;
    return true;
  }

  /// Index in F_n: the state count when the graph is complete, nullopt for
  /// infinite index.
  std::optional<int> index() const {
    if (!complete()) return std::nullopt;
    return size();
  }

  /// Word labelling the spanning-tree path from the basepoint to `state`.
  /// For complete graphs these are coset representatives of the subgroup.
  Word tree_word(int state) const {
    std::vector<int> letters;
    for (int cur = state; cur != 0; cur = tree_parent_[cur])
      letters.push_back(tree_letter_[cur]);
    std::reverse(letters.begin(), letters.end());
    return Word(rank_, letters);
  }

  std::vector<Word> coset_representatives() const {
    std::vector<Word> reps;
    for (int s = 0; s < size(); ++s) reps.push_back(tree_word(s));
    return reps;
  }

  struct Edge {
    int from, label, to;
  };

  /// Non-tree edges in a fixed order; one free generator of the subgroup per
  /// edge (Reidemeister-Schreier).
  std::vector<Edge> const& nontree_edges() const { return nontree_; }

  /// Free generating set of the subgroup: rep(from) * label * rep(to)^{-1}
  /// per non-tree edge.
  std::vector<Word> schreier_generators() const {
    std::vector<Word> gens;
    for (auto const& e : nontree_) {
      Word w = tree_word(e.from);
      w.push(e.label);
      gens.push_back(multiply(w, invert(tree_word(e.to))));
    }
    return gens;
  }

  /// Rewrites a subgroup element as a word in the Schreier generators
  /// (rank = number of non-tree edges).
  Word rewrite(Word const& w) const {
    if (!membership(w)) throw std::invalid_argument("rewrite: word not in subgroup");
    int k = static_cast<int>(nontree_.size());
    Word r(std::max(k, 1));
    int cur = 0;
    for (int s : w.letters()) {
      int nxt = step(cur, s);
      int from = s > 0 ? cur : nxt;
      int to = s > 0 ? nxt : cur;
      int idx = edge_gen_[from][std::abs(s) - 1];
      if (idx >= 0) r.push(s > 0 ? idx + 1 : -(idx + 1));
      cur = nxt;
    }
    return r;
  }

  friend bool operator==(SubgroupGraph const& a, SubgroupGraph const& b) {
    return a.rank_ == b.rank_ && a.out_ == b.out_ && a.in_ == b.in_;
  }

 private:
  int rank_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> tree_parent_, tree_letter_;
  std::vector<Edge> nontree_;
  std::vector<std::vector<int>> edge_gen_;  // [state][label-1] -> generator index or -1

  void build(std::vector<Word> const& generators) {
    // Bouquet of loops at state 0, then fold with union-find.
    std::vector<std::array<long, 3>> edges;  // from, label, to
    long nstates = 1;
    for (auto const& g : generators) {
      long cur = 0;
      auto const& ls = g.letters();
      for (size_t k = 0; k < ls.size(); ++k) {
        long nxt = k + 1 == ls.size() ? 0 : nstates++;
        int s = ls[k];
        if (s > 0)
          edges.push_back({cur, s, nxt});
        else
          edges.push_back({nxt, -s, cur});
        cur = nxt;
      }
    }

    std::vector<long> parent(nstates);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](long x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](long a, long b) {
      a = find(a), b = find(b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::pair<long, long>, long> outseen, inseen;
      for (auto const& e : edges) {
        long f = find(e[0]), t = find(e[2]);
        auto [ito, oko] = outseen.try_emplace({f, e[1]}, t);
        if (!oko && find(ito->second) != t) {
          unite(ito->second, t);
          changed = true;
        }
        auto [iti, oki] = inseen.try_emplace({t, e[1]}, f);
        if (!oki && find(iti->second) != f) {
          unite(iti->second, f);
          changed = true;
        }
      }
    }

    // Compact states reachable from the basepoint (everything is reachable
    // for loop bouquets, but renumber breadth-first for determinism).
    std::map<std::pair<long, long>, long> outmap, inmap;
    for (auto const& e : edges) {
      outmap[{find(e[0]), e[1]}] = find(e[2]);
      inmap[{find(e[2]), e[1]}] = find(e[0]);
    }
    std::map<long, int> id;
    std::vector<long> order;
    std::queue<long> bfs;
    bfs.push(find(0));
    id[find(0)] = 0;
    order.push_back(find(0));
    while (!bfs.empty()) {
      long v = bfs.front();
      bfs.pop();
      for (int l = 1; l <= rank_; ++l) {
        for (auto const& m : {outmap, inmap}) {
          auto it = m.find({v, l});
          if (it != m.end() && !id.count(it->second)) {
            id[it->second] = static_cast<int>(order.size());
            order.push_back(it->second);
            bfs.push(it->second);
          }
        }
      }
    }

    int n = static_cast<int>(order.size());
    out_.assign(n, std::vector<int>(rank_, -1));
    in_.assign(n, std::vector<int>(rank_, -1));
    for (auto const& e : edges) {
      int f = id.at(find(e[0])), t = id.at(find(e[2]));
      out_[f][e[1] - 1] = t;
      in_[t][e[1] - 1] = f;
    }
    prune_hair();
    build_tree();
  }

  // Removes non-basepoint states of total degree <= 1.
  void prune_hair() {
    bool changed = true;
    while (changed) {
      changed = false;
      int n = size();
      std::vector<int> degree(n, 0);
      for (int v = 0; v < n; ++v)
        for (int l = 0; l < rank_; ++l) {
          if (out_[v][l] >= 0) ++degree[v], ++degree[out_[v][l]];
        }
      int victim = -1;
      for (int v = 1; v < n; ++v)
        if (degree[v] <= 1) victim = v;
      if (victim < 0) break;
      changed = true;
      for (int v = 0; v < n; ++v)
        for (int l = 0; l < rank_; ++l) {
          if (out_[v][l] == victim) out_[v][l] = -1;
          if (in_[v][l] == victim) in_[v][l] = -1;
        }
      out_.erase(out_.begin() + victim);
      in_.erase(in_.begin() + victim);
      for (int v = 0; v < size(); ++v)
        for (int l = 0; l < rank_; ++l) {
          if (out_[v][l] > victim) --out_[v][l];
          if (in_[v][l] > victim) --in_[v][l];
        }
    }
  }

  void build_tree() {
    int n = size();
    tree_parent_.assign(n, -1);
    tree_letter_.assign(n, 0);
    std::vector<bool> seen(n, false);
    std::vector<std::vector<bool>> tree_edge(n, std::vector<bool>(rank_, false));
    seen[0] = true;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int l = 1; l <= rank_; ++l) {
        int t = out_[v][l - 1];
        if (t >= 0 && !seen[t]) {
          seen[t] = true;
          tree_parent_[t] = v;
          tree_letter_[t] = l;
          tree_edge[v][l - 1] = true;
          bfs.push(t);
        }
        int f = in_[v][l - 1];
        if (f >= 0 && !seen[f]) {
          seen[f] = true;
          tree_parent_[f] = v;
          tree_letter_[f] = -l;
          tree_edge[f][l - 1] = true;
          bfs.push(f);
        }
      }
    }
    nontree_.clear();
    edge_gen_.assign(n, std::vector<int>(rank_, -1));
    for (int v = 0; v < n; ++v)
      for (int l = 1; l <= rank_; ++l)
        if (out_[v][l - 1] >= 0 && !tree_edge[v][l - 1]) {
          edge_gen_[v][l - 1] = static_cast<int>(nontree_.size());
          nontree_.push_back({v, l, out_[v][l - 1]});
        }
  }
};

inline SubgroupGraph subgroup_from_generators(std::vector<Word> const& gens, int rank) {
  return SubgroupGraph(rank, gens);
}

inline SubgroupGraph whole_group(int rank) {
  std::vector<Word> gens;
  for (int i = 1; i <= rank; ++i) gens.push_back(Word::generator(rank, i));
  return SubgroupGraph(rank, gens);
}

inline std::vector<Word> reidemeister_schreier(SubgroupGraph const& g) {
  if (!g.index()) throw std::invalid_argument("reidemeister_schreier: infinite index");
  return g.schreier_generators();
}

inline SubgroupGraph image_subgroup(FreeMap const& f, SubgroupGraph const& g) {
  if (f.rank != g.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<Word> images;
  for (auto const& w : g.schreier_generators()) images.push_back(apply_map(f, w));
  return SubgroupGraph(g.rank(), images);
}

inline bool equal_subgroups(SubgroupGraph const& a, SubgroupGraph const& b) {
  if (a.rank() != b.rank()) return false;
  for (auto const& w : a.schreier_generators())
    if (!b.membership(w)) return false;
  for (auto const& w : b.schreier_generators())
    if (!a.membership(w)) return false;
  return true;
}

namespace detail {

/// Body of a Stallings graph: states surviving iterated removal of degree-1
/// states (the cyclically reduced core).  Returns the surviving state set.
inline std::vector<bool> graph_body(SubgroupGraph const& g) {
  int n = g.size();
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      int deg = 0;
      for (int l = 1; l <= g.rank(); ++l) {
        int t = g.step(v, l);
        if (t >= 0 && alive[t]) ++deg;
        if (g.step(v, l) == v) { /* loop counted once above */
        }
        int f = g.step(v, -l);
        if (f >= 0 && alive[f]) ++deg;
      }
      if (deg <= 1) {
        alive[v] = false;
        changed = true;
      }
    }
  }
  return alive;
}

/// Label-preserving isomorphism of the bodies sending `anchor1` to
/// `anchor2`, extended by BFS; nullopt if inconsistent.
inline std::optional<std::vector<int>> body_iso(SubgroupGraph const& g1,
                                                std::vector<bool> const& body1,
                                                SubgroupGraph const& g2,
                                                std::vector<bool> const& body2,
                                                int anchor1, int anchor2) {
  std::vector<int> img(g1.size(), -1), pre(g2.size(), -1);
  img[anchor1] = anchor2;
  pre[anchor2] = anchor1;
  std::queue<int> bfs;
  bfs.push(anchor1);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int l = 1; l <= g1.rank(); ++l)
      for (int sgn : {1, -1}) {
        int t1 = g1.step(v, sgn * l);
        bool in1 = t1 >= 0 && body1[t1];
        int t2 = g2.step(img[v], sgn * l);
        bool in2 = t2 >= 0 && body2[t2];
        if (in1 != in2) return std::nullopt;
        if (!in1) continue;
        if (img[t1] < 0 && pre[t2] < 0) {
          img[t1] = t2;
          pre[t2] = t1;
          bfs.push(t1);
        } else if (img[t1] != t2) {
          return std::nullopt;
        }
      }
  }
  return img;
}

inline Word path_word(SubgroupGraph const& g, int from, int to,
                      std::vector<bool> const& within) {
  // BFS path restricted to `within` states.
  std::vector<int> par(g.size(), -2), let(g.size(), 0);
  par[from] = -1;
  std::queue<int> bfs;
  bfs.push(from);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int l = 1; l <= g.rank(); ++l)
      for (int sgn : {1, -1}) {
        int t = g.step(v, sgn * l);
        if (t >= 0 && within[t] && par[t] == -2) {
          par[t] = v;
          let[t] = sgn * l;
          bfs.push(t);
        }
      }
  }
  if (par[to] == -2) throw std::logic_error("path_word: disconnected");
  std::vector<int> letters;
  for (int cur = to; cur != from; cur = par[cur]) letters.push_back(let[cur]);
  std::reverse(letters.begin(), letters.end());
  return Word(g.rank(), letters);
}

}  // namespace detail

/// Searches for w with w g1 w^{-1} = g2.  Conjugate subgroups of a free group
/// have isomorphic cyclically reduced cores; the witness is assembled from the
/// basepoint tails and the core isomorphism, then verified exactly.
inline std::optional<Word> conjugate_subgroups(SubgroupGraph const& g1,
                                               SubgroupGraph const& g2) {
  if (g1.rank() != g2.rank()) throw std::invalid_argument("rank mismatch");
  auto body1 = detail::graph_body(g1);
  auto body2 = detail::graph_body(g2);
  int count1 = static_cast<int>(std::count(body1.begin(), body1.end(), true));
  int count2 = static_cast<int>(std::count(body2.begin(), body2.end(), true));
  if (count1 == 0 && count2 == 0) return Word(g1.rank());  // both trivial
  if (count1 != count2) return std::nullopt;

  std::vector<bool> all1(g1.size(), true), all2(g2.size(), true);
  auto nearest_body = [](SubgroupGraph const& g, std::vector<bool> const& body,
                         std::vector<bool> const& all) {
    // nearest body state to the basepoint, with the tail word
    std::queue<int> bfs;
    std::vector<bool> seen(g.size(), false);
    std::vector<int> par(g.size(), -1), let(g.size(), 0);
    bfs.push(0);
    seen[0] = true;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      if (body[v]) {
        std::vector<int> letters;
        for (int cur = v; cur != 0; cur = par[cur]) letters.push_back(let[cur]);
        std::reverse(letters.begin(), letters.end());
        return std::pair<int, Word>(v, Word(g.rank(), letters));
      }
      for (int l = 1; l <= g.rank(); ++l)
        for (int sgn : {1, -1}) {
          int t = g.step(v, sgn * l);
          if (t >= 0 && !seen[t]) {
            seen[t] = true;
            par[t] = v;
            let[t] = sgn * l;
            bfs.push(t);
          }
        }
    }
    throw std::logic_error("nearest_body: no body state");
  };
  auto [a1, t1] = nearest_body(g1, body1, all1);
  auto [a2, t2] = nearest_body(g2, body2, all2);

  for (int cand = 0; cand < g2.size(); ++cand) {
    if (!body2[cand]) continue;
    auto iso = detail::body_iso(g1, body1, g2, body2, a1, cand);
    if (!iso) continue;
    Word p = detail::path_word(g2, a2, cand, body2);
    Word w = multiply(multiply(t2, p), invert(t1));
    // verify: w g1 w^{-1} = g2
    bool ok = true;
    for (auto const& gen : g1.schreier_generators())
      if (!g2.membership(conjugate(w, gen))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (auto const& gen : g2.schreier_generators())
      if (!g1.membership(conjugate(invert(w), gen))) {
        ok = false;
        break;
      }
    if (ok) return w;
  }
  return std::nullopt;
}

}  // namespace descent
