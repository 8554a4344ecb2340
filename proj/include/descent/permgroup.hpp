#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "descent/perm.hpp"

namespace descent {

inline constexpr size_t kDefaultOrderBound = 10080;

/// Finitely generated subgroup of S_d with explicit element closure.  The
/// closure is computed lazily and ordered deterministically: breadth-first
/// layers over generator applications, each layer sorted lexicographically by
/// image table.
class PermGroup {
 public:
  PermGroup() : degree_(1) {}
  PermGroup(int degree, std::vector<Perm> gens, size_t bound = kDefaultOrderBound)
      : degree_(degree), gens_(std::move(gens)), bound_(bound) {
    for (auto const& g : gens_)
      if (g.degree() != degree) throw std::invalid_argument("PermGroup: degree mismatch");
  }

  static PermGroup symmetric(int d) {
    std::vector<Perm> gens;
    if (d >= 2) {
      std::vector<int> t(static_cast<size_t>(d));
      for (int i = 0; i < d; ++i) t[static_cast<size_t>(i)] = i;
      std::swap(t[0], t[1]);
      gens.push_back(Perm::from_images(t));
      std::vector<int> c(static_cast<size_t>(d));
      for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = (i + 1) % d;
      gens.push_back(Perm::from_images(c));
    }
    return PermGroup(d, gens);
  }

  int degree() const { return degree_; }
  std::vector<Perm> const& generators() const { return gens_; }

  std::vector<Perm> const& closure() const {
    if (closure_.empty()) compute_closure();
    return closure_;
  }
  size_t order() const { return closure().size(); }

  bool contains(Perm const& p) const {
    closure();
    return sorted_.count(p) > 0;
  }

  bool is_subgroup_of(PermGroup const& g) const {
    for (auto const& x : gens_)
      if (!g.contains(x)) return false;
    return true;
  }

  bool is_transitive() const {
    std::vector<bool> seen(static_cast<size_t>(degree_), false);
    seen[0] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto const& g : gens_) {
        for (int y : {g(x), g.inverse()(x)})
          if (!seen[static_cast<size_t>(y)]) {
            seen[static_cast<size_t>(y)] = true;
            stack.push_back(y);
          }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  friend bool operator==(PermGroup const& a, PermGroup const& b) {
    if (a.degree_ != b.degree_) return false;
    for (auto const& g : a.gens_)
      if (!b.contains(g)) return false;
    for (auto const& g : b.gens_)
      if (!a.contains(g)) return false;
    return true;
  }

 private:
  int degree_;
  std::vector<Perm> gens_;
  size_t bound_ = kDefaultOrderBound;
  mutable std::vector<Perm> closure_;
  mutable std::set<Perm> sorted_;

  void compute_closure() const {
    std::set<Perm> seen{Perm(degree_)};
    std::vector<Perm> layer{Perm(degree_)}, all{Perm(degree_)};
    while (!layer.empty()) {
      std::set<Perm> next;
      for (auto const& x : layer)
        for (auto const& g : gens_) {
          Perm y = x * g;
          if (!seen.count(y)) next.insert(y);
          if (seen.size() + next.size() > bound_)
            throw std::invalid_argument("PermGroup: order bound exceeded");
        }
      layer.assign(next.begin(), next.end());  // lexicographic within the layer
      for (auto const& y : layer) {
        seen.insert(y);
        all.push_back(y);
      }
    }
    closure_ = std::move(all);
    sorted_ = std::move(seen);
  }
};

inline bool is_transitive(PermGroup const& g) { return g.is_transitive(); }

/// Largest normal subgroup of g inside h: the intersection of the conjugates
/// of h over g.
inline PermGroup normal_core(PermGroup const& g, PermGroup const& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("normal_core: h is not a subgroup of g");
  std::set<Perm> core(h.closure().begin(), h.closure().end());
  for (auto const& x : g.closure()) {
    std::set<Perm> conj;
    Perm xi = x.inverse();
    for (auto const& e : h.closure()) conj.insert(x * e * xi);
    std::set<Perm> inter;
    std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(),
                          std::inserter(inter, inter.begin()));
    core.swap(inter);
  }
  return PermGroup(g.degree(), std::vector<Perm>(core.begin(), core.end()));
}

namespace detail {

template <typename F>
void for_each_in_sd(int d, F&& f) {
  std::vector<int> images(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) images[static_cast<size_t>(i)] = i;
  do {
    f(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace detail

inline bool normalizes(Perm const& s, PermGroup const& g) {
  Perm si = s.inverse();
  for (auto const& x : g.generators())
    if (!g.contains(s * x * si)) return false;
  return true;
}

inline bool centralizes(Perm const& s, PermGroup const& g) {
  for (auto const& x : g.generators())
    if (s * x != x * s) return false;
  return true;
}

/// Exact N_{S_d}(g) by scanning S_d (d <= 8) or a caller-supplied overgroup.
inline PermGroup normalizer_in_sd(PermGroup const& g,
                                  std::optional<PermGroup> overgroup = std::nullopt) {
  std::vector<Perm> elems;
  if (overgroup) {
    for (auto const& s : overgroup->closure())
      if (normalizes(s, g)) elems.push_back(s);
  } else {
    if (g.degree() > 8)
      throw std::invalid_argument("normalizer_in_sd: degree > 8 needs an explicit overgroup");
    detail::for_each_in_sd(g.degree(), [&](Perm const& s) {
      if (normalizes(s, g)) elems.push_back(s);
    });
  }
  return PermGroup(g.degree(), elems, std::max(kDefaultOrderBound, elems.size()));
}

inline PermGroup centralizer_in_sd(PermGroup const& g,
                                   std::optional<PermGroup> overgroup = std::nullopt) {
  std::vector<Perm> elems;
  if (overgroup) {
    for (auto const& s : overgroup->closure())
      if (centralizes(s, g)) elems.push_back(s);
  } else {
    if (g.degree() > 8)
      throw std::invalid_argument("centralizer_in_sd: degree > 8 needs an explicit overgroup");
    detail::for_each_in_sd(g.degree(), [&](Perm const& s) {
      if (centralizes(s, g)) elems.push_back(s);
    });
  }
  return PermGroup(g.degree(), elems, std::max(kDefaultOrderBound, elems.size()));
}

inline PermGroup center(PermGroup const& g) {
  std::vector<Perm> elems;
  for (auto const& s : g.closure())
    if (centralizes(s, g)) elems.push_back(s);
  return PermGroup(g.degree(), elems);
}

}  // namespace descent
