#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "descent/fingroup.hpp"
#include "descent/perm.hpp"
#include "descent/permgroup.hpp"

namespace descent {

/// Homomorphism from a subgroup of an ambient FinGroup into S_d, stored
/// element-wise.  Multiplicativity over the whole domain is verified at
/// construction.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(FinGroup const& ambient, Subset domain, std::map<int, Perm> images)
      : domain_(std::move(domain)), images_(std::move(images)) {
    if (!is_subgroup(ambient, domain_))
      throw std::invalid_argument("GroupHom: domain is not a subgroup");
    if (domain_.empty() || images_.size() != domain_.size())
      throw std::invalid_argument("GroupHom: images do not cover the domain");
    degree_ = images_.begin()->second.degree();
    for (int a : domain_)
      for (int b : domain_)
        if (!(images_.at(ambient.op(a, b)) == images_.at(a) * images_.at(b)))
          throw std::invalid_argument("GroupHom: not a homomorphism");
  }

  /// Builds the hom from generator images by breadth-first extension,
  /// verifying consistency; throws when the assignment is not a homomorphism.
  static GroupHom from_generators(FinGroup const& ambient, Subset const& domain,
                                  std::vector<int> const& gens,
                                  std::vector<Perm> const& gen_images) {
    if (gens.size() != gen_images.size())
      throw std::invalid_argument("GroupHom: generator/image count mismatch");
    int degree = gen_images.empty() ? 1 : gen_images[0].degree();
    std::map<int, Perm> f{{0, Perm(degree)}};
    bool grown = true;
    while (grown) {
      grown = false;
      std::vector<std::pair<int, Perm>> items(f.begin(), f.end());
      for (auto const& [x, px] : items)
        for (size_t k = 0; k < gens.size(); ++k) {
          int nx = ambient.op(x, gens[k]);
          Perm pn = px * gen_images[k];
          auto it = f.find(nx);
          if (it == f.end()) {
            f.emplace(nx, pn);
            grown = true;
          } else if (!(it->second == pn)) {
            throw std::invalid_argument("GroupHom: generator images violate a relation");
          }
        }
    }
    if (f.size() != domain.size())
      throw std::invalid_argument("GroupHom: generators do not generate the domain");
    return GroupHom(ambient, domain, std::move(f));
  }

  Subset const& domain() const { return domain_; }
  int degree() const { return degree_; }
  Perm const& operator()(int x) const { return images_.at(x); }

  PermGroup image() const {
    std::vector<Perm> gens;
    for (int x : domain_) gens.push_back(images_.at(x));
    return PermGroup(degree_, gens);
  }

  bool is_faithful() const {
    for (int x : domain_)
      if (x != 0 && images_.at(x).is_identity()) return false;
    return true;
  }

  friend bool operator==(GroupHom const& a, GroupHom const& b) {
    return a.domain_ == b.domain_ && a.images_ == b.images_;
  }

 private:
  Subset domain_;
  std::map<int, Perm> images_;
  int degree_ = 1;
};

/// Left-translation action of `grp` on the left cosets of `sub`, with coset 1
/// the subgroup itself and the rest ordered by minimal element.  The kernel is
/// the normal core of `sub` in `grp`.
inline GroupHom coset_action(FinGroup const& ambient, Subset const& grp, Subset const& sub) {
  if (!is_subgroup(ambient, sub) || !subset_leq(sub, grp))
    throw std::invalid_argument("coset_action: sub must be a subgroup of grp");
  auto cosets = left_cosets(ambient, grp, sub);
  int d = static_cast<int>(cosets.size());
  std::map<int, int> coset_of;
  for (int c = 0; c < d; ++c)
    for (int x : cosets[static_cast<size_t>(c)]) coset_of[x] = c;
  std::map<int, Perm> images;
  for (int g : grp) {
    std::vector<int> img(static_cast<size_t>(d));
    for (int c = 0; c < d; ++c)
      img[static_cast<size_t>(c)] = coset_of.at(ambient.op(g, cosets[static_cast<size_t>(c)][0]));
    images.emplace(g, Perm::from_images(img));
  }
  return GroupHom(ambient, grp, std::move(images));
}

/// Searches `search_set` for phi with psi2(x) = phi psi1(x) phi^{-1} for all
/// x in the common domain.
inline std::optional<Perm> conjugacy_search(GroupHom const& psi1, GroupHom const& psi2,
                                            PermGroup const& search_set) {
  if (psi1.domain() != psi2.domain())
    throw std::invalid_argument("conjugacy_search: domains differ");
  if (psi1.degree() != psi2.degree())
    throw std::invalid_argument("conjugacy_search: degrees differ");
  for (auto const& phi : search_set.closure()) {
    Perm phii = phi.inverse();
    bool ok = true;
    for (int x : psi1.domain())
      if (!(psi2(x) == phi * psi1(x) * phii)) {
        ok = false;
        break;
      }
    if (ok) return phi;
  }
  return std::nullopt;
}

/// Twist by an ambient element: x -> psi(h x h^{-1}).  Conjugation by h must
/// preserve the domain (automatic when the domain is normal in the ambient).
inline GroupHom monodromy_twist(FinGroup const& ambient, GroupHom const& psi, int h) {
  std::map<int, Perm> images;
  for (int x : psi.domain()) {
    int cx = ambient.conj(h, x);
    if (!subset_contains(psi.domain(), cx))
      throw std::invalid_argument("monodromy_twist: conjugation leaves the domain");
    images.emplace(x, psi(cx));
  }
  return GroupHom(ambient, psi.domain(), std::move(images));
}

/// All homomorphisms E -> target restricting to phi on its domain P, found by
/// assigning images to the nontrivial elements of a transversal of P in E and
/// extending multiplicatively.  An empty list certifies no extension exists.
inline std::vector<GroupHom> extend_hom(FinGroup const& ambient, GroupHom const& phi,
                                        Subset const& ext, PermGroup const& target) {
  Subset const& p = phi.domain();
  if (!is_subgroup(ambient, ext) || !subset_leq(p, ext))
    throw std::invalid_argument("extend_hom: phi's domain is not a subgroup of ext");
  auto cosets = left_cosets(ambient, ext, p);
  std::vector<int> reps;  // transversal without the identity coset
  for (size_t c = 1; c < cosets.size(); ++c) reps.push_back(cosets[c][0]);

  std::vector<GroupHom> found;
  auto const& candidates = target.closure();
  std::vector<Perm> assignment(reps.size(), Perm(phi.degree()));

  std::function<void(size_t)> assign = [&](size_t k) {
    if (k == reps.size()) {
      // build the candidate map on all of ext: x = rep * p decomposition
      std::map<int, Perm> f;
      for (int x : p) f.emplace(x, phi(x));
      for (size_t c = 0; c < reps.size(); ++c) {
        int r = reps[c];
        for (int x : p) f.emplace(ambient.op(r, x), assignment[c] * phi(x));
      }
      if (f.size() != ext.size()) return;
      for (int a : ext)
        for (int b : ext)
          if (!(f.at(ambient.op(a, b)) == f.at(a) * f.at(b))) return;
      found.push_back(GroupHom(ambient, ext, std::move(f)));
      return;
    }
    for (auto const& cand : candidates) {
      assignment[k] = cand;
      assign(k + 1);
    }
  };
  assign(0);
  return found;
}

}  // namespace descent
