#pragma once

// Shared finite-group fixtures for the extension/obstruction test suites.

#include "descent/extension.hpp"
#include "descent/fingroup.hpp"
#include "descent/hom.hpp"
#include "descent/obstruction.hpp"

namespace fixtures {

using namespace descent;

inline TabulatedGroup d4_tab() {
  return tabulate(PermGroup(4, {Perm::parse("(1 2 3 4)", 4), Perm::parse("(1 3)", 4)}));
}

inline TabulatedGroup q8_tab() {
  return tabulate(PermGroup(8, {Perm::parse("(1 2 3 4)(5 6 7 8)", 8),
                                Perm::parse("(1 5 3 7)(2 8 4 6)", 8)}));
}

inline TabulatedGroup s3xc2_tab() {
  return tabulate(PermGroup(5, {Perm::parse("(1 2 3)", 5), Perm::parse("(1 2)", 5),
                                Perm::parse("(4 5)", 5)}));
}

struct Fixture {
  TabulatedGroup tab;
  ExtensionModel model;    // E with designated P
  GroupHom psi;            // monodromy on P
};

/// E = D4, P = C4 = <r>, psi = regular representation of P (degree 4).
inline Fixture d4_c4() {
  Fixture f;
  f.tab = d4_tab();
  Subset p = closure_of(f.tab.table, {f.tab.index_of(Perm::parse("(1 2 3 4)", 4))});
  f.model = ExtensionModel(f.tab.table, p);
  f.psi = coset_action(f.tab.table, p, Subset{0});
  return f;
}

/// E = Q8, P = C4 = <i>, psi = regular representation of P (degree 4).
inline Fixture q8_c4() {
  Fixture f;
  f.tab = q8_tab();
  Subset p = closure_of(f.tab.table, {f.tab.index_of(Perm::parse("(1 2 3 4)(5 6 7 8)", 8))});
  f.model = ExtensionModel(f.tab.table, p);
  f.psi = coset_action(f.tab.table, p, Subset{0});
  return f;
}

/// E = D4, P = Klein {e, s, r^2, r^2 s}, psi kills s and sends r^2 to (1 2) in
/// S_5.  Conjugation by r swaps s and r^2 s, moving the kernel of psi, so the
/// group-of-moduli condition fails at U = r.
inline Fixture cmod_failure() {
  Fixture f;
  f.tab = d4_tab();
  auto const& e = f.tab.table;
  int s = f.tab.index_of(Perm::parse("(1 3)", 4));
  int r2 = f.tab.index_of(Perm::parse("(1 3)(2 4)", 4));
  Subset p = closure_of(e, {s, r2});
  f.model = ExtensionModel(e, p);
  f.psi = GroupHom::from_generators(e, p, {s, r2}, {Perm(5), Perm::parse("(1 2)", 5)});
  return f;
}

}  // namespace fixtures
