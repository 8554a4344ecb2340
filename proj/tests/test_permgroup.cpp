#include "descent/permgroup.hpp"

#include "descent/fingroup.hpp"
#include "descent/hom.hpp"
#include "catch_amalgamated.hpp"

using namespace descent;

namespace {

PermGroup s3() { return PermGroup::symmetric(3); }
PermGroup d4() {
  return PermGroup(4, {Perm::parse("(1 2 3 4)", 4), Perm::parse("(1 3)", 4)});
}
PermGroup a4() {
  return PermGroup(4, {Perm::parse("(1 2 3)", 4), Perm::parse("(1 2)(3 4)", 4)});
}
PermGroup q8() {
  return PermGroup(8, {Perm::parse("(1 2 3 4)(5 6 7 8)", 8),
                       Perm::parse("(1 5 3 7)(2 8 4 6)", 8)});
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  Perm p = Perm::parse("(1 2 3)(4 5)", 6);
  CHECK(p.str() == "(1 2 3)(4 5)");
  CHECK(Perm::parse("()", 4).is_identity());
  CHECK(Perm::parse(p.str(), 6) == p);
  CHECK_THROWS_AS(Perm::parse("(1 9)", 4), std::invalid_argument);
  CHECK((Perm::parse("(1 2)", 3) * Perm::parse("(2 3)", 3)).str() == "(1 2 3)");
}

TEST_CASE("closure sizes and ordering") {
  CHECK(PermGroup(4, {Perm::parse("(1 2 3 4)", 4)}).order() == 4);
  CHECK(s3().order() == 6);
  CHECK(PermGroup(4, {Perm::parse("(1 2)(3 4)", 4), Perm::parse("(1 3)(2 4)", 4)}).order() == 4);
  CHECK(q8().order() == 8);
  CHECK(d4().order() == 8);
  CHECK(a4().order() == 12);

  // identity first, deterministic order
  PermGroup g3 = s3();
  auto const& cl = g3.closure();
  CHECK(cl[0].is_identity());
  PermGroup g3b(3, {Perm::parse("(1 2 3)", 3), Perm::parse("(1 2)", 3)});
  CHECK(cl.size() == g3b.closure().size());
}

TEST_CASE("order bound is enforced") {
  CHECK_THROWS_AS(PermGroup(8, PermGroup::symmetric(8).generators(), 100).order(),
                  std::invalid_argument);
}

TEST_CASE("transitivity and normal core") {
  CHECK(s3().is_transitive());
  CHECK(!PermGroup(3, {Perm::parse("(1 2)", 3)}).is_transitive());

  PermGroup h(3, {Perm::parse("(1 2)", 3)});
  CHECK(normal_core(s3(), h).order() == 1);

  PermGroup a3(3, {Perm::parse("(1 2 3)", 3)});
  CHECK(normal_core(s3(), a3) == a3);

  CHECK_THROWS_AS(normal_core(a3, s3()), std::invalid_argument);
}

TEST_CASE("normalizer, centralizer, center") {
  PermGroup a3(3, {Perm::parse("(1 2 3)", 3)});
  CHECK(normalizer_in_sd(a3) == s3());

  PermGroup c4(4, {Perm::parse("(1 2 3 4)", 4)});
  CHECK(centralizer_in_sd(c4).order() == 4);
  CHECK(centralizer_in_sd(c4) == c4);
  CHECK(normalizer_in_sd(c4) == d4());

  CHECK(center(c4) == c4);
  CHECK(center(s3()).order() == 1);
  CHECK(center(d4()).order() == 2);

  // candidate-overgroup variant agrees on a case within bounds
  CHECK(normalizer_in_sd(a3, PermGroup::symmetric(3)) == normalizer_in_sd(a3));
}

TEST_CASE("coset actions") {
  auto ts3 = tabulate(s3());
  auto const& g = ts3.table;
  Subset all = whole_subset(g);

  Subset h = closure_of(g, {ts3.index_of(Perm::parse("(1 2)", 3))});
  GroupHom psi = coset_action(g, all, h);
  CHECK(psi.degree() == 3);
  CHECK(psi.image().is_transitive());
  CHECK(psi.is_faithful());

  Subset a3 = closure_of(g, {ts3.index_of(Perm::parse("(1 2 3)", 3))});
  GroupHom sign = coset_action(g, all, a3);
  CHECK(sign.degree() == 2);
  for (int x : a3) CHECK(sign(x).is_identity());

  auto tc4 = tabulate(PermGroup(4, {Perm::parse("(1 2 3 4)", 4)}));
  GroupHom reg = coset_action(tc4.table, whole_subset(tc4.table), Subset{0});
  CHECK(reg.degree() == 4);
  CHECK(reg.is_faithful());
}

TEST_CASE("coset action is transitive; faithful iff core is trivial") {
  for (auto const& grp : {s3(), a4(), d4()}) {
    auto tab = tabulate(grp);
    for (auto const& sub : all_subgroups(tab.table)) {
      GroupHom psi = coset_action(tab.table, whole_subset(tab.table), sub);
      CHECK(psi.image().is_transitive());
      Subset core = normal_core_in(tab.table, whole_subset(tab.table), sub);
      CHECK(psi.is_faithful() == (core.size() == 1));
    }
  }
}

TEST_CASE("conjugacy search locates normalizer conjugators") {
  auto ts3 = tabulate(s3());
  auto const& g = ts3.table;
  Subset all = whole_subset(g);
  Subset h = closure_of(g, {ts3.index_of(Perm::parse("(1 2)", 3))});
  int n = ts3.index_of(Perm::parse("(1 2 3)", 3));
  std::set<int> conj;
  for (int x : h) conj.insert(g.conj(n, x));
  Subset hn(conj.begin(), conj.end());

  GroupHom psi = coset_action(g, all, h);
  GroupHom psi2 = coset_action(g, all, hn);
  auto norm = normalizer_in_sd(psi.image());
  auto phi = conjugacy_search(psi, psi2, norm);
  REQUIRE(phi.has_value());
  for (int x : all) CHECK(psi2(x) == *phi * psi(x) * phi->inverse());

  // symmetric witness
  auto phi_back = conjugacy_search(psi2, psi, norm);
  REQUIRE(phi_back.has_value());

  auto self = conjugacy_search(psi, psi, PermGroup(3, {}));
  REQUIRE(self.has_value());
  CHECK(self->is_identity());
}

TEST_CASE("quotient groups") {
  auto ts3 = tabulate(s3());
  Subset a3 = closure_of(ts3.table, {ts3.index_of(Perm::parse("(1 2 3)", 3))});
  auto q = quotient_group(ts3.table, a3);
  CHECK(q.group.size() == 2);

  auto td4 = tabulate(d4());
  Subset z;
  {
    auto zc = center(d4());
    std::set<int> zi;
    for (auto const& p : zc.closure()) zi.insert(td4.index_of(p));
    z.assign(zi.begin(), zi.end());
  }
  auto qd = quotient_group(td4.table, z);
  CHECK(qd.group.size() == 4);
  for (int a = 0; a < 4; ++a) CHECK(qd.group.op(a, a) == 0);  // Klein group

  auto whole = quotient_group(ts3.table, whole_subset(ts3.table));
  CHECK(whole.group.size() == 1);

  Subset not_normal = closure_of(ts3.table, {ts3.index_of(Perm::parse("(1 2)", 3))});
  CHECK_THROWS_AS(quotient_group(ts3.table, not_normal), std::invalid_argument);
}

TEST_CASE("hom extension: dihedral yes, quaternion no") {
  // P = C4 regular in S4, E = D4 acting by inversion: extension exists
  auto td4 = tabulate(d4());
  auto const& e = td4.table;
  Subset p = closure_of(e, {td4.index_of(Perm::parse("(1 2 3 4)", 4))});
  GroupHom reg = coset_action(e, p, Subset{0});
  CHECK(reg.degree() == 4);
  auto target = normalizer_in_sd(reg.image());
  auto exts = extend_hom(e, reg, whole_subset(e), target);
  CHECK(!exts.empty());
  for (auto const& ext : exts)
    for (int x : p) CHECK(ext(x) == reg(x));

  // P = C4 = <i> inside Q8: j^2 = i^2 forces a contradiction in the dihedral target
  auto tq8 = tabulate(q8());
  auto const& q = tq8.table;
  Subset pq = closure_of(q, {tq8.index_of(Perm::parse("(1 2 3 4)(5 6 7 8)", 8))});
  CHECK(pq.size() == 4);
  GroupHom regq = coset_action(q, pq, Subset{0});
  auto targetq = normalizer_in_sd(regq.image());
  CHECK(extend_hom(q, regq, whole_subset(q), targetq).empty());

  // P = E: the only extension is phi itself
  auto selfext = extend_hom(e, reg, p, target);
  REQUIRE(selfext.size() == 1);
  CHECK(selfext[0] == reg);
}

TEST_CASE("Q8 presentation sanity") {
  auto g = q8();
  Perm a = Perm::parse("(1 2 3 4)(5 6 7 8)", 8);
  Perm b = Perm::parse("(1 5 3 7)(2 8 4 6)", 8);
  CHECK(b * b == a * a);
  CHECK(b * a * b.inverse() == a.inverse());
  CHECK(g.order() == 8);
  // exactly one involution
  int invol = 0;
  for (auto const& x : g.closure())
    if (!x.is_identity() && (x * x).is_identity()) ++invol;
  CHECK(invol == 1);
}

TEST_CASE("group isomorphism search") {
  auto td4 = tabulate(d4());
  auto tq8 = tabulate(q8());
  CHECK(!isomorphic(td4.table, tq8.table));
  CHECK(isomorphic(td4.table, td4.table));
  CHECK(isomorphic(FinGroup::cyclic(6), tabulate(PermGroup(5, {Perm::parse("(1 2 3)(4 5)", 5)})).table));
  CHECK(!isomorphic(FinGroup::cyclic(4), tabulate(PermGroup(4, {Perm::parse("(1 2)(3 4)", 4), Perm::parse("(1 3)(2 4)", 4)})).table));
}
