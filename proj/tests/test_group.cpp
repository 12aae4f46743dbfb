#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistmod/group.hpp"

using namespace twistmod;

TEST_CASE("cyclic groups") {
  auto c1 = cyclic(1);
  CHECK(c1->order() == 1);
  CHECK(c1->identity() == 0);

  auto c2 = cyclic(2);
  CHECK(c2->order() == 2);
  CHECK(c2->mul(1, 1) == 0);  // u^2 = e

  auto c4 = cyclic(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c4->mul(i, j) == (i + j) % 4);
  CHECK(c4->element_order(1) == 4);
  CHECK(c4->element_order(2) == 2);

  CHECK_THROWS(cyclic(0));
}

TEST_CASE("direct product basics") {
  auto c2 = cyclic(2), c3 = cyclic(3);
  auto p = direct_product(c2, c3);
  CHECK(p.group->order() == 6);

  auto klein = direct_product(cyclic(2), cyclic(2));
  CHECK(klein.group->order() == 4);
  for (int x = 0; x < 4; ++x)
    if (x != klein.group->identity()) CHECK(klein.group->element_order(x) == 2);

  // product with trivial factor has the same table shape
  auto gt = direct_product(c3, cyclic(1));
  CHECK(gt.group->order() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(gt.group->mul(i, j) == c3->mul(i, j));
}

TEST_CASE("group table validation") {
  // broken associativity / latin square
  CHECK_THROWS(Group({{0, 1}, {1, 1}}, {1}, "bad"));
  // generators must generate
  auto c4 = cyclic(4);
  CHECK_THROWS(Group(c4->table(), {2}, "bad-gens"));
}

TEST_CASE("left cosets") {
  auto c4 = cyclic(4);
  SUBCASE("H = G: single coset") {
    auto cd = left_cosets(identity_embedding(c4));
    CHECK(cd.count() == 1);
    CHECK(cd.reps[0] == c4->identity());
  }
  SUBCASE("H trivial: |G| cosets") {
    auto subs = subgroups(c4);
    REQUIRE(subs[0].sub->order() == 1);
    CHECK(left_cosets(subs[0]).count() == 4);
  }
  SUBCASE("C2 < C4: two cosets, exact decomposition") {
    auto subs = subgroups(c4);
    const SubgroupEmbedding* c2 = nullptr;
    for (auto& s : subs)
      if (s.sub->order() == 2) c2 = &s;
    REQUIRE(c2);
    auto cd = left_cosets(*c2);
    CHECK(cd.count() == 2);
    for (int g = 0; g < 4; ++g) {
      int r = cd.rep_index[g], s = cd.sub_part[g];
      CHECK(c4->mul(cd.reps[r], c2->map[s]) == g);
    }
  }
}

TEST_CASE("coset decomposition is a bijection") {
  auto v4c2 = direct_product(direct_product(cyclic(2), cyclic(2)).group, cyclic(2));
  auto g = v4c2.group;
  for (auto& emb : subgroups(g)) {
    auto cd = left_cosets(emb);
    CHECK(cd.count() * emb.sub->order() == g->order());
    std::set<std::pair<int, int>> seen;
    for (int x = 0; x < g->order(); ++x)
      CHECK(seen.insert({cd.rep_index[x], cd.sub_part[x]}).second);
  }
}

TEST_CASE("subgroup enumeration") {
  CHECK(subgroups(cyclic(1)).size() == 1);
  CHECK(subgroups(cyclic(5)).size() == 2);

  auto klein = direct_product(cyclic(2), cyclic(2)).group;
  auto subs = subgroups(klein);
  CHECK(subs.size() == 5);  // 1 trivial + 3 order two + itself
  CHECK(subs.front().sub->order() == 1);
  CHECK(subs.back().sub->order() == 4);

  // always contains the trivial subgroup and G itself
  auto c12 = direct_product(cyclic(4), cyclic(3)).group;
  auto s12 = subgroups(c12);
  CHECK(s12.front().sub->order() == 1);
  CHECK(s12.back().sub->order() == 12);
}

TEST_CASE("latin square and inverse involution hold for constructions") {
  for (auto g : {cyclic(6), direct_product(cyclic(2), cyclic(4)).group}) {
    for (int a = 0; a < g->order(); ++a) {
      CHECK(g->inverse(g->inverse(a)) == a);
      CHECK(g->mul(a, g->inverse(a)) == g->identity());
    }
  }
}

TEST_CASE("conjugate subgroups in abelian groups are equal sets") {
  auto klein = direct_product(cyclic(2), cyclic(2)).group;
  auto subs = subgroups(klein);
  CHECK(conjugate_subgroups(*klein, subs[1].map, subs[1].map));
  CHECK_FALSE(conjugate_subgroups(*klein, subs[1].map, subs[2].map));
}

TEST_CASE("order bound") {
  setenv("TWISTMOD_MAX_GROUP_ORDER", "3", 1);
  CHECK_THROWS(subgroups(cyclic(4)));
  unsetenv("TWISTMOD_MAX_GROUP_ORDER");
  CHECK_NOTHROW(subgroups(cyclic(4)));
}
