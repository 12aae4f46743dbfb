#pragma once

// Shared helpers for the test binaries: small canonical sequences and a
// seeded random (module, subgroup) instance generator used by the oracle
// agreement suites.

#include <random>

#include "twistmod/morph.hpp"
#include "twistmod/projectivity.hpp"

namespace testsupport {

using namespace twistmod;

inline ShortExactSeq canonical_split(const ModulePtr& x, const ModulePtr& z) {
  auto y = direct_sum(x, z);
  GfMatrix d1(x->prime(), y->dim(), x->dim());
  d1.set_block(0, 0, GfMatrix::identity(x->prime(), x->dim()));
  GfMatrix d2(x->prime(), z->dim(), y->dim());
  d2.set_block(0, x->dim(), GfMatrix::identity(x->prime(), z->dim()));
  return ShortExactSeq{EquivariantMap(x, y, std::move(d1)),
                       EquivariantMap(y, z, std::move(d2))};
}

inline ShortExactSeq socle_sequence_c2() {
  Prime p2(2);
  auto c2 = cyclic(2);
  auto k = trivial_module(c2, p2);
  auto reg = regular_module(c2, p2);
  return ShortExactSeq{EquivariantMap(k, reg, GfMatrix(p2, {{1}, {1}})),
                       EquivariantMap(reg, k, GfMatrix(p2, {{1, 1}}))};
}

inline GfMatrix random_invertible(const Prime& p, Eigen::Index n,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> d(0, p.value() - 1);
  for (;;) {
    GfMatrix m(p, n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m.set(i, j, d(rng));
    if (rank(m) == std::size_t(n)) return m;
  }
}

inline ModulePtr conjugated(const ModulePtr& m, const GfMatrix& p_mat) {
  auto pinv = inverse(p_mat);
  std::vector<GfMatrix> action;
  for (int g = 0; g < m->group()->order(); ++g)
    action.push_back(p_mat * m->act(g) * *pinv);
  return make_module(m->group(), m->prime(), std::move(action));
}

struct RandomInstance {
  GroupPtr group;
  Prime p;
  ModulePtr module;
  SubgroupEmbedding subgroup;
};

/// Seeded instance over small abelian groups: a sum of modules induced
/// from random subgroups (plus trivial/regular pieces), hidden behind a
/// random change of basis. Dimensions shrink as the group grows so the
/// eval-split systems stay at desk scale.
inline RandomInstance random_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  struct Shape {
    int kind;      // 0..5 selects the group construction
    Int prime;
    Eigen::Index dim_cap;
  };
  const Shape shapes[] = {
      {0, 2, 20}, {1, 2, 16}, {2, 2, 12}, {3, 2, 8},
      {4, 2, 5},  {5, 3, 12}, {6, 3, 5},
  };
  const Shape shape = shapes[rng() % std::size(shapes)];
  GroupPtr g;
  switch (shape.kind) {
    case 0: g = cyclic(2); break;
    case 1: g = cyclic(4); break;
    case 2: g = direct_product(cyclic(2), cyclic(2)).group; break;
    case 3: g = direct_product(cyclic(2), cyclic(4)).group; break;
    case 4: g = direct_product(cyclic(2), cyclic(8)).group; break;
    case 5: g = cyclic(3); break;
    default: g = cyclic(9); break;
  }
  Prime p(shape.prime);
  auto subs = subgroups(g);

  ModulePtr m;
  int pieces = 1 + int(rng() % 3);
  for (int i = 0; i < pieces; ++i) {
    ModulePtr piece;
    switch (rng() % 4) {
      case 0: piece = trivial_module(g, p); break;
      case 1: piece = regular_module(g, p); break;
      default: {
        const auto& emb = subs[rng() % subs.size()];
        piece = induce(emb, trivial_module(emb.sub, p));
        break;
      }
    }
    ModulePtr next = m ? direct_sum(m, piece) : piece;
    if (m && next->dim() > shape.dim_cap) break;
    m = next;
  }
  auto basis_change = random_invertible(p, m->dim(), rng);
  m = conjugated(m, basis_change);

  const auto& h = subs[rng() % subs.size()];
  return RandomInstance{g, p, m, h};
}

}  // namespace testsupport
