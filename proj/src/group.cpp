#include "twistmod/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace twistmod {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

std::vector<int> closure_table(const std::vector<std::vector<int>>& table,
                               int identity, const std::vector<int>& seed) {
  std::vector<bool> in(table.size(), false);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[std::size_t(x)]) {
      in[std::size_t(x)] = true;
      elems.push_back(x);
    }
  };
  add(identity);
  for (int x : seed) add(x);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      add(table[std::size_t(elems[i])][std::size_t(elems[j])]);
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> closure(const Group& g, const std::vector<int>& seed) {
  return closure_table(g.table(), g.identity(), seed);
}

}  // namespace

Group::Group(std::vector<std::vector<int>> table, std::vector<int> generators,
             std::string name)
    : table_(std::move(table)),
      generators_(std::move(generators)),
      name_(std::move(name)) {
  const int n = int(table_.size());
  if (n == 0) fail("empty group table");
  for (const auto& row : table_) {
    if (int(row.size()) != n) fail("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) fail("group table entry out of range");
  }
  // Latin square
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(std::size_t(n), false),
        seen_col(std::size_t(n), false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[std::size_t(table_[std::size_t(i)][std::size_t(j)])])
        fail("repeated entry in row");
      seen_row[std::size_t(table_[std::size_t(i)][std::size_t(j)])] = true;
      if (seen_col[std::size_t(table_[std::size_t(j)][std::size_t(i)])])
        fail("repeated entry in column");
      seen_col[std::size_t(table_[std::size_t(j)][std::size_t(i)])] = true;
    }
  }
  // identity
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) fail("group table has no identity");
  // inverses
  inverse_.assign(std::size_t(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[std::size_t(a)] = b;
        break;
      }
    if (inverse_[std::size_t(a)] < 0) fail("group element has no inverse");
  }
  // associativity, exhaustive at this scale
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            fail("group table is not associative");
  }
  for (int g : generators_)
    if (g < 0 || g >= n) fail("generator out of range");
  if (generators_.empty()) fail("generator list is empty");
  if (int(closure(*this, generators_).size()) != n)
    fail("generators do not generate the group");
}

int Group::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool same_group(const Group& a, const Group& b) {
  return a.order() == b.order() && a.table() == b.table();
}

SubgroupEmbedding::SubgroupEmbedding(GroupPtr sub_in, GroupPtr big_in,
                                     std::vector<int> map_in)
    : sub(std::move(sub_in)), big(std::move(big_in)), map(std::move(map_in)) {
  if (int(map.size()) != sub->order()) fail("embedding map has wrong size");
  std::set<int> image;
  for (int v : map) {
    if (v < 0 || v >= big->order()) fail("embedding image out of range");
    image.insert(v);
  }
  if (int(image.size()) != sub->order()) fail("embedding is not injective");
  if (map[std::size_t(sub->identity())] != big->identity())
    fail("embedding does not preserve identity");
  for (int a = 0; a < sub->order(); ++a)
    for (int b = 0; b < sub->order(); ++b)
      if (map[std::size_t(sub->mul(a, b))] !=
          big->mul(map[std::size_t(a)], map[std::size_t(b)]))
        fail("embedding is not multiplicative");
}

SubgroupEmbedding identity_embedding(const GroupPtr& g) {
  std::vector<int> id(std::size_t(g->order()));
  for (int i = 0; i < g->order(); ++i) id[std::size_t(i)] = i;
  return SubgroupEmbedding(g, g, std::move(id));
}

GroupPtr cyclic(int q) {
  if (q < 1) fail("cyclic group order must be positive");
  std::vector<std::vector<int>> table(
      std::size_t(q), std::vector<int>(std::size_t(q), 0));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[std::size_t(i)][std::size_t(j)] = (i + j) % q;
  std::vector<int> gens{q > 1 ? 1 : 0};
  return std::make_shared<Group>(std::move(table), std::move(gens),
                                 "C" + std::to_string(q));
}

ProductGroup direct_product(const GroupPtr& g1, const GroupPtr& g2) {
  const int n1 = g1->order(), n2 = g2->order(), n = n1 * n2;
  auto idx = [n2](int a, int b) { return a * n2 + b; };
  std::vector<std::vector<int>> table(
      std::size_t(n), std::vector<int>(std::size_t(n), 0));
  for (int a1 = 0; a1 < n1; ++a1)
    for (int b1 = 0; b1 < n2; ++b1)
      for (int a2 = 0; a2 < n1; ++a2)
        for (int b2 = 0; b2 < n2; ++b2)
          table[std::size_t(idx(a1, b1))][std::size_t(idx(a2, b2))] =
              idx(g1->mul(a1, a2), g2->mul(b1, b2));
  std::vector<int> gens;
  for (int g : g1->generators())
    if (g != g1->identity()) gens.push_back(idx(g, g2->identity()));
  for (int g : g2->generators())
    if (g != g2->identity()) gens.push_back(idx(g1->identity(), g));
  if (gens.empty()) gens.push_back(idx(g1->identity(), g2->identity()));
  auto prod = std::make_shared<Group>(std::move(table), std::move(gens),
                                      g1->name() + "x" + g2->name());

  std::vector<int> m1(std::size_t(n1), 0), m2(std::size_t(n2), 0);
  for (int a = 0; a < n1; ++a) m1[std::size_t(a)] = idx(a, g2->identity());
  for (int b = 0; b < n2; ++b) m2[std::size_t(b)] = idx(g1->identity(), b);
  return ProductGroup{prod, SubgroupEmbedding(g1, prod, std::move(m1)),
                      SubgroupEmbedding(g2, prod, std::move(m2))};
}

CosetData left_cosets(const SubgroupEmbedding& emb) {
  const Group& g = *emb.big;
  const Group& h = *emb.sub;
  CosetData data;
  data.rep_index.assign(std::size_t(g.order()), -1);
  data.sub_part.assign(std::size_t(g.order()), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (data.rep_index[std::size_t(x)] >= 0) continue;
    const int r = int(data.reps.size());
    data.reps.push_back(x);
    for (int s = 0; s < h.order(); ++s) {
      const int y = g.mul(x, emb.map[std::size_t(s)]);
      if (data.rep_index[std::size_t(y)] >= 0)
        fail("coset decomposition is not disjoint");
      data.rep_index[std::size_t(y)] = r;
      data.sub_part[std::size_t(y)] = s;
    }
  }
  return data;
}

int max_group_order() {
  if (const char* env = std::getenv("TWISTMOD_MAX_GROUP_ORDER"))
    return std::atoi(env);
  return 64;
}

namespace {

SubgroupEmbedding embedding_from_elements(const GroupPtr& g,
                                          const std::vector<int>& elems) {
  std::vector<int> pos(std::size_t(g->order()), -1);
  for (std::size_t i = 0; i < elems.size(); ++i)
    pos[std::size_t(elems[i])] = int(i);
  const int m = int(elems.size());
  std::vector<std::vector<int>> table(
      std::size_t(m), std::vector<int>(std::size_t(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int prod = g->mul(elems[std::size_t(i)], elems[std::size_t(j)]);
      if (pos[std::size_t(prod)] < 0) fail("element set is not closed");
      table[std::size_t(i)][std::size_t(j)] = pos[std::size_t(prod)];
    }
  // greedy generating set in element order
  std::vector<int> gens;
  {
    const int e = pos[std::size_t(g->identity())];
    std::vector<int> have = closure_table(table, e, {});
    for (int i = 0; i < m && int(have.size()) < m; ++i) {
      if (std::binary_search(have.begin(), have.end(), i)) continue;
      gens.push_back(i);
      std::vector<int> seed = have;
      seed.push_back(i);
      have = closure_table(table, e, seed);
    }
    if (gens.empty()) gens.push_back(e);
  }
  auto sub = std::make_shared<Group>(std::move(table), std::move(gens),
                                     g->name() + "#" + std::to_string(m));
  return SubgroupEmbedding(sub, g, elems);
}

}  // namespace

std::vector<SubgroupEmbedding> subgroups(const GroupPtr& g) {
  if (g->order() > max_group_order())
    fail("group order exceeds subgroup enumeration bound");
  using Mask = std::uint64_t;
  auto mask_of = [](const std::vector<int>& elems) {
    Mask m = 0;
    for (int e : elems) m |= Mask(1) << e;
    return m;
  };
  std::set<Mask> seen;
  std::vector<std::vector<int>> found;
  std::queue<std::vector<int>> work;

  std::vector<int> triv = closure(*g, {});
  seen.insert(mask_of(triv));
  found.push_back(triv);
  work.push(triv);
  while (!work.empty()) {
    std::vector<int> s = work.front();
    work.pop();
    std::vector<bool> in(std::size_t(g->order()), false);
    for (int e : s) in[std::size_t(e)] = true;
    for (int x = 0; x < g->order(); ++x) {
      if (in[std::size_t(x)]) continue;
      std::vector<int> seed = s;
      seed.push_back(x);
      std::vector<int> k = closure(*g, seed);
      const Mask mk = mask_of(k);
      if (seen.insert(mk).second) {
        found.push_back(k);
        work.push(k);
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<SubgroupEmbedding> out;
  out.reserve(found.size());
  for (const auto& elems : found)
    out.push_back(embedding_from_elements(g, elems));
  return out;
}

bool conjugate_subgroups(const Group& g, const std::vector<int>& h1,
                         const std::vector<int>& h2) {
  if (h1.size() != h2.size()) return false;
  std::set<int> target(h2.begin(), h2.end());
  for (int x = 0; x < g.order(); ++x) {
    std::set<int> conj;
    for (int e : h1) conj.insert(g.mul(g.mul(x, e), g.inverse(x)));
    if (conj == target) return true;
  }
  return false;
}

}  // namespace twistmod
