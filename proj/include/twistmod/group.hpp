#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "twistmod/gf.hpp"

namespace twistmod {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Finite group given by its full multiplication table.
/// The table is validated at construction: Latin square, identity and
/// inverse consistency, associativity (exhaustive for order <= 64),
/// and that the stored generators close to the whole group.
class Group {
 public:
  Group(std::vector<std::vector<int>> table, std::vector<int> generators,
        std::string name);

  int order() const { return int(table_.size()); }
  int mul(int a, int b) const { return table_[std::size_t(a)][std::size_t(b)]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[std::size_t(a)]; }
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& name() const { return name_; }

  /// Order of a single element.
  int element_order(int a) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> generators_;
  std::string name_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

bool same_group(const Group& a, const Group& b);

struct SubgroupEmbedding {
  GroupPtr sub;
  GroupPtr big;
  std::vector<int> map;  // injective, multiplicative, identity-preserving

  SubgroupEmbedding(GroupPtr sub, GroupPtr big, std::vector<int> map);
};

SubgroupEmbedding identity_embedding(const GroupPtr& g);

GroupPtr cyclic(int q);

struct ProductGroup {
  GroupPtr group;
  SubgroupEmbedding left;
  SubgroupEmbedding right;
};
ProductGroup direct_product(const GroupPtr& g1, const GroupPtr& g2);

/// Left transversal of H in G with an exact decomposition:
/// every g equals reps[rep_index(g)] * map(h(g)).
struct CosetData {
  std::vector<int> reps;
  std::vector<int> rep_index;  // indexed by element of big
  std::vector<int> sub_part;   // indexed by element of big; element of sub

  int count() const { return int(reps.size()); }
};
CosetData left_cosets(const SubgroupEmbedding& emb);

/// All subgroups, as embeddings, sorted by order (then by element set).
/// Enumeration is closure-based; the order bound (default 64) can be
/// overridden with TWISTMOD_MAX_GROUP_ORDER.
std::vector<SubgroupEmbedding> subgroups(const GroupPtr& g);

int max_group_order();

/// Conjugacy of subgroups by exhaustive conjugation of element sets.
bool conjugate_subgroups(const Group& g, const std::vector<int>& h1,
                         const std::vector<int>& h2);

}  // namespace twistmod
