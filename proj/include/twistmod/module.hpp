#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "twistmod/group.hpp"

namespace twistmod {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

/// A kG-module: one invertible dim x dim matrix over GF(p) per group
/// element. Values are immutable after construction.
///
/// Basis conventions used by the functors (fixed so that serialized
/// fixtures are reproducible):
///   direct_sum : left summand first, then right
///   tensor     : pairs (i,j) in row-major order, i from the left factor
///   induce     : coset-major, (coset rep r, module basis j) -> r*dim + j
class Module {
 public:
  struct Trusted {};  // tag for functor outputs whose law holds by construction

  Module(GroupPtr group, const Prime& p, std::vector<GfMatrix> action);
  Module(Trusted, GroupPtr group, const Prime& p,
         std::vector<GfMatrix> action);

  const GroupPtr& group() const { return group_; }
  const Prime& prime() const { return p_; }
  Eigen::Index dim() const { return dim_; }
  const GfMatrix& act(int g) const { return action_[std::size_t(g)]; }
  const std::vector<GfMatrix>& action() const { return action_; }

 private:
  GroupPtr group_;
  Prime p_;
  Eigen::Index dim_;
  std::vector<GfMatrix> action_;
};

ModulePtr make_module(GroupPtr group, const Prime& p,
                      std::vector<GfMatrix> action);

/// Build a module from matrices for the group's generators; the action of
/// every other element is filled in along the multiplication table.
ModulePtr module_from_generators(const GroupPtr& group, const Prime& p,
                                 const std::map<int, GfMatrix>& gen_action);

ModulePtr trivial_module(const GroupPtr& g, const Prime& p);
ModulePtr regular_module(const GroupPtr& g, const Prime& p);

ModulePtr direct_sum(const ModulePtr& m, const ModulePtr& n);
ModulePtr tensor(const ModulePtr& m, const ModulePtr& n);
ModulePtr dual(const ModulePtr& m);

ModulePtr restrict_module(const SubgroupEmbedding& emb, const ModulePtr& m);
ModulePtr induce(const SubgroupEmbedding& emb, const ModulePtr& m);

struct ModuleReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Exhaustive verification of the module laws: identity acts as I, the
/// action is multiplicative over every pair, every matrix is invertible.
ModuleReport check_module(const Module& m);

bool same_module_space(const Module& a, const Module& b);

}  // namespace twistmod
