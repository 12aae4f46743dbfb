#include "twistmod/module.hpp"

#include <queue>
#include <stdexcept>

namespace twistmod {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

Eigen::Index common_dim(const std::vector<GfMatrix>& action) {
  if (action.empty()) fail("module needs one matrix per group element");
  const Eigen::Index d = action.front().rows();
  for (const auto& a : action)
    if (a.rows() != d || a.cols() != d) fail("action matrices must be square of equal size");
  return d;
}

// Identity plus products against every generator. Because the generators
// close to the whole group, this implies the full multiplicative law.
void check_generator_complete(const Group& g, const Prime& p,
                              const std::vector<GfMatrix>& action,
                              Eigen::Index dim) {
  if (int(action.size()) != g.order()) fail("module needs one matrix per group element");
  for (const auto& a : action)
    if (!(a.prime() == p)) fail("prime mismatch in action");
  if (!action[std::size_t(g.identity())].is_identity())
    fail("identity element must act as the identity matrix");
  for (int s : g.generators())
    for (int x = 0; x < g.order(); ++x)
      if (!(action[std::size_t(s)] * action[std::size_t(x)] ==
            action[std::size_t(g.mul(s, x))]))
        fail("action is not multiplicative on generator pair");
  (void)dim;
}

}  // namespace

Module::Module(GroupPtr group, const Prime& p, std::vector<GfMatrix> action)
    : group_(std::move(group)), p_(p), dim_(common_dim(action)),
      action_(std::move(action)) {
  check_generator_complete(*group_, p_, action_, dim_);
}

Module::Module(Trusted, GroupPtr group, const Prime& p,
               std::vector<GfMatrix> action)
    : group_(std::move(group)), p_(p), dim_(common_dim(action)),
      action_(std::move(action)) {}

ModulePtr make_module(GroupPtr group, const Prime& p,
                      std::vector<GfMatrix> action) {
  return std::make_shared<Module>(std::move(group), p, std::move(action));
}

ModulePtr module_from_generators(const GroupPtr& group, const Prime& p,
                                 const std::map<int, GfMatrix>& gen_action) {
  for (int s : group->generators())
    if (!gen_action.count(s) && s != group->identity())
      fail("missing generator action");
  Eigen::Index dim = -1;
  for (const auto& [s, m] : gen_action) {
    (void)s;
    if (dim < 0) dim = m.rows();
  }
  if (dim < 0) dim = 1;
  std::vector<GfMatrix> action(std::size_t(group->order()),
                               GfMatrix(p, 0, 0));
  std::vector<bool> known(std::size_t(group->order()), false);
  action[std::size_t(group->identity())] = GfMatrix::identity(p, dim);
  known[std::size_t(group->identity())] = true;
  std::queue<int> work;
  work.push(group->identity());
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (int s : group->generators()) {
      int y = group->mul(s, x);
      if (known[std::size_t(y)]) continue;
      action[std::size_t(y)] =
          gen_action.at(s) * action[std::size_t(x)];
      known[std::size_t(y)] = true;
      work.push(y);
    }
  }
  for (bool k : known)
    if (!k) fail("generators do not reach every element");
  return make_module(group, p, std::move(action));
}

ModulePtr trivial_module(const GroupPtr& g, const Prime& p) {
  std::vector<GfMatrix> action(std::size_t(g->order()),
                               GfMatrix::identity(p, 1));
  return std::make_shared<Module>(Module::Trusted{}, g, p, std::move(action));
}

ModulePtr regular_module(const GroupPtr& g, const Prime& p) {
  const int n = g->order();
  std::vector<GfMatrix> action;
  action.reserve(std::size_t(n));
  for (int x = 0; x < n; ++x) {
    GfMatrix m(p, n, n);
    for (int h = 0; h < n; ++h) m.set(g->mul(x, h), h, 1);
    action.push_back(std::move(m));
  }
  return std::make_shared<Module>(Module::Trusted{}, g, p, std::move(action));
}

ModulePtr direct_sum(const ModulePtr& m, const ModulePtr& n) {
  if (!same_module_space(*m, *n)) fail("direct_sum: group or prime mismatch");
  std::vector<GfMatrix> action;
  action.reserve(m->action().size());
  for (int x = 0; x < m->group()->order(); ++x) {
    GfMatrix b(m->prime(), m->dim() + n->dim(), m->dim() + n->dim());
    b.set_block(0, 0, m->act(x));
    b.set_block(m->dim(), m->dim(), n->act(x));
    action.push_back(std::move(b));
  }
  return std::make_shared<Module>(Module::Trusted{}, m->group(), m->prime(),
                                  std::move(action));
}

ModulePtr tensor(const ModulePtr& m, const ModulePtr& n) {
  if (!same_module_space(*m, *n)) fail("tensor: group or prime mismatch");
  std::vector<GfMatrix> action;
  action.reserve(m->action().size());
  for (int x = 0; x < m->group()->order(); ++x)
    action.push_back(kron(m->act(x), n->act(x)));
  return std::make_shared<Module>(Module::Trusted{}, m->group(), m->prime(),
                                  std::move(action));
}

ModulePtr dual(const ModulePtr& m) {
  std::vector<GfMatrix> action;
  action.reserve(m->action().size());
  for (int x = 0; x < m->group()->order(); ++x)
    action.push_back(m->act(m->group()->inverse(x)).transpose());
  return std::make_shared<Module>(Module::Trusted{}, m->group(), m->prime(),
                                  std::move(action));
}

ModulePtr restrict_module(const SubgroupEmbedding& emb, const ModulePtr& m) {
  if (!same_group(*emb.big, *m->group()))
    fail("restrict: module is not over the embedding's big group");
  std::vector<GfMatrix> action;
  action.reserve(std::size_t(emb.sub->order()));
  for (int h = 0; h < emb.sub->order(); ++h)
    action.push_back(m->act(emb.map[std::size_t(h)]));
  return std::make_shared<Module>(Module::Trusted{}, emb.sub, m->prime(),
                                  std::move(action));
}

ModulePtr induce(const SubgroupEmbedding& emb, const ModulePtr& m) {
  if (!same_group(*emb.sub, *m->group()))
    fail("induce: module is not over the embedding's subgroup");
  const CosetData cosets = left_cosets(emb);
  const int nc = cosets.count();
  const Eigen::Index d = m->dim();
  const Group& g = *emb.big;
  std::vector<GfMatrix> action;
  action.reserve(std::size_t(g.order()));
  for (int x = 0; x < g.order(); ++x) {
    GfMatrix b(m->prime(), nc * d, nc * d);
    for (int r = 0; r < nc; ++r) {
      const int moved = g.mul(x, cosets.reps[std::size_t(r)]);
      const int target = cosets.rep_index[std::size_t(moved)];
      const int h = cosets.sub_part[std::size_t(moved)];
      b.set_block(target * d, r * d, m->act(h));
    }
    action.push_back(std::move(b));
  }
  return std::make_shared<Module>(Module::Trusted{}, emb.big, m->prime(),
                                  std::move(action));
}

ModuleReport check_module(const Module& m) {
  ModuleReport rep;
  const Group& g = *m.group();
  if (int(m.action().size()) != g.order()) {
    rep.ok = false;
    rep.violations.push_back("wrong number of action matrices");
    return rep;
  }
  if (!m.act(g.identity()).is_identity()) {
    rep.ok = false;
    rep.violations.push_back("identity does not act as I");
  }
  for (int x = 0; x < g.order(); ++x)
    if (rank(m.act(x)) != std::size_t(m.dim())) {
      rep.ok = false;
      rep.violations.push_back("singular action at element " +
                               std::to_string(x));
    }
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (!(m.act(x) * m.act(y) == m.act(g.mul(x, y)))) {
        rep.ok = false;
        rep.violations.push_back("action not multiplicative at pair (" +
                                 std::to_string(x) + "," + std::to_string(y) +
                                 ")");
      }
  return rep;
}

bool same_module_space(const Module& a, const Module& b) {
  return a.prime() == b.prime() && same_group(*a.group(), *b.group());
}

}  // namespace twistmod
