#include "twistmod/projectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistmod {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

GfMatrix trace_of(const GfMatrix& theta, const SubgroupEmbedding& emb,
                  const Module& m) {
  const CosetData cosets = left_cosets(emb);
  GfMatrix tr(m.prime(), m.dim(), m.dim());
  for (int r : cosets.reps)
    tr = tr + m.act(r) * theta * m.act(m.group()->inverse(r));
  return tr;
}

void require_h_endo(const GfMatrix& theta, const SubgroupEmbedding& emb,
                    const Module& m) {
  if (theta.rows() != m.dim() || theta.cols() != m.dim())
    fail("theta has the wrong shape");
  for (int h = 0; h < emb.sub->order(); ++h) {
    const GfMatrix& a = m.act(emb.map[std::size_t(h)]);
    if (!(theta * a == a * theta)) fail("theta is not kH-equivariant");
  }
}

}  // namespace

EquivariantMap relative_trace(const GfMatrix& theta,
                              const SubgroupEmbedding& emb,
                              const ModulePtr& m) {
  require_h_endo(theta, emb, *m);
  return EquivariantMap(m, m, trace_of(theta, emb, *m));
}

EquivariantMap counit_surjection(const SubgroupEmbedding& emb,
                                 const ModulePtr& m) {
  auto ind = induce(emb, restrict_module(emb, m));
  const CosetData cosets = left_cosets(emb);
  GfMatrix pi(m->prime(), m->dim(), ind->dim());
  for (int r = 0; r < cosets.count(); ++r)
    pi.set_block(0, Eigen::Index(r) * m->dim(),
                 m->act(cosets.reps[std::size_t(r)]));
  return EquivariantMap(ind, m, std::move(pi));
}

ProjectivityVerdict is_rel_projective(const ModulePtr& m,
                                      const SubgroupEmbedding& emb) {
  if (!same_group(*emb.big, *m->group()))
    fail("is_rel_projective: module is not over the embedding's big group");
  const Prime& p = m->prime();
  const Eigen::Index d = m->dim();
  const GfMatrix id_d = GfMatrix::identity(p, d);
  // unknown theta (d x d): H-equivariant with Tr(theta) = I
  GfMatrix a(p, 0, d * d);
  for (int s : emb.sub->generators()) {
    const GfMatrix& g = m->act(emb.map[std::size_t(s)]);
    a = vstack(a, kron(id_d, g.transpose()) - kron(g, id_d));
  }
  GfMatrix b(p, a.rows(), 1);
  const CosetData cosets = left_cosets(emb);
  GfMatrix tr_rows(p, d * d, d * d);
  for (int r : cosets.reps) {
    const GfMatrix& u = m->act(r);
    const GfMatrix& uinv = m->act(m->group()->inverse(r));
    tr_rows = tr_rows + kron(u, uinv.transpose());
  }
  a = vstack(a, tr_rows);
  b = vstack(b, vec_rowmajor(id_d));
  auto res = solve_linear(a, b);
  if (std::holds_alternative<Infeasible>(res))
    return {false, "trace", std::nullopt};
  GfMatrix theta = unvec_rowmajor(std::get<Solution>(res).particular, d, d);
  require_h_endo(theta, emb, *m);
  if (!trace_of(theta, emb, *m).is_identity())
    throw std::logic_error("trace witness failed verification");
  return {true, "trace", std::move(theta)};
}

ProjectivityVerdict is_rel_projective(const ModulePtr& m,
                                      const SubgroupEmbedding& emb,
                                      const BlockDecomp& decomp) {
  HigmanResult r = higman_blocked(m, emb, decomp);
  return {r.projective, "trace", std::move(r.witness)};
}

bool lifting_oracle(const ModulePtr& m, const SubgroupEmbedding& emb) {
  return is_split_epi(counit_surjection(emb, m)).has_value();
}

namespace {

// ev (x) id : w (x) w* (x) m -> m, basis ((i,j),b) -> delta_ij e_b
GfMatrix evaluation_matrix(const Module& w, const Module& m) {
  const Eigen::Index dw = w.dim(), dm = m.dim();
  GfMatrix f(m.prime(), dm, dw * dw * dm);
  for (Eigen::Index i = 0; i < dw; ++i)
    f.set_block(0, (i * dw + i) * dm, GfMatrix::identity(m.prime(), dm));
  return f;
}

}  // namespace

ProjectivityVerdict is_w_projective(const ModulePtr& m, const ModulePtr& w) {
  if (!same_module_space(*m, *w)) fail("is_w_projective: group or prime mismatch");
  auto big = tensor(tensor(w, dual(w)), m);
  EquivariantMap ev(big, m, evaluation_matrix(*w, *m));
  auto section = is_split_epi(ev);
  if (!section) return {false, "eval-split", std::nullopt};
  return {true, "eval-split", std::move(section->matrix)};
}

ProjectivityVerdict is_w_projective_blocked(const ModulePtr& m,
                                            const ModulePtr& w,
                                            const SubgroupEmbedding& emb,
                                            const std::vector<int>& central_gens,
                                            const BlockDecomp& m_decomp) {
  if (!same_module_space(*m, *w)) fail("is_w_projective: group or prime mismatch");
  const Prime& p = m->prime();
  const Group& g = *m->group();
  // preconditions for the coefficient-space reduction
  for (int h = 0; h < emb.sub->order(); ++h)
    if (!w->act(emb.map[std::size_t(h)]).is_identity())
      fail("blocked w-projectivity needs Res_H w trivial");
  for (int c : central_gens)
    for (int h = 0; h < emb.sub->order(); ++h)
      if (g.mul(c, emb.map[std::size_t(h)]) != g.mul(emb.map[std::size_t(h)], c))
        fail("central generators must commute with the subgroup");
  if (!decomposes(*m, emb, m_decomp))
    fail("decomposition does not match the restriction");

  auto big = tensor(tensor(w, dual(w)), m);
  const Eigen::Index copies = w->dim() * w->dim();
  BlockDecomp big_decomp;
  for (Eigen::Index k = 0; k < copies; ++k)
    for (const auto& part : m_decomp.parts) big_decomp.append(part);
  if (!decomposes(*big, emb, big_decomp))
    throw std::logic_error("tensor block structure mismatch");

  BlockedHom space(p, m_decomp, big_decomp);
  auto kernel = equivariant_coeff_kernel(space, *m, *big, central_gens);
  if (kernel.empty()) return {false, "eval-split", std::nullopt};

  // f o s = id solved in End_kH coordinates
  BlockSparse f_sparse;
  const int nparts = m_decomp.count();
  for (Eigen::Index i = 0; i < w->dim(); ++i)
    for (int a = 0; a < nparts; ++a)
      f_sparse.add_block(
          a, int((i * w->dim() + i)) * nparts + a,
          GfMatrix::identity(p, m_decomp.parts[std::size_t(a)]->dim()));

  BlockedHom end_space(p, m_decomp, m_decomp);
  GfMatrix cols(p, end_space.dim(), Eigen::Index(kernel.size()));
  for (std::size_t t = 0; t < kernel.size(); ++t) {
    BlockSparse st = space.materialize_sparse(kernel[t]);
    GfMatrix col = end_space.coords(bs_mul(f_sparse, st));
    for (Eigen::Index r = 0; r < end_space.dim(); ++r)
      cols.set(r, Eigen::Index(t), col(r, 0));
  }
  BlockSparse id_sparse;
  for (int a = 0; a < nparts; ++a)
    id_sparse.add_block(a, a,
                        GfMatrix::identity(p, m_decomp.parts[std::size_t(a)]->dim()));
  auto res = solve_linear(cols, end_space.coords(id_sparse));
  if (std::holds_alternative<Infeasible>(res))
    return {false, "eval-split", std::nullopt};

  const GfMatrix& c = std::get<Solution>(res).particular;
  GfMatrix coeffs(p, space.dim(), 1);
  for (std::size_t t = 0; t < kernel.size(); ++t)
    coeffs = coeffs + kernel[t].scaled(c(Eigen::Index(t), 0));
  GfMatrix s_full = space.materialize(coeffs);
  // full exact verification
  GfMatrix f_full = evaluation_matrix(*w, *m);
  if (!(f_full * s_full).is_identity())
    throw std::logic_error("eval-split witness failed verification");
  for (int gen : g.generators())
    if (!(s_full * m->act(gen) == big->act(gen) * s_full))
      throw std::logic_error("eval-split witness is not equivariant");
  return {true, "eval-split", std::move(s_full)};
}

std::vector<SubgroupEmbedding> vertex(const ModulePtr& m) {
  auto subs = subgroups(m->group());
  std::vector<bool> projective(subs.size(), false);
  for (std::size_t i = 0; i < subs.size(); ++i)
    projective[i] = is_rel_projective(m, subs[i]).projective;

  auto contains = [](const std::vector<int>& sup, const std::vector<int>& sub) {
    return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
  };
  std::vector<SubgroupEmbedding> minimal;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!projective[i]) continue;
    bool is_min = true;
    for (std::size_t j = 0; j < subs.size(); ++j)
      if (j != i && projective[j] && subs[j].sub->order() < subs[i].sub->order() &&
          contains(subs[i].map, subs[j].map))
        is_min = false;
    if (!is_min) continue;
    bool dup = false;
    for (const auto& kept : minimal)
      if (conjugate_subgroups(*m->group(), kept.map, subs[i].map)) dup = true;
    if (!dup) minimal.push_back(subs[i]);
  }
  return minimal;
}

}  // namespace twistmod
