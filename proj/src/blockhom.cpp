#include "twistmod/blockhom.hpp"

#include <stdexcept>

namespace twistmod {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

BlockDecomp BlockDecomp::single(const ModulePtr& h_module) {
  BlockDecomp d;
  d.append(h_module);
  return d;
}

void BlockDecomp::append(const ModulePtr& part) {
  offsets.push_back(total);
  total += part->dim();
  parts.push_back(part);
}

bool decomposes(const Module& m, const SubgroupEmbedding& emb,
                const BlockDecomp& d) {
  if (d.total != m.dim()) return false;
  for (int s : emb.sub->generators()) {
    const GfMatrix& full = m.act(emb.map[std::size_t(s)]);
    for (int i = 0; i < d.count(); ++i)
      for (int j = 0; j < d.count(); ++j) {
        GfMatrix b = full.block(d.offsets[std::size_t(i)],
                                d.offsets[std::size_t(j)],
                                d.parts[std::size_t(i)]->dim(),
                                d.parts[std::size_t(j)]->dim());
        if (i == j) {
          if (!(b == d.parts[std::size_t(i)]->act(s))) return false;
        } else if (!b.is_zero()) {
          return false;
        }
      }
  }
  return true;
}

BlockSparse BlockSparse::slice(const GfMatrix& full, const BlockDecomp& dst,
                               const BlockDecomp& src) {
  if (full.rows() != dst.total || full.cols() != src.total)
    fail("slice: shape mismatch");
  BlockSparse out;
  for (int i = 0; i < dst.count(); ++i)
    for (int j = 0; j < src.count(); ++j) {
      GfMatrix b = full.block(dst.offsets[std::size_t(i)],
                              src.offsets[std::size_t(j)],
                              dst.parts[std::size_t(i)]->dim(),
                              src.parts[std::size_t(j)]->dim());
      if (!b.is_zero()) out.blocks.emplace(std::make_pair(i, j), std::move(b));
    }
  return out;
}

GfMatrix BlockSparse::to_full(const Prime& p, const BlockDecomp& dst,
                              const BlockDecomp& src) const {
  GfMatrix out(p, dst.total, src.total);
  for (const auto& [key, b] : blocks)
    out.set_block(dst.offsets[std::size_t(key.first)],
                  src.offsets[std::size_t(key.second)], b);
  return out;
}

void BlockSparse::add_block(int i, int j, const GfMatrix& b) {
  auto it = blocks.find({i, j});
  if (it == blocks.end())
    blocks.emplace(std::make_pair(i, j), b);
  else
    it->second = it->second + b;
}

BlockSparse bs_mul(const BlockSparse& a, const BlockSparse& b) {
  BlockSparse out;
  for (const auto& [ka, ma] : a.blocks)
    for (const auto& [kb, mb] : b.blocks)
      if (ka.second == kb.first) out.add_block(ka.first, kb.second, ma * mb);
  return out;
}

BlockSparse bs_sub(const BlockSparse& a, const BlockSparse& b) {
  BlockSparse out = a;
  for (const auto& [k, m] : b.blocks) {
    auto it = out.blocks.find(k);
    if (it == out.blocks.end())
      out.blocks.emplace(k, GfMatrix(m.prime(), m.rows(), m.cols()) - m);
    else
      it->second = it->second - m;
  }
  return out;
}

BlockedHom::BlockedHom(const Prime& p, BlockDecomp a, BlockDecomp b)
    : p_(p), a_(std::move(a)), b_(std::move(b)) {
  pairs_.assign(std::size_t(a_.count()), {});
  coeff_offset_.assign(std::size_t(a_.count()), {});
  for (int i = 0; i < a_.count(); ++i) {
    pairs_[std::size_t(i)].resize(std::size_t(b_.count()));
    coeff_offset_[std::size_t(i)].resize(std::size_t(b_.count()));
    for (int j = 0; j < b_.count(); ++j) {
      const Module* pa = a_.parts[std::size_t(i)].get();
      const Module* pb = b_.parts[std::size_t(j)].get();
      auto key = std::make_pair(pa, pb);
      auto it = cache_.find(key);
      if (it == cache_.end()) {
        auto pb_basis = std::make_shared<PairBasis>();
        auto maps = hom_basis(a_.parts[std::size_t(i)], b_.parts[std::size_t(j)]);
        const Eigen::Index cells = pa->dim() * pb->dim();
        GfMatrix stacked(p_, Eigen::Index(maps.size()), cells);
        for (std::size_t r = 0; r < maps.size(); ++r) {
          pb_basis->basis.push_back(maps[r].matrix);
          GfMatrix v = vec_rowmajor(maps[r].matrix);
          for (Eigen::Index c = 0; c < cells; ++c)
            stacked.set(Eigen::Index(r), c, v(c, 0));
        }
        if (!maps.empty()) {
          Rref rr = row_reduce(stacked);
          pb_basis->pivot_positions = std::vector<Eigen::Index>(
              rr.pivots.begin(), rr.pivots.end());
          GfMatrix sub(p_, Eigen::Index(maps.size()), Eigen::Index(maps.size()));
          for (std::size_t r = 0; r < maps.size(); ++r)
            for (std::size_t c = 0; c < maps.size(); ++c)
              sub.set(Eigen::Index(r), Eigen::Index(c),
                      stacked(Eigen::Index(r),
                              pb_basis->pivot_positions[std::size_t(c)]));
          auto inv = inverse(sub);
          if (!inv) throw std::logic_error("hom basis is not independent");
          pb_basis->minv = std::move(*inv);
        } else {
          // no maps: minv stays empty
        }
        it = cache_.emplace(key, std::move(pb_basis)).first;
      }
      pairs_[std::size_t(i)][std::size_t(j)] = it->second;
      coeff_offset_[std::size_t(i)][std::size_t(j)] = dim_;
      dim_ += Eigen::Index(it->second->basis.size());
    }
  }
}

const BlockedHom::PairBasis& BlockedHom::pair(int a_idx, int b_idx) const {
  return *pairs_[std::size_t(a_idx)][std::size_t(b_idx)];
}

BlockSparse BlockedHom::materialize_sparse(const GfMatrix& coeffs) const {
  if (coeffs.rows() != dim_ || coeffs.cols() != 1)
    fail("materialize: wrong coefficient count");
  BlockSparse out;
  for (int i = 0; i < a_.count(); ++i)
    for (int j = 0; j < b_.count(); ++j) {
      const PairBasis& pb = pair(i, j);
      if (pb.basis.empty()) continue;
      const Eigen::Index off = coeff_offset_[std::size_t(i)][std::size_t(j)];
      GfMatrix block(p_, b_.parts[std::size_t(j)]->dim(),
                     a_.parts[std::size_t(i)]->dim());
      bool nonzero = false;
      for (std::size_t r = 0; r < pb.basis.size(); ++r) {
        const Int c = coeffs(off + Eigen::Index(r), 0);
        if (c == 0) continue;
        block = block + pb.basis[r].scaled(c);
        nonzero = true;
      }
      if (nonzero && !block.is_zero()) out.blocks.emplace(std::make_pair(j, i), std::move(block));
    }
  return out;
}

GfMatrix BlockedHom::materialize(const GfMatrix& coeffs) const {
  return materialize_sparse(coeffs).to_full(p_, b_, a_);
}

GfMatrix BlockedHom::coords(const BlockSparse& m) const {
  GfMatrix out(p_, dim_, 1);
  for (const auto& [key, block] : m.blocks) {
    const int j = key.first, i = key.second;  // block maps part i -> part j
    const PairBasis& pb = pair(i, j);
    if (pb.basis.empty()) {
      if (!block.is_zero())
        throw std::logic_error("coords: block outside the hom space");
      continue;
    }
    const Eigen::Index h = Eigen::Index(pb.basis.size());
    GfMatrix v(p_, h, 1);
    GfMatrix flat = vec_rowmajor(block);
    for (Eigen::Index r = 0; r < h; ++r)
      v.set(r, 0, flat(pb.pivot_positions[std::size_t(r)], 0));
    GfMatrix c = *pb.minv * v;
    const Eigen::Index off = coeff_offset_[std::size_t(i)][std::size_t(j)];
    for (Eigen::Index r = 0; r < h; ++r) out.set(off + r, 0, c(r, 0));
  }
  return out;
}

BlockSparse BlockedHom::basis_element(Eigen::Index idx) const {
  for (int i = 0; i < a_.count(); ++i)
    for (int j = 0; j < b_.count(); ++j) {
      const PairBasis& pb = pair(i, j);
      const Eigen::Index off = coeff_offset_[std::size_t(i)][std::size_t(j)];
      if (idx >= off && idx < off + Eigen::Index(pb.basis.size())) {
        BlockSparse out;
        out.blocks.emplace(std::make_pair(j, i),
                           pb.basis[std::size_t(idx - off)]);
        return out;
      }
    }
  fail("basis_element: index out of range");
}

std::vector<GfMatrix> equivariant_coeff_kernel(const BlockedHom& space,
                                               const Module& a_module,
                                               const Module& b_module,
                                               const std::vector<int>& gens) {
  const Prime& p = a_module.prime();
  const Eigen::Index d = space.dim();
  GfMatrix constraints(p, Eigen::Index(gens.size()) * d, d);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const int g = gens[gi];
    BlockSparse ua = BlockSparse::slice(a_module.act(g), space.src(), space.src());
    BlockSparse ub = BlockSparse::slice(b_module.act(g), space.dst(), space.dst());
    for (Eigen::Index i = 0; i < d; ++i) {
      BlockSparse bi = space.basis_element(i);
      BlockSparse diff = bs_sub(bs_mul(bi, ua), bs_mul(ub, bi));
      GfMatrix col = space.coords(diff);
      for (Eigen::Index r = 0; r < d; ++r)
        constraints.set(Eigen::Index(gi) * d + r, i, col(r, 0));
    }
  }
  return nullspace(constraints);
}

HigmanResult higman_blocked(const ModulePtr& m, const SubgroupEmbedding& emb,
                            const BlockDecomp& decomp) {
  if (!decomposes(*m, emb, decomp))
    fail("higman_blocked: decomposition does not match the restriction");
  const Prime& p = m->prime();
  const CosetData cosets = left_cosets(emb);
  std::vector<BlockSparse> u, uinv;
  for (int r : cosets.reps) {
    u.push_back(BlockSparse::slice(m->act(r), decomp, decomp));
    uinv.push_back(
        BlockSparse::slice(m->act(m->group()->inverse(r)), decomp, decomp));
  }
  BlockedHom space(p, decomp, decomp);
  const Eigen::Index d = space.dim();

  GfMatrix tr_mat(p, d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    BlockSparse bi = space.basis_element(i);
    BlockSparse acc;
    for (std::size_t j = 0; j < u.size(); ++j) {
      BlockSparse term = bs_mul(u[j], bs_mul(bi, uinv[j]));
      for (const auto& [k, b] : term.blocks) acc.add_block(k.first, k.second, b);
    }
    GfMatrix col = space.coords(acc);
    for (Eigen::Index r = 0; r < d; ++r) tr_mat.set(r, i, col(r, 0));
  }

  BlockSparse id_sparse;
  for (int i = 0; i < decomp.count(); ++i)
    id_sparse.blocks.emplace(
        std::make_pair(i, i),
        GfMatrix::identity(p, decomp.parts[std::size_t(i)]->dim()));
  auto res = solve_linear(tr_mat, space.coords(id_sparse));
  if (std::holds_alternative<Infeasible>(res)) return {false, std::nullopt};

  GfMatrix theta = space.materialize(std::get<Solution>(res).particular);
  // exact verification of the witness: H-equivariance and trace identity
  for (int s : emb.sub->generators()) {
    const GfMatrix& hs = m->act(emb.map[std::size_t(s)]);
    if (!(theta * hs == hs * theta))
      throw std::logic_error("trace preimage is not H-equivariant");
  }
  GfMatrix tr(p, m->dim(), m->dim());
  for (int r : cosets.reps)
    tr = tr + m->act(r) * theta * m->act(m->group()->inverse(r));
  if (!tr.is_identity())
    throw std::logic_error("relative trace witness failed verification");
  return {true, std::move(theta)};
}

}  // namespace twistmod
