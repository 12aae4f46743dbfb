#pragma once

#include <map>
#include <utility>
#include <vector>

#include "twistmod/morph.hpp"

namespace twistmod {

/// Decomposition of the restriction of a module to a subgroup H into
/// contiguous invariant blocks, each a small H-module. Lets Hom spaces of
/// large structured modules (twisted inductions, induced sums) be computed
/// pairwise instead of as one dense commutant system.
struct BlockDecomp {
  std::vector<Eigen::Index> offsets;
  std::vector<ModulePtr> parts;
  Eigen::Index total = 0;

  static BlockDecomp single(const ModulePtr& h_module);
  void append(const ModulePtr& part);
  int count() const { return int(parts.size()); }
};

/// Check that rho_M(map(h)) really is block-diagonal along the
/// decomposition with the parts' actions on the diagonal, for every
/// generator h of the subgroup.
bool decomposes(const Module& m, const SubgroupEmbedding& emb,
                const BlockDecomp& d);

/// Matrix between two decomposed spaces, stored block-sparse.
/// Keys are (dst part index, src part index).
struct BlockSparse {
  std::map<std::pair<int, int>, GfMatrix> blocks;

  static BlockSparse slice(const GfMatrix& full, const BlockDecomp& dst,
                           const BlockDecomp& src);
  GfMatrix to_full(const Prime& p, const BlockDecomp& dst,
                   const BlockDecomp& src) const;
  void add_block(int i, int j, const GfMatrix& b);
};

BlockSparse bs_mul(const BlockSparse& a, const BlockSparse& b);
BlockSparse bs_sub(const BlockSparse& a, const BlockSparse& b);

/// Hom_kH(+A_parts, +B_parts) = direct sum of the pairwise Hom spaces.
/// Provides a global coefficient indexing, materialization, and exact
/// coordinate extraction for maps known to lie in the space.
class BlockedHom {
 public:
  BlockedHom(const Prime& p, BlockDecomp a, BlockDecomp b);

  Eigen::Index dim() const { return dim_; }
  const BlockDecomp& src() const { return a_; }
  const BlockDecomp& dst() const { return b_; }

  BlockSparse materialize_sparse(const GfMatrix& coeffs) const;
  GfMatrix materialize(const GfMatrix& coeffs) const;
  GfMatrix coords(const BlockSparse& m) const;

  /// Single coefficient-basis element as a one-block sparse matrix.
  BlockSparse basis_element(Eigen::Index i) const;

 private:
  struct PairBasis {
    std::vector<GfMatrix> basis;
    std::vector<Eigen::Index> pivot_positions;  // rows of the stacked vecs
    std::optional<GfMatrix> minv;               // h x h solve for coords
  };
  const PairBasis& pair(int a_idx, int b_idx) const;

  Prime p_;
  BlockDecomp a_, b_;
  std::map<std::pair<const Module*, const Module*>,
           std::shared_ptr<PairBasis>> cache_;
  std::vector<std::vector<std::shared_ptr<PairBasis>>> pairs_;  // [a][b]
  std::vector<std::vector<Eigen::Index>> coeff_offset_;         // [a][b]
  Eigen::Index dim_ = 0;
};

/// Basis, in coefficient space, of {F in Hom_kH : F rho_A(g) = rho_B(g) F
/// for g in gens}. Each g must commute with the embedded subgroup, so the
/// constraint matrices stay inside the blocked space.
std::vector<GfMatrix> equivariant_coeff_kernel(const BlockedHom& space,
                                               const Module& a_module,
                                               const Module& b_module,
                                               const std::vector<int>& gens);

struct HigmanResult {
  bool projective = false;
  std::optional<GfMatrix> witness;  // H-endomorphism with relative trace = I
};

/// Higman's criterion evaluated blockwise: m is H-projective iff the
/// identity lies in the image of the relative trace on End_kH(Res m).
HigmanResult higman_blocked(const ModulePtr& m, const SubgroupEmbedding& emb,
                            const BlockDecomp& decomp);

}  // namespace twistmod
