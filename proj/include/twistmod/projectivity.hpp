#pragma once

#include "twistmod/blockhom.hpp"
#include "twistmod/morph.hpp"

namespace twistmod {

struct ProjectivityVerdict {
  bool projective = false;
  std::string method;               // trace | lifting-oracle | eval-split
  std::optional<GfMatrix> witness;  // re-verified exactly before returning
};

/// Relative trace Tr(theta) = sum over coset reps g of rho(g) theta rho(g)^-1.
/// theta must be an H-endomorphism of Res_H m; the result is kG-equivariant.
EquivariantMap relative_trace(const GfMatrix& theta,
                              const SubgroupEmbedding& emb,
                              const ModulePtr& m);

/// The canonical surjection Ind_H(Res_H m) ->> m, always H-split.
EquivariantMap counit_surjection(const SubgroupEmbedding& emb,
                                 const ModulePtr& m);

/// Higman's criterion: m is H-projective iff id_m lies in the image of the
/// relative trace on End_kH(Res m). Decided by one linear feasibility
/// problem in the unknown trace preimage.
ProjectivityVerdict is_rel_projective(const ModulePtr& m,
                                      const SubgroupEmbedding& emb);

/// Same verdict, computed blockwise along a decomposition of Res_H m.
ProjectivityVerdict is_rel_projective(const ModulePtr& m,
                                      const SubgroupEmbedding& emb,
                                      const BlockDecomp& decomp);

/// Independent oracle: m is H-projective iff the counit surjection splits.
bool lifting_oracle(const ModulePtr& m, const SubgroupEmbedding& emb);

/// Membership in P(w): m is w-projective iff the evaluation map
/// w (x) w* (x) m -> m splits.
ProjectivityVerdict is_w_projective(const ModulePtr& m, const ModulePtr& w);

/// Blocked variant for G = H x (central complement) when Res_H w is
/// trivial; used for large structured modules. Identical verdicts.
ProjectivityVerdict is_w_projective_blocked(const ModulePtr& m,
                                            const ModulePtr& w,
                                            const SubgroupEmbedding& emb,
                                            const std::vector<int>& central_gens,
                                            const BlockDecomp& m_decomp);

/// Minimal subgroups H with m H-projective, deduplicated up to conjugacy.
std::vector<SubgroupEmbedding> vertex(const ModulePtr& m);

}  // namespace twistmod
