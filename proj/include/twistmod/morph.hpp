#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistmod/module.hpp"

namespace twistmod {

/// A kG-linear map between modules over the same group and prime.
/// Equivariance against the group generators is enforced at construction;
/// multiplicativity of the actions then gives it for every element.
struct EquivariantMap {
  ModulePtr src;
  ModulePtr dst;
  GfMatrix matrix;  // dim(dst) x dim(src)

  EquivariantMap(ModulePtr src, ModulePtr dst, GfMatrix matrix);
};

EquivariantMap identity_map(const ModulePtr& m);
EquivariantMap compose(const EquivariantMap& f, const EquivariantMap& g);

/// Exhaustive equivariance check over every group element.
std::vector<std::string> equivariance_violations(const ModulePtr& src,
                                                 const ModulePtr& dst,
                                                 const GfMatrix& matrix);

/// Basis of Hom_kG(m, n), the nullspace of the stacked commutation
/// constraints over the group generators.
std::vector<EquivariantMap> hom_basis(const ModulePtr& m, const ModulePtr& n);

/// Retraction witness for an injective map: s with s*f = id_src.
/// Decided by one exact linear feasibility problem; nullopt is a
/// certified NotSplit.
std::optional<EquivariantMap> is_split_mono(const EquivariantMap& f);

/// Section witness for a surjective map: s with f*s = id_dst.
std::optional<EquivariantMap> is_split_epi(const EquivariantMap& f);

struct ShortExactSeq {
  EquivariantMap d1;  // X -> Y
  EquivariantMap d2;  // Y -> Z

  const ModulePtr& x() const { return d1.src; }
  const ModulePtr& y() const { return d1.dst; }
  const ModulePtr& z() const { return d2.dst; }
};

struct SesReport {
  bool ok = true;
  std::vector<std::string> violations;
};
SesReport check_ses(const ShortExactSeq& s);

/// Apply w (x) (-) with the diagonal action to the whole sequence.
ShortExactSeq tensor_ses(const ShortExactSeq& s, const ModulePtr& w);

struct WSplit {
  bool split = false;
  std::optional<EquivariantMap> witness;
};
WSplit is_w_split(const ShortExactSeq& s, const ModulePtr& w);

enum class IsoKind { yes, no, probably_no };
struct IsoResult {
  IsoKind kind;
  std::optional<EquivariantMap> witness;  // exact invertible map when yes
};

/// Randomized isomorphism test: a yes carries an exactly verified
/// invertible witness; a no at equal Hom dimensions is only "probably no".
IsoResult is_isomorphic(const ModulePtr& m, const ModulePtr& n,
                        int trials = 64, std::uint64_t seed = 0);

}  // namespace twistmod
