#include "twistmod/morph.hpp"

#include <random>
#include <stdexcept>

namespace twistmod {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

// Rows expressing F |-> F*rho_src(s) - rho_dst(s)*F on vec_row(F).
GfMatrix commutation_rows(const Module& src, const Module& dst, int s) {
  const GfMatrix i_src = GfMatrix::identity(src.prime(), src.dim());
  const GfMatrix i_dst = GfMatrix::identity(dst.prime(), dst.dim());
  return kron(i_dst, src.act(s).transpose()) - kron(dst.act(s), i_src);
}

GfMatrix stacked_commutation(const Module& src, const Module& dst) {
  GfMatrix rows(src.prime(), 0, dst.dim() * src.dim());
  for (int s : src.group()->generators())
    rows = vstack(rows, commutation_rows(src, dst, s));
  return rows;
}

}  // namespace

EquivariantMap::EquivariantMap(ModulePtr src_in, ModulePtr dst_in,
                               GfMatrix matrix_in)
    : src(std::move(src_in)), dst(std::move(dst_in)),
      matrix(std::move(matrix_in)) {
  if (!same_module_space(*src, *dst)) fail("map: group or prime mismatch");
  if (!(matrix.prime() == src->prime())) fail("map: prime mismatch");
  if (matrix.rows() != dst->dim() || matrix.cols() != src->dim())
    fail("map: matrix has wrong shape");
  for (int s : src->group()->generators())
    if (!(matrix * src->act(s) == dst->act(s) * matrix))
      fail("map is not equivariant");
}

EquivariantMap identity_map(const ModulePtr& m) {
  return EquivariantMap(m, m, GfMatrix::identity(m->prime(), m->dim()));
}

EquivariantMap compose(const EquivariantMap& f, const EquivariantMap& g) {
  if (g.dst->dim() != f.src->dim()) fail("compose: shape mismatch");
  return EquivariantMap(g.src, f.dst, f.matrix * g.matrix);
}

std::vector<std::string> equivariance_violations(const ModulePtr& src,
                                                 const ModulePtr& dst,
                                                 const GfMatrix& matrix) {
  std::vector<std::string> out;
  for (int g = 0; g < src->group()->order(); ++g)
    if (!(matrix * src->act(g) == dst->act(g) * matrix))
      out.push_back("not equivariant at element " + std::to_string(g));
  return out;
}

std::vector<EquivariantMap> hom_basis(const ModulePtr& m, const ModulePtr& n) {
  if (!same_module_space(*m, *n)) fail("hom_basis: group or prime mismatch");
  std::vector<EquivariantMap> out;
  for (const GfMatrix& v : nullspace(stacked_commutation(*m, *n)))
    out.emplace_back(m, n, unvec_rowmajor(v, n->dim(), m->dim()));
  return out;
}

std::optional<EquivariantMap> is_split_mono(const EquivariantMap& f) {
  if (rank(f.matrix) != std::size_t(f.src->dim()))
    fail("is_split_mono: map is not injective");
  // unknown s : dst -> src with s equivariant and s*f = I
  const Prime& p = f.matrix.prime();
  GfMatrix a = stacked_commutation(*f.dst, *f.src);
  GfMatrix b(p, a.rows(), 1);
  // vec_row(S * f) = (I (x) f^T) vec_row(S)
  a = vstack(a, kron(GfMatrix::identity(p, f.src->dim()), f.matrix.transpose()));
  b = vstack(b, vec_rowmajor(GfMatrix::identity(p, f.src->dim())));
  auto res = solve_linear(a, b);
  if (std::holds_alternative<Infeasible>(res)) return std::nullopt;
  GfMatrix s = unvec_rowmajor(std::get<Solution>(res).particular,
                              f.src->dim(), f.dst->dim());
  EquivariantMap witness(f.dst, f.src, std::move(s));
  if (!(witness.matrix * f.matrix).is_identity())
    throw std::logic_error("split witness failed verification");
  return witness;
}

std::optional<EquivariantMap> is_split_epi(const EquivariantMap& f) {
  if (rank(f.matrix) != std::size_t(f.dst->dim()))
    fail("is_split_epi: map is not surjective");
  const Prime& p = f.matrix.prime();
  GfMatrix a = stacked_commutation(*f.dst, *f.src);
  GfMatrix b(p, a.rows(), 1);
  // vec_row(f * S) = (f (x) I) vec_row(S)
  a = vstack(a, kron(f.matrix, GfMatrix::identity(p, f.dst->dim())));
  b = vstack(b, vec_rowmajor(GfMatrix::identity(p, f.dst->dim())));
  auto res = solve_linear(a, b);
  if (std::holds_alternative<Infeasible>(res)) return std::nullopt;
  GfMatrix s = unvec_rowmajor(std::get<Solution>(res).particular,
                              f.src->dim(), f.dst->dim());
  EquivariantMap witness(f.dst, f.src, std::move(s));
  if (!(f.matrix * witness.matrix).is_identity())
    throw std::logic_error("split witness failed verification");
  return witness;
}

SesReport check_ses(const ShortExactSeq& s) {
  SesReport rep;
  auto blame = [&rep](const std::string& v) {
    rep.ok = false;
    rep.violations.push_back(v);
  };
  if (s.d1.dst->dim() != s.d2.src->dim() ||
      !same_module_space(*s.d1.dst, *s.d2.src)) {
    blame("middle modules of d1 and d2 do not match");
    return rep;
  }
  for (auto& v : equivariance_violations(s.d1.src, s.d1.dst, s.d1.matrix))
    blame("d1 " + v);
  for (auto& v : equivariance_violations(s.d2.src, s.d2.dst, s.d2.matrix))
    blame("d2 " + v);
  if (!(s.d2.matrix * s.d1.matrix).is_zero()) blame("d2*d1 is not zero");
  const std::size_t r1 = rank(s.d1.matrix), r2 = rank(s.d2.matrix);
  if (r1 != std::size_t(s.x()->dim())) blame("d1 is not injective");
  if (r2 != std::size_t(s.z()->dim())) blame("d2 is not surjective");
  if (r1 + r2 != std::size_t(s.y()->dim()))
    blame("image of d1 differs from kernel of d2");
  return rep;
}

ShortExactSeq tensor_ses(const ShortExactSeq& s, const ModulePtr& w) {
  if (!same_module_space(*w, *s.y())) fail("tensor_ses: group or prime mismatch");
  auto wx = tensor(w, s.x());
  auto wy = tensor(w, s.y());
  auto wz = tensor(w, s.z());
  const GfMatrix id_w = GfMatrix::identity(w->prime(), w->dim());
  ShortExactSeq out{EquivariantMap(wx, wy, kron(id_w, s.d1.matrix)),
                    EquivariantMap(wy, wz, kron(id_w, s.d2.matrix))};
  auto rep = check_ses(out);
  if (!rep.ok) throw std::logic_error("tensoring did not preserve exactness");
  return out;
}

WSplit is_w_split(const ShortExactSeq& s, const ModulePtr& w) {
  auto tensored = tensor_ses(s, w);
  auto witness = is_split_mono(tensored.d1);
  return WSplit{witness.has_value(), std::move(witness)};
}

IsoResult is_isomorphic(const ModulePtr& m, const ModulePtr& n, int trials,
                        std::uint64_t seed) {
  if (m->dim() != n->dim()) return {IsoKind::no, std::nullopt};
  auto fwd = hom_basis(m, n);
  auto bwd = hom_basis(n, m);
  if (fwd.size() != bwd.size()) return {IsoKind::no, std::nullopt};
  if (fwd.empty())
    return {m->dim() == 0 ? IsoKind::yes : IsoKind::no, std::nullopt};

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> d(0, m->prime().value() - 1);
  for (int t = 0; t < trials; ++t) {
    GfMatrix f(m->prime(), n->dim(), m->dim());
    for (auto& b : fwd) f = f + b.matrix.scaled(d(rng));
    if (rank(f) == std::size_t(m->dim())) {
      EquivariantMap witness(m, n, std::move(f));
      if (!inverse(witness.matrix).has_value())
        throw std::logic_error("iso witness failed invertibility check");
      return {IsoKind::yes, std::move(witness)};
    }
  }
  return {IsoKind::probably_no, std::nullopt};
}

}  // namespace twistmod
