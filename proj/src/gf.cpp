#include "twistmod/gf.hpp"

#include <algorithm>
#include <string>

namespace twistmod {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void check_same_prime(const GfMatrix& a, const GfMatrix& b) {
  if (!(a.prime() == b.prime())) fail("prime mismatch");
}

}  // namespace

Prime::Prime(Int p) : p_(p) {
  if (p < 2) fail("characteristic must be >= 2");
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) fail("characteristic must be prime");
  if (p >= (Int(1) << 20)) fail("characteristic too large for exact products");
}

Int inv_mod(Int a, const Prime& p) {
  a %= p.value();
  if (a < 0) a += p.value();
  if (a == 0) fail("inverse of zero");
  // extended Euclid
  Int r0 = p.value(), r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  s0 %= p.value();
  if (s0 < 0) s0 += p.value();
  return s0;
}

GfMatrix::GfMatrix(const Prime& p, Eigen::Index rows, Eigen::Index cols)
    : p_(p), m_(DenseInt::Zero(rows, cols)) {}

GfMatrix::GfMatrix(const Prime& p, DenseInt m) : p_(p), m_(std::move(m)) {
  const Int q = p_.value();
  m_ = m_.unaryExpr([q](Int x) {
    x %= q;
    return x < 0 ? x + q : x;
  });
}

GfMatrix::GfMatrix(const Prime& p,
                   std::initializer_list<std::initializer_list<Int>> rows)
    : p_(p), m_(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    if (Eigen::Index(r.size()) != m_.cols()) fail("ragged initializer");
    Eigen::Index j = 0;
    for (Int v : r) m_(i, j++) = v;
    ++i;
  }
  const Int q = p_.value();
  m_ = m_.unaryExpr([q](Int x) {
    x %= q;
    return x < 0 ? x + q : x;
  });
}

GfMatrix GfMatrix::identity(const Prime& p, Eigen::Index n) {
  return GfMatrix(p, DenseInt(DenseInt::Identity(n, n)));
}

void GfMatrix::set(Eigen::Index i, Eigen::Index j, Int v) {
  const Int q = p_.value();
  v %= q;
  if (v < 0) v += q;
  m_(i, j) = v;
}

GfMatrix GfMatrix::block(Eigen::Index i, Eigen::Index j, Eigen::Index h,
                         Eigen::Index w) const {
  return GfMatrix(p_, DenseInt(m_.block(i, j, h, w)));
}

void GfMatrix::set_block(Eigen::Index i, Eigen::Index j, const GfMatrix& b) {
  if (!(b.p_ == p_)) fail("prime mismatch");
  m_.block(i, j, b.rows(), b.cols()) = b.m_;
}

GfMatrix GfMatrix::scaled(Int c) const {
  return GfMatrix(p_, DenseInt(m_ * c));
}

bool GfMatrix::is_identity() const {
  return rows() == cols() && m_ == DenseInt::Identity(rows(), cols());
}

GfMatrix operator+(const GfMatrix& a, const GfMatrix& b) {
  check_same_prime(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail("dimension mismatch");
  return GfMatrix(a.prime(), DenseInt(a.dense() + b.dense()));
}

GfMatrix operator-(const GfMatrix& a, const GfMatrix& b) {
  check_same_prime(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail("dimension mismatch");
  return GfMatrix(a.prime(), DenseInt(a.dense() - b.dense()));
}

GfMatrix operator*(const GfMatrix& a, const GfMatrix& b) {
  check_same_prime(a, b);
  if (a.cols() != b.rows()) fail("dimension mismatch");
  return GfMatrix(a.prime(), DenseInt(a.dense() * b.dense()));
}

GfMatrix kron(const GfMatrix& a, const GfMatrix& b) {
  check_same_prime(a, b);
  DenseInt out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) =
          a(i, k) * b.dense();
  return GfMatrix(a.prime(), std::move(out));
}

GfMatrix hstack(const GfMatrix& a, const GfMatrix& b) {
  check_same_prime(a, b);
  if (a.rows() != b.rows()) fail("dimension mismatch");
  DenseInt out(a.rows(), a.cols() + b.cols());
  out << a.dense(), b.dense();
  return GfMatrix(a.prime(), std::move(out));
}

GfMatrix vstack(const GfMatrix& a, const GfMatrix& b) {
  check_same_prime(a, b);
  if (a.cols() != b.cols()) fail("dimension mismatch");
  DenseInt out(a.rows() + b.rows(), a.cols());
  out << a.dense(), b.dense();
  return GfMatrix(a.prime(), std::move(out));
}

namespace {

// Packed elimination for p = 2: one word holds 64 entries.
struct PackedRows {
  std::vector<std::vector<std::uint64_t>> rows;
  Eigen::Index cols = 0;

  static PackedRows from(const GfMatrix& a) {
    PackedRows p;
    p.cols = a.cols();
    const std::size_t words = (std::size_t(a.cols()) + 63) / 64;
    p.rows.assign(a.rows(), std::vector<std::uint64_t>(words, 0));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        if (a(i, j)) p.rows[i][j >> 6] |= std::uint64_t(1) << (j & 63);
    return p;
  }

  bool get(std::size_t i, Eigen::Index j) const {
    return (rows[i][j >> 6] >> (j & 63)) & 1;
  }
};

Rref row_reduce_packed(const GfMatrix& a) {
  PackedRows p = PackedRows::from(a);
  const std::size_t nrows = p.rows.size();
  std::vector<Eigen::Index> pivots;
  std::size_t r = 0;
  for (Eigen::Index c = 0; c < p.cols && r < nrows; ++c) {
    std::size_t pr = r;
    while (pr < nrows && !p.get(pr, c)) ++pr;
    if (pr == nrows) continue;
    std::swap(p.rows[r], p.rows[pr]);
    const auto& prow = p.rows[r];
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || !p.get(i, c)) continue;
      auto& row = p.rows[i];
      for (std::size_t w = c >> 6; w < row.size(); ++w) row[w] ^= prow[w];
    }
    pivots.push_back(c);
    ++r;
  }
  GfMatrix out(a.prime(), a.rows(), a.cols());
  for (std::size_t i = 0; i < nrows; ++i)
    for (Eigen::Index j = 0; j < p.cols; ++j)
      if (p.get(i, j)) out.set(Eigen::Index(i), j, 1);
  return Rref{std::move(out), std::move(pivots)};
}

Rref row_reduce_generic(const GfMatrix& a) {
  const Prime& p = a.prime();
  const Int q = p.value();
  DenseInt m = a.dense();
  const Eigen::Index nrows = m.rows(), ncols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < ncols && r < nrows; ++c) {
    Eigen::Index pr = r;
    while (pr < nrows && m(pr, c) == 0) ++pr;
    if (pr == nrows) continue;
    if (pr != r) m.row(r).swap(m.row(pr));
    const Int inv = inv_mod(m(r, c), p);
    if (inv != 1)
      m.row(r) = m.row(r).unaryExpr([&](Int x) { return (x * inv) % q; });
    for (Eigen::Index i = 0; i < nrows; ++i) {
      if (i == r) continue;
      const Int f = m(i, c);
      if (f == 0) continue;
      m.row(i) -= f * m.row(r);
      m.row(i) = m.row(i).unaryExpr([q](Int x) {
        x %= q;
        return x < 0 ? x + q : x;
      });
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{GfMatrix(p, std::move(m)), std::move(pivots)};
}

}  // namespace

Rref row_reduce(const GfMatrix& a) {
  if (a.prime().value() == 2 && a.rows() * a.cols() > 4096)
    return row_reduce_packed(a);
  return row_reduce_generic(a);
}

std::size_t rank(const GfMatrix& a) { return row_reduce(a).pivots.size(); }

SolveResult solve_linear(const GfMatrix& a, const GfMatrix& b) {
  check_same_prime(a, b);
  if (a.rows() != b.rows()) fail("dimension mismatch");
  const Eigen::Index m = a.cols(), k = b.cols();
  Rref rr = row_reduce(hstack(a, b));
  std::size_t rank_lhs = 0;
  for (Eigen::Index c : rr.pivots)
    if (c < m) ++rank_lhs;
  if (rank_lhs != rr.pivots.size())
    return Infeasible{rank_lhs, rr.pivots.size()};

  std::vector<bool> is_pivot(std::size_t(m), false);
  for (Eigen::Index c : rr.pivots) is_pivot[std::size_t(c)] = true;

  GfMatrix particular(a.prime(), m, k);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r)
    for (Eigen::Index j = 0; j < k; ++j)
      particular.set(rr.pivots[r], j, rr.reduced(Eigen::Index(r), m + j));

  std::vector<GfMatrix> null;
  const Int q = a.prime().value();
  for (Eigen::Index f = 0; f < m; ++f) {
    if (is_pivot[std::size_t(f)]) continue;
    GfMatrix v(a.prime(), m, 1);
    v.set(f, 0, 1);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      const Int coeff = rr.reduced(Eigen::Index(r), f);
      if (coeff) v.set(rr.pivots[r], 0, q - coeff);
    }
    null.push_back(std::move(v));
  }
  return Solution{std::move(particular), std::move(null)};
}

std::vector<GfMatrix> nullspace(const GfMatrix& a) {
  GfMatrix zero(a.prime(), a.rows(), 1);
  return std::get<Solution>(solve_linear(a, zero)).nullspace;
}

std::optional<GfMatrix> inverse(const GfMatrix& a) {
  if (a.rows() != a.cols()) fail("inverse of non-square matrix");
  auto res = solve_linear(a, GfMatrix::identity(a.prime(), a.rows()));
  if (std::holds_alternative<Infeasible>(res)) return std::nullopt;
  return std::get<Solution>(std::move(res)).particular;
}

GfMatrix vec_rowmajor(const GfMatrix& a) {
  GfMatrix v(a.prime(), a.rows() * a.cols(), 1);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      v.set(i * a.cols() + j, 0, a(i, j));
  return v;
}

GfMatrix unvec_rowmajor(const GfMatrix& v, Eigen::Index rows,
                        Eigen::Index cols) {
  if (v.rows() != rows * cols || v.cols() != 1) fail("bad vec shape");
  GfMatrix a(v.prime(), rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a.set(i, j, v(i * cols + j, 0));
  return a;
}

}  // namespace twistmod
