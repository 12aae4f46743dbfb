#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace twistmod {

using Int = std::int64_t;
using DenseInt = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Field characteristic. Primality is checked at construction.
class Prime {
 public:
  explicit Prime(Int p);
  Int value() const { return p_; }
  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  Int p_;
};

Int inv_mod(Int a, const Prime& p);

/// Dense matrix over GF(p). Entries are kept reduced to [0, p).
/// Eigen supplies storage and integer products; reduction happens here.
class GfMatrix {
 public:
  GfMatrix(const Prime& p, Eigen::Index rows, Eigen::Index cols);
  GfMatrix(const Prime& p, DenseInt m);
  GfMatrix(const Prime& p,
           std::initializer_list<std::initializer_list<Int>> rows);

  static GfMatrix identity(const Prime& p, Eigen::Index n);

  const Prime& prime() const { return p_; }
  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }

  Int operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  void set(Eigen::Index i, Eigen::Index j, Int v);

  const DenseInt& dense() const { return m_; }

  GfMatrix transpose() const { return GfMatrix(p_, DenseInt(m_.transpose())); }
  GfMatrix block(Eigen::Index i, Eigen::Index j, Eigen::Index h,
                 Eigen::Index w) const;
  void set_block(Eigen::Index i, Eigen::Index j, const GfMatrix& b);

  GfMatrix scaled(Int c) const;

  bool is_zero() const { return m_.isZero(); }
  bool is_identity() const;

  friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
    return a.p_ == b.p_ && a.m_.rows() == b.m_.rows() &&
           a.m_.cols() == b.m_.cols() && a.m_ == b.m_;
  }

 private:
  Prime p_;
  DenseInt m_;
};

GfMatrix operator+(const GfMatrix& a, const GfMatrix& b);
GfMatrix operator-(const GfMatrix& a, const GfMatrix& b);
GfMatrix operator*(const GfMatrix& a, const GfMatrix& b);

/// Kronecker product; entry ((i,j),(k,l)) = A(i,k)*B(j,l).
GfMatrix kron(const GfMatrix& a, const GfMatrix& b);

GfMatrix hstack(const GfMatrix& a, const GfMatrix& b);
GfMatrix vstack(const GfMatrix& a, const GfMatrix& b);

/// Reduced row echelon form with the canonical pivot rule
/// (first nonzero in column order). The RREF of a matrix is unique,
/// so every downstream witness is reproducible.
struct Rref {
  GfMatrix reduced;
  std::vector<Eigen::Index> pivots;  // pivot column per pivot row
};
Rref row_reduce(const GfMatrix& a);

std::size_t rank(const GfMatrix& a);

struct Solution {
  GfMatrix particular;               // m x k, free variables set to zero
  std::vector<GfMatrix> nullspace;   // m x 1 basis vectors of ker A
};
struct Infeasible {
  std::size_t rank_lhs = 0;
  std::size_t rank_aug = 0;          // > rank_lhs certifies infeasibility
};
using SolveResult = std::variant<Solution, Infeasible>;

/// Solve A*X = B exactly over GF(p).
SolveResult solve_linear(const GfMatrix& a, const GfMatrix& b);

std::vector<GfMatrix> nullspace(const GfMatrix& a);

std::optional<GfMatrix> inverse(const GfMatrix& a);

/// Row-major flattening of a matrix into a column vector.
GfMatrix vec_rowmajor(const GfMatrix& a);
GfMatrix unvec_rowmajor(const GfMatrix& v, Eigen::Index rows,
                        Eigen::Index cols);

}  // namespace twistmod
