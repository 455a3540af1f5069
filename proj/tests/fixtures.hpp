#pragma once

#include <Eigen/Dense>

#include "ppt/block.hpp"
#include "ppt/matrix.hpp"

namespace ppt::test {

// A = diag(0, -1) <= B = diag(0, 1) with n1 = n2 = 1: the order of the
// trailing blocks does not carry over to J ppt.
inline BlockMatrix crossing_a() { return BlockMatrix(Matrix::diagonal({0, -1}), 1, 1); }
inline BlockMatrix crossing_b() { return BlockMatrix(Matrix::diagonal({0, 1}), 1, 1); }

// A <= B with singular trailing blocks of equal kernel where J ppt is
// monotone; ker B22 is not inside ker B12.
inline BlockMatrix singular_a() {
  return BlockMatrix(Matrix::from_rows({{0, 0, 1, -0.5},
                                        {0, 0, 0, 0},
                                        {1, 0, 0.5, 0.5},
                                        {-0.5, 0, 0.5, 0.5}}),
                     2, 2);
}
inline BlockMatrix singular_b() {
  return BlockMatrix(Matrix::from_rows({{0.5, 0, 1, -0.5},
                                        {0, 0, 0, 0},
                                        {1, 0, 1, 1},
                                        {-0.5, 0, 1, 1}}),
                     2, 2);
}
inline Matrix singular_jppt_a() {
  return Matrix::from_rows({{-0.125, 0, 0.25, 0.25},
                            {0, 0, 0, 0},
                            {0.25, 0, -0.5, -0.5},
                            {0.25, 0, -0.5, -0.5}});
}
inline Matrix singular_jppt_b() {
  return Matrix::from_rows({{0.4375, 0, 0.125, 0.125},
                            {0, 0, 0, 0},
                            {0.125, 0, -0.25, -0.25},
                            {0.125, 0, -0.25, -0.25}});
}

using EigenMat = Eigen::MatrixXcd;

inline EigenMat to_eigen(const Matrix& m) {
  EigenMat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

inline Matrix from_eigen(const EigenMat& e, Field field) {
  Matrix out(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()),
             Field::complex);
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
      const Scalar v = e(i, j);
      out.set(i, j, field == Field::real ? Scalar(v.real(), 0.0) : v);
    }
  }
  if (field == Field::real) {
    std::vector<Scalar> entries(out.data().begin(), out.data().end());
    return Matrix::from_entries(out.rows(), out.cols(), std::move(entries), Field::real);
  }
  return out;
}

// Pseudoinverse by complete orthogonal decomposition, independent of the
// library's SVD route.
inline Matrix oracle_pinv(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.cols(), m.rows(), m.field());
  Eigen::CompleteOrthogonalDecomposition<EigenMat> cod(to_eigen(m));
  cod.setThreshold(1e-10);
  return from_eigen(cod.pseudoInverse(), m.field());
}

inline std::size_t oracle_rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::CompleteOrthogonalDecomposition<EigenMat> cod(to_eigen(m));
  cod.setThreshold(1e-10);
  return static_cast<std::size_t>(cod.rank());
}

}  // namespace ppt::test
