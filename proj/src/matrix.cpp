#include "ppt/matrix.hpp"

#include <cmath>

#include "ppt/kernels.hpp"

namespace ppt {

std::string_view field_name(Field f) {
  return f == Field::real ? "real" : "complex";
}

Field join(Field a, Field b) {
  return (a == Field::real && b == Field::real) ? Field::real : Field::complex;
}

void ToleranceConfig::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(rank_rel_tol)) throw InvalidInput("rank_rel_tol must be finite and > 0");
  if (!ok(psd_tol)) throw InvalidInput("psd_tol must be finite and > 0");
  if (!ok(eq_tol)) throw InvalidInput("eq_tol must be finite and > 0");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1.0;
  return m;
}

Matrix Matrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.begin()->size() : 0;
  Matrix m(nr, nc);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw InvalidInput("ragged row in from_rows");
    std::size_t j = 0;
    for (double v : row) m.entries_[i * nc + j++] = v;
    ++i;
  }
  return m;
}

Matrix Matrix::from_complex_rows(
    std::initializer_list<std::initializer_list<Scalar>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.begin()->size() : 0;
  Matrix m(nr, nc, Field::complex);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw InvalidInput("ragged row in from_complex_rows");
    std::size_t j = 0;
    for (Scalar v : row) m.entries_[i * nc + j++] = v;
    ++i;
  }
  return m;
}

Matrix Matrix::from_entries(std::size_t rows, std::size_t cols,
                            std::vector<Scalar> entries, Field field) {
  if (entries.size() != rows * cols) {
    throw InvalidInput("entries: expected " + std::to_string(rows * cols) +
                       " values, got " + std::to_string(entries.size()));
  }
  if (field == Field::real) {
    for (const Scalar& v : entries) {
      if (v.imag() != 0.0) {
        throw InvalidInput("entries: nonzero imaginary part in a real matrix");
      }
    }
  }
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.field_ = field;
  m.entries_ = std::move(entries);
  return m;
}

Matrix Matrix::column(std::initializer_list<double> values) {
  Matrix m(values.size(), 1);
  std::size_t i = 0;
  for (double v : values) m.entries_[i++] = v;
  return m;
}

Matrix Matrix::column(std::vector<Scalar> values) {
  Field f = Field::real;
  for (const Scalar& v : values) {
    if (v.imag() != 0.0) f = Field::complex;
  }
  const std::size_t n = values.size();
  return from_entries(n, 1, std::move(values), f);
}

Matrix Matrix::diagonal(std::initializer_list<double> values) {
  Matrix m(values.size(), values.size());
  std::size_t i = 0;
  for (double v : values) {
    m.entries_[i * m.cols_ + i] = v;
    ++i;
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v) {
  if (v.imag() != 0.0) field_ = Field::complex;
  entries_[i * cols_ + j] = v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw InvalidInput("block out of range");
  }
  Matrix out(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      out.entries_[i * nc + j] = entries_[(r0 + i) * cols_ + c0 + j];
    }
  }
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) {
    throw InvalidInput("set_block out of range");
  }
  field_ = join(field_, src.field_);
  for (std::size_t i = 0; i < src.rows_; ++i) {
    for (std::size_t j = 0; j < src.cols_; ++j) {
      entries_[(r0 + i) * cols_ + c0 + j] = src.entries_[i * src.cols_ + j];
    }
  }
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out.entries_[j * rows_ + i] = std::conj(entries_[i * cols_ + j]);
    }
  }
  return out;
}

Matrix Matrix::conj() const {
  Matrix out = *this;
  for (Scalar& v : out.entries_) v = std::conj(v);
  return out;
}

Matrix Matrix::as_complex() const {
  Matrix out = *this;
  out.field_ = Field::complex;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw InvalidInput("shape mismatch in +");
  }
  kernels::active().axpby(entries_.size(), 1.0, rhs.entries_.data(), 1.0,
                          entries_.data());
  field_ = join(field_, rhs.field_);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw InvalidInput("shape mismatch in -");
  }
  kernels::active().axpby(entries_.size(), -1.0, rhs.entries_.data(), 1.0,
                          entries_.data());
  field_ = join(field_, rhs.field_);
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (Scalar& v : entries_) v = Scalar(s * v.real(), s * v.imag());
  return *this;
}

double Matrix::norm_max() const {
  return kernels::active().max_abs_diff(entries_.size(), entries_.data(),
                                        nullptr);
}

double Matrix::norm_fro() const {
  double acc = 0.0;
  for (const Scalar& v : entries_) acc += std::norm(v);
  return std::sqrt(acc);
}

bool Matrix::is_finite() const {
  for (const Scalar& v : entries_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator-(Matrix m) { return m *= -1.0; }
Matrix operator*(double s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw InvalidInput("shape mismatch in *: " + std::to_string(lhs.rows()) +
                       "x" + std::to_string(lhs.cols()) + " times " +
                       std::to_string(rhs.rows()) + "x" +
                       std::to_string(rhs.cols()));
  }
  std::vector<Scalar> out(lhs.rows() * rhs.cols());
  kernels::active().gemm(lhs.rows(), lhs.cols(), rhs.cols(), lhs.data().data(),
                         rhs.data().data(), out.data());
  return Matrix::from_entries(lhs.rows(), rhs.cols(), std::move(out),
                              join(lhs.field(), rhs.field()));
}

Matrix operator*(Scalar s, const Matrix& m) {
  std::vector<Scalar> out(m.data().begin(), m.data().end());
  for (Scalar& v : out) v *= s;
  const Field f = (s.imag() == 0.0) ? m.field() : Field::complex;
  if (f == Field::real) {
    for (Scalar& v : out) v = Scalar(v.real(), 0.0);
  }
  return Matrix::from_entries(m.rows(), m.cols(), std::move(out), f);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("shape mismatch in max_abs_diff");
  }
  return kernels::active().max_abs_diff(a.size(), a.data().data(),
                                        b.data().data());
}

Matrix assemble(const Matrix& a11, const Matrix& a12, const Matrix& a21,
                const Matrix& a22) {
  if (a11.rows() != a12.rows() || a21.rows() != a22.rows() ||
      a11.cols() != a21.cols() || a12.cols() != a22.cols()) {
    throw InvalidInput("non-conforming blocks in assemble");
  }
  const std::size_t n1r = a11.rows(), n2r = a21.rows();
  const std::size_t n1c = a11.cols(), n2c = a12.cols();
  Matrix out(n1r + n2r, n1c + n2c);
  out.set_block(0, 0, a11);
  out.set_block(0, n1c, a12);
  out.set_block(n1r, 0, a21);
  out.set_block(n1r, n1c, a22);
  return out;
}

Matrix vcat(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw InvalidInput("column mismatch in vcat");
  Matrix out(top.rows() + bottom.rows(), top.cols());
  out.set_block(0, 0, top);
  out.set_block(top.rows(), 0, bottom);
  return out;
}

Matrix hcat(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw InvalidInput("row mismatch in hcat");
  Matrix out(left.rows(), left.cols() + right.cols());
  out.set_block(0, 0, left);
  out.set_block(0, left.cols(), right);
  return out;
}

Scalar inner(const Matrix& u, const Matrix& v) {
  if (u.cols() != 1 || v.cols() != 1 || u.rows() != v.rows()) {
    throw InvalidInput("inner expects column vectors of equal length");
  }
  Scalar acc = 0.0;
  for (std::size_t i = 0; i < u.rows(); ++i) acc += std::conj(u(i, 0)) * v(i, 0);
  return acc;
}

}  // namespace ppt
