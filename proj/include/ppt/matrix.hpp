#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppt {

using Scalar = std::complex<double>;

enum class Field { real, complex };

std::string_view field_name(Field f);

/// Malformed arguments: non-finite entries, shape mismatches, bad tolerances.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical hypothesis of an operation does not hold for the input.
/// `hypothesis()` is a stable short name (e.g. "ker A22 <= ker A12").
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(std::string hypothesis, const std::string& detail)
      : std::domain_error(hypothesis + ": " + detail),
        hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Slack used by every floating-point decision in the library.
struct ToleranceConfig {
  /// Singular values below rank_rel_tol * sigma_max count as zero.
  double rank_rel_tol = 1e-10;
  /// Absolute eigenvalue slack for semidefiniteness and inertia.
  double psd_tol = 1e-8;
  /// Absolute entrywise slack for identities and residual certificates.
  double eq_tol = 1e-9;

  /// Throws InvalidInput unless all three are finite and strictly positive.
  void validate() const;
};

/// Dense row-major matrix over R or C. Entries are always stored as complex;
/// a real-field matrix keeps every imaginary part exactly zero.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::real);

  static Matrix identity(std::size_t n);
  static Matrix zeros(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_complex_rows(
      std::initializer_list<std::initializer_list<Scalar>> rows);
  /// Throws InvalidInput on a length mismatch, or when `field` is real and an
  /// imaginary part is nonzero.
  static Matrix from_entries(std::size_t rows, std::size_t cols,
                             std::vector<Scalar> entries, Field field);
  static Matrix column(std::initializer_list<double> values);
  static Matrix column(std::vector<Scalar> values);
  static Matrix diagonal(std::initializer_list<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  Field field() const noexcept { return field_; }
  bool is_real() const noexcept { return field_ == Field::real; }

  Scalar operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  /// Writing a value with nonzero imaginary part promotes the matrix to complex.
  void set(std::size_t i, std::size_t j, Scalar v);

  std::span<const Scalar> data() const noexcept { return entries_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& src);

  Matrix adjoint() const;
  Matrix conj() const;
  /// Re-tags as complex without changing entries.
  Matrix as_complex() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);

  /// max_ij |m_ij| (complex modulus).
  double norm_max() const;
  /// Euclidean norm of all entries.
  double norm_fro() const;
  bool is_finite() const;

  /// Exact, entry-by-entry comparison (field tag included).
  bool operator==(const Matrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::real;
  std::vector<Scalar> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(double s, Matrix m);
Matrix operator*(Scalar s, const Matrix& m);

/// max |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// [A11 A12; A21 A22] from conforming blocks.
Matrix assemble(const Matrix& a11, const Matrix& a12, const Matrix& a21,
                const Matrix& a22);
/// [top; bottom]
Matrix vcat(const Matrix& top, const Matrix& bottom);
/// [left, right]
Matrix hcat(const Matrix& left, const Matrix& right);

/// Hermitian inner product (u, v) = sum conj(u_i) v_i over column vectors.
Scalar inner(const Matrix& u, const Matrix& v);

Field join(Field a, Field b);

}  // namespace ppt
