#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chevelim/field.hpp"

namespace chevelim {

/// Dense matrix of exact field elements, row-major. Equality is entrywise;
/// there are no tolerances anywhere.
class Matrix {
public:
  Matrix(const FieldCtx& F, int rows, int cols);
  static Matrix identity(const FieldCtx& F, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldCtx& field() const { return *F_; }

  Fel& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Fel& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;  // picks the OpenMP kernel for large sizes

  // Multiplication kernels. Both produce identical results; the parallel one
  // splits output rows across OpenMP threads.
  static Matrix mul_serial(const Matrix& a, const Matrix& b);
  static Matrix mul_parallel(const Matrix& a, const Matrix& b);

  // Elementary row/column updates (exact analogues of classical Gaussian
  // elimination moves). Scale factors must be nonzero.
  void row_scale(int i, const Fel& c);
  void row_add(int dst, int src, const Fel& t);  // row dst += t * row src
  void row_swap(int i, int j);
  void col_scale(int j, const Fel& c);
  void col_add(int dst, int src, const Fel& t);  // col dst += t * col src
  void col_swap(int i, int j);

  Fel determinant() const;  // pivoted elimination over the field

  bool is_zero() const;

  /// Text form: "matrix R C" then R lines of C element tokens. Round-trips
  /// bit-exactly for canonical elements.
  std::string to_text() const;
  static Matrix from_text(const FieldCtx& F, std::istream& in);
  static Matrix from_text(const FieldCtx& F, const std::string& text);

  /// Packed-byte key for hashing finite-field matrices.
  std::string key() const;

private:
  int rows_, cols_;
  const FieldCtx* F_;
  std::vector<Fel> a_;

  void check_index(int r, int c) const;
};

void require_same_field(const FieldCtx& a, const FieldCtx& b);

}  // namespace chevelim
