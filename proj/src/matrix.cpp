#include "chevelim/matrix.hpp"

#include <cstring>
#include <istream>
#include <sstream>

#ifdef CHEVELIM_HAVE_OPENMP
#include <omp.h>
#endif

namespace chevelim {

namespace {
constexpr int kParallelRowThreshold = 48;
}

void require_same_field(const FieldCtx& a, const FieldCtx& b) {
  if (!a.same(b)) fail(Errc::FieldMismatch, "operands live in different fields");
}

Matrix::Matrix(const FieldCtx& F, int rows, int cols) : rows_(rows), cols_(cols), F_(&F) {
  if (rows < 0 || cols < 0) fail(Errc::DimensionMismatch, "negative dimensions");
  a_.assign(size_t(rows) * cols, F.zero());
}

Matrix Matrix::identity(const FieldCtx& F, int n) {
  Matrix m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

void Matrix::check_index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) fail(Errc::IndexOutOfRange, "matrix index out of range");
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && F_->same(*o.F_) && a_ == o.a_;
}

Matrix Matrix::transpose() const {
  Matrix t(*F_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::mul_serial(const Matrix& a, const Matrix& b) {
  require_same_field(*a.F_, *b.F_);
  if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  const FieldCtx& F = *a.F_;
  Matrix out(F, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Fel& aik = a.at(i, k);
      if (F.is_zero(aik)) continue;
      for (int j = 0; j < b.cols_; ++j) {
        out.at(i, j) = F.add(out.at(i, j), F.mul(aik, b.at(k, j)));
      }
    }
  }
  return out;
}

Matrix Matrix::mul_parallel(const Matrix& a, const Matrix& b) {
  require_same_field(*a.F_, *b.F_);
  if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  const FieldCtx& F = *a.F_;
  Matrix out(F, a.rows_, b.cols_);
#ifdef CHEVELIM_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Fel& aik = a.at(i, k);
      if (F.is_zero(aik)) continue;
      for (int j = 0; j < b.cols_; ++j) {
        out.at(i, j) = F.add(out.at(i, j), F.mul(aik, b.at(k, j)));
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
#ifdef CHEVELIM_HAVE_OPENMP
  if (rows_ >= kParallelRowThreshold && !omp_in_parallel()) return mul_parallel(*this, o);
#endif
  return mul_serial(*this, o);
}

void Matrix::row_scale(int i, const Fel& c) {
  check_index(i, 0);
  if (F_->is_zero(c)) fail(Errc::ZeroScale, "row scale by zero");
  for (int j = 0; j < cols_; ++j) at(i, j) = F_->mul(at(i, j), c);
}

void Matrix::row_add(int dst, int src, const Fel& t) {
  check_index(dst, 0);
  check_index(src, 0);
  for (int j = 0; j < cols_; ++j) at(dst, j) = F_->add(at(dst, j), F_->mul(t, at(src, j)));
}

void Matrix::row_swap(int i, int j) {
  check_index(i, 0);
  check_index(j, 0);
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Matrix::col_scale(int j, const Fel& c) {
  check_index(0, j);
  if (F_->is_zero(c)) fail(Errc::ZeroScale, "column scale by zero");
  for (int i = 0; i < rows_; ++i) at(i, j) = F_->mul(at(i, j), c);
}

void Matrix::col_add(int dst, int src, const Fel& t) {
  check_index(0, dst);
  check_index(0, src);
  for (int i = 0; i < rows_; ++i) at(i, dst) = F_->add(at(i, dst), F_->mul(t, at(i, src)));
}

void Matrix::col_swap(int i, int j) {
  check_index(0, i);
  check_index(0, j);
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

Fel Matrix::determinant() const {
  if (rows_ != cols_) fail(Errc::DimensionMismatch, "determinant needs a square matrix");
  const FieldCtx& F = *F_;
  Matrix w = *this;
  Fel det = F.one();
  for (int c = 0; c < cols_; ++c) {
    int pivot = -1;
    for (int r = c; r < rows_; ++r) {
      if (!F.is_zero(w.at(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return F.zero();
    if (pivot != c) {
      w.row_swap(pivot, c);
      det = F.neg(det);
    }
    det = F.mul(det, w.at(c, c));
    Fel pinv = F.inv(w.at(c, c));
    for (int r = c + 1; r < rows_; ++r) {
      if (F.is_zero(w.at(r, c))) continue;
      Fel factor = F.neg(F.mul(w.at(r, c), pinv));
      w.row_add(r, c, factor);
    }
  }
  return det;
}

bool Matrix::is_zero() const {
  for (const auto& e : a_)
    if (!F_->is_zero(e)) return false;
  return true;
}

std::string Matrix::to_text() const {
  std::ostringstream out;
  out << "matrix " << rows_ << ' ' << cols_ << '\n';
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) out << ' ';
      out << F_->str(at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

Matrix Matrix::from_text(const FieldCtx& F, std::istream& in) {
  std::string tag;
  int r = 0, c = 0;
  if (!(in >> tag) || tag != "matrix" || !(in >> r >> c) || r < 0 || c < 0)
    fail(Errc::ParseError, "expected 'matrix R C' header");
  Matrix m(F, r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      std::string tok;
      if (!(in >> tok)) fail(Errc::ParseError, "matrix body ended early");
      m.at(i, j) = F.parse(tok);
    }
  }
  return m;
}

Matrix Matrix::from_text(const FieldCtx& F, const std::string& text) {
  std::istringstream in(text);
  return from_text(F, in);
}

std::string Matrix::key() const {
  std::string k;
  if (F_->finite()) {
    k.resize(a_.size() * 8);
    for (size_t i = 0; i < a_.size(); ++i) {
      std::uint64_t v = a_[i].u();
      std::memcpy(k.data() + i * 8, &v, 8);
    }
    return k;
  }
  for (const auto& e : a_) {
    k += F_->str(e);
    k += ';';
  }
  return k;
}

}  // namespace chevelim
