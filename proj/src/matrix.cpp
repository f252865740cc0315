#include "carter/matrix.hpp"

#include <sstream>
#include <utility>

namespace carter {

SingularMatrixError::SingularMatrixError(std::size_t rank, std::size_t size)
    : std::domain_error("singular matrix: rank " + std::to_string(rank) + " < " + std::to_string(size)),
      rank_(rank) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_ints(const std::vector<IntVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged rational matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& entries) {
  RatMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RatMatrix::is_integral() const {
  for (const auto& x : data_)
    if (!x.is_integer()) return false;
  return true;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::scaled(const Rational& factor) const {
  RatMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

std::vector<IntVector> RatMatrix::to_ints() const {
  std::vector<IntVector> out(rows_, IntVector(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      if (!x.is_integer()) throw std::domain_error("matrix entry " + x.str() + " is not an integer");
      out[r][c] = static_cast<int>(x.numerator());
    }
  return out;
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw ShapeError("matrix product: inner dimensions differ");
  RatMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& a = lhs(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        if (!rhs(k, c).is_zero()) out(r, c) += a * rhs(k, c);
    }
  return out;
}

RatMatrix operator+(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw ShapeError("matrix sum: shapes differ");
  RatMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RatMatrix operator-(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw ShapeError("matrix difference: shapes differ");
  RatMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RatVector operator*(const RatMatrix& lhs, const RatVector& rhs) {
  if (lhs.cols_ != rhs.size()) throw ShapeError("matrix-vector product: dimension mismatch");
  RatVector out(lhs.rows_);
  for (std::size_t r = 0; r < lhs.rows_; ++r)
    for (std::size_t c = 0; c < lhs.cols_; ++c)
      if (!lhs(r, c).is_zero() && !rhs[c].is_zero()) out[r] += lhs(r, c) * rhs[c];
  return out;
}

RatMatrix RatMatrix::parse(std::string_view text) {
  std::vector<RatVector> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    std::istringstream line{std::string(text.substr(start, end - start))};
    RatVector row;
    std::string token;
    while (line >> token) row.push_back(Rational::parse(token));
    if (!row.empty()) rows.push_back(std::move(row));
    start = end + 1;
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix text");
  return from_rows(rows);
}

std::string RatMatrix::str() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += (*this)(r, c).str();
    }
  }
  return out;
}

QuadraticForm::QuadraticForm(RatMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_symmetric()) throw ShapeError("quadratic form needs a symmetric matrix");
}

Rational QuadraticForm::operator()(std::span<const Rational> v) const { return bilinear(v, v); }

Rational QuadraticForm::operator()(std::span<const int> v) const {
  const RatVector r = to_rational(v);
  return bilinear(r, r);
}

Rational QuadraticForm::bilinear(std::span<const Rational> u, std::span<const Rational> v) const {
  if (u.size() != dim() || v.size() != dim()) throw ShapeError("quadratic form: dimension mismatch");
  Rational sum;
  for (std::size_t r = 0; r < dim(); ++r) {
    if (u[r].is_zero()) continue;
    Rational row_sum;
    for (std::size_t c = 0; c < dim(); ++c)
      if (!v[c].is_zero() && !matrix_(r, c).is_zero()) row_sum += matrix_(r, c) * v[c];
    sum += u[r] * row_sum;
  }
  return sum;
}

namespace {

// Gauss-Jordan elimination in place on an augmented matrix; pivots are the
// first nonzero entry in column order. Returns the pivot columns.
std::vector<std::size_t> reduce_rows(RatMatrix& a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < a.rows(); ++col) {
    std::size_t found = row;
    while (found < a.rows() && a(found, col).is_zero()) ++found;
    if (found == a.rows()) continue;
    if (found != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(found, c), a(row, c));
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = col;
    while (found < n && a(found, col).is_zero()) ++found;
    if (found == n) return Rational(0);
    if (found != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(found, c), a(col, c));
      result = -result;
    }
    result *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return result;
}

RatMatrix invert(const RatMatrix& m) {
  if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = reduce_rows(aug, n);
  if (pivots.size() < n) throw SingularMatrixError(pivots.size(), n);
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Rational eval_form(const QuadraticForm& q, std::span<const Rational> v) { return q(v); }

RatMatrix congruent(const RatMatrix& t, const RatMatrix& b) {
  if (!b.is_square() || t.rows() != b.rows()) throw ShapeError("congruence: shapes do not compose");
  return t.transpose() * b * t;
}

SolveResult rank_and_solve(const RatMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw ShapeError("rank_and_solve: right-hand side dimension mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const auto pivots = reduce_rows(aug, m.cols());
  SolveResult result;
  result.rank = pivots.size();
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!aug(r, m.cols()).is_zero()) return result;
  RatVector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  result.solution = std::move(x);
  return result;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return reduce_rows(a, a.cols()).size();
}

bool is_positive_definite(const RatMatrix& m) {
  if (!m.is_symmetric()) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RatMatrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = m(r, c);
    if (det(minor) <= Rational(0)) return false;
  }
  return true;
}

RatVector to_rational(std::span<const int> v) { return RatVector(v.begin(), v.end()); }

Rational dot(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) throw ShapeError("dot product: dimension mismatch");
  Rational sum;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

}  // namespace carter
