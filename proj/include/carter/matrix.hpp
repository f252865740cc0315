#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "carter/rational.hpp"

namespace carter {

using RatVector = std::vector<Rational>;
using IntVector = std::vector<int>;

/// Raised when operand dimensions do not compose.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by invert() on a singular matrix; carries the computed rank.
class SingularMatrixError : public std::domain_error {
public:
  SingularMatrixError(std::size_t rank, std::size_t size);
  std::size_t rank() const noexcept { return rank_; }

private:
  std::size_t rank_;
};

/// Small dense row-major matrix of exact rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_ints(const std::vector<IntVector>& rows);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix diagonal(const RatVector& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_integral() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;

  RatMatrix transpose() const;
  RatMatrix scaled(const Rational& factor) const;

  /// Integer entries as nested vectors; throws std::domain_error on a fraction.
  std::vector<IntVector> to_ints() const;

  friend RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
  friend RatMatrix operator+(const RatMatrix& lhs, const RatMatrix& rhs);
  friend RatMatrix operator-(const RatMatrix& lhs, const RatMatrix& rhs);
  friend RatVector operator*(const RatMatrix& lhs, const RatVector& rhs);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  /// Text form: rows separated by `;`, entries by blanks, `p/q` or integers.
  static RatMatrix parse(std::string_view text);
  std::string str() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Symmetric matrix viewed as the quadratic form v -> <Av, v>.
class QuadraticForm {
public:
  explicit QuadraticForm(RatMatrix matrix);

  const RatMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

  Rational operator()(std::span<const Rational> v) const;
  Rational operator()(std::span<const int> v) const;

  /// <Au, v>, the associated symmetric bilinear form.
  Rational bilinear(std::span<const Rational> u, std::span<const Rational> v) const;

private:
  RatMatrix matrix_;
};

struct SolveResult {
  std::size_t rank = 0;
  /// One solution of m x = rhs when the system is consistent.
  std::optional<RatVector> solution;
};

Rational det(const RatMatrix& m);
RatMatrix invert(const RatMatrix& m);
Rational eval_form(const QuadraticForm& q, std::span<const Rational> v);
/// ᵗt · b · t.
RatMatrix congruent(const RatMatrix& t, const RatMatrix& b);
SolveResult rank_and_solve(const RatMatrix& m, std::span<const Rational> rhs);
std::size_t rank(const RatMatrix& m);
/// Sylvester's criterion: every leading principal minor is positive.
bool is_positive_definite(const RatMatrix& m);

RatVector to_rational(std::span<const int> v);
/// Plain dot product.
Rational dot(std::span<const Rational> u, std::span<const Rational> v);

}  // namespace carter
