#pragma once

#include <stdexcept>
#include <vector>

#include "carter/matrix.hpp"
#include "carter/root_system.hpp"

namespace carter {

/// Symmetric integer matrix with 2 on the diagonal.
class UnitForm {
public:
  /// Throws std::invalid_argument unless symmetric, integral, diagonal 2.
  explicit UnitForm(RatMatrix matrix);
  const RatMatrix& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return matrix_.rows(); }
  int entry(std::size_t i, std::size_t j) const { return static_cast<int>(matrix_(i, j).numerator()); }

private:
  RatMatrix matrix_;
};

/// T^ε_ij = I with entry (j, i) set to -ε, i.e. v ↦ v - ε v_i α_j.
struct Flation {
  int i = 0;
  int j = 0;
  int sign = 1;
  RatMatrix matrix(std::size_t n) const;
};

/// Input outside the theory: indefinite form or an entry of magnitude >= 2.
class FlationError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// B · (I - b_ij E_ij), literally; the result need not be symmetric.
RatMatrix gabrielov_step(const RatMatrix& b, int i, int j);

/// ᵗT B T. Requires |b_ij| = 1 and ε b_ij = 1: inflation at b_ij = 1 uses
/// ε = +1, deflation at b_ij = -1 uses ε = -1. Throws FlationError otherwise.
UnitForm apply_flation(const UnitForm& b, const Flation& f);

struct Reduction {
  std::vector<AdeType> types;
  /// ᵗT · b · T is the direct sum of Cartan matrices.
  RatMatrix certificate;
  RatMatrix reduced;
  std::vector<Flation> steps;
};

/// Greedy inflation at the lexicographically smallest positive entry until
/// every off-diagonal entry is 0 or -1, capped at 10 n² steps.
Reduction ovsienko_reduce(const UnitForm& b);

/// Components of a form with off-diagonal entries in {0, -1}, sorted.
/// Throws FlationError on cycles, degree >= 4, or non-ADE branching.
std::vector<AdeType> recognize_dynkin(const UnitForm& b);

}  // namespace carter
