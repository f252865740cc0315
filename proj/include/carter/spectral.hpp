#pragma once

#include <complex>
#include <vector>

#include "carter/diagram.hpp"
#include "carter/matrix.hpp"

namespace carter {

/// Margin for the open interval (0, 4).
inline constexpr double kSpectrumMargin = 1e-9;
/// Tolerance for matching eigenvalue multisets.
inline constexpr double kMultisetTolerance = 1e-8;

struct SpectrumReport {
  /// Ascending.
  std::vector<double> eigenvalues;
  double min = 0;
  double max = 0;
  bool in_open_interval = false;
  double tolerance = kSpectrumMargin;
};

/// Symmetric eigen-solve in double precision. Throws std::invalid_argument
/// on an asymmetric or empty matrix.
SpectrumReport spectrum(const RatMatrix& b);

struct CoxeterReport {
  std::vector<std::complex<double>> coxeter_eigenvalues;
  /// λ + 2 + 1/λ, real parts, ascending.
  std::vector<double> lhs;
  /// (ρ - 2)², ascending.
  std::vector<double> rhs;
  double max_deviation = 0;
  bool unit_modulus = false;
  bool ok = false;
};

/// Coxeter element s_1 ⋯ s_n in vertex order. Throws std::invalid_argument
/// unless d is a Dynkin diagram.
CoxeterReport coxeter_relation_check(const CarterDiagram& d);

/// Sorted spectra agree within 1e-9. Throws ShapeError on a size mismatch.
bool spectra_equal(const RatMatrix& b1, const RatMatrix& b2);

}  // namespace carter
