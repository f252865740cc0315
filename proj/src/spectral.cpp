#include "carter/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "carter/dual_weyl.hpp"

namespace carter {

namespace {

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_double();
  return out;
}

}  // namespace

SpectrumReport spectrum(const RatMatrix& b) {
  if (b.rows() == 0 || !b.is_square() || !b.is_symmetric())
    throw std::invalid_argument("spectrum needs a nonempty symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(b), Eigen::EigenvaluesOnly);
  SpectrumReport rep;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) rep.eigenvalues.push_back(solver.eigenvalues()(k));
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
  rep.min = rep.eigenvalues.front();
  rep.max = rep.eigenvalues.back();
  rep.in_open_interval = rep.min > kSpectrumMargin && rep.max < 4.0 - kSpectrumMargin;
  return rep;
}

CoxeterReport coxeter_relation_check(const CarterDiagram& d) {
  if (!d.is_dynkin()) throw std::invalid_argument(d.name() + " is not a Dynkin diagram");
  std::vector<int> word(d.size());
  for (int i = 0; i < d.size(); ++i) word[i] = i;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(word_matrix(d, word)), false);

  CoxeterReport rep;
  rep.unit_modulus = true;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const std::complex<double> lambda = solver.eigenvalues()(k);
    rep.coxeter_eigenvalues.push_back(lambda);
    rep.unit_modulus = rep.unit_modulus && std::abs(std::abs(lambda) - 1.0) < kSpectrumMargin;
    rep.lhs.push_back((lambda + 2.0 + 1.0 / lambda).real());
  }
  for (double rho : spectrum(partial_cartan(d)).eigenvalues) rep.rhs.push_back((rho - 2) * (rho - 2));
  std::sort(rep.lhs.begin(), rep.lhs.end());
  std::sort(rep.rhs.begin(), rep.rhs.end());
  for (std::size_t k = 0; k < rep.lhs.size(); ++k)
    rep.max_deviation = std::max(rep.max_deviation, std::abs(rep.lhs[k] - rep.rhs[k]));
  rep.ok = rep.unit_modulus && rep.max_deviation < kMultisetTolerance;
  return rep;
}

bool spectra_equal(const RatMatrix& b1, const RatMatrix& b2) {
  if (b1.rows() != b2.rows()) throw ShapeError("spectra_equal needs matrices of one size");
  const auto s1 = spectrum(b1).eigenvalues;
  const auto s2 = spectrum(b2).eigenvalues;
  for (std::size_t k = 0; k < s1.size(); ++k)
    if (std::abs(s1[k] - s2[k]) > kSpectrumMargin) return false;
  return true;
}

}  // namespace carter
