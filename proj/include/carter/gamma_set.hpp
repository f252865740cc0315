#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carter/diagram.hpp"
#include "carter/matrix.hpp"
#include "carter/root_system.hpp"

namespace carter {

/// Linkage label vector γ∇: one entry in {-1, 0, 1} per Γ-set vertex.
class LabelVector {
public:
  LabelVector() = default;
  /// Throws std::invalid_argument if an entry lies outside {-1, 0, 1}.
  explicit LabelVector(std::vector<int> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  int operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<int>& values() const noexcept { return labels_; }
  auto begin() const noexcept { return labels_.begin(); }
  auto end() const noexcept { return labels_.end(); }

  bool is_zero() const noexcept;
  LabelVector negated() const;
  /// "(1,0,-1)"
  std::string str() const;

  friend bool operator==(const LabelVector&, const LabelVector&) = default;
  friend auto operator<=>(const LabelVector&, const LabelVector&) = default;

private:
  std::vector<int> labels_;
};

/// Ordered root subset realizing a Carter diagram inside an ambient root
/// system. Construction checks that the Gram matrix equals B_Γ and that the
/// roots are linearly independent.
class GammaSet {
public:
  GammaSet(CarterDiagram diagram, std::shared_ptr<const RootSystem> ambient, std::vector<Coords> roots);

  const CarterDiagram& diagram() const noexcept { return diagram_; }
  const RootSystem& ambient() const noexcept { return *ambient_; }
  const std::shared_ptr<const RootSystem>& ambient_ptr() const noexcept { return ambient_; }
  const std::vector<Coords>& roots() const noexcept { return roots_; }
  int size() const noexcept { return static_cast<int>(roots_.size()); }

  /// Inner products ((v,τ1), ..., (v,τn)) without range checks.
  IntVector pairing(std::span<const int> v) const;
  /// Exact rank test against the Γ-set roots.
  bool spans(std::span<const int> v) const;
  /// Coordinates of v_L = B⁻¹ v∇ in the Γ-set basis.
  RatVector coordinates(std::span<const int> v) const;

  const RatMatrix& inverse_cartan() const noexcept { return inverse_; }
  const QuadraticForm& inverse_form() const noexcept { return inverse_form_; }

private:
  CarterDiagram diagram_;
  std::shared_ptr<const RootSystem> ambient_;
  std::vector<Coords> roots_;
  RatMatrix inverse_;
  QuadraticForm inverse_form_;
};

/// Backtracking search for a realization. Vertices are placed in BFS order
/// from the highest-degree vertex, candidates in the ambient's lexicographic
/// root order; the first complete assignment is returned.
std::optional<GammaSet> find_gamma_set(const CarterDiagram& d, std::shared_ptr<const RootSystem> ambient);
std::optional<GammaSet> find_gamma_set(const CarterDiagram& d, AdeType ambient);

/// γ∇. Throws std::invalid_argument when gamma = ±τi (an entry of ±2).
LabelVector label_vector(const GammaSet& g, std::span<const int> gamma);

struct ProjectionData {
  /// γ_L in the Γ-set basis.
  RatVector gamma_l;
  /// 𝓑(μ) = 2 - 𝓑_Γ(γ_L).
  Rational mu_norm_sq;
  LabelVector label;
  /// 𝓑∨_Γ(γ∇), equal to 𝓑_Γ(γ_L).
  Rational inverse_value;
};

ProjectionData project(const GammaSet& g, const LabelVector& label);

/// The other root of the ambient sharing gamma's label vector, if any.
/// Throws std::invalid_argument when gamma lies in the span of the Γ-set.
std::optional<Coords> conjugate_partner(const GammaSet& g, std::span<const int> gamma);

/// Ambient roots lying in the span of the Γ-set.
std::vector<Coords> span_roots(const GammaSet& g);

/// Images of g under the automorphisms of the root subsystem Φ ∩ span(g)
/// (Weyl group and diagram symmetries), one per diagram symmetry; g first.
std::vector<GammaSet> automorphic_images(const GammaSet& g);

}  // namespace carter
