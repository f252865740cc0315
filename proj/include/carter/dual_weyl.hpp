#pragma once

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "carter/diagram.hpp"
#include "carter/gamma_set.hpp"
#include "carter/matrix.hpp"

namespace carter {

/// A dual reflection carried a label outside the set being partitioned.
class ClosureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// s*_i on an integer vector: entry i negated, solid neighbors gain +u_i,
/// dotted neighbors gain -u_i.
IntVector dual_reflect(const CarterDiagram& d, int i, std::span<const int> u);
/// Same on a label; throws std::domain_error if the result is not ternary.
LabelVector dual_reflect(const CarterDiagram& d, int i, const LabelVector& u);

/// Words are applied right to left: {i1, ..., ik} means s_i1 ... s_ik.
LabelVector dual_apply(const CarterDiagram& d, const std::vector<int>& word, const LabelVector& u);
Coords apply_word(const GammaSet& g, const std::vector<int>& word, std::span<const int> gamma);

/// Matrix of s_τi restricted to L, in the Γ-set basis: I - e_i · row_i(B).
RatMatrix reflection_matrix(const CarterDiagram& d, int i);
/// Matrix of s*_i on label space: I - col_i(B) · ᵗe_i.
RatMatrix dual_reflection_matrix(const CarterDiagram& d, int i);
RatMatrix word_matrix(const CarterDiagram& d, const std::vector<int>& word);
RatMatrix dual_word_matrix(const CarterDiagram& d, const std::vector<int>& word);

struct Orbit {
  /// Sorted.
  std::vector<LabelVector> labels;
  /// 𝓑∨ shared by every member.
  Rational p;
  std::size_t size() const noexcept { return labels.size(); }
  bool is_loctet() const noexcept { return labels.size() == 8; }
};

/// W∨ orbits of a label set, ordered by smallest member. Throws ClosureError
/// when a reflection leaves the set and std::logic_error if 𝓑∨ varies on an orbit.
std::vector<Orbit> orbit_partition(const CarterDiagram& d, const std::set<LabelVector>& labels);

/// label(w γ) == w* label(γ).
bool duality_check(const GammaSet& g, const std::vector<int>& word, std::span<const int> gamma);
/// dual_reflection_matrix(i) == ᵗreflection_matrix(i).
bool transpose_identity_check(const GammaSet& g, int i);
/// dual_word_matrix(w) == ᵗ(word_matrix(w))⁻¹.
bool transpose_identity_check(const GammaSet& g, const std::vector<int>& word);

/// Orbit graph: nodes are labels, edges are dual reflections tagged with the vertex.
std::string orbit_dot(const CarterDiagram& d, const Orbit& orbit);

}  // namespace carter
