#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carter/diagram.hpp"
#include "carter/gamma_set.hpp"
#include "carter/matrix.hpp"

namespace carter {

/// Basis change moving one Γ-set root: τ_i ↦ α = Σ c_j τ_j with c_i = -1.
struct Transition {
  GammaSet from;
  /// `from` with τ_i replaced by α, in from's vertex order.
  GammaSet to;
  CarterDiagram target;
  int moved = 0;
  /// Coordinates c of α in the `from` basis.
  IntVector coefficients;
  /// M: identity with column `moved` replaced by c.
  RatMatrix matrix;
  /// Relabeling of `to` onto `target` (vertex u ↦ perm[u], root scaled by signs[u]).
  SimilarityWitness witness;
  /// F = M · P with ᵗF · B_from · F = B_target.
  RatMatrix full_map;
};

/// Scans vertices in index order and candidate roots of Φ ∩ span(from) in
/// lexicographic order; returns the first candidate whose Γ-set is similar
/// to `to` and whose coefficients are integral with c_i = -1.
std::optional<Transition> find_transition(const GammaSet& from, const CarterDiagram& to);

struct TransitionReport {
  std::vector<std::string> passed;
  std::vector<std::string> failures;
  std::size_t labels_from = 0;
  std::size_t labels_to = 0;
  bool ok() const noexcept { return failures.empty(); }
};

/// Checks M² = I, det M = -1, M fixes every other root, ᵗM B M = Gram(to),
/// ᵗF B F = B_target, label transport on every ambient root, and, when
/// `with_linkage` is set, that ᵗF maps the full linkage system of the source
/// diagram onto that of the target.
TransitionReport verify_transition(const Transition& t, bool with_linkage = true);

struct Chain {
  std::vector<Transition> steps;
  /// ᵗF · B_from · F = B_to.
  RatMatrix map;
};

/// Transitions between members of one homogeneous class, each realized in
/// the Dynkin root system of the class; BFS over successful transitions.
/// Similar diagrams give an empty chain whose map is the signed permutation.
std::optional<Chain> chain(const CarterDiagram& from, const CarterDiagram& to);

/// Signed permutation matrix P with ᵗP · g1 · P = g2 for a witness g1 → g2.
RatMatrix witness_matrix(const SimilarityWitness& w);

}  // namespace carter
