#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "carter/diagram.hpp"
#include "carter/gamma_set.hpp"
#include "carter/root_system.hpp"

namespace carter {

using LabelSet = std::set<LabelVector>;

/// Labels contributed by one ambient of rank(base) + 1.
struct PartialSystem {
  AdeType ambient;
  /// One witness realization; empty when the base does not embed.
  std::optional<GammaSet> gamma_set;
  LabelSet labels;
  /// Number of realizations unioned (images under automorphisms of Φ ∩ L).
  std::size_t realizations = 0;
  std::string note;

  bool embedded() const noexcept { return gamma_set.has_value(); }
};

struct LinkageSystem {
  CarterDiagram base;
  /// Every attempted ambient, in A, D, E order.
  std::vector<PartialSystem> partials;
  LabelSet total;

  const PartialSystem* partial(Family f) const;
  /// Labels of the family's partial system not already produced by an
  /// earlier family (A before D before E).
  LabelSet component(Family f) const;
};

/// 𝓑∨_Γ(label) < 2, exact.
bool is_linkage_root(const GammaSet& g, const LabelVector& label);
Rational inverse_form_value(const GammaSet& g, const LabelVector& label);
/// Diagonal entry i of B⁻¹_Γ is below 2. Throws std::out_of_range on a bad index.
bool single_endpoint_admits(const GammaSet& g, int i);

/// Rank-(l+1) simply-laced types for a rank-l base: A, D (rank >= 4), E (rank 6..8).
std::vector<AdeType> extension_ambients(int base_rank);

/// Nonzero labels of the ambient roots outside span(g), for this one realization.
LabelSet realization_labels(const GammaSet& g);

PartialSystem enumerate_partial(const CarterDiagram& base, AdeType ambient);
LinkageSystem enumerate_full(const CarterDiagram& base);

/// Exhaustive check of 𝓑∨(γ∇) < 2 ⟺ γ ∉ span(S) and of 𝓑∨ = 2 on in-span
/// roots other than ±τi, over every ambient the base embeds in.
struct CriterionReport {
  std::string base;
  std::vector<std::string> ambients;
  std::size_t roots_checked = 0;
  std::size_t outside_span = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty() && roots_checked > 0; }
};
CriterionReport criterion_check(const CarterDiagram& base);

/// For D_l ⊂ D_{l+1}: every root φ outside Φ(D_l) has a partner δ outside
/// Φ(D_l) with δ∇ = -φ∇, where δ = μmax - φ + τ for positive φ and
/// δ(φ) = -δ(-φ) for negative φ.
struct PairingReport {
  int l = 0;
  std::size_t checked = 0;
  bool tau_to_mu = false;
  bool mu_to_tau = false;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty() && tau_to_mu && mu_to_tau && checked == 4u * l; }
};
PairingReport pairing_check(int l);

struct RootPair {
  Coords eta;
  Coords lambda;
  /// η∇, equal to -λ∇.
  LabelVector label;
  bool positive() const;
};

/// The D7 Γ-set (simple roots 3,4,5,6,7,8,2 of E8) and all pairs {η, λ}
/// outside its span with η∇ = -λ∇ and η ≠ -λ. Positive pairs come first.
/// Throws std::runtime_error unless exactly 14 pairs are found.
std::vector<RootPair> e8_d7_pairs();
GammaSet e8_d7_gamma_set();
/// E8 coordinates in the two-row layout (c1 c3 c4 c5 c6 c7 c8; c2).
std::string e8_layout(const Coords& r);

}  // namespace carter
