#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carter/matrix.hpp"

namespace carter {

enum class Family { A, D, E };

char family_letter(Family f) noexcept;

/// Simply-laced Dynkin type: A_l (l >= 1), D_l (l >= 4), E_6, E_7, E_8.
struct AdeType {
  Family family = Family::A;
  int rank = 1;

  /// Throws std::invalid_argument on an impossible family/rank pair.
  void validate() const;
  bool is_valid() const noexcept;
  std::string name() const;
  /// Parses "A3", "d5", "E8".
  static AdeType parse(std::string_view text);

  friend bool operator==(const AdeType&, const AdeType&) = default;
  friend auto operator<=>(const AdeType&, const AdeType&) = default;
};

/// Coordinates of a root (or any lattice vector) in the simple-root basis.
using Coords = std::vector<int>;

/// Complete root system of a simply-laced type.
///
/// Simple roots follow Bourbaki numbering: A_l and D_l are chains 1..l with
/// the D fork on nodes l-1 and l attached to l-2; for E_l the chain is
/// 1-3-4-...-l and node 2 hangs off node 4. Index i in code is node i+1.
/// Roots are sorted lexicographically by coordinates.
class RootSystem {
public:
  explicit RootSystem(AdeType type);

  const AdeType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  const std::vector<IntVector>& gram() const noexcept { return cartan_; }
  RatMatrix cartan() const { return RatMatrix::from_ints(cartan_); }
  const std::vector<Coords>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  const Coords& maximal() const noexcept { return maximal_; }

  /// Simple root number i (0-based) as a coordinate vector.
  Coords simple(int i) const;

  /// ᵗu · C · v. Throws ShapeError on a dimension mismatch.
  int inner(std::span<const int> u, std::span<const int> v) const;
  /// 𝓑(v) = (v, v).
  int norm(std::span<const int> v) const { return inner(v, v); }

  bool is_root(std::span<const int> v) const;
  /// Position of v in roots(), or -1.
  int index_of(std::span<const int> v) const;

  /// Reflection in an arbitrary root r: v - (v, r) r.
  Coords reflect(std::span<const int> r, std::span<const int> v) const;
  /// Reflection in simple root i.
  Coords simple_reflect(int i, std::span<const int> v) const;

private:
  AdeType type_;
  std::vector<IntVector> cartan_;
  std::vector<Coords> roots_;
  Coords maximal_;
};

/// Cartan matrix in the numbering documented on RootSystem.
std::vector<IntVector> cartan_matrix(AdeType type);

/// Shared, lazily generated root system; generation happens once per type.
std::shared_ptr<const RootSystem> root_system(AdeType type);

RootSystem generate(AdeType type);
int inner(const RootSystem& rs, std::span<const int> u, std::span<const int> v);
const Coords& maximal_root(const RootSystem& rs);
/// True iff v is a rational linear combination of the basis vectors.
bool in_span(std::span<const int> v, const std::vector<Coords>& basis);

Coords negate(std::span<const int> v);
Coords add(std::span<const int> u, std::span<const int> v);
Coords sub(std::span<const int> u, std::span<const int> v);

}  // namespace carter
