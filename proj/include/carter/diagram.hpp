#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "carter/matrix.hpp"
#include "carter/root_system.hpp"

namespace carter {

enum class Color { Alpha, Beta };

/// Edge {i, j} with sign -1 (solid, (τi,τj) = -1) or +1 (dotted, (τi,τj) = 1).
struct Edge {
  int i = 0;
  int j = 0;
  int sign = -1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline constexpr int kSolid = -1;
inline constexpr int kDotted = 1;

class UnknownDiagramError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Signed graph with a bicolored vertex partition.
///
/// Catalog diagrams list the α-set first, then the β-set; label vectors use
/// the same vertex order.
class CarterDiagram {
public:
  CarterDiagram(std::string name, std::vector<std::string> labels, std::vector<Color> colors,
                std::vector<Edge> edges);

  /// Diagram whose partial Cartan matrix is the given Gram matrix. Colors
  /// come from a BFS 2-coloring and labels are v1, v2, ...
  static CarterDiagram from_gram(std::string name, const std::vector<IntVector>& gram);

  const std::string& name() const noexcept { return name_; }
  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Color>& colors() const noexcept { return colors_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// (τi, τj) for i != j, 2 on the diagonal.
  int weight(int i, int j) const { return gram_.at(i).at(j); }
  const std::vector<IntVector>& gram() const noexcept { return gram_; }
  std::vector<int> neighbors(int i) const;
  int degree(int i) const;

  bool is_connected() const;
  bool is_tree() const;
  /// Tree with only solid edges.
  bool is_dynkin() const;

  /// Copy with a different display name.
  CarterDiagram renamed(std::string name) const;

private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  std::vector<IntVector> gram_;
};

/// Parsed diagram name: D5 -> {D5, 0}; D6(a2) -> {D6, 2}.
struct DiagramName {
  AdeType type;
  int k = 0;
  std::string str() const;
  static DiagramName parse(std::string_view text);
};

/// Catalog lookup by name (`D<l>`, `D<l>(a<k>)`, `E<l>`, `E6(a<k>)`, `A<l>`), case-insensitive.
CarterDiagram diagram(std::string_view name);

/// Members of the homogeneous class of the given Dynkin type, Dynkin member first.
/// Accepts "D5" or "C(D5)".
std::vector<CarterDiagram> catalog(std::string_view class_name);
std::vector<CarterDiagram> catalog(AdeType type);

/// B_Γ: 2 on the diagonal, edge signs off the diagonal.
RatMatrix partial_cartan(const CarterDiagram& d);

struct ValidationReport {
  /// Each entry starts with the rule name: connected, bicolored, even-cycles,
  /// mixed-cycles, positive-definite, determinant.
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const CarterDiagram& d);

/// Vertex bijection plus sign flips: vertex v of the first diagram maps to
/// perm[v] of the second after multiplying its root by signs[v].
struct SimilarityWitness {
  std::vector<int> perm;
  std::vector<int> signs;

  SimilarityWitness inverse() const;
  /// this: d1 -> d2, next: d2 -> d3; result d1 -> d3.
  SimilarityWitness then(const SimilarityWitness& next) const;
  static SimilarityWitness identity(int n);
};

std::optional<SimilarityWitness> similar(const CarterDiagram& d1, const CarterDiagram& d2);
std::optional<SimilarityWitness> similar_gram(const std::vector<IntVector>& g1, const std::vector<IntVector>& g2);
/// True iff s_u s_v g1(u,v) = g2(perm u, perm v) for all u, v.
bool check_witness(const SimilarityWitness& w, const std::vector<IntVector>& g1, const std::vector<IntVector>& g2);

/// Copy of d with the listed vertices sign-flipped (solid <-> dotted at each).
CarterDiagram flip_vertices(const CarterDiagram& d, const std::vector<int>& vertices);

}  // namespace carter
