#include "carter/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>

namespace carter {

namespace {

std::vector<IntVector> gram_from_edges(int n, const std::vector<Edge>& edges) {
  std::vector<IntVector> g(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  for (const Edge& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n || e.i == e.j)
      throw std::invalid_argument("edge {" + std::to_string(e.i) + "," + std::to_string(e.j) + "} out of range");
    if (e.sign != kSolid && e.sign != kDotted) throw std::invalid_argument("edge sign must be -1 or +1");
    if (g[e.i][e.j] != 0) throw std::invalid_argument("duplicate edge");
    g[e.i][e.j] = g[e.j][e.i] = e.sign;
  }
  return g;
}

// Incremental construction: vertices get α/β indices in insertion order and
// are emitted α-set first.
class Builder {
public:
  int add(Color c) {
    colors_.push_back(c);
    return static_cast<int>(colors_.size()) - 1;
  }
  void link(int a, int b, int sign = kSolid) { edges_.push_back({a, b, sign}); }
  int tail(int from, int length) {
    int prev = from;
    for (int s = 0; s < length; ++s) {
      const int v = add(colors_[prev] == Color::Alpha ? Color::Beta : Color::Alpha);
      link(prev, v);
      prev = v;
    }
    return prev;
  }

  CarterDiagram build(std::string name) const {
    const int n = static_cast<int>(colors_.size());
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
      if (colors_[v] == Color::Alpha) order.push_back(v);
    for (int v = 0; v < n; ++v)
      if (colors_[v] == Color::Beta) order.push_back(v);
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;

    std::vector<std::string> labels(n);
    std::vector<Color> colors(n);
    int alpha = 0, beta = 0;
    for (int k = 0; k < n; ++k) {
      colors[k] = colors_[order[k]];
      labels[k] = colors[k] == Color::Alpha ? "α" + std::to_string(++alpha) : "β" + std::to_string(++beta);
    }
    std::vector<Edge> edges;
    for (const Edge& e : edges_) {
      int a = pos[e.i], b = pos[e.j];
      if (a > b) std::swap(a, b);
      edges.push_back({a, b, e.sign});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
      return std::tie(x.i, x.j) < std::tie(y.i, y.j);
    });
    return CarterDiagram(std::move(name), std::move(labels), std::move(colors), std::move(edges));
  }

private:
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
};

CarterDiagram make_a(int l) {
  Builder b;
  int prev = -1;
  for (int i = 0; i < l; ++i) {
    const int v = b.add(i % 2 == 0 ? Color::Alpha : Color::Beta);
    if (prev >= 0) b.link(prev, v);
    prev = v;
  }
  return b.build("A" + std::to_string(l));
}

// β1 is the branch node with leaves α1, α3; the long arm runs α2-β2-α4-β3-...
CarterDiagram make_d(int l) {
  Builder b;
  const int a1 = b.add(Color::Alpha);
  const int a2 = b.add(Color::Alpha);
  const int a3 = b.add(Color::Alpha);
  const int b1 = b.add(Color::Beta);
  b.link(b1, a1);
  b.link(b1, a2);
  b.link(b1, a3);
  b.tail(a2, l - 4);
  return b.build("D" + std::to_string(l));
}

// Square α1-β1-α2-β2 with the edge β2α1 dotted; tails of lengths k-1 and
// l-k-3 hang off the opposite corners α1 and α2.
CarterDiagram make_d_ak(int l, int k) {
  Builder b;
  const int a1 = b.add(Color::Alpha);
  const int b1 = b.add(Color::Beta);
  const int a2 = b.add(Color::Alpha);
  const int b2 = b.add(Color::Beta);
  b.link(a1, b1);
  b.link(b1, a2);
  b.link(a2, b2);
  b.link(b2, a1, kDotted);
  b.tail(a1, k - 1);
  b.tail(a2, l - k - 3);
  return b.build("D" + std::to_string(l) + "(a" + std::to_string(k) + ")");
}

CarterDiagram make_e(int l) {
  // Bourbaki nodes 1..l; node 2 hangs off node 4.
  Builder b;
  std::vector<int> node(l + 1);
  const Color color[] = {Color::Alpha, Color::Alpha, Color::Beta, Color::Beta, Color::Alpha,
                         Color::Beta,  Color::Alpha, Color::Beta, Color::Alpha};
  for (int i = 1; i <= l; ++i) node[i] = b.add(color[i]);
  b.link(node[1], node[3]);
  b.link(node[2], node[4]);
  for (int i = 3; i < l; ++i) b.link(node[i], node[i + 1]);
  return b.build("E" + std::to_string(l));
}

CarterDiagram make_e6_a1() {
  Builder b;
  const int a1 = b.add(Color::Alpha);
  const int b1 = b.add(Color::Beta);
  const int a2 = b.add(Color::Alpha);
  const int b2 = b.add(Color::Beta);
  b.link(a1, b1);
  b.link(b1, a2);
  b.link(a2, b2);
  b.link(b2, a1, kDotted);
  b.tail(a1, 1);
  b.tail(b1, 1);
  return b.build("E6(a1)");
}

CarterDiagram make_e6_a2() {
  // Two squares sharing the edge α2β2.
  Builder b;
  const int a1 = b.add(Color::Alpha);
  const int b1 = b.add(Color::Beta);
  const int a2 = b.add(Color::Alpha);
  const int b2 = b.add(Color::Beta);
  const int a3 = b.add(Color::Alpha);
  const int b3 = b.add(Color::Beta);
  b.link(a1, b1);
  b.link(b1, a2);
  b.link(a2, b2);
  b.link(b2, a1, kDotted);
  b.link(b2, a3);
  b.link(a3, b3);
  b.link(b3, a2, kDotted);
  return b.build("E6(a2)");
}

int max_k(AdeType t) {
  switch (t.family) {
    case Family::A: return 0;
    case Family::D: return (t.rank - 2) / 2;
    // TODO: E7(a_k) and E8(a_k) are not in the catalog yet.
    case Family::E: return t.rank == 6 ? 2 : 0;
  }
  return 0;
}

int class_determinant(AdeType t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::D: return 4;
    case Family::E: return 9 - t.rank;
  }
  return 0;
}

}  // namespace

CarterDiagram::CarterDiagram(std::string name, std::vector<std::string> labels, std::vector<Color> colors,
                             std::vector<Edge> edges)
    : name_(std::move(name)), labels_(std::move(labels)), colors_(std::move(colors)), edges_(std::move(edges)) {
  if (labels_.size() != colors_.size()) throw std::invalid_argument("labels and colors differ in length");
  gram_ = gram_from_edges(size(), edges_);
}

CarterDiagram CarterDiagram::from_gram(std::string name, const std::vector<IntVector>& gram) {
  const int n = static_cast<int>(gram.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(gram[i].size()) != n) throw ShapeError("from_gram: non-square Gram matrix");
    if (gram[i][i] != 2) throw std::invalid_argument("from_gram: diagonal entry is not 2");
    for (int j = i + 1; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("from_gram: asymmetric Gram matrix");
      if (gram[i][j] != 0) edges.push_back({i, j, gram[i][j]});
    }
  }
  std::vector<Color> colors(n, Color::Alpha);
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (v != u && gram[u][v] != 0 && !seen[v]) {
          seen[v] = true;
          colors[v] = colors[u] == Color::Alpha ? Color::Beta : Color::Alpha;
          q.push(v);
        }
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i + 1);
  return CarterDiagram(std::move(name), std::move(labels), std::move(colors), std::move(edges));
}

std::vector<int> CarterDiagram::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (j != i && gram_[i][j] != 0) out.push_back(j);
  return out;
}

int CarterDiagram::degree(int i) const { return static_cast<int>(neighbors(i).size()); }

bool CarterDiagram::is_connected() const {
  if (size() == 0) return true;
  std::vector<bool> seen(size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : neighbors(u))
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == size();
}

bool CarterDiagram::is_tree() const {
  return is_connected() && static_cast<int>(edges_.size()) == size() - 1;
}

bool CarterDiagram::is_dynkin() const {
  return is_tree() && std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.sign == kSolid; });
}

CarterDiagram CarterDiagram::renamed(std::string name) const {
  CarterDiagram copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::string DiagramName::str() const {
  std::string s = type.name();
  if (k > 0) s += "(a" + std::to_string(k) + ")";
  return s;
}

DiagramName DiagramName::parse(std::string_view text) {
  DiagramName out;
  const auto open = text.find('(');
  try {
    out.type = AdeType::parse(text.substr(0, open));
  } catch (const std::invalid_argument& e) {
    throw UnknownDiagramError("unknown diagram '" + std::string(text) + "': " + e.what());
  }
  if (open == std::string_view::npos) return out;
  const std::string_view rest = text.substr(open);
  if (rest.size() < 4 || std::tolower(static_cast<unsigned char>(rest[1])) != 'a' || rest.back() != ')')
    throw UnknownDiagramError("malformed diagram name '" + std::string(text) + "'");
  auto [ptr, ec] = std::from_chars(rest.data() + 2, rest.data() + rest.size() - 1, out.k);
  if (ec != std::errc{} || ptr != rest.data() + rest.size() - 1 || out.k < 1)
    throw UnknownDiagramError("malformed diagram name '" + std::string(text) + "'");
  return out;
}

CarterDiagram diagram(std::string_view name) {
  const DiagramName parsed = DiagramName::parse(name);
  const AdeType t = parsed.type;
  if (parsed.k == 0) {
    switch (t.family) {
      case Family::A: return make_a(t.rank);
      case Family::D: return make_d(t.rank);
      case Family::E: return make_e(t.rank);
    }
  }
  if (parsed.k > max_k(t)) {
    throw UnknownDiagramError("diagram " + parsed.str() + " is not in the catalog");
  }
  if (t.family == Family::D) return make_d_ak(t.rank, parsed.k);
  return parsed.k == 1 ? make_e6_a1() : make_e6_a2();
}

std::vector<CarterDiagram> catalog(AdeType type) {
  type.validate();
  std::vector<CarterDiagram> out;
  for (int k = 0; k <= max_k(type); ++k) out.push_back(diagram(DiagramName{type, k}.str()));
  return out;
}

std::vector<CarterDiagram> catalog(std::string_view class_name) {
  std::string_view s = class_name;
  if (s.size() > 3 && (s.front() == 'C' || s.front() == 'c') && s[1] == '(' && s.back() == ')')
    s = s.substr(2, s.size() - 3);
  const DiagramName parsed = DiagramName::parse(s);
  if (parsed.k != 0) throw UnknownDiagramError("class names are Dynkin types, got '" + std::string(class_name) + "'");
  return catalog(parsed.type);
}

RatMatrix partial_cartan(const CarterDiagram& d) { return RatMatrix::from_ints(d.gram()); }

namespace {

// Calls visit(cycle) for each simple cycle, once per direction.
void for_each_cycle(const CarterDiagram& d, const std::function<void(const std::vector<int>&)>& visit) {
  const int n = d.size();
  std::vector<int> path;
  std::vector<bool> on_path(n, false);
  std::function<void(int, int)> dfs = [&](int start, int u) {
    for (int v : d.neighbors(u)) {
      if (v == start && path.size() >= 3) visit(path);
      if (v <= start || on_path[v]) continue;
      on_path[v] = true;
      path.push_back(v);
      dfs(start, v);
      path.pop_back();
      on_path[v] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path.assign(n, false);
    on_path[s] = true;
    dfs(s, s);
  }
}

}  // namespace

ValidationReport validate(const CarterDiagram& d) {
  ValidationReport report;
  const int n = d.size();
  if (!d.is_connected()) report.violations.push_back("connected: diagram is not connected");

  for (const Edge& e : d.edges())
    if (d.colors()[e.i] == d.colors()[e.j]) {
      report.violations.push_back("bicolored: edge {" + d.labels()[e.i] + ", " + d.labels()[e.j] +
                                  "} joins two vertices of the same set");
      break;
    }

  bool odd = false, unmixed = false;
  for_each_cycle(d, [&](const std::vector<int>& cycle) {
    if (cycle.size() % 2 == 1) odd = true;
    int solid = 0, dotted = 0;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int w = d.weight(cycle[k], cycle[(k + 1) % cycle.size()]);
      (w == kSolid ? solid : dotted)++;
    }
    if (solid == 0 || dotted == 0) unmixed = true;
  });
  if (odd) report.violations.push_back("even-cycles: diagram has a cycle of odd length");
  if (unmixed) report.violations.push_back("mixed-cycles: a cycle lacks a solid or a dotted edge");

  const RatMatrix b = partial_cartan(d);
  if (!is_positive_definite(b)) report.violations.push_back("positive-definite: B is not positive definite");

  try {
    const DiagramName parsed = DiagramName::parse(d.name());
    if (parsed.type.rank == n) {
      const Rational expected = class_determinant(parsed.type);
      const Rational actual = det(b);
      if (actual != expected)
        report.violations.push_back("determinant: det B = " + actual.str() + ", class " + parsed.type.name() +
                                    " needs " + expected.str());
    }
  } catch (const UnknownDiagramError&) {
    // Ad-hoc names carry no class to compare against.
  }
  return report;
}

SimilarityWitness SimilarityWitness::identity(int n) {
  SimilarityWitness w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(n, 1);
  return w;
}

SimilarityWitness SimilarityWitness::inverse() const {
  SimilarityWitness w;
  w.perm.resize(perm.size());
  w.signs.resize(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) {
    w.perm[perm[v]] = static_cast<int>(v);
    w.signs[perm[v]] = signs[v];
  }
  return w;
}

SimilarityWitness SimilarityWitness::then(const SimilarityWitness& next) const {
  SimilarityWitness w;
  w.perm.resize(perm.size());
  w.signs.resize(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) {
    w.perm[v] = next.perm[perm[v]];
    w.signs[v] = signs[v] * next.signs[perm[v]];
  }
  return w;
}

bool check_witness(const SimilarityWitness& w, const std::vector<IntVector>& g1, const std::vector<IntVector>& g2) {
  const std::size_t n = g1.size();
  if (g2.size() != n || w.perm.size() != n || w.signs.size() != n) return false;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (w.signs[u] * w.signs[v] * g1[u][v] != g2[w.perm[u]][w.perm[v]]) return false;
  return true;
}

std::optional<SimilarityWitness> similar_gram(const std::vector<IntVector>& g1, const std::vector<IntVector>& g2) {
  const int n = static_cast<int>(g1.size());
  if (static_cast<int>(g2.size()) != n) return std::nullopt;
  auto degrees = [n](const std::vector<IntVector>& g) {
    std::vector<int> deg(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && g[u][v] != 0) ++deg[u];
    return deg;
  };
  const auto deg1 = degrees(g1), deg2 = degrees(g2);
  {
    auto s1 = deg1, s2 = deg2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  SimilarityWitness w;
  w.perm.assign(n, -1);
  w.signs.assign(n, 0);
  std::vector<bool> used(n, false);

  // Signs are forced along edges; the first vertex of each component is free
  // and fixed to +1.
  auto assign_signs = [&]() -> bool {
    std::vector<int> s(n, 0);
    for (int root = 0; root < n; ++root) {
      if (s[root] != 0) continue;
      s[root] = 1;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
          if (v == u || g1[u][v] == 0) continue;
          const int want = s[u] * g1[u][v] * g2[w.perm[u]][w.perm[v]];
          if (s[v] == 0) {
            s[v] = want;
            stack.push_back(v);
          } else if (s[v] != want) {
            return false;
          }
        }
      }
    }
    w.signs = s;
    return true;
  };

  std::function<bool(int)> extend = [&](int u) -> bool {
    if (u == n) return assign_signs();
    for (int target = 0; target < n; ++target) {
      if (used[target] || deg1[u] != deg2[target]) continue;
      bool fits = true;
      for (int v = 0; v < u && fits; ++v)
        fits = std::abs(g1[u][v]) == std::abs(g2[target][w.perm[v]]);
      if (!fits) continue;
      used[target] = true;
      w.perm[u] = target;
      if (extend(u + 1)) return true;
      used[target] = false;
      w.perm[u] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return w;
}

std::optional<SimilarityWitness> similar(const CarterDiagram& d1, const CarterDiagram& d2) {
  return similar_gram(d1.gram(), d2.gram());
}

CarterDiagram flip_vertices(const CarterDiagram& d, const std::vector<int>& vertices) {
  std::vector<int> sign(d.size(), 1);
  for (int v : vertices) sign.at(v) = -sign.at(v);
  std::vector<Edge> edges = d.edges();
  for (Edge& e : edges) e.sign *= sign[e.i] * sign[e.j];
  return CarterDiagram(d.name(), d.labels(), d.colors(), std::move(edges));
}

}  // namespace carter
