#include "carter/dual_weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace carter {

IntVector dual_reflect(const CarterDiagram& d, int i, std::span<const int> u) {
  if (static_cast<int>(u.size()) != d.size()) throw ShapeError("vector dimension differs from diagram size");
  if (i < 0 || i >= d.size()) throw std::out_of_range("vertex index " + std::to_string(i));
  IntVector out(u.begin(), u.end());
  const int ui = u[i];
  out[i] = -ui;
  for (int k : d.neighbors(i)) out[k] += d.weight(i, k) == kSolid ? ui : -ui;
  return out;
}

LabelVector dual_reflect(const CarterDiagram& d, int i, const LabelVector& u) {
  IntVector out = dual_reflect(d, i, std::span<const int>(u.values()));
  for (int x : out)
    if (x < -1 || x > 1) throw std::domain_error("dual reflection of " + u.str() + " is not ternary");
  return LabelVector(std::move(out));
}

LabelVector dual_apply(const CarterDiagram& d, const std::vector<int>& word, const LabelVector& u) {
  LabelVector v = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = dual_reflect(d, *it, v);
  return v;
}

Coords apply_word(const GammaSet& g, const std::vector<int>& word, std::span<const int> gamma) {
  Coords v(gamma.begin(), gamma.end());
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = g.ambient().reflect(g.roots().at(*it), v);
  return v;
}

RatMatrix reflection_matrix(const CarterDiagram& d, int i) {
  RatMatrix m = RatMatrix::identity(d.size());
  for (int k = 0; k < d.size(); ++k) m(i, k) -= d.weight(i, k);
  return m;
}

RatMatrix dual_reflection_matrix(const CarterDiagram& d, int i) {
  RatMatrix m = RatMatrix::identity(d.size());
  for (int k = 0; k < d.size(); ++k) m(k, i) -= d.weight(k, i);
  return m;
}

RatMatrix word_matrix(const CarterDiagram& d, const std::vector<int>& word) {
  RatMatrix m = RatMatrix::identity(d.size());
  for (int i : word) m = m * reflection_matrix(d, i);
  return m;
}

RatMatrix dual_word_matrix(const CarterDiagram& d, const std::vector<int>& word) {
  RatMatrix m = RatMatrix::identity(d.size());
  for (int i : word) m = m * dual_reflection_matrix(d, i);
  return m;
}

std::vector<Orbit> orbit_partition(const CarterDiagram& d, const std::set<LabelVector>& labels) {
  const QuadraticForm inverse(invert(partial_cartan(d)));
  std::set<LabelVector> unseen = labels;
  std::vector<Orbit> out;
  while (!unseen.empty()) {
    std::vector<LabelVector> queue{*unseen.begin()};
    unseen.erase(unseen.begin());
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int i = 0; i < d.size(); ++i) {
        LabelVector next = dual_reflect(d, i, queue[h]);
        if (!labels.count(next))
          throw ClosureError("s*" + std::to_string(i + 1) + " maps " + queue[h].str() + " to " + next.str() +
                             ", outside the label set");
        if (unseen.erase(next)) queue.push_back(std::move(next));
      }
    }
    std::sort(queue.begin(), queue.end());
    Orbit orbit{std::move(queue), {}};
    orbit.p = inverse(std::span<const int>(orbit.labels.front().values()));
    for (const auto& u : orbit.labels)
      if (inverse(std::span<const int>(u.values())) != orbit.p)
        throw std::logic_error("inverse form is not constant on the orbit of " + orbit.labels.front().str());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool duality_check(const GammaSet& g, const std::vector<int>& word, std::span<const int> gamma) {
  const LabelVector before = label_vector(g, gamma);
  const Coords moved = apply_word(g, word, gamma);
  return label_vector(g, moved) == dual_apply(g.diagram(), word, before);
}

bool transpose_identity_check(const GammaSet& g, int i) {
  return dual_reflection_matrix(g.diagram(), i) == reflection_matrix(g.diagram(), i).transpose();
}

bool transpose_identity_check(const GammaSet& g, const std::vector<int>& word) {
  return dual_word_matrix(g.diagram(), word) == invert(word_matrix(g.diagram(), word)).transpose();
}

std::string orbit_dot(const CarterDiagram& d, const Orbit& orbit) {
  std::map<LabelVector, std::size_t> index;
  for (std::size_t k = 0; k < orbit.labels.size(); ++k) index[orbit.labels[k]] = k;
  std::ostringstream os;
  os << "graph orbit {\n  label=\"" << d.name() << " p=" << orbit.p.str() << " size=" << orbit.size() << "\";\n";
  for (std::size_t k = 0; k < orbit.labels.size(); ++k)
    os << "  n" << k << " [label=\"" << orbit.labels[k].str() << "\"];\n";
  for (std::size_t k = 0; k < orbit.labels.size(); ++k)
    for (int i = 0; i < d.size(); ++i) {
      const auto it = index.find(dual_reflect(d, i, orbit.labels[k]));
      // Each undirected edge once; fixed points (u_i = 0) are not drawn.
      if (it == index.end() || it->second <= k) continue;
      os << "  n" << k << " -- n" << it->second << " [label=\"" << d.labels()[i] << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace carter
