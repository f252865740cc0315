#include "carter/gamma_set.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace carter {

LabelVector::LabelVector(std::vector<int> labels) : labels_(std::move(labels)) {
  for (int x : labels_)
    if (x < -1 || x > 1) throw std::invalid_argument("label entry " + std::to_string(x) + " is not in {-1,0,1}");
}

bool LabelVector::is_zero() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](int x) { return x == 0; });
}

LabelVector LabelVector::negated() const {
  LabelVector out = *this;
  for (auto& x : out.labels_) x = -x;
  return out;
}

std::string LabelVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(labels_[i]);
  }
  return s + ")";
}

GammaSet::GammaSet(CarterDiagram diagram, std::shared_ptr<const RootSystem> ambient, std::vector<Coords> roots)
    : diagram_(std::move(diagram)),
      ambient_(std::move(ambient)),
      roots_(std::move(roots)),
      inverse_(invert(partial_cartan(diagram_))),
      inverse_form_(inverse_) {
  if (static_cast<int>(roots_.size()) != diagram_.size())
    throw std::invalid_argument("Γ-set size differs from diagram size");
  for (int i = 0; i < size(); ++i) {
    if (!ambient_->is_root(roots_[i])) throw std::invalid_argument("Γ-set vector is not an ambient root");
    for (int j = 0; j < size(); ++j)
      if (ambient_->inner(roots_[i], roots_[j]) != diagram_.weight(i, j))
        throw std::invalid_argument("Γ-set Gram matrix differs from B_Γ of " + diagram_.name());
  }
  RatMatrix m(static_cast<std::size_t>(ambient_->rank()), roots_.size());
  for (std::size_t c = 0; c < roots_.size(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = roots_[c][r];
  if (rank(m) != roots_.size()) throw std::invalid_argument("Γ-set roots are linearly dependent");
}

IntVector GammaSet::pairing(std::span<const int> v) const {
  IntVector out(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) out[i] = ambient_->inner(v, roots_[i]);
  return out;
}

bool GammaSet::spans(std::span<const int> v) const { return in_span(v, roots_); }

RatVector GammaSet::coordinates(std::span<const int> v) const {
  const IntVector p = pairing(v);
  return inverse_ * to_rational(p);
}

std::optional<GammaSet> find_gamma_set(const CarterDiagram& d, std::shared_ptr<const RootSystem> ambient) {
  const int n = d.size();
  if (n > ambient->rank()) return std::nullopt;
  if (n == 0) return GammaSet(d, ambient, {});

  // BFS placement order starting at the highest-degree vertex; every later
  // vertex then has an already-placed neighbor constraining it.
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  while (static_cast<int>(order.size()) < n) {
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && (start < 0 || d.degree(v) > d.degree(start))) start = v;
    std::vector<int> queue{start};
    placed[start] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      order.push_back(queue[h]);
      for (int w : d.neighbors(queue[h]))
        if (!placed[w]) {
          placed[w] = true;
          queue.push_back(w);
        }
    }
  }

  const auto& roots = ambient->roots();
  std::vector<int> choice(n, -1);
  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (std::size_t r = 0; r < roots.size(); ++r) {
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int u = order[k];
        ok = ambient->inner(roots[r], roots[choice[u]]) == d.weight(v, u);
      }
      if (!ok) continue;
      choice[v] = static_cast<int>(r);
      if (place(depth + 1)) return true;
    }
    choice[v] = -1;
    return false;
  };
  // A Gram matrix equal to the positive definite B_Γ forces linear
  // independence, so no separate rank pruning is needed during the search.
  if (!place(0)) return std::nullopt;

  std::vector<Coords> chosen(n);
  for (int v = 0; v < n; ++v) chosen[v] = roots[choice[v]];
  return GammaSet(d, std::move(ambient), std::move(chosen));
}

std::optional<GammaSet> find_gamma_set(const CarterDiagram& d, AdeType ambient) {
  return find_gamma_set(d, root_system(ambient));
}

LabelVector label_vector(const GammaSet& g, std::span<const int> gamma) {
  IntVector p = g.pairing(gamma);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == 2 || p[i] == -2)
      throw std::invalid_argument("root equals " + std::string(p[i] > 0 ? "" : "-") + g.diagram().labels()[i] +
                                  "; it has no label vector");
  return LabelVector(std::move(p));
}

ProjectionData project(const GammaSet& g, const LabelVector& label) {
  if (static_cast<int>(label.size()) != g.size()) throw ShapeError("label dimension differs from Γ-set size");
  ProjectionData out;
  out.label = label;
  const RatVector v = to_rational(label.values());
  out.gamma_l = g.inverse_cartan() * v;
  const QuadraticForm b(partial_cartan(g.diagram()));
  const Rational gamma_l_norm = b(out.gamma_l);
  out.inverse_value = g.inverse_form()(v);
  out.mu_norm_sq = Rational(2) - gamma_l_norm;
  return out;
}

std::optional<Coords> conjugate_partner(const GammaSet& g, std::span<const int> gamma) {
  if (g.spans(gamma)) throw std::invalid_argument("conjugate_partner: root lies in the span of the Γ-set");
  const IntVector target = g.pairing(gamma);
  for (const auto& delta : g.ambient().roots()) {
    if (std::equal(delta.begin(), delta.end(), gamma.begin(), gamma.end())) continue;
    if (g.pairing(delta) == target && !g.spans(delta)) return delta;
  }
  return std::nullopt;
}

std::vector<Coords> span_roots(const GammaSet& g) {
  std::vector<Coords> out;
  for (const auto& r : g.ambient().roots())
    if (g.spans(r)) out.push_back(r);
  return out;
}

namespace {

// Positive system from a linear functional that is nonzero on every root:
// coordinates are at most 6 in absolute value, so base-13 digits never cancel.
std::int64_t height_functional(const Coords& r) {
  std::int64_t value = 0, scale = 1;
  for (int x : r) {
    value += x * scale;
    scale *= 13;
  }
  return value;
}

std::vector<std::vector<int>> diagram_automorphisms(const std::vector<IntVector>& gram) {
  const int n = static_cast<int>(gram.size());
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> extend = [&](int u) {
    if (u == n) {
      out.push_back(perm);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (int v = 0; v < u && ok; ++v) ok = gram[u][v] == gram[t][perm[v]];
      if (!ok) continue;
      used[t] = true;
      perm[u] = t;
      extend(u + 1);
      used[t] = false;
    }
  };
  extend(0);
  return out;
}

}  // namespace

std::vector<GammaSet> automorphic_images(const GammaSet& g) {
  const RootSystem& rs = g.ambient();
  std::vector<Coords> positive;
  for (const auto& r : span_roots(g))
    if (height_functional(r) > 0) positive.push_back(r);
  const std::set<Coords> positive_set(positive.begin(), positive.end());

  std::set<Coords> decomposable;
  for (std::size_t a = 0; a < positive.size(); ++a)
    for (std::size_t b = a + 1; b < positive.size(); ++b) {
      Coords s = add(positive[a], positive[b]);
      if (positive_set.count(s)) decomposable.insert(std::move(s));
    }
  std::vector<Coords> simple;
  for (const auto& r : positive)
    if (!decomposable.count(r)) simple.push_back(r);
  if (static_cast<int>(simple.size()) != g.size()) return {g};

  const int n = g.size();
  std::vector<IntVector> gram(n, IntVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = rs.inner(simple[i], simple[j]);

  // Γ-set roots in the simple basis of the subsystem.
  RatMatrix basis(static_cast<std::size_t>(rs.rank()), static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < rs.rank(); ++r) basis(r, c) = simple[c][r];
  std::vector<RatVector> coeffs;
  for (const auto& tau : g.roots()) {
    const RatVector rhs = to_rational(tau);
    coeffs.push_back(*rank_and_solve(basis, rhs).solution);
  }

  std::vector<GammaSet> out{g};
  std::set<std::vector<Coords>> seen{g.roots()};
  for (const auto& sigma : diagram_automorphisms(gram)) {
    std::vector<Coords> image;
    for (const auto& c : coeffs) {
      Coords v(rs.rank(), 0);
      for (int j = 0; j < n; ++j) {
        const auto k = static_cast<int>(c[j].numerator());
        for (int r = 0; r < rs.rank(); ++r) v[r] += k * simple[sigma[j]][r];
      }
      image.push_back(std::move(v));
    }
    if (seen.insert(image).second) out.emplace_back(g.diagram(), g.ambient_ptr(), std::move(image));
  }
  return out;
}

}  // namespace carter
