#include "carter/transition.hpp"

#include <map>
#include <queue>

#include "carter/linkage.hpp"

namespace carter {

RatMatrix witness_matrix(const SimilarityWitness& w) {
  const std::size_t n = w.perm.size();
  RatMatrix p(n, n);
  for (std::size_t u = 0; u < n; ++u) p(u, w.perm[u]) = w.signs[u];
  return p;
}

namespace {

std::vector<IntVector> gram_of(const GammaSet& g) {
  std::vector<IntVector> out;
  for (const auto& r : g.roots()) out.push_back(g.pairing(r));
  return out;
}

std::optional<AdeType> class_type(const CarterDiagram& d) {
  try {
    return DiagramName::parse(d.name()).type;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<Transition> find_transition(const GammaSet& from, const CarterDiagram& to) {
  const int n = from.size();
  if (to.size() != n) return std::nullopt;
  const auto candidates = span_roots(from);
  for (int i = 0; i < n; ++i) {
    for (const auto& alpha : candidates) {
      const RatVector c = from.coordinates(alpha);
      if (c[i] != Rational(-1)) continue;
      bool integral = true;
      for (const auto& x : c) integral = integral && x.is_integer();
      if (!integral) continue;

      std::vector<Coords> roots = from.roots();
      roots[i] = alpha;
      std::vector<IntVector> gram(n, IntVector(n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) gram[a][b] = from.ambient().inner(roots[a], roots[b]);
      auto witness = similar_gram(gram, to.gram());
      if (!witness) continue;

      IntVector coeffs(n);
      RatMatrix m = RatMatrix::identity(n);
      for (int k = 0; k < n; ++k) {
        coeffs[k] = static_cast<int>(c[k].numerator());
        m(k, i) = c[k];
      }
      GammaSet to_set(CarterDiagram::from_gram(to.name() + "~", gram), from.ambient_ptr(), std::move(roots));
      RatMatrix full = m * witness_matrix(*witness);
      return Transition{from, std::move(to_set), to, i, std::move(coeffs), std::move(m), *witness, std::move(full)};
    }
  }
  return std::nullopt;
}

TransitionReport verify_transition(const Transition& t, bool with_linkage) {
  TransitionReport rep;
  auto check = [&](bool ok, const std::string& name) { (ok ? rep.passed : rep.failures).push_back(name); };
  const int n = t.from.size();
  const RatMatrix& m = t.matrix;
  const RatMatrix b_from = partial_cartan(t.from.diagram());

  check(m * m == RatMatrix::identity(n), "involution");
  check(det(m) == Rational(-1), "determinant");
  bool fixes = m.is_integral();
  for (int j = 0; j < n; ++j)
    if (j != t.moved)
      for (int k = 0; k < n; ++k) fixes = fixes && m(k, j) == Rational(k == j ? 1 : 0);
  check(fixes, "fixes-others");
  check(congruent(m, b_from) == RatMatrix::from_ints(gram_of(t.to)), "congruence");
  check(congruent(t.full_map, b_from) == partial_cartan(t.target), "normal-form");

  // γ∇ for the moved set equals ᵗM γ∇ for the original one, root by root.
  const RatMatrix mt = m.transpose();
  bool transport = true;
  for (const auto& gamma : t.from.ambient().roots()) {
    if (t.from.spans(gamma)) continue;
    const RatVector lhs = to_rational(t.to.pairing(gamma));
    const RatVector rhs = mt * to_rational(t.from.pairing(gamma));
    transport = transport && lhs == rhs;
  }
  check(transport, "label-transport");

  if (with_linkage) {
    const LinkageSystem src = enumerate_full(t.from.diagram());
    const LinkageSystem dst = enumerate_full(t.target);
    rep.labels_from = src.total.size();
    rep.labels_to = dst.total.size();
    const RatMatrix ft = t.full_map.transpose();
    LabelSet image;
    bool ternary = true;
    for (const auto& u : src.total) {
      const RatVector v = ft * to_rational(u.values());
      IntVector w;
      for (const auto& x : v) {
        ternary = ternary && x.is_integer() && x.numerator() >= -1 && x.numerator() <= 1;
        w.push_back(static_cast<int>(x.numerator()));
      }
      if (ternary) image.insert(LabelVector(std::move(w)));
    }
    check(ternary && image == dst.total, "linkage-bijection");
  }
  return rep;
}

std::optional<Chain> chain(const CarterDiagram& from, const CarterDiagram& to) {
  if (from.size() != to.size()) return std::nullopt;
  if (auto w = similar(from, to)) return Chain{{}, witness_matrix(*w)};
  const auto type = class_type(from);
  if (!type || class_type(to) != type) return std::nullopt;

  const auto members = catalog(*type);
  auto index_of = [&](const CarterDiagram& d) {
    for (std::size_t k = 0; k < members.size(); ++k)
      if (members[k].name() == d.name()) return static_cast<int>(k);
    return -1;
  };
  const int src = index_of(from), dst = index_of(to);
  if (src < 0 || dst < 0) return std::nullopt;

  std::vector<std::optional<Transition>> via(members.size());
  std::vector<int> parent(members.size(), -2);
  parent[src] = -1;
  std::queue<int> queue;
  queue.push(src);
  while (!queue.empty() && parent[dst] == -2) {
    const int cur = queue.front();
    queue.pop();
    auto g = find_gamma_set(members[cur], *type);
    if (!g) continue;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (parent[k] != -2) continue;
      auto t = find_transition(*g, members[k]);
      if (!t) continue;
      parent[k] = cur;
      via[k] = std::move(t);
      queue.push(static_cast<int>(k));
    }
  }
  if (parent[dst] == -2) return std::nullopt;

  std::vector<Transition> steps;
  for (int k = dst; parent[k] != -1; k = parent[k]) steps.insert(steps.begin(), *via[k]);
  RatMatrix f = RatMatrix::identity(from.size());
  for (const auto& s : steps) f = f * s.full_map;
  return Chain{std::move(steps), std::move(f)};
}

}  // namespace carter
