#include "carter/linkage.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace carter {

namespace {

std::string coords_str(const Coords& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

int family_rank(Family f) { return static_cast<int>(f); }

}  // namespace

const PartialSystem* LinkageSystem::partial(Family f) const {
  for (const auto& p : partials)
    if (p.ambient.family == f) return &p;
  return nullptr;
}

LabelSet LinkageSystem::component(Family f) const {
  const PartialSystem* own = partial(f);
  if (!own) return {};
  LabelSet out;
  for (const auto& label : own->labels) {
    bool earlier = false;
    for (const auto& p : partials)
      if (family_rank(p.ambient.family) < family_rank(f) && p.labels.count(label)) earlier = true;
    if (!earlier) out.insert(label);
  }
  return out;
}

Rational inverse_form_value(const GammaSet& g, const LabelVector& label) {
  if (static_cast<int>(label.size()) != g.size()) throw ShapeError("label dimension differs from Γ-set size");
  return g.inverse_form()(std::span<const int>(label.values()));
}

bool is_linkage_root(const GammaSet& g, const LabelVector& label) { return inverse_form_value(g, label) < Rational(2); }

bool single_endpoint_admits(const GammaSet& g, int i) {
  if (i < 0 || i >= g.size()) throw std::out_of_range("vertex index " + std::to_string(i));
  return g.inverse_cartan()(i, i) < Rational(2);
}

std::vector<AdeType> extension_ambients(int base_rank) {
  const int r = base_rank + 1;
  std::vector<AdeType> out{{Family::A, r}};
  if (r >= 4) out.push_back({Family::D, r});
  if (r >= 6 && r <= 8) out.push_back({Family::E, r});
  return out;
}

LabelSet realization_labels(const GammaSet& g) {
  LabelSet out;
  for (const auto& root : g.ambient().roots()) {
    if (g.spans(root)) continue;
    LabelVector label = label_vector(g, root);
    if (!label.is_zero()) out.insert(std::move(label));
  }
  return out;
}

PartialSystem enumerate_partial(const CarterDiagram& base, AdeType ambient) {
  PartialSystem out;
  out.ambient = ambient;
  auto rs = root_system(ambient);
  auto g = find_gamma_set(base, rs);
  if (!g) {
    out.note = "no embedding of " + base.name() + " in " + ambient.name();
    return out;
  }
  // A single realization can miss labels when Φ ∩ L has diagram symmetries
  // that the ambient Weyl group does not induce (D4 triality), so the set is
  // taken over all images.
  const auto images = automorphic_images(*g);
  out.realizations = images.size();
  for (const auto& img : images) out.labels.merge(realization_labels(img));
  out.gamma_set = std::move(g);
  return out;
}

LinkageSystem enumerate_full(const CarterDiagram& base) {
  LinkageSystem out{base, {}, {}};
  for (AdeType t : extension_ambients(base.size())) {
    out.partials.push_back(enumerate_partial(base, t));
    out.total.insert(out.partials.back().labels.begin(), out.partials.back().labels.end());
  }
  return out;
}

CriterionReport criterion_check(const CarterDiagram& base) {
  CriterionReport rep;
  rep.base = base.name();
  for (AdeType t : extension_ambients(base.size())) {
    auto g = find_gamma_set(base, t);
    if (!g) continue;
    rep.ambients.push_back(t.name());
    for (const auto& gamma : g->ambient().roots()) {
      ++rep.roots_checked;
      const IntVector p = g->pairing(gamma);
      const bool outside = !g->spans(gamma);
      const bool is_tau = std::any_of(p.begin(), p.end(), [](int x) { return x == 2 || x == -2; });
      const Rational value = g->inverse_form()(std::span<const int>(p));
      const std::string where = t.name() + " root " + coords_str(gamma);
      if ((value < Rational(2)) != outside)
        rep.failures.push_back(where + ": value " + value.str() + (outside ? " outside span" : " inside span"));
      if (outside) {
        ++rep.outside_span;
        if (is_tau || std::any_of(p.begin(), p.end(), [](int x) { return x < -1 || x > 1; }))
          rep.failures.push_back(where + ": non-ternary label outside span");
      } else if (!is_tau && value != Rational(2)) {
        rep.failures.push_back(where + ": in-span value " + value.str() + " differs from 2");
      }
    }
  }
  if (rep.ambients.empty()) rep.failures.push_back("no ambient admits " + base.name());
  return rep;
}

PairingReport pairing_check(int l) {
  if (l < 4 || l > 8) throw std::invalid_argument("pairing_check needs 4 <= l <= 8");
  PairingReport rep;
  rep.l = l;
  auto rs = root_system({Family::D, l + 1});
  // The base D_l is spanned by simple roots 2..l+1; simple root 1 is the
  // extension vertex and the only one not orthogonal to μmax is root 2.
  std::vector<Coords> basis;
  for (int i = 1; i <= l; ++i) basis.push_back(rs->simple(i));
  std::vector<IntVector> gram(l, IntVector(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) gram[i][j] = rs->inner(basis[i], basis[j]);
  GammaSet g(CarterDiagram::from_gram("D" + std::to_string(l), gram), rs, basis);

  const Coords tau = rs->simple(0);
  const Coords& mu = rs->maximal();
  auto partner = [&](const Coords& phi) {
    const bool positive = phi[0] > 0;
    const Coords p = positive ? phi : negate(phi);
    const Coords delta = add(sub(mu, p), tau);
    return positive ? delta : negate(delta);
  };
  for (const auto& phi : rs->roots()) {
    if (phi[0] == 0) continue;
    ++rep.checked;
    const Coords delta = partner(phi);
    const std::string where = "φ = " + coords_str(phi);
    if (!rs->is_root(delta)) {
      rep.failures.push_back(where + ": δ is not a root");
      continue;
    }
    if (g.spans(delta)) {
      rep.failures.push_back(where + ": δ lies in Φ(D" + std::to_string(l) + ")");
      continue;
    }
    if (label_vector(g, delta) != label_vector(g, phi).negated()) rep.failures.push_back(where + ": δ∇ ≠ -φ∇");
  }
  rep.tau_to_mu = partner(tau) == mu;
  rep.mu_to_tau = partner(mu) == tau;
  return rep;
}

bool RootPair::positive() const {
  auto pos = [](const Coords& r) { return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }); };
  return pos(eta) && pos(lambda);
}

GammaSet e8_d7_gamma_set() {
  auto rs = root_system({Family::E, 8});
  const std::vector<int> order{2, 3, 4, 5, 6, 7, 1};
  std::vector<Coords> basis;
  for (int i : order) basis.push_back(rs->simple(i));
  std::vector<IntVector> gram(7, IntVector(7));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) gram[i][j] = rs->inner(basis[i], basis[j]);
  return GammaSet(CarterDiagram::from_gram("D7", gram), rs, basis);
}

std::vector<RootPair> e8_d7_pairs() {
  const GammaSet g = e8_d7_gamma_set();
  const auto& roots = g.ambient().roots();
  std::map<LabelVector, std::vector<std::size_t>> by_label;
  std::vector<LabelVector> labels(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (g.spans(roots[k])) continue;
    labels[k] = label_vector(g, roots[k]);
    by_label[labels[k]].push_back(k);
  }
  std::vector<RootPair> out;
  for (const auto& [label, members] : by_label)
    for (std::size_t a : members) {
      const auto it = by_label.find(label.negated());
      if (it == by_label.end()) continue;
      for (std::size_t b : it->second) {
        if (b <= a || roots[b] == negate(roots[a])) continue;
        out.push_back({roots[a], roots[b], label});
      }
    }
  // Positive pairs first, each with η the smaller root; then the rest.
  for (auto& p : out)
    if (p.positive() && p.lambda < p.eta) {
      std::swap(p.eta, p.lambda);
      p.label = p.label.negated();
    }
  std::stable_sort(out.begin(), out.end(), [](const RootPair& x, const RootPair& y) {
    if (x.positive() != y.positive()) return x.positive();
    return x.eta < y.eta;
  });
  if (out.size() != 14) throw std::runtime_error("expected 14 E8/D7 pairs, found " + std::to_string(out.size()));
  return out;
}

std::string e8_layout(const Coords& r) {
  if (r.size() != 8) throw ShapeError("e8_layout needs an E8 coordinate vector");
  std::string s = "(";
  for (int i : {0, 2, 3, 4, 5, 6, 7}) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ";" + std::to_string(r[1]) + ")";
}

}  // namespace carter
