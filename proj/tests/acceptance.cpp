// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "carter/dual_weyl.hpp"
#include "carter/flation.hpp"
#include "carter/linkage.hpp"
#include "carter/spectral.hpp"
#include "carter/transition.hpp"

using namespace carter;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " -- " << o.detail.str() << std::endl;
  if (!o.pass) ++failures;
}

std::vector<CarterDiagram> d_class(int l) { return catalog(AdeType{Family::D, l}); }

std::map<std::string, LinkageSystem> systems;

const LinkageSystem& system_of(const CarterDiagram& d) {
  auto it = systems.find(d.name());
  if (it == systems.end()) it = systems.emplace(d.name(), enumerate_full(d)).first;
  return it->second;
}

// Frozen totals of the full linkage systems.
std::size_t expected_total(int l) {
  switch (l) {
    case 4: return 24;
    case 5: return 42;
    case 6: return 76;
    case 7: return 142;
    default: return 2 * static_cast<std::size_t>(l);
  }
}

void criterion_table_totals() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t rows = 0;
  for (int l = 4; l <= 9; ++l)
    for (const auto& d : d_class(l)) {
      ++rows;
      const std::size_t total = system_of(d).total.size();
      o.require(total == expected_total(l), d.name() + " total " + std::to_string(total));
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  o.detail << rows << " diagrams, 24/42/76/142/16/18 reproduced in " << secs << " s";
  report(1, "full linkage system totals", o);
}

void criterion_components() {
  Outcome o;
  const std::map<int, std::size_t> e_size{{5, 32}, {6, 64}, {7, 128}};
  for (int l = 4; l <= 9; ++l)
    for (const auto& d : d_class(l)) {
      const auto& ls = system_of(d);
      const std::size_t two_l = 2u * static_cast<std::size_t>(l);
      // Per realization in D_{l+1} the D-labels number 2l; for D4 the
      // component is the union of three such sets (3 x 8 = 24).
      const auto* dp = ls.partial(Family::D);
      o.require(dp && dp->gamma_set && realization_labels(*dp->gamma_set).size() == two_l,
                d.name() + " single-realization D-labels");
      const LabelSet dcomp = ls.component(Family::D);
      const auto orbits = orbit_partition(d, dcomp);
      const std::size_t copies = l == 4 ? 3 : 1;
      o.require(dcomp.size() == copies * two_l, d.name() + " D-component " + std::to_string(dcomp.size()));
      for (const auto& orb : orbits) o.require(orb.size() == two_l, d.name() + " D-orbit size");
      const std::size_t ec = ls.component(Family::E).size();
      const std::size_t want = e_size.count(l) ? e_size.at(l) : 0;
      o.require(ec == want, d.name() + " E-component " + std::to_string(ec));
    }
  const auto& d7 = system_of(diagram("D7"));
  const auto& dl = d7.partial(Family::D)->labels;
  const auto& el = d7.partial(Family::E)->labels;
  o.require(dl.size() == 14 && std::includes(el.begin(), el.end(), dl.begin(), dl.end()), "D7: D8 labels within E8");
  o.detail << "D-labels 2l per realization and per D-orbit for l=4..9 (D4: 3 x 8), E = 32/64/128, "
           << "D7 D8-labels (14) inside E8 partial (" << el.size() << ")";
  report(2, "component sizes", o);
}

void criterion_orbits() {
  Outcome o;
  const auto d4 = orbit_partition(diagram("D4"), system_of(diagram("D4")).total);
  o.require(d4.size() == 3, "D4 orbit count");
  for (const auto& orb : d4) o.require(orb.size() == 8 && orb.p == Rational(1), "D4 orbit size/p");
  const std::map<int, std::size_t> e_orbit{{5, 16}, {6, 32}, {7, 64}};
  for (int l = 4; l <= 9; ++l)
    for (const auto& d : d_class(l)) {
      const auto& ls = system_of(d);
      for (const auto& orb : orbit_partition(d, ls.component(Family::D)))
        o.require(orb.p == Rational(1), d.name() + " D-orbit p " + orb.p.str());
      const auto e = orbit_partition(d, ls.component(Family::E));
      if (!e_orbit.count(l)) {
        o.require(e.empty(), d.name() + " unexpected E-orbits");
        continue;
      }
      o.require(e.size() == 2, d.name() + " E-orbit count");
      for (const auto& orb : e)
        o.require(orb.size() == e_orbit.at(l) && orb.p == Rational(l, 4),
                  d.name() + " E-orbit " + std::to_string(orb.size()) + " p " + orb.p.str());
    }
  o.detail << "D4 3x8 p=1; E-orbits 2x16 p=5/4, 2x32 p=3/2, 2x64 p=7/4; D-orbits p=1";
  report(3, "orbit structure under the dual Weyl group", o);
}

void criterion_equivalence() {
  Outcome o;
  std::size_t roots = 0, diagrams = 0;
  for (int l = 4; l <= 9; ++l)
    for (const auto& d : d_class(l)) {
      ++diagrams;
      for (AdeType t : extension_ambients(l)) {
        const auto g = find_gamma_set(d, t);
        if (!g) continue;
        const QuadraticForm inv(invert(partial_cartan(d)));
        for (const auto& gamma : g->ambient().roots()) {
          ++roots;
          const IntVector p = g->pairing(gamma);
          const Rational value = inv(std::span<const int>(p));
          // Independence checked by rank of S ∪ {γ}, not by the form.
          std::vector<Coords> ext = g->roots();
          ext.push_back(gamma);
          RatMatrix m(static_cast<std::size_t>(g->ambient().rank()), ext.size());
          for (std::size_t c = 0; c < ext.size(); ++c)
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = ext[c][r];
          const bool independent = rank(m) == ext.size();
          const bool is_tau = std::any_of(p.begin(), p.end(), [](int x) { return std::abs(x) == 2; });
          o.require((value < Rational(2)) == independent, d.name() + " in " + t.name());
          if (!independent && !is_tau) o.require(value == Rational(2), d.name() + " in-span value");
        }
      }
    }
  o.detail << diagrams << " diagrams, " << roots << " ambient roots checked exhaustively";
  report(4, "criterion: B∨(γ∇) < 2 iff γ outside span", o);
}

void criterion_d5_inverse() {
  Outcome o;
  const std::vector<IntVector> printed{{5, 4, 3, 6, 2}, {4, 8, 4, 8, 4}, {3, 4, 5, 6, 2}, {6, 8, 6, 12, 4}, {2, 4, 2, 4, 4}};
  const RatMatrix inv = invert(partial_cartan(diagram("D5")));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      o.require(inv(i, j) == Rational(printed[i][j], 4), "entry " + std::to_string(i) + "," + std::to_string(j));
  o.detail << "25 entries equal (1/4)-matrix";
  report(5, "D5 inverse matrix", o);
}

Coords from_layout(const std::vector<int>& row) {
  // (c1 c3 c4 c5 c6 c7 c8; c2) -> (c1, c2, ..., c8)
  return {row[0], row[7], row[1], row[2], row[3], row[4], row[5], row[6]};
}

void criterion_e8_pairs() {
  Outcome o;
  struct Row {
    std::vector<int> eta, lambda, label;
  };
  // η, λ in the two-row layout; label ordered (τ3 τ4 τ5 τ6 τ7 τ8; τ2).
  const std::vector<Row> table{
      {{2, 3, 4, 3, 2, 1, 0, 2}, {2, 4, 6, 5, 4, 3, 2, 3}, {0, 0, 0, 0, 0, -1, 0}},
      {{2, 3, 4, 3, 2, 1, 1, 2}, {2, 4, 6, 5, 4, 3, 1, 3}, {0, 0, 0, 0, -1, 1, 0}},
      {{2, 3, 4, 3, 2, 2, 1, 2}, {2, 4, 6, 5, 4, 2, 1, 3}, {0, 0, 0, -1, 1, 0, 0}},
      {{2, 3, 4, 3, 3, 2, 1, 2}, {2, 4, 6, 5, 3, 2, 1, 3}, {0, 0, -1, 1, 0, 0, 0}},
      {{2, 3, 4, 4, 3, 2, 1, 2}, {2, 4, 6, 4, 3, 2, 1, 3}, {0, -1, 1, 0, 0, 0, 0}},
      {{2, 3, 5, 4, 3, 2, 1, 2}, {2, 4, 5, 4, 3, 2, 1, 3}, {-1, 1, 0, 0, 0, 0, -1}},
      {{2, 3, 5, 4, 3, 2, 1, 3}, {2, 4, 5, 4, 3, 2, 1, 2}, {-1, 0, 0, 0, 0, 0, 1}},
  };
  std::vector<RootPair> pairs;
  try {
    pairs = e8_d7_pairs();
  } catch (const std::exception& e) {
    o.require(false, e.what());
  }
  o.require(pairs.size() == 14, "pair count " + std::to_string(pairs.size()));
  const GammaSet g = e8_d7_gamma_set();
  const Coords sum = from_layout({4, 7, 10, 8, 6, 4, 2, 5});
  std::size_t matched = 0;
  for (const auto& row : table) {
    const Coords eta = from_layout(row.eta), lambda = from_layout(row.lambda);
    const bool found = std::any_of(pairs.begin(), pairs.end(), [&](const RootPair& p) {
      return (p.eta == eta && p.lambda == lambda) || (p.eta == lambda && p.lambda == eta);
    });
    o.require(found, "table row not found");
    o.require(label_vector(g, eta) == LabelVector(row.label), "row label");
    o.require(label_vector(g, lambda) == LabelVector(row.label).negated(), "row λ label");
    o.require(add(eta, lambda) == sum, "row sum");
    matched += found;
  }
  std::size_t positive = 0;
  for (const auto& p : pairs)
    if (p.positive()) {
      ++positive;
      o.require(add(p.eta, p.lambda) == sum, "positive pair sum");
    } else {
      o.require(add(p.eta, p.lambda) == negate(sum), "negative pair sum");
    }
  o.require(positive == 7, "positive pair count");
  o.detail << pairs.size() << " pairs, " << matched << "/7 table rows matched, sums (4,7,10,8,6,4,2;5)";
  report(6, "E8/D7 root pairs", o);
}

void criterion_pairing() {
  Outcome o;
  std::size_t checked = 0;
  for (int l = 4; l <= 7; ++l) {
    const PairingReport rep = pairing_check(l);
    checked += rep.checked;
    o.require(rep.ok(), "l=" + std::to_string(l) + (rep.failures.empty() ? "" : ": " + rep.failures.front()));
  }
  o.detail << checked << " roots φ over l = 4..7 (16+20+24+28 expected)";
  o.require(checked == 88, "root count");
  report(7, "pairing δ = μmax - φ + τ", o);
}

void criterion_dual_weyl() {
  Outcome o;
  constexpr int kSamples = 150;
  std::mt19937 rng(2024);
  const std::vector<std::pair<std::string, AdeType>> exts{{"D4", {Family::D, 5}},     {"D4(a1)", {Family::D, 5}},
                                                          {"D5(a1)", {Family::E, 6}}, {"D6(a2)", {Family::E, 7}},
                                                          {"D7", {Family::E, 8}},     {"D7(a2)", {Family::D, 8}}};
  std::size_t counts[5] = {0, 0, 0, 0, 0};
  for (const auto& [name, t] : exts) {
    const GammaSet g = *find_gamma_set(diagram(name), t);
    const CarterDiagram& d = g.diagram();
    const RatMatrix b = partial_cartan(d);
    const std::vector<LabelVector> labels(system_of(d).total.begin(), system_of(d).total.end());
    std::vector<Coords> outside;
    for (const auto& r : g.ambient().roots())
      if (!g.spans(r)) outside.push_back(r);
    std::uniform_int_distribution<std::size_t> pl(0, labels.size() - 1), pr(0, outside.size() - 1);
    std::uniform_int_distribution<int> pv(0, g.size() - 1), plen(0, 7);
    auto word = [&] {
      std::vector<int> w(plen(rng));
      for (auto& i : w) i = pv(rng);
      return w;
    };
    for (int s = 0; s < kSamples; ++s) {
      const LabelVector& u = labels[pl(rng)];
      const int i = pv(rng);
      o.require(dual_reflect(d, i, dual_reflect(d, i, u)) == u, name + " s*^2");
      o.require(b * reflection_matrix(d, i) == dual_reflection_matrix(d, i) * b, name + " B s = s* B");
      const auto w = word();
      o.require(duality_check(g, w, outside[pr(rng)]), name + " duality");
      o.require(inverse_form_value(g, dual_apply(d, w, u)) == inverse_form_value(g, u), name + " invariance");
      o.require(transpose_identity_check(g, i) && transpose_identity_check(g, w), name + " transpose");
      for (auto& c : counts) ++c;
    }
  }
  o.detail << counts[0] << " random cases per identity (5 identities, 6 extensions)";
  o.require(counts[0] >= 100, "sample count");
  report(8, "dual Weyl identities", o);
}

void criterion_transitions() {
  Outcome o;
  std::size_t pairs = 0;
  for (int l = 4; l <= 7; ++l) {
    const CarterDiagram dynkin = diagram("D" + std::to_string(l));
    for (const auto& d : d_class(l)) {
      if (d.is_dynkin()) continue;
      ++pairs;
      const auto g = find_gamma_set(d, AdeType{Family::D, l});
      const auto t = g ? find_transition(*g, dynkin) : std::nullopt;
      o.require(t.has_value(), d.name() + " no transition");
      if (!t) continue;
      const RatMatrix& m = t->matrix;
      const RatMatrix b_from = partial_cartan(d);
      o.require(m * m == RatMatrix::identity(l), d.name() + " M^2");
      o.require(det(m) == Rational(-1), d.name() + " det");
      std::vector<IntVector> gram;
      for (const auto& r : t->to.roots()) gram.push_back(t->to.pairing(r));
      o.require(congruent(m, b_from) == RatMatrix::from_ints(gram), d.name() + " ᵗM B M");
      o.require(congruent(t->full_map, b_from) == partial_cartan(dynkin), d.name() + " normal form");
      // ᵗF carries 𝓛(source) onto 𝓛(target).
      const RatMatrix ft = t->full_map.transpose();
      LabelSet image;
      for (const auto& u : system_of(d).total) {
        const RatVector v = ft * to_rational(u.values());
        IntVector w;
        for (const auto& x : v) w.push_back(static_cast<int>(x.numerator()));
        image.insert(LabelVector(w));
      }
      o.require(image == system_of(dynkin).total, d.name() + " linkage bijection");
    }
  }
  o.detail << pairs << " pairs {D_l(a_k), D_l}, l = 4..7";
  report(9, "transition matrices", o);
}

void criterion_flation() {
  Outcome o;
  std::size_t inputs = 0;
  for (int l = 4; l <= 7; ++l)
    for (const auto& d : d_class(l)) {
      ++inputs;
      const RatMatrix b = partial_cartan(d);
      try {
        const Reduction r = ovsienko_reduce(UnitForm(b));
        o.require(r.types == std::vector<AdeType>{{Family::D, l}}, d.name() + " type");
        o.require(congruent(r.certificate, b) == r.reduced, d.name() + " certificate");
        o.require(det(r.reduced) == det(b), d.name() + " determinant");
        o.require(similar_gram(r.reduced.to_ints(), cartan_matrix({Family::D, l})).has_value(), d.name() + " form");
      } catch (const std::exception& e) {
        o.require(false, d.name() + ": " + e.what());
      }
    }
  o.detail << inputs << " catalog forms reduced to D_l, certificates exact";
  report(10, "Ovsienko reduction", o);
}

void criterion_spectrum() {
  Outcome o;
  std::vector<CarterDiagram> all;
  for (int l = 1; l <= 9; ++l) all.push_back(diagram("A" + std::to_string(l)));
  for (int l = 4; l <= 9; ++l)
    for (auto& d : d_class(l)) all.push_back(d);
  for (int l = 6; l <= 8; ++l)
    for (auto& d : catalog(AdeType{Family::E, l})) all.push_back(d);
  double lo = 4, hi = 0;
  for (const auto& d : all) {
    const auto s = spectrum(partial_cartan(d));
    lo = std::min(lo, s.min);
    hi = std::max(hi, s.max);
    o.require(s.min > 1e-6 && s.max < 4 - 1e-6, d.name() + " spectrum");
  }
  double dev = 0;
  for (const char* n : {"A1", "A2", "A3", "A4", "D4", "D5", "D6", "D7", "E6", "E7", "E8"}) {
    const auto c = coxeter_relation_check(diagram(n));
    dev = std::max(dev, c.max_deviation);
    o.require(c.max_deviation < 1e-8, std::string(n) + " Coxeter relation");
  }
  o.detail << all.size() << " matrices within [" << lo << ", " << hi << "], Coxeter deviation " << dev;
  report(11, "spectra and Coxeter relation", o);
}

}  // namespace

int main() {
  criterion_table_totals();
  criterion_components();
  criterion_orbits();
  criterion_equivalence();
  criterion_d5_inverse();
  criterion_e8_pairs();
  criterion_pairing();
  criterion_dual_weyl();
  criterion_transitions();
  criterion_flation();
  criterion_spectrum();
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 11 - failures << "/11" << std::endl;
  return failures ? 1 : 0;
}
