#include <doctest.h>

#include <random>

#include "carter/dual_weyl.hpp"
#include "carter/linkage.hpp"

using namespace carter;

namespace {

constexpr int kSamples = 120;

std::vector<int> random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), vertex(0, n - 1);
  std::vector<int> w(len(rng));
  for (auto& i : w) i = vertex(rng);
  return w;
}

// Catalog extensions used by the property suite.
std::vector<GammaSet> extensions() {
  std::vector<GammaSet> out;
  for (const auto& [name, t] : std::vector<std::pair<std::string, AdeType>>{{"D4(a1)", {Family::D, 5}},
                                                                            {"D5", {Family::E, 6}},
                                                                            {"D5(a1)", {Family::E, 6}},
                                                                            {"D6(a2)", {Family::E, 7}},
                                                                            {"D7(a1)", {Family::E, 8}},
                                                                            {"E6(a1)", {Family::E, 7}}})
    out.push_back(*find_gamma_set(diagram(name), t));
  return out;
}

}  // namespace

TEST_CASE("dual reflection rules") {
  const CarterDiagram d4 = diagram("D4");
  CHECK(dual_reflect(d4, 0, LabelVector({1, 0, 0, 0})) == LabelVector({-1, 0, 0, 1}));
  CHECK(dual_reflect(d4, 1, LabelVector({1, 0, 0, 0})) == LabelVector({1, 0, 0, 0}));
  const CarterDiagram a = diagram("D4(a1)");
  // Square α1-β1-α2-β2 with β2α1 dotted: reflecting at α1 pushes -u into β2.
  const int beta2 = 3;
  REQUIRE(a.weight(0, beta2) == kDotted);
  CHECK(dual_reflect(a, 0, LabelVector({1, 0, 0, 0})) == LabelVector({-1, 0, 1, -1}));
  CHECK_THROWS_AS(dual_reflect(d4, 3, LabelVector({1, 1, 1, 1})), std::domain_error);
  CHECK_THROWS_AS(dual_reflect(d4, 0, std::vector<int>{1, 0}), ShapeError);
}

TEST_CASE("orbit partitions") {
  const CarterDiagram d4 = diagram("D4");
  const auto orbits = orbit_partition(d4, enumerate_full(d4).total);
  REQUIRE(orbits.size() == 3);
  for (const auto& o : orbits) {
    CHECK(o.is_loctet());
    CHECK(o.p == Rational(1));
  }
  for (const auto& [name, size, p] : std::vector<std::tuple<std::string, std::size_t, Rational>>{
           {"D5", 16, Rational(5, 4)}, {"D6(a1)", 32, Rational(3, 2)}, {"D7(a2)", 64, Rational(7, 4)}}) {
    const CarterDiagram d = diagram(name);
    const auto e = orbit_partition(d, enumerate_full(d).component(Family::E));
    REQUIRE(e.size() == 2);
    for (const auto& o : e) {
      CHECK(o.size() == size);
      CHECK(o.p == p);
    }
  }
  LabelSet broken{LabelVector({1, 0, 0, 0})};
  CHECK_THROWS_AS(orbit_partition(d4, broken), ClosureError);
}

TEST_CASE("property: s* is an involution") {
  std::mt19937 rng(11);
  for (const auto& g : extensions()) {
    const LinkageSystem ls = enumerate_full(g.diagram());
    const std::vector<LabelVector> labels(ls.total.begin(), ls.total.end());
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    std::uniform_int_distribution<int> vertex(0, g.size() - 1);
    for (int s = 0; s < kSamples; ++s) {
      const LabelVector& u = labels[pick(rng)];
      const int i = vertex(rng);
      CHECK(dual_reflect(g.diagram(), i, dual_reflect(g.diagram(), i, u)) == u);
    }
  }
}

TEST_CASE("property: B s_i = s*_i B") {
  std::mt19937 rng(12);
  for (const auto& g : extensions()) {
    const RatMatrix b = partial_cartan(g.diagram());
    std::uniform_int_distribution<int> vertex(0, g.size() - 1);
    for (int s = 0; s < kSamples; ++s) {
      const int i = vertex(rng);
      CHECK(b * reflection_matrix(g.diagram(), i) == dual_reflection_matrix(g.diagram(), i) * b);
    }
  }
}

TEST_CASE("property: (wγ)∇ = w*γ∇") {
  std::mt19937 rng(13);
  for (const auto& g : extensions()) {
    std::vector<Coords> outside;
    for (const auto& r : g.ambient().roots())
      if (!g.spans(r)) outside.push_back(r);
    std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
    for (int s = 0; s < kSamples; ++s) {
      const auto w = random_word(rng, g.size(), 6);
      CHECK(duality_check(g, w, outside[pick(rng)]));
    }
    CHECK(duality_check(g, {}, outside.front()));
  }
}

TEST_CASE("property: the inverse form is invariant under s*") {
  std::mt19937 rng(14);
  for (const auto& g : extensions()) {
    const LinkageSystem ls = enumerate_full(g.diagram());
    const std::vector<LabelVector> labels(ls.total.begin(), ls.total.end());
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    for (int s = 0; s < kSamples; ++s) {
      const LabelVector& u = labels[pick(rng)];
      const auto w = random_word(rng, g.size(), 8);
      CHECK(inverse_form_value(g, dual_apply(g.diagram(), w, u)) == inverse_form_value(g, u));
    }
  }
}

TEST_CASE("property: s* is the transpose of s") {
  std::mt19937 rng(15);
  for (const auto& g : extensions()) {
    for (int i = 0; i < g.size(); ++i) CHECK(transpose_identity_check(g, i));
    for (int s = 0; s < kSamples; ++s) CHECK(transpose_identity_check(g, random_word(rng, g.size(), 7)));
  }
}

TEST_CASE("orbit graph export") {
  const CarterDiagram d4 = diagram("D4");
  const auto orbits = orbit_partition(d4, enumerate_full(d4).total);
  const std::string dot = orbit_dot(d4, orbits.front());
  std::size_t nodes = 0;
  for (std::size_t pos = dot.find("[label=\"("); pos != std::string::npos; pos = dot.find("[label=\"(", pos + 1)) ++nodes;
  CHECK(nodes == 8);
  CHECK(dot.find("--") != std::string::npos);
}
