#include <doctest.h>

#include "carter/diagram.hpp"

using namespace carter;

TEST_CASE("every catalog diagram validates with its class determinant") {
  for (int l = 1; l <= 9; ++l) CHECK(validate(diagram("A" + std::to_string(l))).ok());
  for (int l = 4; l <= 9; ++l)
    for (const auto& d : catalog(AdeType{Family::D, l})) {
      INFO(d.name());
      CHECK(validate(d).ok());
      CHECK(det(partial_cartan(d)) == Rational(4));
    }
  for (const auto& d : catalog("E6")) {
    INFO(d.name());
    CHECK(validate(d).ok());
    CHECK(det(partial_cartan(d)) == Rational(3));
  }
  CHECK(validate(diagram("E7")).ok());
  CHECK(validate(diagram("E8")).ok());
}

TEST_CASE("class sizes") {
  CHECK(catalog("D4").size() == 2);
  CHECK(catalog("C(D5)").size() == 2);
  CHECK(catalog("D6").size() == 3);
  CHECK(catalog("D7").size() == 3);
  CHECK(catalog("D8").size() == 4);
  CHECK(catalog("D9").size() == 4);
  CHECK(catalog("E6").size() == 3);
  CHECK(catalog("D6").front().is_dynkin());
}

TEST_CASE("D5 layout matches the printed matrix") {
  const CarterDiagram d = diagram("D5");
  CHECK(d.labels() == std::vector<std::string>{"α1", "α2", "α3", "β1", "β2"});
  CHECK(partial_cartan(d) ==
        RatMatrix::from_ints({{2, 0, 0, -1, 0}, {0, 2, 0, -1, -1}, {0, 0, 2, -1, 0}, {-1, -1, -1, 2, 0}, {0, -1, 0, 0, 2}}));
}

TEST_CASE("D_l(a_k) has one dotted edge in a square") {
  const CarterDiagram d = diagram("D6(a2)");
  int dotted = 0;
  for (const Edge& e : d.edges()) dotted += e.sign == kDotted;
  CHECK(dotted == 1);
  CHECK(d.edges().size() == 6);
  CHECK_FALSE(d.is_tree());
  CHECK(diagram("d4(A1)").name() == "D4(a1)");
}

TEST_CASE("names and errors") {
  CHECK(DiagramName::parse("D6(a2)").k == 2);
  CHECK(DiagramName::parse("E8").type == AdeType{Family::E, 8});
  CHECK_THROWS_AS(diagram("D4(a2)"), UnknownDiagramError);
  CHECK_THROWS_AS(diagram("Q5"), std::invalid_argument);
  CHECK_THROWS_AS(diagram("D5(a"), std::invalid_argument);
  CHECK_THROWS_AS(catalog("D5(a1)"), UnknownDiagramError);
}

TEST_CASE("validation rejects odd and unbalanced cycles") {
  const CarterDiagram triangle("tri", {"a", "b", "c"}, {Color::Alpha, Color::Beta, Color::Alpha},
                               {{0, 1, kSolid}, {1, 2, kSolid}, {0, 2, kSolid}});
  CHECK_FALSE(validate(triangle).ok());
  // A square with only solid edges is positive semidefinite, not definite.
  const CarterDiagram square("sq", {"a1", "a2", "b1", "b2"}, {Color::Alpha, Color::Alpha, Color::Beta, Color::Beta},
                             {{0, 2, kSolid}, {0, 3, kSolid}, {1, 2, kSolid}, {1, 3, kSolid}});
  const auto rep = validate(square);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("similarity") {
  const CarterDiagram d = diagram("D5(a1)");
  const CarterDiagram flipped = flip_vertices(d, {0, 3});
  const auto w = similar(d, flipped);
  REQUIRE(w);
  CHECK(check_witness(*w, d.gram(), flipped.gram()));
  CHECK(check_witness(w->inverse(), flipped.gram(), d.gram()));
  CHECK(check_witness(w->then(w->inverse()), d.gram(), d.gram()));
  CHECK_FALSE(similar(diagram("D4"), diagram("D4(a1)")));
  CHECK_FALSE(similar(diagram("D6(a1)"), diagram("D6(a2)")));
  CHECK(similar(diagram("E6"), CarterDiagram::from_gram("x", diagram("E6").gram())));
}

TEST_CASE("from_gram colors a bipartite graph") {
  const CarterDiagram d = CarterDiagram::from_gram("A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  CHECK(d.colors()[0] != d.colors()[1]);
  CHECK(d.colors()[0] == d.colors()[2]);
  CHECK(d.is_dynkin());
}
