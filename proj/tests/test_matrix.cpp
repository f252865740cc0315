#include <doctest.h>

#include "carter/matrix.hpp"

using namespace carter;

namespace {

RatMatrix d5_b() {
  return RatMatrix::from_ints({{2, 0, 0, -1, 0}, {0, 2, 0, -1, -1}, {0, 0, 2, -1, 0}, {-1, -1, -1, 2, 0}, {0, -1, 0, 0, 2}});
}

}  // namespace

TEST_CASE("determinant and inverse of the D5 form") {
  const RatMatrix b = d5_b();
  CHECK(det(b) == Rational(4));
  const RatMatrix expected = RatMatrix::from_ints({{5, 4, 3, 6, 2},
                                                   {4, 8, 4, 8, 4},
                                                   {3, 4, 5, 6, 2},
                                                   {6, 8, 6, 12, 4},
                                                   {2, 4, 2, 4, 4}})
                                 .scaled(Rational(1, 4));
  CHECK(invert(b) == expected);
  CHECK(b * invert(b) == RatMatrix::identity(5));
}

TEST_CASE("singular and mis-shaped input") {
  const RatMatrix s = RatMatrix::from_ints({{1, 2}, {2, 4}});
  CHECK(det(s) == Rational(0));
  try {
    (void)invert(s);
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.rank() == 1);
  }
  CHECK_THROWS_AS(RatMatrix(2, 3) * RatMatrix(2, 3), ShapeError);
  CHECK_THROWS_AS(det(RatMatrix(2, 3)), ShapeError);
}

TEST_CASE("quadratic forms") {
  const QuadraticForm q(invert(d5_b()));
  const std::vector<int> e1{1, 0, 0, 0, 0}, e5{0, 0, 0, 0, 1};
  CHECK(q(std::span<const int>(e1)) == Rational(5, 4));
  CHECK(q(std::span<const int>(e5)) == Rational(1));
  CHECK_THROWS_AS(QuadraticForm(RatMatrix::from_ints({{1, 2}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("rank and solve") {
  const RatMatrix m = RatMatrix::from_ints({{1, 0}, {0, 1}, {1, 1}});
  const RatVector in{Rational(2), Rational(3), Rational(5)};
  const SolveResult ok = rank_and_solve(m, in);
  CHECK(ok.rank == 2);
  REQUIRE(ok.solution);
  CHECK(*ok.solution == RatVector{Rational(2), Rational(3)});
  const RatVector out{Rational(2), Rational(3), Rational(4)};
  CHECK_FALSE(rank_and_solve(m, out).solution);
}

TEST_CASE("positive definiteness and congruence") {
  CHECK(is_positive_definite(d5_b()));
  CHECK_FALSE(is_positive_definite(RatMatrix::from_ints({{2, -2}, {-2, 2}})));
  const RatMatrix t = RatMatrix::from_ints({{1, 0}, {-1, 1}});
  const RatMatrix b = RatMatrix::from_ints({{2, 1}, {1, 2}});
  CHECK(congruent(t, b) == RatMatrix::from_ints({{2, -1}, {-1, 2}}));
}

TEST_CASE("text round trip") {
  const RatMatrix m = RatMatrix::parse("1/2 0; -3 5/4");
  CHECK(m(0, 0) == Rational(1, 2));
  CHECK(m(1, 1) == Rational(5, 4));
  CHECK(RatMatrix::parse(m.str()) == m);
  CHECK_THROWS(RatMatrix::parse("1 2; 3"));
}
