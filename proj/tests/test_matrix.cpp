#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cdgforge/mateq.hpp"
#include "cdgforge/matrix.hpp"
#include "cdgforge/rng.hpp"
#include "oracles.hpp"

using namespace cdgforge;

TEST_CASE("prime field arithmetic") {
    Field f3(3);
    CHECK(f3.add(f3.from_int(2), f3.from_int(2)) == f3.from_int(1));
    CHECK(f3.inv(f3.from_int(2)) == f3.from_int(2));
    CHECK(f3.neg(f3.from_int(1)) == f3.from_int(2));
    CHECK_THROWS_AS(Field(4), ArithmeticError);
    CHECK_THROWS_AS(f3.inv(f3.zero()), ArithmeticError);
}

TEST_CASE("rational arithmetic stays reduced") {
    Field q(0);
    Scalar half = q.from_fraction(1, 2);
    Scalar third = q.from_fraction(2, 6);
    CHECK(third == q.from_fraction(1, 3));
    CHECK(q.add(half, third) == q.from_fraction(5, 6));
    CHECK(q.mul(half, q.from_int(2)) == q.one());
    CHECK(q.inv(q.from_fraction(-3, 7)) == q.from_fraction(-7, 3));
}

TEST_CASE("rank, kernel, solve over F3") {
    Field f3(3);
    Matrix a = Matrix::from_ints(f3, 3, 3, {1, 2, 0, 0, 1, 1, 1, 0, 1}); /* row3 = row1 + row2 */
    /* frozen via tiny_rank oracle: kernel counting over all 27 vectors */
    CHECK(test_oracles::tiny_rank(a) == 2);
    CHECK(a.rank() == 2);
    Matrix k = a.kernel_basis();
    CHECK(k.cols() == 1);
    CHECK((a * k).is_zero());

    Matrix b = Matrix::from_ints(f3, 3, 1, {0, 1, 1}); /* = col1 + col2 */
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);

    Matrix inconsistent = Matrix::from_ints(f3, 3, 1, {1, 0, 0});
    /* rhs outside the column space: oracle says rank of [a|b] jumps */
    CHECK(test_oracles::tiny_rank(a.hstack(inconsistent)) == 3);
    CHECK_FALSE(a.solve(inconsistent).has_value());
}

TEST_CASE("inverse round trip over Q") {
    Field q(0);
    Matrix a = Matrix::from_ints(q, 2, 2, {2, 1, 1, 1});
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK((a * *inv).is_identity());
}

TEST_CASE("random rank agrees with the independent eliminator") {
    Field f3(3);
    Rng rng(42);
    for (int t = 0; t < 30; ++t) {
        Matrix m = rng.matrix(f3, 4, 5);
        CHECK(m.rank() == test_oracles::independent_rank(m));
    }
}

TEST_CASE("kron solves AXB = C") {
    Field f3(3);
    Rng rng(7);
    Matrix a = rng.matrix(f3, 3, 2), x = rng.matrix(f3, 2, 2), b = rng.matrix(f3, 2, 3);
    Matrix c = a * x * b;
    MatrixEquations sys(f3);
    int v = sys.add_unknown(2, 2);
    int eq = sys.add_equation(3, 3);
    sys.add_term(eq, v, a, b, f3.one());
    sys.add_rhs(eq, c);
    auto sol = sys.solve();
    REQUIRE(sol.solvable);
    CHECK(a * sol.particular[0] * b == c);
}

TEST_CASE("quotient representatives") {
    Field f3(3);
    Matrix w = Matrix::from_ints(f3, 3, 1, {1, 0, 0});
    Matrix v = Matrix::identity(f3, 3);
    Matrix reps = quotient_representatives(w, v);
    CHECK(reps.cols() == 2);
}
