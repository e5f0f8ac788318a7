// Dense rational matrices: arithmetic, Gaussian rank, determinants and
// linear solves, all checked against hand-computed values.

#include "doctest.h"
#include "slackfc/matrix.hpp"

using namespace sfc;

namespace {

Mat m22(long a, long b, long c, long d) {
    return Mat::from_rows({{Rat(a), Rat(b)}, {Rat(c), Rat(d)}});
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("construction zero-fills") {
    Mat m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(is_zero(m));
    m.at(1, 2) = rat(1, 3);
    CHECK_FALSE(is_zero(m));
    CHECK(m.at(1, 2) == rat(1, 3));
    CHECK(m.at(0, 0) == 0);
}

TEST_CASE("identity and equality") {
    const Mat eye = Mat::identity(3);
    CHECK(eye == Mat::identity(3));
    CHECK_FALSE(eye == Mat(3, 3));
    CHECK(eye.at(1, 1) == 1);
    CHECK(eye.at(0, 1) == 0);
}

TEST_CASE("product against a hand result") {
    const Mat x = m22(1, 2, 3, 4);
    const Mat y = m22(5, 6, 7, 8);
    CHECK(x * y == m22(19, 22, 43, 50));
    CHECK(x * Mat::identity(2) == x);
    CHECK(x + y == m22(6, 8, 10, 12));
    CHECK(y - x == m22(4, 4, 4, 4));
}

TEST_CASE("transpose and slices") {
    const Mat m = Mat::from_rows({{Rat(1), Rat(2), Rat(3)}, {Rat(4), Rat(5), Rat(6)}});
    const Mat t = transpose(m);
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    CHECK(t.at(2, 0) == 3);
    CHECK(row_of(m, 1) == Vec{Rat(4), Rat(5), Rat(6)});
    CHECK(col_of(m, 2) == Vec{Rat(3), Rat(6)});
}

TEST_CASE("outer product") {
    const Mat m = outer({Rat(1), Rat(2)}, {Rat(3), Rat(4), Rat(5)});
    CHECK(m == Mat::from_rows({{Rat(3), Rat(4), Rat(5)}, {Rat(6), Rat(8), Rat(10)}}));
}

TEST_CASE("exact rank") {
    CHECK(exact_rank(Mat(3, 4)) == 0);
    CHECK(exact_rank(Mat::identity(4)) == 4);
    CHECK(exact_rank(m22(1, 2, 3, 4)) == 2);
    CHECK(exact_rank(m22(1, 2, 2, 4)) == 1);
    const Mat ones = Mat::from_rows({{Rat(1), Rat(1), Rat(1)},
                                     {Rat(1), Rat(1), Rat(1)},
                                     {Rat(1), Rat(1), Rat(1)}});
    CHECK(exact_rank(ones) == 1);
    // Rank must not be fooled by values that cancel only exactly.
    const Mat thin = Mat::from_rows({{rat(1, 3), rat(1, 6)}, {Rat(2), Rat(1)}});
    CHECK(exact_rank(thin) == 1);
}

TEST_CASE("elementwise predicates") {
    CHECK(all_nonnegative(m22(0, 1, 2, 3)));
    CHECK_FALSE(all_nonnegative(m22(0, 1, -1, 3)));
    CHECK(max_abs_entry(m22(1, -5, 2, 3)) == 5);
    CHECK(max_abs_entry(Mat(0, 0)) == 0);
}

TEST_CASE("matrix-vector product and dot") {
    const Mat m = m22(2, 1, 0, 3);
    CHECK(mat_vec(m, {Rat(1), Rat(2)}) == Vec{Rat(4), Rat(6)});
    CHECK(dot({Rat(1), Rat(2), Rat(3)}, {Rat(4), Rat(5), Rat(6)}) == 32);
}

TEST_CASE("linear solve") {
    const Mat a = m22(2, 1, 1, 3);
    const auto x = solve_linear(a, {Rat(3), Rat(5)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == rat(4, 5));
    CHECK((*x)[1] == rat(7, 5));
    CHECK(mat_vec(a, *x) == Vec{Rat(3), Rat(5)});

    CHECK_FALSE(solve_linear(m22(1, 2, 2, 4), {Rat(1), Rat(1)}).has_value());
}

TEST_CASE("determinant") {
    CHECK(determinant(m22(1, 2, 3, 4)) == -2);
    CHECK(determinant(Mat::identity(3)) == 1);
    const Mat m = Mat::from_rows({{Rat(2), Rat(0), Rat(1)},
                                  {Rat(1), Rat(1), Rat(0)},
                                  {Rat(0), Rat(3), Rat(1)}});
    CHECK(determinant(m) == 5);
    CHECK(determinant(m22(1, 2, 2, 4)) == 0);
}

} // TEST_SUITE
