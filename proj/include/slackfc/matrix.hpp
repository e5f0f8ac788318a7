#pragma once
// Dense matrices and vectors over exact rationals, plus the small amount of
// linear algebra the rest of the library needs: products, transposes,
// Gaussian rank, linear solves and elementwise checks. Indices are 0-based.

#include "slackfc/rational.hpp"

#include <optional>
#include <vector>

namespace sfc {

using Vec = std::vector<Rat>;

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j);
    const Rat& at(int i, int j) const;

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows);

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

bool operator==(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Mat& x, const Mat& y);

Mat transpose(const Mat& m);
Vec row_of(const Mat& m, int i);
Vec col_of(const Mat& m, int j);
Mat outer(const Vec& col, const Vec& row);

// Rank over the rationals by Gaussian elimination, exact.
int exact_rank(const Mat& m);

bool all_nonnegative(const Mat& m);
bool is_zero(const Mat& m);
// Largest absolute value of any entry (0 for an empty matrix).
Rat max_abs_entry(const Mat& m);

Vec mat_vec(const Mat& m, const Vec& v);
Rat dot(const Vec& x, const Vec& y);

// Solve A x = rhs for square A; nullopt when A is singular.
std::optional<Vec> solve_linear(Mat A, Vec rhs);

// Determinant of a square matrix, exact.
Rat determinant(Mat A);

} // namespace sfc
