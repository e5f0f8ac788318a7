#include "slackfc/matrix.hpp"

#include "slackfc/errors.hpp"

#include <utility>

namespace sfc {

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw ShapeError("matrix dimensions must be nonnegative");
    a_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

Rat& Mat::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw ShapeError("matrix index out of range");
    return a_[static_cast<size_t>(i) * cols_ + j];
}

const Rat& Mat::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw ShapeError("matrix index out of range");
    return a_[static_cast<size_t>(i) * cols_ + j];
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw ShapeError("ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool operator==(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (x.at(i, j) != y.at(i, j)) return false;
    return true;
}

Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw ShapeError("matrix sum shape mismatch");
    Mat z(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) z.at(i, j) = x.at(i, j) + y.at(i, j);
    return z;
}

Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw ShapeError("matrix difference shape mismatch");
    Mat z(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) z.at(i, j) = x.at(i, j) - y.at(i, j);
    return z;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols() != y.rows())
        throw ShapeError("matrix product shape mismatch");
    Mat z(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) {
            const Rat& xik = x.at(i, k);
            if (xik == 0) continue;  // products against sparse factors stay cheap
            for (int j = 0; j < y.cols(); ++j) {
                if (y.at(k, j) == 0) continue;
                z.at(i, j) += xik * y.at(k, j);
            }
        }
    return z;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Vec row_of(const Mat& m, int i) {
    Vec v(m.cols());
    for (int j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
    return v;
}

Vec col_of(const Mat& m, int j) {
    Vec v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
    return v;
}

Mat outer(const Vec& col, const Vec& row) {
    Mat m(static_cast<int>(col.size()), static_cast<int>(row.size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (col[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = col[i] * row[j];
    }
    return m;
}

int exact_rank(const Mat& m) {
    Mat w = m;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < w.cols() && row < w.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < w.rows(); ++i)
            if (w.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = col; j < w.cols(); ++j) std::swap(w.at(pivot, j), w.at(row, j));
        for (int i = row + 1; i < w.rows(); ++i) {
            if (w.at(i, col) == 0) continue;
            const Rat factor = w.at(i, col) / w.at(row, col);
            for (int j = col; j < w.cols(); ++j) w.at(i, j) -= factor * w.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

bool all_nonnegative(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) < 0) return false;
    return true;
}

bool is_zero(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

Rat max_abs_entry(const Mat& m) {
    Rat best = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = rat_abs(m.at(i, j));
            if (v > best) best = v;
        }
    return best;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw ShapeError("matrix-vector shape mismatch");
    Vec out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Rat acc = 0;
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0 && v[j] != 0) acc += m.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Rat dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw ShapeError("dot product shape mismatch");
    Rat acc = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && y[i] != 0) acc += x[i] * y[i];
    return acc;
}

std::optional<Vec> solve_linear(Mat A, Vec rhs) {
    const int n = A.rows();
    if (A.cols() != n || static_cast<int>(rhs.size()) != n)
        throw ShapeError("solve_linear needs a square system");
    // Gauss-Jordan with first-nonzero pivoting.
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (A.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
            std::swap(rhs[pivot], rhs[col]);
        }
        const Rat inv = 1 / A.at(col, col);
        for (int j = 0; j < n; ++j) A.at(col, j) *= inv;
        rhs[col] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || A.at(i, col) == 0) continue;
            const Rat factor = A.at(i, col);
            for (int j = 0; j < n; ++j) A.at(i, j) -= factor * A.at(col, j);
            rhs[i] -= factor * rhs[col];
        }
    }
    return rhs;
}

Rat determinant(Mat A) {
    const int n = A.rows();
    if (A.cols() != n) throw ShapeError("determinant needs a square matrix");
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (A.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
            det = -det;
        }
        det *= A.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (A.at(i, col) == 0) continue;
            const Rat factor = A.at(i, col) / A.at(col, col);
            for (int j = col; j < n; ++j) A.at(i, j) -= factor * A.at(col, j);
        }
    }
    return det;
}

} // namespace sfc
