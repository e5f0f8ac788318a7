#include "slackfc/simplex.hpp"

#include "slackfc/errors.hpp"

#include <utility>

namespace sfc {

namespace {

// Two-phase simplex on the standard form: maximize c.z with E z = d, z >= 0.
// Artificial variables are added for every row, which keeps the start basis
// trivial. Bland's rule (lowest eligible index, ties by lowest basic index)
// rules out cycling, so termination is unconditional.
struct StdSimplex {
    int q;                        // constraint rows (shrinks if redundant rows drop)
    int nv;                       // structural variables
    std::vector<Vec> tab;         // q rows of nv + q + 1 entries (vars, artificials, rhs)
    std::vector<int> basis;       // basis[i] = column basic in row i
    int ncols;                    // active columns excluding rhs

    StdSimplex(const Mat& E, const Vec& d) {
        q = E.rows();
        nv = E.cols();
        ncols = nv + q;
        tab.assign(q, Vec(ncols + 1));
        basis.resize(q);
        for (int i = 0; i < q; ++i) {
            const bool flip = d[i] < 0;
            for (int j = 0; j < nv; ++j)
                tab[i][j] = flip ? Rat(-E.at(i, j)) : E.at(i, j);
            tab[i][nv + i] = 1;
            tab[i][ncols] = flip ? Rat(-d[i]) : d[i];
            basis[i] = nv + i;
        }
    }

    void pivot(int row, int col) {
        const Rat inv = 1 / tab[row][col];
        for (int j = 0; j <= ncols; ++j) tab[row][j] *= inv;
        for (int i = 0; i < q; ++i) {
            if (i == row || tab[i][col] == 0) continue;
            const Rat f = tab[i][col];
            for (int j = 0; j <= ncols; ++j) tab[i][j] -= f * tab[row][j];
        }
        basis[row] = col;
    }

    // Reduced costs r = cost - cost_B . tab for the active columns.
    Vec reduced(const Vec& cost) const {
        Vec r(ncols);
        for (int j = 0; j < ncols; ++j) r[j] = cost[j];
        for (int i = 0; i < q; ++i) {
            const Rat& cb = cost[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j < ncols; ++j)
                if (tab[i][j] != 0) r[j] -= cb * tab[i][j];
        }
        return r;
    }

    // Runs pivots until optimal or unbounded. allowed(j) masks columns that
    // may enter. Returns the entering column on unboundedness, -1 on optimal.
    template <typename Allowed>
    int optimize(const Vec& cost, Allowed allowed) {
        for (;;) {
            const Vec r = reduced(cost);
            int enter = -1;
            for (int j = 0; j < ncols; ++j)
                if (allowed(j) && r[j] > 0) { enter = j; break; }
            if (enter < 0) return -1;
            int leave = -1;
            Rat best;
            for (int i = 0; i < q; ++i) {
                if (tab[i][enter] <= 0) continue;
                const Rat ratio = tab[i][ncols] / tab[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return enter;
            pivot(leave, enter);
        }
    }

    Rat objective(const Vec& cost) const {
        Rat v = 0;
        for (int i = 0; i < q; ++i)
            if (cost[basis[i]] != 0) v += cost[basis[i]] * tab[i][ncols];
        return v;
    }

    Vec extract() const {
        Vec z(nv);
        for (int i = 0; i < q; ++i)
            if (basis[i] < nv) z[basis[i]] = tab[i][ncols];
        return z;
    }

    // Phase one: returns false when E z = d has no nonnegative solution.
    bool phase_one() {
        Vec cost(ncols);
        for (int j = nv; j < ncols; ++j) cost[j] = -1;
        const int res = optimize(cost, [](int) { return true; });
        if (res >= 0)
            throw InternalConsistencyError("phase-one objective cannot be unbounded");
        if (objective(cost) != 0) return false;
        // Drive leftover artificials out of the basis; an all-zero row is a
        // redundant constraint and gets dropped.
        for (int i = q - 1; i >= 0; --i) {
            if (basis[i] < nv) continue;
            int col = -1;
            for (int j = 0; j < nv; ++j)
                if (tab[i][j] != 0) { col = j; break; }
            if (col >= 0) {
                pivot(i, col);
            } else {
                tab.erase(tab.begin() + i);
                basis.erase(basis.begin() + i);
                --q;
            }
        }
        return true;
    }
};

} // namespace

std::optional<Vec> solve_eq_nonneg(const Mat& E, const Vec& d) {
    if (E.rows() != static_cast<int>(d.size()))
        throw ShapeError("equality system shape mismatch");
    StdSimplex s(E, d);
    if (!s.phase_one()) return std::nullopt;
    return s.extract();
}

LpResult solve_lp_max(const Mat& A, const Vec& b, const Vec& c) {
    const int qrows = A.rows();
    const int d = A.cols();
    if (static_cast<int>(b.size()) != qrows || static_cast<int>(c.size()) != d)
        throw ShapeError("lp shape mismatch");

    // Split the free variable, x = xp - xn, and add one slack per row.
    const int nv = 2 * d + qrows;
    Mat E(qrows, nv);
    for (int i = 0; i < qrows; ++i) {
        for (int j = 0; j < d; ++j) {
            E.at(i, j) = A.at(i, j);
            E.at(i, d + j) = -A.at(i, j);
        }
        E.at(i, 2 * d + i) = 1;
    }
    StdSimplex s(E, b);
    LpResult out;
    if (!s.phase_one()) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    Vec cost(s.ncols);
    for (int j = 0; j < d; ++j) {
        cost[j] = c[j];
        cost[d + j] = -c[j];
    }
    const int nvars = s.nv;
    const int unb = s.optimize(cost, [nvars](int j) { return j < nvars; });
    const Vec z = s.extract();
    Vec x(d);
    for (int j = 0; j < d; ++j) x[j] = z[j] - z[d + j];
    if (unb >= 0) {
        out.status = LpStatus::Unbounded;
        out.x = x;
        // Direction: entering column moves up, basics compensate.
        Vec zray(s.nv);
        zray[unb] = 1;
        for (int i = 0; i < s.q; ++i)
            if (s.basis[i] < s.nv) zray[s.basis[i]] = -s.tab[i][unb];
        out.ray.assign(d, Rat(0));
        for (int j = 0; j < d; ++j) out.ray[j] = zray[j] - zray[d + j];
        return out;
    }
    out.status = LpStatus::Optimal;
    out.x = x;
    out.value = dot(c, x);
    return out;
}

std::optional<Vec> find_feasible(const Mat& A, const Vec& b) {
    LpResult r = solve_lp_max(A, b, Vec(A.cols(), Rat(0)));
    if (r.status == LpStatus::Infeasible) return std::nullopt;
    return r.x;
}

} // namespace sfc
