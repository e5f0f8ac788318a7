#include "slackfc/factor.hpp"

#include "slackfc/errors.hpp"
#include "slackfc/simplex.hpp"

#include <algorithm>

namespace sfc {

bool verify_lp_factorization(const Mat& M, const LPFactorization& F) {
    if (F.T.rows() != M.rows() || F.U.cols() != M.cols() || F.T.cols() != F.U.rows() ||
        static_cast<int>(F.mu.size()) != M.rows())
        throw ShapeError("factorization dimensions do not match the matrix");
    if (!all_nonnegative(F.T) || !all_nonnegative(F.U)) return false;
    for (const Rat& m : F.mu)
        if (m < 0) return false;
    const Mat P = F.T * F.U;
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (P.at(i, j) + F.mu[i] != M.at(i, j)) return false;
    return true;
}

bool verify_lp_factorization(const SlackMatrix& M, const LPFactorization& F) {
    return verify_lp_factorization(M.entries, F);
}

void require_psd(const Mat& A, const std::string& what) {
    const int n = A.rows();
    if (A.cols() != n) throw ShapeError(what + ": psd check needs a square matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (A.at(i, j) != A.at(j, i))
                throw NotPsdError(what + ": matrix is not symmetric");
    Mat W = A;
    std::vector<bool> done(n, false);
    for (;;) {
        int pivot = -1;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (W.at(i, i) < 0)
                throw NotPsdError(what + ": negative diagonal value " + rat_str(W.at(i, i)));
            if (W.at(i, i) > 0 && (pivot < 0 || W.at(i, i) > W.at(pivot, pivot)))
                pivot = i;
        }
        if (pivot < 0) {
            // Remaining block has an all-zero diagonal; any off-diagonal mass
            // would give a negative 2x2 minor.
            for (int i = 0; i < n; ++i) {
                if (done[i]) continue;
                for (int j = 0; j < n; ++j)
                    if (!done[j] && W.at(i, j) != 0)
                        throw NotPsdError(what + ": zero diagonal with nonzero row");
            }
            return;
        }
        const Rat d = W.at(pivot, pivot);
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == pivot || W.at(i, pivot) == 0) continue;
            const Rat factor = W.at(i, pivot) / d;
            for (int j = 0; j < n; ++j)
                if (!done[j]) W.at(i, j) -= factor * W.at(pivot, j);
        }
        for (int j = 0; j < n; ++j)
            if (!done[j]) {
                W.at(pivot, j) = 0;
                W.at(j, pivot) = 0;
            }
        done[pivot] = true;
    }
}

namespace {

Rat trace_product(const Mat& X, const Mat& Y) {
    Rat t = 0;
    for (int a = 0; a < X.rows(); ++a)
        for (int b = 0; b < X.cols(); ++b)
            if (X.at(a, b) != 0) t += X.at(a, b) * Y.at(b, a);
    return t;
}

} // namespace

bool verify_sdp_factorization(const Mat& M, const SDPFactorization& F) {
    if (static_cast<int>(F.Ts.size()) != M.rows() ||
        static_cast<int>(F.Us.size()) != M.cols() ||
        static_cast<int>(F.mu.size()) != M.rows())
        throw ShapeError("sdp factorization dimensions do not match the matrix");
    const int d = F.size();
    for (const Mat& t : F.Ts)
        if (t.rows() != d || t.cols() != d)
            throw ShapeError("sdp factors must share one dimension");
    for (const Mat& u : F.Us)
        if (u.rows() != d || u.cols() != d)
            throw ShapeError("sdp factors must share one dimension");
    for (size_t i = 0; i < F.Ts.size(); ++i)
        require_psd(F.Ts[i], "row factor " + std::to_string(i));
    for (size_t j = 0; j < F.Us.size(); ++j)
        require_psd(F.Us[j], "column factor " + std::to_string(j));
    for (const Rat& m : F.mu)
        if (m < 0) return false;
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (trace_product(F.Ts[i], F.Us[j]) + F.mu[i] != M.at(i, j)) return false;
    return true;
}

bool verify_sdp_factorization(const SlackMatrix& M, const SDPFactorization& F) {
    return verify_sdp_factorization(M.entries, F);
}

SDPFactorization diagonal_embedding(const LPFactorization& F) {
    const int r = F.size();
    SDPFactorization S;
    S.mu = F.mu;
    S.Ts.reserve(F.T.rows());
    for (int i = 0; i < F.T.rows(); ++i) {
        Mat D(r, r);
        for (int j = 0; j < r; ++j) D.at(j, j) = F.T.at(i, j);
        S.Ts.push_back(std::move(D));
    }
    S.Us.reserve(F.U.cols());
    for (int s = 0; s < F.U.cols(); ++s) {
        Mat D(r, r);
        for (int j = 0; j < r; ++j) D.at(j, j) = F.U.at(j, s);
        S.Us.push_back(std::move(D));
    }
    return S;
}

Rat affine_eval(const AffineFunc& phi, const Vec& x) {
    if (phi.lin.size() != x.size())
        throw ShapeError("affine function arity does not match the point");
    Rat v = phi.c0;
    for (size_t i = 0; i < x.size(); ++i) v += phi.lin[i] * x[i];
    return v;
}

namespace {

void check_formulation_shapes(const ProblemSpec& p, const Guarantees& g,
                              const LPFormulation& L) {
    const std::vector<int> sound = sound_instances(p, g);
    if (L.row_instances != sound)
        throw ShapeError("formulation rows must list the sound instances in order");
    if (static_cast<int>(L.b.size()) != L.A.rows())
        throw ShapeError("right-hand side length does not match the inequality count");
    if (static_cast<int>(L.points.size()) != p.num_solutions())
        throw ShapeError("formulation needs one point per solution");
    for (const Vec& x : L.points)
        if (static_cast<int>(x.size()) != L.A.cols())
            throw ShapeError("point dimension does not match the inequality system");
    if (L.funcs.size() != L.row_instances.size())
        throw ShapeError("formulation needs one objective per sound instance");
    for (const AffineFunc& f : L.funcs)
        if (static_cast<int>(f.lin.size()) != L.A.cols())
            throw ShapeError("objective dimension does not match the inequality system");
}

// Exact optimum of phi over Ax <= b in the problem's sense; throws when the
// polyhedron is empty or the optimum escapes past the guarantee.
void check_objective_bound(const ProblemSpec& p, const Mat& A, const Vec& b,
                           const AffineFunc& phi, const Rat& bound,
                           const std::string& label) {
    Vec cost = phi.lin;
    if (p.sense == Sense::Minimize)
        for (Rat& c : cost) c = -c;
    const LpResult res = solve_lp_max(A, b, cost);
    if (res.status == LpStatus::Infeasible)
        throw EmptyPolyhedronError("formulation polyhedron is empty");
    if (res.status == LpStatus::Unbounded)
        throw FormulationInvalidError("objective-bound: unbounded objective for instance " +
                                      label);
    const Rat opt =
        p.sense == Sense::Maximize ? Rat(phi.c0 + res.value) : Rat(phi.c0 - res.value);
    const bool ok = p.sense == Sense::Maximize ? opt <= bound : opt >= bound;
    if (!ok)
        throw FormulationInvalidError("objective-bound: optimum " + rat_str(opt) +
                                      " escapes guarantee " + rat_str(bound) +
                                      " for instance " + label);
}

} // namespace

void verify_formulation(const ProblemSpec& p, const Guarantees& g, const LPFormulation& L) {
    check_formulation_shapes(p, g, L);
    for (int s = 0; s < p.num_solutions(); ++s) {
        const Vec lhs = mat_vec(L.A, L.points[s]);
        for (int j = 0; j < L.A.rows(); ++j)
            if (lhs[j] > L.b[j])
                throw FormulationInvalidError("containment: inequality " + std::to_string(j) +
                                              " fails at solution " + p.solutions[s]);
    }
    for (size_t r = 0; r < L.funcs.size(); ++r) {
        const int f = L.row_instances[r];
        for (int s = 0; s < p.num_solutions(); ++s)
            if (affine_eval(L.funcs[r], L.points[s]) != p.value.at(f, s))
                throw FormulationInvalidError("linearization: instance " + p.instances[f] +
                                              " at solution " + p.solutions[s]);
    }
    for (size_t r = 0; r < L.funcs.size(); ++r)
        check_objective_bound(p, L.A, L.b, L.funcs[r], g.C[L.row_instances[r]],
                              p.instances[L.row_instances[r]]);
}

FarkasCertificate farkas_certificate(const Mat& A, const Vec& b, const AffineFunc& phi) {
    if (static_cast<int>(b.size()) != A.rows() ||
        static_cast<int>(phi.lin.size()) != A.cols())
        throw ShapeError("multiplier extraction needs matching dimensions");
    const int q = A.rows(), d = A.cols();

    Vec neg = phi.lin;
    for (Rat& c : neg) c = -c;
    const LpResult res = solve_lp_max(A, b, neg);
    if (res.status == LpStatus::Infeasible)
        throw EmptyPolyhedronError("no point satisfies the inequality system");
    if (res.status == LpStatus::Unbounded) {
        // Walk along the improving ray until phi turns negative.
        Rat drop = 0;
        for (int i = 0; i < d; ++i) drop += phi.lin[i] * res.ray[i];
        Vec witness = res.x;
        const Rat here = affine_eval(phi, witness);
        const Rat t = (here + 1) / -drop;
        for (int i = 0; i < d; ++i) witness[i] += t * res.ray[i];
        throw NotNonnegativeError("function reaches " + rat_str(affine_eval(phi, witness)) +
                                  " inside the polyhedron");
    }
    const Rat minimum = phi.c0 - res.value;
    if (minimum < 0)
        throw NotNonnegativeError("function reaches " + rat_str(minimum) +
                                  " inside the polyhedron");

    // Coefficient matching: -A^T lambda = lin and lambda0 + b^T lambda = c0,
    // solved as an equality system over nonnegative (lambda0, lambda).
    Mat E(d + 1, q + 1);
    Vec rhs(d + 1);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < q; ++j) E.at(i, j + 1) = -A.at(j, i);
        rhs[i] = phi.lin[i];
    }
    E.at(d, 0) = 1;
    for (int j = 0; j < q; ++j) E.at(d, j + 1) = b[j];
    rhs[d] = phi.c0;
    const auto y = solve_eq_nonneg(E, rhs);
    if (!y)
        throw InternalConsistencyError("no nonnegative multipliers despite nonnegativity");

    FarkasCertificate cert;
    cert.lambda0 = (*y)[0];
    cert.lambda.assign(y->begin() + 1, y->end());
    for (int i = 0; i < d; ++i) {
        Rat coeff = 0;
        for (int j = 0; j < q; ++j) coeff -= A.at(j, i) * cert.lambda[j];
        if (coeff != phi.lin[i])
            throw InternalConsistencyError("multiplier identity fails on a coefficient");
    }
    Rat c0 = cert.lambda0;
    for (int j = 0; j < q; ++j) c0 += b[j] * cert.lambda[j];
    if (c0 != phi.c0)
        throw InternalConsistencyError("multiplier identity fails on the constant");
    return cert;
}

LPFactorization factorization_from_formulation(const ProblemSpec& p, const Guarantees& g,
                                               const LPFormulation& L) {
    verify_formulation(p, g, L);
    const int q = L.A.rows();
    const int m = static_cast<int>(L.row_instances.size());

    LPFactorization F;
    F.U = Mat(q, p.num_solutions());
    for (int s = 0; s < p.num_solutions(); ++s) {
        const Vec lhs = mat_vec(L.A, L.points[s]);
        for (int j = 0; j < q; ++j) F.U.at(j, s) = L.b[j] - lhs[j];
    }
    F.T = Mat(m, q);
    F.mu.assign(m, Rat(0));
    for (int r = 0; r < m; ++r) {
        const AffineFunc& w = L.funcs[r];
        AffineFunc gap;
        gap.lin.resize(w.lin.size());
        if (p.sense == Sense::Maximize) {
            gap.c0 = g.C[L.row_instances[r]] - w.c0;
            for (size_t i = 0; i < w.lin.size(); ++i) gap.lin[i] = -w.lin[i];
        } else {
            gap.c0 = w.c0 - g.C[L.row_instances[r]];
            gap.lin = w.lin;
        }
        const FarkasCertificate cert = farkas_certificate(L.A, L.b, gap);
        for (int j = 0; j < q; ++j) F.T.at(r, j) = cert.lambda[j];
        F.mu[r] = cert.lambda0;
    }

    const SlackMatrix sm = build_slack(p, g);
    if (!verify_lp_factorization(sm.entries, F))
        throw InternalConsistencyError("extracted factorization misses the slack matrix");
    return F;
}

LPFormulation formulation_from_factorization(const ProblemSpec& p, const Guarantees& g,
                                             const LPFactorization& F) {
    const SlackMatrix sm = build_slack(p, g);
    if (!verify_lp_factorization(sm.entries, F))
        throw FactorizationInvalidError("factorization does not reproduce the slack matrix");
    const int r = F.size();

    LPFormulation L;
    L.row_instances = sm.row_instances;
    L.A = Mat(r, r);
    for (int j = 0; j < r; ++j) L.A.at(j, j) = -1;
    L.b.assign(r, Rat(0));
    L.points.reserve(p.num_solutions());
    for (int s = 0; s < p.num_solutions(); ++s) L.points.push_back(col_of(F.U, s));
    L.funcs.reserve(sm.row_instances.size());
    for (size_t row = 0; row < sm.row_instances.size(); ++row) {
        const int f = sm.row_instances[row];
        AffineFunc w;
        w.lin.resize(r);
        if (p.sense == Sense::Maximize) {
            w.c0 = g.C[f] - F.mu[row];
            for (int j = 0; j < r; ++j) w.lin[j] = -F.T.at(static_cast<int>(row), j);
        } else {
            w.c0 = g.C[f] + F.mu[row];
            for (int j = 0; j < r; ++j) w.lin[j] = F.T.at(static_cast<int>(row), j);
        }
        L.funcs.push_back(std::move(w));
    }
    verify_formulation(p, g, L);

    // Over x >= 0 the optimum of every objective sits at the origin.
    for (size_t row = 0; row < L.funcs.size(); ++row) {
        Vec cost = L.funcs[row].lin;
        if (p.sense == Sense::Minimize)
            for (Rat& c : cost) c = -c;
        const LpResult res = solve_lp_max(L.A, L.b, cost);
        if (res.status != LpStatus::Optimal || res.value != 0)
            throw InternalConsistencyError("objective optimum moved away from the origin");
    }
    return L;
}

std::pair<std::vector<int>, std::vector<int>> solution_partition(const LPFactorization& F) {
    const int n = F.U.cols(), r = F.U.rows();
    std::vector<int> minimal, dominated;
    for (int s = 0; s < n; ++s) {
        bool out = false;
        for (int o = 0; o < n && !out; ++o) {
            if (o == s) continue;
            bool leq = true, eq = true;
            for (int j = 0; j < r && leq; ++j) {
                if (F.U.at(j, o) > F.U.at(j, s)) leq = false;
                if (F.U.at(j, o) != F.U.at(j, s)) eq = false;
            }
            if (leq && (!eq || o < s)) out = true;
        }
        (out ? dominated : minimal).push_back(s);
    }
    return {minimal, dominated};
}

} // namespace sfc
