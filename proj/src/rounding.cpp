// Bounded-coefficient rank factorization by max-volume row selection, and
// the rounding pipeline that repairs a perturbed slack matrix with rank-one
// corrections while certifying every algebraic identity along the way.

#include "slackfc/rounding.hpp"

#include "slackfc/errors.hpp"
#include "slackfc/slack.hpp"

#include <algorithm>

namespace sfc {

namespace {

// Determinant of the Gram matrix of the selected rows; squared r-volume.
Rat gram_det(const Mat& m, const std::vector<int>& rows) {
    const int r = static_cast<int>(rows.size());
    Mat g(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            g.at(i, j) = dot(row_of(m, rows[static_cast<size_t>(i)]),
                             row_of(m, rows[static_cast<size_t>(j)]));
    return determinant(g);
}

void best_subset_rec(const Mat& m, int r, int next, std::vector<int>& cur,
                     std::vector<int>& best, Rat& best_det) {
    if (static_cast<int>(cur.size()) == r) {
        const Rat d = gram_det(m, cur);
        if (d > best_det) {
            best_det = d;
            best = cur;
        }
        return;
    }
    const int need = r - static_cast<int>(cur.size());
    for (int i = next; i + need <= m.rows(); ++i) {
        cur.push_back(i);
        best_subset_rec(m, r, i + 1, cur, best, best_det);
        cur.pop_back();
    }
}

std::vector<int> max_volume_rows(const Mat& m, int r) {
    if (m.rows() <= 12) {
        std::vector<int> best, cur;
        Rat best_det(-1);
        best_subset_rec(m, r, 0, cur, best, best_det);
        return best;
    }
    // Greedy extension, then single swaps until no exchange grows the volume.
    // A swap-maximal subset already bounds every coefficient by one.
    std::vector<int> rows;
    std::vector<bool> used(static_cast<size_t>(m.rows()), false);
    for (int step = 0; step < r; ++step) {
        int pick = -1;
        Rat pick_det(-1);
        for (int i = 0; i < m.rows(); ++i) {
            if (used[static_cast<size_t>(i)]) continue;
            rows.push_back(i);
            const Rat d = gram_det(m, rows);
            rows.pop_back();
            if (d > pick_det) {
                pick_det = d;
                pick = i;
            }
        }
        rows.push_back(pick);
        used[static_cast<size_t>(pick)] = true;
    }
    Rat cur_det = gram_det(m, rows);
    for (bool improved = true; improved;) {
        improved = false;
        for (size_t slot = 0; slot < rows.size() && !improved; ++slot)
            for (int i = 0; i < m.rows() && !improved; ++i) {
                if (used[static_cast<size_t>(i)]) continue;
                const int old = rows[slot];
                rows[slot] = i;
                const Rat d = gram_det(m, rows);
                if (d > cur_det) {
                    cur_det = d;
                    used[static_cast<size_t>(old)] = false;
                    used[static_cast<size_t>(i)] = true;
                    improved = true;
                } else {
                    rows[slot] = old;
                }
            }
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

} // namespace

BoundedRankFactorization bounded_factorization(const Mat& m) {
    BoundedRankFactorization out;
    out.target_norm = max_abs_entry(m);
    if (is_zero(m)) return out;
    const int r = exact_rank(m);
    const std::vector<int> basis = max_volume_rows(m, r);

    Mat gram(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            gram.at(i, j) = dot(row_of(m, basis[static_cast<size_t>(i)]),
                                row_of(m, basis[static_cast<size_t>(j)]));
    // Coefficients of every row in the basis rows, via the Gram system.
    Mat coef(m.rows(), r);
    for (int k = 0; k < m.rows(); ++k) {
        Vec rhs(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j)
            rhs[static_cast<size_t>(j)] = dot(row_of(m, basis[static_cast<size_t>(j)]),
                                              row_of(m, k));
        const auto sol = solve_linear(gram, rhs);
        if (!sol) throw InternalConsistencyError("selected rows are not a basis");
        for (int j = 0; j < r; ++j) coef.at(k, j) = (*sol)[static_cast<size_t>(j)];
    }
    for (int j = 0; j < r; ++j) {
        BoundedTerm t;
        t.a = col_of(coef, j);
        t.b = row_of(m, basis[static_cast<size_t>(j)]);
        out.terms.push_back(std::move(t));
    }

    Mat rebuilt(m.rows(), m.cols());
    for (const BoundedTerm& t : out.terms) rebuilt = rebuilt + outer(t.a, t.b);
    if (!(rebuilt == m))
        throw InternalConsistencyError("rank-one terms do not rebuild the matrix");
    for (const BoundedTerm& t : out.terms) {
        for (const Rat& v : t.a)
            if (rat_abs(v) > 1)
                throw InternalConsistencyError("row basis is not volume-maximal");
        for (const Rat& v : t.b)
            if (rat_abs(v) > out.target_norm)
                throw InternalConsistencyError("term row escapes the matrix norm");
    }
    return out;
}

RoundingResult round_to_problem(const ProblemSpec& p, const Guarantees& g,
                                const Mat& mtilde,
                                const std::optional<LPFactorization>& ftilde) {
    const SlackMatrix sm = build_slack(p, g);
    const Mat& M = sm.entries;
    if (mtilde.rows() != M.rows() || mtilde.cols() != M.cols())
        throw ShapeError("perturbed matrix is " + std::to_string(mtilde.rows()) + "x" +
                         std::to_string(mtilde.cols()) + ", slack matrix is " +
                         std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
    if (!all_nonnegative(mtilde))
        throw NotNonnegativeError("perturbed matrix has a negative entry");

    const Mat E = mtilde - M;
    RoundingResult out;
    out.eps = max_abs_entry(E);
    const BoundedRankFactorization bf = bounded_factorization(E);
    out.k = static_cast<int>(bf.terms.size());

    const Vec b_row(static_cast<size_t>(M.cols()), out.eps);
    Mat n1 = mtilde;
    Mat n2 = M;
    for (const BoundedTerm& t : bf.terms) {
        Vec a_plus(t.a.size()), a_minus(t.a.size()), a_abs(t.a.size());
        for (size_t i = 0; i < t.a.size(); ++i) {
            a_plus[i] = t.a[i] > 0 ? t.a[i] : Rat(0);
            a_minus[i] = t.a[i] < 0 ? Rat(-t.a[i]) : Rat(0);
            a_abs[i] = a_plus[i] + a_minus[i];
            if (a_plus[i] * a_minus[i] != 0)
                throw InternalConsistencyError("positive and negative parts overlap");
            if (a_plus[i] - a_minus[i] != t.a[i])
                throw InternalConsistencyError("sign split does not rebuild the column");
        }
        Vec b_minus(b_row.size()), b_plus(b_row.size());
        for (size_t j = 0; j < b_row.size(); ++j) {
            b_minus[j] = b_row[j] - t.b[j];
            b_plus[j] = b_row[j] + t.b[j];
            if (b_minus[j] < 0 || b_plus[j] < 0)
                throw InternalConsistencyError("term row escapes the error norm");
        }
        n1 = n1 + outer(a_plus, b_minus) + outer(a_minus, b_plus);
        n2 = n2 + outer(a_abs, b_row);
    }
    if (!(n1 == n2))
        throw InternalConsistencyError("the two correction formulas disagree");
    if (!all_nonnegative(n1))
        throw InternalConsistencyError("corrected matrix has a negative entry");
    out.N = n1;

    const int rank_sum = exact_rank(M) + exact_rank(mtilde);
    if (out.k > rank_sum)
        throw InternalConsistencyError("error rank exceeds the rank sum");
    const Rat shift = Rat(rank_sum) * out.eps;
    out.cprime.resize(static_cast<size_t>(M.rows()));
    for (size_t r = 0; r < out.cprime.size(); ++r) {
        const Rat c = g.C[static_cast<size_t>(sm.row_instances[r])];
        out.cprime[r] = p.sense == Sense::Maximize ? Rat(c + shift) : Rat(c - shift);
        const Rat opt = brute_force_optimum(p, sm.row_instances[r]);
        const bool absorbed =
            p.sense == Sense::Maximize ? opt <= out.cprime[r] : opt >= out.cprime[r];
        if (!absorbed)
            throw InternalConsistencyError("adjusted guarantee misses the optimum at row '" +
                                           sm.row_labels[r] + "'");
    }
    // The adjusted-guarantee slack matrix is N plus a nonnegative row shift,
    // so any factorization of N extends to one of that matrix verbatim.
    for (int i = 0; i < M.rows(); ++i) {
        Rat used(0);
        for (const BoundedTerm& t : bf.terms) used += rat_abs(t.a[static_cast<size_t>(i)]);
        const Rat delta = (Rat(rank_sum) - used) * out.eps;
        if (delta < 0)
            throw InternalConsistencyError("row shift turned negative");
        for (int j = 0; j < M.cols(); ++j)
            if (M.at(i, j) + shift != out.N.at(i, j) + delta)
                throw InternalConsistencyError("adjusted slack identity fails at (" +
                                               std::to_string(i) + "," + std::to_string(j) +
                                               ")");
    }

    out.size_bound = (ftilde ? ftilde->size() : 0) + 2 * out.k;
    if (ftilde) {
        if (!verify_lp_factorization(mtilde, *ftilde))
            throw FactorizationInvalidError(
                "supplied factorization does not reproduce the perturbed matrix");
        const int d = ftilde->size();
        LPFactorization cert;
        cert.T = Mat(M.rows(), d + 2 * out.k);
        cert.U = Mat(d + 2 * out.k, M.cols());
        cert.mu = ftilde->mu;
        for (int i = 0; i < M.rows(); ++i)
            for (int t = 0; t < d; ++t) cert.T.at(i, t) = ftilde->T.at(i, t);
        for (int t = 0; t < d; ++t)
            for (int j = 0; j < M.cols(); ++j) cert.U.at(t, j) = ftilde->U.at(t, j);
        for (int q = 0; q < out.k; ++q) {
            const BoundedTerm& t = bf.terms[static_cast<size_t>(q)];
            for (int i = 0; i < M.rows(); ++i) {
                const Rat& v = t.a[static_cast<size_t>(i)];
                cert.T.at(i, d + 2 * q) = v > 0 ? v : Rat(0);
                cert.T.at(i, d + 2 * q + 1) = v < 0 ? Rat(-v) : Rat(0);
            }
            for (int j = 0; j < M.cols(); ++j) {
                cert.U.at(d + 2 * q, j) = out.eps - t.b[static_cast<size_t>(j)];
                cert.U.at(d + 2 * q + 1, j) = out.eps + t.b[static_cast<size_t>(j)];
            }
        }
        if (!verify_lp_factorization(out.N, cert))
            throw InternalConsistencyError("extended factorization misses the corrected matrix");
        out.certificate = std::move(cert);
    }
    return out;
}

} // namespace sfc
