#include "slackfc/rank.hpp"

#include "slackfc/errors.hpp"
#include "slackfc/simplex.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <set>

namespace sfc {

RankBudget RankBudget::from_env() {
    RankBudget b;
    if (const char* s = std::getenv("SLACKFC_RANK_BUDGET")) {
        const long k = std::max(1L, std::atol(s));
        b.cover_nodes *= k;
        b.shift_patterns = static_cast<int>(std::min<long>(b.shift_patterns * k, 1 << 20));
        b.covers_per_rank = static_cast<int>(std::min<long>(b.covers_per_rank * k, 100000));
        b.alt_iters = static_cast<int>(std::min<long>(b.alt_iters * k, 1000));
        b.alt_restarts = static_cast<int>(std::min<long>(b.alt_restarts * k, 64));
        b.alt_lp_cap *= k;
    }
    return b;
}

namespace {

struct NonnegFact {
    Mat T{0, 0};
    Mat U{0, 0};
    int size() const { return T.cols(); }
};

// Support bookkeeping for one matrix: entry ids packed into a 64-bit mask.
struct Support {
    int m = 0, n = 0;
    std::vector<std::pair<int, int>> entries;
    std::vector<std::vector<int>> id_at;  // -1 when zero

    explicit Support(const Mat& X) : m(X.rows()), n(X.cols()) {
        id_at.assign(m, std::vector<int>(n, -1));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (X.at(i, j) != 0) {
                    id_at[i][j] = static_cast<int>(entries.size());
                    entries.push_back({i, j});
                }
    }
    bool has(int i, int j) const { return id_at[i][j] >= 0; }
    size_t count() const { return entries.size(); }
};

struct Rect {
    std::vector<int> rows, cols;
    uint64_t mask = 0;
};

// All maximal combinatorial rectangles inside the support, enumerated over
// subsets of the thinner dimension. Empty when the enumeration is too big.
std::vector<Rect> maximal_rectangles(const Support& sup) {
    std::vector<Rect> out;
    if (sup.count() == 0 || sup.count() > 64) return out;
    const bool by_cols = sup.n <= sup.m;
    const int small = by_cols ? sup.n : sup.m;
    if (small > 16) return out;

    std::map<uint64_t, Rect> seen;
    for (uint64_t pick = 1; pick < (uint64_t(1) << small); ++pick) {
        std::vector<int> chosen;
        for (int t = 0; t < small; ++t)
            if (pick >> t & 1) chosen.push_back(t);
        std::vector<int> other;
        const int big = by_cols ? sup.m : sup.n;
        for (int o = 0; o < big; ++o) {
            bool all = true;
            for (int t : chosen) {
                const bool in = by_cols ? sup.has(o, t) : sup.has(t, o);
                if (!in) {
                    all = false;
                    break;
                }
            }
            if (all) other.push_back(o);
        }
        if (other.empty()) continue;
        Rect r;
        r.rows = by_cols ? other : chosen;
        r.cols = by_cols ? chosen : other;
        for (int i : r.rows)
            for (int j : r.cols) r.mask |= uint64_t(1) << sup.id_at[i][j];
        const uint64_t key = r.mask;
        seen.emplace(key, std::move(r));
    }
    for (auto& [mask, r] : seen) {
        bool dominated = false;
        for (const auto& [m2, r2] : seen)
            if (m2 != mask && (mask & m2) == mask) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(r);
    }
    return out;
}

// Largest set of support entries no two of which fit in one rectangle.
int fooling_set_size(const Support& sup, long node_cap) {
    const int E = static_cast<int>(sup.count());
    if (E == 0) return 0;
    std::vector<uint64_t> clash(E, 0);
    for (int a = 0; a < E; ++a)
        for (int b = a + 1; b < E; ++b) {
            const auto [i, j] = sup.entries[a];
            const auto [k, l] = sup.entries[b];
            const bool together =
                i == k || j == l || (sup.has(i, l) && sup.has(k, j));
            if (!together) {
                clash[a] |= uint64_t(1) << b;
                clash[b] |= uint64_t(1) << a;
            }
        }
    int best = 1;
    long nodes = 0;
    // Max clique on the clash graph: candidates must clash with all chosen.
    auto dfs = [&](auto&& self, uint64_t cand, int depth) -> void {
        if (++nodes > node_cap) return;
        if (depth + __builtin_popcountll(cand) <= best) return;
        while (cand) {
            const int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            if (depth + 1 + __builtin_popcountll(cand & clash[v]) > best) {
                if (depth + 1 > best) best = depth + 1;
                self(self, cand & clash[v], depth + 1);
            }
        }
    };
    uint64_t all = E == 64 ? ~uint64_t(0) : (uint64_t(1) << E) - 1;
    dfs(dfs, all, 0);
    return best;
}

struct CoverResult {
    int lower = 0;        // certified: never exceeds the true cover number
    int upper = 0;        // size of the best cover found (0 = empty support)
    bool exact = false;   // search finished, lower == upper == cover number
    std::vector<int> best;
    int fooling = 0;
};

CoverResult cover_number(const Support& sup, const std::vector<Rect>& rects,
                         long node_cap) {
    CoverResult res;
    const int E = static_cast<int>(sup.count());
    if (E == 0) {
        res.exact = true;
        return res;
    }
    if (rects.empty()) {
        res.lower = 1;
        res.upper = E;
        return res;
    }
    res.fooling = fooling_set_size(sup, node_cap);

    const uint64_t full = E == 64 ? ~uint64_t(0) : (uint64_t(1) << E) - 1;
    // Greedy cover gives the initial incumbent.
    {
        uint64_t covered = 0;
        while (covered != full) {
            int pick = -1, gain = 0;
            for (size_t r = 0; r < rects.size(); ++r) {
                const int g = __builtin_popcountll(rects[r].mask & ~covered);
                if (g > gain) {
                    gain = g;
                    pick = static_cast<int>(r);
                }
            }
            res.best.push_back(pick);
            covered |= rects[static_cast<size_t>(pick)].mask;
        }
    }
    res.upper = static_cast<int>(res.best.size());

    long nodes = 0;
    bool complete = true;
    std::vector<int> chosen;
    int max_rect = 1;
    for (const Rect& r : rects) max_rect = std::max(max_rect, __builtin_popcountll(r.mask));
    auto dfs = [&](auto&& self, uint64_t covered) -> void {
        if (++nodes > node_cap) {
            complete = false;
            return;
        }
        if (covered == full) {
            if (static_cast<int>(chosen.size()) < res.upper) {
                res.upper = static_cast<int>(chosen.size());
                res.best = chosen;
            }
            return;
        }
        const int depth = static_cast<int>(chosen.size());
        const int need = (__builtin_popcountll(full & ~covered) + max_rect - 1) / max_rect;
        if (depth + std::max(need, 1) >= res.upper) return;
        // Branch on the uncovered entry with the fewest rectangle options.
        int elem = -1, options = std::numeric_limits<int>::max();
        uint64_t left = full & ~covered;
        while (left) {
            const int e = __builtin_ctzll(left);
            left &= left - 1;
            int cnt = 0;
            for (const Rect& r : rects)
                if (r.mask >> e & 1) ++cnt;
            if (cnt < options) {
                options = cnt;
                elem = e;
            }
        }
        std::vector<int> branch;
        for (size_t r = 0; r < rects.size(); ++r)
            if (rects[r].mask >> elem & 1) branch.push_back(static_cast<int>(r));
        std::sort(branch.begin(), branch.end(), [&](int a, int b) {
            return __builtin_popcountll(rects[static_cast<size_t>(a)].mask & ~covered) >
                   __builtin_popcountll(rects[static_cast<size_t>(b)].mask & ~covered);
        });
        for (int r : branch) {
            chosen.push_back(r);
            self(self, covered | rects[static_cast<size_t>(r)].mask);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    res.exact = complete;
    res.lower = complete ? res.upper : std::max(res.fooling, 1);
    return res;
}

// Irredundant covers of size <= r_max, up to `limit` of them, smallest first.
std::vector<std::vector<int>> collect_covers(const Support& sup,
                                             const std::vector<Rect>& rects, int r_max,
                                             int limit, long node_cap) {
    std::vector<std::vector<int>> covers;
    const int E = static_cast<int>(sup.count());
    if (E == 0 || rects.empty() || r_max <= 0) return covers;
    const uint64_t full = E == 64 ? ~uint64_t(0) : (uint64_t(1) << E) - 1;
    long nodes = 0;
    std::vector<int> chosen;
    std::set<std::vector<int>> seen;
    auto dfs = [&](auto&& self, uint64_t covered, int last) -> void {
        if (++nodes > node_cap || static_cast<int>(covers.size()) >= limit) return;
        if (covered == full) {
            std::vector<int> key = chosen;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) covers.push_back(chosen);
            return;
        }
        if (static_cast<int>(chosen.size()) >= r_max) return;
        const int elem = __builtin_ctzll(full & ~covered);
        for (size_t r = 0; r < rects.size(); ++r) {
            if (!(rects[r].mask >> elem & 1)) continue;
            if (static_cast<int>(r) <= last && (covered | rects[r].mask) == covered)
                continue;
            chosen.push_back(static_cast<int>(r));
            self(self, covered | rects[r].mask, static_cast<int>(r));
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, -1);
    std::stable_sort(covers.begin(), covers.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return covers;
}

// Least-absolute-error fit: minimize sum_j |(B t)_j - rhs_j| over t >= 0.
// B is given by columns (one per unknown). Returns (t, total error).
std::pair<Vec, Rat> l1_fit(const std::vector<Vec>& cols, const Vec& rhs, long& lp_left) {
    const int q = static_cast<int>(cols.size());
    const int e = static_cast<int>(rhs.size());
    --lp_left;
    const int vars = q + 2 * e;
    Mat A(vars + 2 * e, vars);
    Vec b(static_cast<size_t>(vars + 2 * e), Rat(0));
    for (int v = 0; v < vars; ++v) A.at(v, v) = -1;
    for (int j = 0; j < e; ++j) {
        const int up = vars + 2 * j, dn = vars + 2 * j + 1;
        for (int k = 0; k < q; ++k) {
            A.at(up, k) = cols[static_cast<size_t>(k)][static_cast<size_t>(j)];
            A.at(dn, k) = -cols[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
        A.at(up, q + 2 * j) = 1;
        A.at(up, q + 2 * j + 1) = -1;
        A.at(dn, q + 2 * j) = -1;
        A.at(dn, q + 2 * j + 1) = 1;
        b[static_cast<size_t>(up)] = rhs[static_cast<size_t>(j)];
        b[static_cast<size_t>(dn)] = -rhs[static_cast<size_t>(j)];
    }
    Vec c(static_cast<size_t>(vars), Rat(0));
    for (int j = 0; j < 2 * e; ++j) c[static_cast<size_t>(q + j)] = -1;
    const LpResult res = solve_lp_max(A, b, c);
    if (res.status != LpStatus::Optimal)
        throw InternalConsistencyError("absolute-error fit must have an optimum");
    Vec t(res.x.begin(), res.x.begin() + q);
    return {t, -res.value};
}

// Try to realize X = T U exactly with supports confined to the given
// rectangles, by alternating exact least-absolute-error fits.
std::optional<NonnegFact> alternation(const Mat& X, const std::vector<Rect>& rects,
                                      const std::vector<int>& cover,
                                      const RankBudget& budget, long& lp_left) {
    const int m = X.rows(), n = X.cols();
    const int r = static_cast<int>(cover.size());
    std::vector<std::vector<bool>> row_ok(static_cast<size_t>(m),
                                          std::vector<bool>(static_cast<size_t>(r), false));
    std::vector<std::vector<bool>> col_ok(static_cast<size_t>(n),
                                          std::vector<bool>(static_cast<size_t>(r), false));
    for (int k = 0; k < r; ++k) {
        const Rect& rect = rects[static_cast<size_t>(cover[static_cast<size_t>(k)])];
        for (int i : rect.rows) row_ok[static_cast<size_t>(i)][static_cast<size_t>(k)] = true;
        for (int j : rect.cols) col_ok[static_cast<size_t>(j)][static_cast<size_t>(k)] = true;
    }

    uint64_t rng = 0x9e3779b97f4a7c15ull;
    auto next_val = [&rng]() {
        rng = rng * 6364136223846793005ull + 1442695040888963407ull;
        return Rat(1 + static_cast<long>((rng >> 33) % 9));
    };

    for (int restart = 0; restart < budget.alt_restarts; ++restart) {
        Mat T(m, r), U(r, n);
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < n; ++j)
                if (col_ok[static_cast<size_t>(j)][static_cast<size_t>(k)])
                    U.at(k, j) = restart == 0 ? Rat(1) : next_val();
        Rat prev = -1;
        for (int iter = 0; iter < budget.alt_iters; ++iter) {
            if (lp_left <= 0) return std::nullopt;
            Rat err_t = 0;
            for (int i = 0; i < m; ++i) {
                std::vector<int> ks;
                for (int k = 0; k < r; ++k)
                    if (row_ok[static_cast<size_t>(i)][static_cast<size_t>(k)]) ks.push_back(k);
                for (int k = 0; k < r; ++k) T.at(i, k) = 0;
                if (ks.empty()) continue;
                std::vector<Vec> cols;
                for (int k : ks) cols.push_back(row_of(U, k));
                auto [t, err] = l1_fit(cols, row_of(X, i), lp_left);
                for (size_t a = 0; a < ks.size(); ++a) T.at(i, ks[a]) = t[a];
                err_t += err;
            }
            if (err_t == 0 && all_nonnegative(T) && all_nonnegative(U) && T * U == X)
                return NonnegFact{T, U};
            if (lp_left <= 0) return std::nullopt;
            Rat err_u = 0;
            for (int j = 0; j < n; ++j) {
                std::vector<int> ks;
                for (int k = 0; k < r; ++k)
                    if (col_ok[static_cast<size_t>(j)][static_cast<size_t>(k)]) ks.push_back(k);
                for (int k = 0; k < r; ++k) U.at(k, j) = 0;
                if (ks.empty()) continue;
                std::vector<Vec> cols;
                for (int k : ks) cols.push_back(col_of(T, k));
                auto [u, err] = l1_fit(cols, col_of(X, j), lp_left);
                for (size_t a = 0; a < ks.size(); ++a) U.at(ks[a], j) = u[a];
                err_u += err;
            }
            if (err_u == 0 && all_nonnegative(T) && all_nonnegative(U) && T * U == X)
                return NonnegFact{T, U};
            if (prev >= 0 && err_u >= prev) break;
            prev = err_u;
        }
    }
    return std::nullopt;
}

// Copy the nonzero rows (or columns, whichever is fewer) next to a 0/1
// selector; always a valid factorization.
NonnegFact selector_factorization(const Mat& X) {
    std::vector<int> nzr, nzc;
    for (int i = 0; i < X.rows(); ++i)
        for (int j = 0; j < X.cols(); ++j)
            if (X.at(i, j) != 0) {
                if (nzr.empty() || nzr.back() != i) nzr.push_back(i);
                break;
            }
    for (int j = 0; j < X.cols(); ++j)
        for (int i = 0; i < X.rows(); ++i)
            if (X.at(i, j) != 0) {
                nzc.push_back(j);
                break;
            }
    if (nzr.size() <= nzc.size()) {
        const int r = static_cast<int>(nzr.size());
        Mat T(X.rows(), r), U(r, X.cols());
        for (int k = 0; k < r; ++k) {
            T.at(nzr[static_cast<size_t>(k)], k) = 1;
            for (int j = 0; j < X.cols(); ++j) U.at(k, j) = X.at(nzr[static_cast<size_t>(k)], j);
        }
        return {T, U};
    }
    const int r = static_cast<int>(nzc.size());
    Mat T(X.rows(), r), U(r, X.cols());
    for (int k = 0; k < r; ++k) {
        U.at(k, nzc[static_cast<size_t>(k)]) = 1;
        for (int i = 0; i < X.rows(); ++i) T.at(i, k) = X.at(i, nzc[static_cast<size_t>(k)]);
    }
    return {T, U};
}

// Subtract row-led rank-one pieces until nothing is left. Each step zeroes
// at least one entry per covered row, so it terminates.
std::optional<NonnegFact> greedy_peel(const Mat& X, int size_cap) {
    Mat res = X;
    std::vector<Vec> ts, us;
    for (;;) {
        bool nonzero = false;
        for (int i = 0; i < res.rows() && !nonzero; ++i)
            for (int j = 0; j < res.cols(); ++j)
                if (res.at(i, j) != 0) {
                    nonzero = true;
                    break;
                }
        if (!nonzero) break;
        if (static_cast<int>(ts.size()) >= size_cap) return std::nullopt;

        int best_lead = -1;
        long best_area = 0;
        std::vector<int> best_rows;
        for (int i = 0; i < res.rows(); ++i) {
            std::vector<int> supp;
            for (int j = 0; j < res.cols(); ++j)
                if (res.at(i, j) != 0) supp.push_back(j);
            if (supp.empty()) continue;
            std::vector<int> rows;
            for (int i2 = 0; i2 < res.rows(); ++i2) {
                bool all = true;
                for (int j : supp)
                    if (res.at(i2, j) == 0) {
                        all = false;
                        break;
                    }
                if (all) rows.push_back(i2);
            }
            const long area = static_cast<long>(rows.size()) * static_cast<long>(supp.size());
            if (area > best_area) {
                best_area = area;
                best_lead = i;
                best_rows = rows;
            }
        }
        std::vector<int> supp;
        for (int j = 0; j < res.cols(); ++j)
            if (res.at(best_lead, j) != 0) supp.push_back(j);
        Vec u(static_cast<size_t>(res.cols()), Rat(0));
        for (int j : supp) u[static_cast<size_t>(j)] = res.at(best_lead, j);
        Vec t(static_cast<size_t>(res.rows()), Rat(0));
        for (int i : best_rows) {
            Rat ratio;
            bool first = true;
            for (int j : supp) {
                const Rat cand = res.at(i, j) / u[static_cast<size_t>(j)];
                if (first || cand < ratio) {
                    ratio = cand;
                    first = false;
                }
            }
            t[static_cast<size_t>(i)] = ratio;
        }
        for (int i : best_rows)
            for (int j : supp) res.at(i, j) -= t[static_cast<size_t>(i)] * u[static_cast<size_t>(j)];
        ts.push_back(std::move(t));
        us.push_back(std::move(u));
    }
    const int r = static_cast<int>(ts.size());
    Mat T(X.rows(), r), U(r, X.cols());
    for (int k = 0; k < r; ++k) {
        for (int i = 0; i < X.rows(); ++i) T.at(i, k) = ts[static_cast<size_t>(k)][static_cast<size_t>(i)];
        for (int j = 0; j < X.cols(); ++j) U.at(k, j) = us[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
    if (!(T * U == X)) throw InternalConsistencyError("residual peeling lost the matrix");
    return NonnegFact{T, U};
}

struct EngineResult {
    NonnegFact best;
    int rc_lower = 0;  // certified rectangle-cover lower bound for this matrix
};

// Smallest exact nonnegative factorization of X the budget can find.
EngineResult nnegrk_search(const Mat& X, const RankBudget& budget, long& lp_left) {
    EngineResult out;
    const Support sup(X);
    if (sup.count() == 0) {
        out.best = NonnegFact{Mat(X.rows(), 0), Mat(0, X.cols())};
        return out;
    }
    out.best = selector_factorization(X);
    const long long area = static_cast<long long>(X.rows()) * X.cols();
    if (area <= 10000)
        if (auto peeled = greedy_peel(X, out.best.size() - 1))
            if (peeled->size() < out.best.size()) out.best = *peeled;

    const std::vector<Rect> rects = maximal_rectangles(sup);
    if (rects.empty()) {
        out.rc_lower = 1;
        return out;
    }
    const CoverResult cov = cover_number(sup, rects, budget.cover_nodes);
    out.rc_lower = cov.lower;
    if (out.best.size() <= cov.lower) return out;

    if (static_cast<int>(sup.count()) <= budget.exact_entries) {
        const int r_cap = std::min(out.best.size() - 1, budget.exact_rank_cap);
        const auto covers =
            collect_covers(sup, rects, r_cap, budget.covers_per_rank, budget.cover_nodes);
        for (const auto& cover : covers) {
            if (static_cast<int>(cover.size()) >= out.best.size()) continue;
            if (lp_left <= 0) break;
            if (auto got = alternation(X, rects, cover, budget, lp_left)) {
                out.best = *got;
                if (out.best.size() <= cov.lower) break;
            }
        }
    }
    return out;
}

Vec row_minima(const Mat& M) {
    Vec mins(static_cast<size_t>(M.rows()), Rat(0));
    for (int i = 0; i < M.rows(); ++i) {
        Rat mn = M.at(i, 0);
        for (int j = 1; j < M.cols(); ++j)
            if (M.at(i, j) < mn) mn = M.at(i, j);
        mins[static_cast<size_t>(i)] = mn;
    }
    return mins;
}

Mat shift_rows(const Mat& M, const Vec& mu) {
    Mat X = M;
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) X.at(i, j) -= mu[static_cast<size_t>(i)];
    return X;
}

} // namespace

RankInterval lp_rank_bounds(const Mat& M, const RankBudget& budget, bool allow_shift,
                            const LPFactorization* seed) {
    if (!all_nonnegative(M))
        throw NotNonnegativeError("rank bounds need a nonnegative matrix");
    RankInterval out;
    if (M.rows() == 0 || M.cols() == 0) {
        out.certificate_upper = LPFactorization{Mat(M.rows(), 0), Mat(0, M.cols()),
                                                Vec(static_cast<size_t>(M.rows()), Rat(0))};
        out.certificate_lower = "empty matrix";
        return out;
    }

    const int rank0 = exact_rank(M);
    const Vec mins = row_minima(M);
    std::vector<int> shiftable;
    for (int i = 0; i < M.rows(); ++i)
        if (mins[static_cast<size_t>(i)] > 0) shiftable.push_back(i);
    const int k = static_cast<int>(shiftable.size());

    std::vector<Vec> patterns;
    const Vec zero_mu(static_cast<size_t>(M.rows()), Rat(0));
    bool exhaustive = true;
    if (!allow_shift || k == 0) {
        patterns.push_back(zero_mu);
    } else if (k <= 20 && (1L << k) <= budget.shift_patterns) {
        for (long bits = 0; bits < (1L << k); ++bits) {
            Vec mu = zero_mu;
            for (int t = 0; t < k; ++t)
                if (bits >> t & 1)
                    mu[static_cast<size_t>(shiftable[static_cast<size_t>(t)])] =
                        mins[static_cast<size_t>(shiftable[static_cast<size_t>(t)])];
            patterns.push_back(std::move(mu));
        }
    } else {
        exhaustive = false;
        patterns.push_back(zero_mu);
        Vec full = zero_mu;
        for (int i : shiftable) full[static_cast<size_t>(i)] = mins[static_cast<size_t>(i)];
        patterns.push_back(std::move(full));
    }

    long lp_left = budget.alt_lp_cap;
    int best_size = std::numeric_limits<int>::max();
    LPFactorization best_cert;
    int rc_zero = 0, rc_min = std::numeric_limits<int>::max();
    for (const Vec& mu : patterns) {
        const Mat X = shift_rows(M, mu);
        const EngineResult got = nnegrk_search(X, budget, lp_left);
        if (got.best.size() < best_size) {
            best_size = got.best.size();
            best_cert = LPFactorization{got.best.T, got.best.U, mu};
        }
        rc_min = std::min(rc_min, got.rc_lower);
        if (mu == zero_mu) rc_zero = got.rc_lower;
    }

    int lower;
    std::string why;
    const bool shifts_possible = allow_shift && k > 0;
    if (!shifts_possible) {
        if (rc_zero >= rank0) {
            lower = rc_zero;
            why = "rectangle cover of the support needs " + std::to_string(rc_zero);
        } else {
            lower = rank0;
            why = "linear rank " + std::to_string(rank0);
        }
    } else {
        lower = std::max(rank0 - 1, 0);
        why = "linear rank " + std::to_string(rank0) + " minus one for the shift";
        if (rc_zero - 1 > lower) {
            lower = rc_zero - 1;
            why = "rectangle cover of the support needs " + std::to_string(rc_zero) +
                  ", minus one for the shift";
        }
        if (exhaustive && rc_min > lower) {
            lower = rc_min;
            why = "every valid row shift leaves a support needing " +
                  std::to_string(rc_min) + " rectangles (" +
                  std::to_string(patterns.size()) + " shift patterns)";
        }
    }

    if (seed) {
        bool usable = true;
        if (!allow_shift)
            for (const Rat& v : seed->mu)
                if (v != 0) usable = false;
        if (usable && verify_lp_factorization(M, *seed) && seed->size() < best_size) {
            best_size = seed->size();
            best_cert = *seed;
        }
    }

    if (best_size < lower)
        throw InternalConsistencyError("certified upper bound undercuts the lower bound");
    out.lower = lower;
    out.upper = best_size;
    out.certificate_upper = std::move(best_cert);
    out.certificate_lower = why;
    return out;
}

} // namespace sfc
