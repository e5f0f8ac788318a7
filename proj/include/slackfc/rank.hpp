// Certified two-sided bounds on the shifted nonnegative rank of a matrix.
// Lower bounds come from linear rank and rectangle covers of the support
// (minimized over the valid row shifts); upper bounds are explicit verified
// factorizations found by cover-guided search or residual peeling.
#pragma once

#include "slackfc/factor.hpp"
#include "slackfc/matrix.hpp"

#include <string>

namespace sfc {

// Search limits. The environment variable SLACKFC_RANK_BUDGET scales the
// caps by an integer factor; exhaustive-search thresholds stay fixed.
struct RankBudget {
    long cover_nodes = 200000;  // branch-and-bound nodes per rectangle cover
    int shift_patterns = 4096;  // row-shift support patterns enumerated
    int covers_per_rank = 60;   // distinct support covers tried per candidate
    int alt_iters = 12;         // alternation sweeps per restart
    int alt_restarts = 3;       // rational restarts per support pattern
    long alt_lp_cap = 20000;    // total exact LP fits across the whole search
    int exact_entries = 25;     // support size admitted to exhaustive search
    int exact_rank_cap = 4;     // largest candidate rank searched exhaustively

    static RankBudget from_env();
};

struct RankInterval {
    int lower = 0;
    int upper = 0;
    LPFactorization certificate_upper;  // size == upper, reproduces M exactly
    std::string certificate_lower;      // which bound produced `lower`
};

// Bounds min r with M = TU + mu*ones, T,U,mu >= 0. With allow_shift false
// the shift is pinned to zero and the result bounds the nonnegative rank.
// A seed factorization, when valid, caps the upper bound from the start.
RankInterval lp_rank_bounds(const Mat& M, const RankBudget& budget,
                            bool allow_shift = true,
                            const LPFactorization* seed = nullptr);

} // namespace sfc
