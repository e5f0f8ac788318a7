#pragma once
// Repair of perturbed slack matrices. A rank factorization with coefficient
// bounds turns the perturbation into few rank-one corrections, so the fixed
// matrix stays nonnegative, stays close in guarantee, and its factorization
// grows by at most two terms per unit of error rank.

#include "slackfc/factor.hpp"
#include "slackfc/problem.hpp"

#include <optional>
#include <vector>

namespace sfc {

struct BoundedTerm {
    Vec a;  // one entry per row, each bounded by one in absolute value
    Vec b;  // a row of the factored matrix
};

struct BoundedRankFactorization {
    std::vector<BoundedTerm> terms;  // exactly rank-many
    Rat target_norm;                 // largest |entry| of the factored matrix
};

// Exact rank factorization M = sum a_i b_i with |a_i| <= 1 entrywise and
// each b_i a row of M. The zero matrix yields an empty term list.
BoundedRankFactorization bounded_factorization(const Mat& m);

struct RoundingResult {
    Mat N;                                       // repaired nonnegative matrix
    Vec cprime;                                  // adjusted guarantee per row
    int size_bound = 0;                          // factorization growth cap
    std::optional<LPFactorization> certificate;  // present when one was supplied
    int k = 0;                                   // number of correction terms
    Rat eps;                                     // largest |entry| of the error
};

// Rebuilds a nonnegative matrix from a perturbed copy of the slack matrix of
// (p, g), adjusting the guarantee rowwise by (rank M + rank Mtilde) * eps.
// When a factorization of Mtilde is supplied, a verified factorization of the
// result with at most 2k extra terms is emitted.
RoundingResult round_to_problem(const ProblemSpec& p, const Guarantees& g,
                                const Mat& mtilde,
                                const std::optional<LPFactorization>& ftilde = std::nullopt);

} // namespace sfc
