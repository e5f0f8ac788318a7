// LP and SDP factorizations of slack matrices, inequality formulations with
// exact certification, and the constructive conversions between the two
// (nonnegative multiplier extraction in both directions).
#pragma once

#include "slackfc/matrix.hpp"
#include "slackfc/problem.hpp"
#include "slackfc/slack.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sfc {

// M = T U + mu 1^T with T, U and mu nonnegative; size = inner dimension.
struct LPFactorization {
    Mat T;   // rows x size
    Mat U;   // size x cols
    Vec mu;  // one shift per row
    int size() const { return T.cols(); }
};

bool verify_lp_factorization(const Mat& M, const LPFactorization& F);
bool verify_lp_factorization(const SlackMatrix& M, const LPFactorization& F);

// M(i,j) = tr(Ts[i] Us[j]) + mu(i) with every factor psd.
struct SDPFactorization {
    std::vector<Mat> Ts;
    std::vector<Mat> Us;
    Vec mu;
    int size() const {
        if (!Ts.empty()) return Ts[0].rows();
        return Us.empty() ? 0 : Us[0].rows();
    }
};

bool verify_sdp_factorization(const Mat& M, const SDPFactorization& F);
bool verify_sdp_factorization(const SlackMatrix& M, const SDPFactorization& F);

// Exact psd certificate: LDL^T elimination with diagonal pivoting; throws
// NotPsdError naming `what` on a negative pivot, an asymmetry, or a zero
// diagonal with leftover off-diagonal mass.
void require_psd(const Mat& A, const std::string& what);

// Turns an LP factorization into the equivalent diagonal SDP factorization.
SDPFactorization diagonal_embedding(const LPFactorization& F);

struct AffineFunc {
    Rat c0;
    Vec lin;
};
Rat affine_eval(const AffineFunc& phi, const Vec& x);

// Inequality description A x <= b with one point per solution and one
// affine objective per sound instance (in sound_instances order).
struct LPFormulation {
    Mat A;
    Vec b;
    std::vector<Vec> points;
    std::vector<AffineFunc> funcs;
    std::vector<int> row_instances;
    int size() const { return A.rows(); }
};

// Checks containment (A x^s <= b), linearization (funcs reproduce the value
// table on the points), and the objective bound (the exact LP optimum of
// each func over the polyhedron respects the guarantee). Throws
// FormulationInvalidError naming the violated condition.
void verify_formulation(const ProblemSpec& p, const Guarantees& g, const LPFormulation& L);

struct FarkasCertificate {
    Rat lambda0;
    Vec lambda;
};

// Writes phi as lambda0 + sum_j lambda_j (b_j - A_j x) with nonnegative
// multipliers, verified as a coefficientwise polynomial identity.
FarkasCertificate farkas_certificate(const Mat& A, const Vec& b, const AffineFunc& phi);

// Formulation -> factorization: U rows are inequality slacks at the points,
// T rows are Farkas multipliers of the guarantee gap. The result has size
// equal to the inequality count and reproduces the slack matrix.
LPFactorization factorization_from_formulation(const ProblemSpec& p, const Guarantees& g,
                                               const LPFormulation& L);

// Factorization -> formulation over the nonnegative orthant x >= 0 in size
// dimensions, with points U_s and objectives built from T and mu.
LPFormulation formulation_from_factorization(const ProblemSpec& p, const Guarantees& g,
                                             const LPFactorization& F);

// Splits solution columns of U into the coordinatewise-minimal ones and the
// dominated rest; among equal columns the earliest stays minimal.
std::pair<std::vector<int>, std::vector<int>> solution_partition(const LPFactorization& F);

} // namespace sfc
