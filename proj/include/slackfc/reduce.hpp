// Reductions between guaranteed optimization problems: instances of the
// source rewritten as nonnegative combinations of target instances plus a
// per-instance shift, solutions as convex combinations. Verified reductions
// induce an exact slack-matrix identity M1 = R*M2*Cm + t*ones, which is what
// lets factorizations of the target transfer to the source unchanged in size.
#pragma once

#include "slackfc/factor.hpp"
#include "slackfc/matrix.hpp"
#include "slackfc/problem.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace sfc {

struct Reduction {
    Sense sense1 = Sense::Maximize;
    Sense sense2 = Sense::Maximize;
    // One row per sound instance of the source (slack-row order): targets are
    // instance ids of P2 with nonnegative coefficients.
    std::vector<std::vector<std::pair<int, Rat>>> beta;
    Vec shift;  // per sound source instance; sign-unrestricted
    // One row per solution of the source: convex combination of P2 solutions.
    std::vector<std::vector<std::pair<int, Rat>>> gamma;
};

struct ReductionViolation {
    std::string kind;  // "value" or "guarantee"
    int f1 = -1;       // source instance id
    int s1 = -1;       // source solution id, -1 for guarantee checks
    Rat actual;        // value measured on the source
    Rat expected;      // value implied by the reduction
};

struct ReductionReport {
    bool ok = false;
    std::vector<ReductionViolation> violations;
    long value_checks = 0;
    long guarantee_checks = 0;
};

// Structural validation: sizes, senses, id ranges, coefficient signs, convex
// gamma rows, and beta targets restricted to the sound instances of P2.
void check_reduction_wellformed(const ProblemSpec& p1, const Guarantees& g1,
                                const ProblemSpec& p2, const Guarantees& g2,
                                const Reduction& red);

// Checks the value identity on every (sound f1) x (solution s1) pair and the
// guarantee inequality on every sound f1. Never throws on a mere violation;
// the report carries them all with exact residuals.
ReductionReport verify_reduction(const ProblemSpec& p1, const Guarantees& g1,
                                 const ProblemSpec& p2, const Guarantees& g2,
                                 const Reduction& red);

struct MatrixReduction {
    Mat R{0, 0};   // sound instances of P1 x sound instances of P2
    Mat Cm{0, 0};  // solutions of P2 x solutions of P1, columns sum to one
    Vec t;         // per sound instance of P1
};

// Assembles (R, Cm, t) from a verified reduction and asserts the exact
// identity M1 = R*M2*Cm + t*ones on the two slack matrices.
MatrixReduction matrix_reduction(const ProblemSpec& p1, const Guarantees& g1,
                                 const ProblemSpec& p2, const Guarantees& g2,
                                 const Reduction& red);

// first maps P1 to P2, second maps P2 to P3; the result maps P1 to P3.
MatrixReduction compose_matrix_reductions(const MatrixReduction& first,
                                          const MatrixReduction& second);

// Transfers a factorization of M2 to one of M1 with the same inner size.
LPFactorization compose_lp(const MatrixReduction& mr, const Mat& M1, const Mat& M2,
                           const LPFactorization& F2);
SDPFactorization compose_sdp(const MatrixReduction& mr, const Mat& M1, const Mat& M2,
                             const SDPFactorization& F2);

// Pointwise instance/solution maps with a linear value relation
//   val2(instance_map(f1), solution_map(s1)) = alpha*val1(f1,s1) + mu*|f1|.
struct SimpleReductionSpec {
    std::function<int(int)> instance_map;
    std::function<int(int)> solution_map;
    Rat alpha;
    Rat mu;
};

struct SimpleReductionResult {
    Reduction red;
    Rat rho;                   // measured |beta(f1)| / |f1|, constant
    bool size_identity = false;  // rho equals |alpha| + mu
    Rat tau2, sigma2;          // derived proportional guarantee coefficients
    bool exact_optima = false;   // opt2(beta(f1)) = alpha*opt1(f1) + mu*|f1| everywhere
};

// Builds the singleton-combination Reduction induced by the maps after
// verifying the value relation on every instance/solution pair. The source
// must maximize; alpha must be positive exactly when P2 maximizes.
SimpleReductionResult simple_reduction(const ProblemSpec& p1, const Guarantees& g1,
                                       const ProblemSpec& p2, const Guarantees& g2,
                                       const SimpleReductionSpec& spec, const Rat& tau1,
                                       const Rat& sigma1);

} // namespace sfc
