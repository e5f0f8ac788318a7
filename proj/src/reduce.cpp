#include "slackfc/reduce.hpp"

#include "slackfc/errors.hpp"
#include "slackfc/slack.hpp"

#include <algorithm>
#include <unordered_set>

namespace sfc {

namespace {

bool same_sense(const Reduction& red) { return red.sense1 == red.sense2; }

} // namespace

void check_reduction_wellformed(const ProblemSpec& p1, const Guarantees& g1,
                                const ProblemSpec& p2, const Guarantees& g2,
                                const Reduction& red) {
    if (red.sense1 != p1.sense || red.sense2 != p2.sense)
        throw ShapeError("reduction senses do not match the problems");
    const std::vector<int> sound1 = sound_instances(p1, g1);
    if (red.beta.size() != sound1.size())
        throw ShapeError("reduction needs one beta row per sound source instance");
    if (red.shift.size() != sound1.size())
        throw ShapeError("reduction needs one shift per sound source instance");
    if (static_cast<int>(red.gamma.size()) != p1.num_solutions())
        throw ShapeError("reduction needs one gamma row per source solution");

    std::unordered_set<int> sound2;
    for (int f : sound_instances(p2, g2)) sound2.insert(f);
    for (size_t r = 0; r < red.beta.size(); ++r)
        for (const auto& [f, coeff] : red.beta[r]) {
            if (f < 0 || f >= p2.num_instances())
                throw IdentifierError("beta targets an unknown instance");
            if (coeff < 0)
                throw NotNonnegativeError("beta coefficient is negative");
            if (!sound2.count(f))
                throw GuaranteeInfeasibleError("beta targets instance '" + p2.instances[f] +
                                               "' outside the sound set");
        }
    for (size_t s = 0; s < red.gamma.size(); ++s) {
        Rat total = 0;
        for (const auto& [t, coeff] : red.gamma[s]) {
            if (t < 0 || t >= p2.num_solutions())
                throw IdentifierError("gamma targets an unknown solution");
            if (coeff < 0)
                throw NotNonnegativeError("gamma coefficient is negative");
            total += coeff;
        }
        if (total != 1)
            throw ShapeError("gamma row for solution '" + p1.solutions[s] +
                             "' is not a convex combination");
    }
}

ReductionReport verify_reduction(const ProblemSpec& p1, const Guarantees& g1,
                                 const ProblemSpec& p2, const Guarantees& g2,
                                 const Reduction& red) {
    check_reduction_wellformed(p1, g1, p2, g2, red);
    const std::vector<int> sound1 = sound_instances(p1, g1);
    ReductionReport report;
    report.ok = true;

    for (size_t r = 0; r < sound1.size(); ++r) {
        const int f1 = sound1[r];
        for (int s1 = 0; s1 < p1.num_solutions(); ++s1) {
            Rat inner = 0;
            for (const auto& [f, b] : red.beta[r])
                for (const auto& [s, a] : red.gamma[static_cast<size_t>(s1)])
                    inner += b * a * p2.value.at(f, s);
            const Rat expected =
                same_sense(red) ? Rat(inner + red.shift[r]) : Rat(red.shift[r] - inner);
            const Rat actual = p1.value.at(f1, s1);
            ++report.value_checks;
            if (actual != expected) {
                report.ok = false;
                report.violations.push_back({"value", f1, s1, actual, expected});
            }
        }
        Rat bound = red.shift[r];
        for (const auto& [f, b] : red.beta[r]) {
            if (same_sense(red))
                bound += b * g2.C[static_cast<size_t>(f)];
            else
                bound -= b * g2.C[static_cast<size_t>(f)];
        }
        const Rat c1 = g1.C[static_cast<size_t>(f1)];
        ++report.guarantee_checks;
        const bool holds = p1.sense == Sense::Maximize ? c1 >= bound : c1 <= bound;
        if (!holds) {
            report.ok = false;
            report.violations.push_back({"guarantee", f1, -1, c1, bound});
        }
    }
    return report;
}

MatrixReduction matrix_reduction(const ProblemSpec& p1, const Guarantees& g1,
                                 const ProblemSpec& p2, const Guarantees& g2,
                                 const Reduction& red) {
    const ReductionReport report = verify_reduction(p1, g1, p2, g2, red);
    if (!report.ok)
        throw InternalConsistencyError("matrix form requested for a failing reduction (" +
                                       std::to_string(report.violations.size()) +
                                       " violations)");
    const SlackMatrix sm1 = build_slack(p1, g1);
    const SlackMatrix sm2 = build_slack(p2, g2);
    const std::vector<int> sound2 = sound_instances(p2, g2);
    std::vector<int> col_of_instance(static_cast<size_t>(p2.num_instances()), -1);
    for (size_t k = 0; k < sound2.size(); ++k)
        col_of_instance[static_cast<size_t>(sound2[k])] = static_cast<int>(k);

    MatrixReduction mr;
    mr.R = Mat(static_cast<int>(red.beta.size()), static_cast<int>(sound2.size()));
    for (size_t r = 0; r < red.beta.size(); ++r)
        for (const auto& [f, b] : red.beta[r])
            mr.R.at(static_cast<int>(r), col_of_instance[static_cast<size_t>(f)]) += b;
    mr.Cm = Mat(p2.num_solutions(), p1.num_solutions());
    for (size_t s1 = 0; s1 < red.gamma.size(); ++s1)
        for (const auto& [s, a] : red.gamma[s1])
            mr.Cm.at(s, static_cast<int>(s1)) += a;

    const std::vector<int> sound1 = sound_instances(p1, g1);
    mr.t.assign(sound1.size(), Rat(0));
    for (size_t r = 0; r < sound1.size(); ++r) {
        Rat sum_bc = 0;
        for (const auto& [f, b] : red.beta[r]) sum_bc += b * g2.C[static_cast<size_t>(f)];
        const Rat c1 = g1.C[static_cast<size_t>(sound1[r])];
        Rat t;
        if (p1.sense == Sense::Maximize)
            t = same_sense(red) ? Rat(c1 - sum_bc - red.shift[r])
                                : Rat(c1 - red.shift[r] + sum_bc);
        else
            t = same_sense(red) ? Rat(sum_bc + red.shift[r] - c1)
                                : Rat(red.shift[r] - sum_bc - c1);
        if (t < 0)
            throw InternalConsistencyError("negative shift row despite a passing guarantee");
        mr.t[r] = t;
    }

    const Mat product = mr.R * sm2.entries * mr.Cm;
    for (int i = 0; i < sm1.entries.rows(); ++i)
        for (int j = 0; j < sm1.entries.cols(); ++j)
            if (product.at(i, j) + mr.t[static_cast<size_t>(i)] != sm1.entries.at(i, j))
                throw InternalConsistencyError(
                    "slack identity fails at row '" + sm1.row_labels[static_cast<size_t>(i)] +
                    "', column '" + sm1.col_labels[static_cast<size_t>(j)] + "'");
    for (int j = 0; j < mr.Cm.cols(); ++j) {
        Rat col = 0;
        for (int i = 0; i < mr.Cm.rows(); ++i) col += mr.Cm.at(i, j);
        if (col != 1)
            throw InternalConsistencyError("solution-map column does not sum to one");
    }
    return mr;
}

MatrixReduction compose_matrix_reductions(const MatrixReduction& first,
                                          const MatrixReduction& second) {
    if (first.R.cols() != second.R.rows() || second.Cm.cols() != first.Cm.rows())
        throw ShapeError("matrix reductions do not chain");
    MatrixReduction out;
    out.R = first.R * second.R;
    out.Cm = second.Cm * first.Cm;
    const Vec mid = mat_vec(first.R, second.t);
    out.t = first.t;
    for (size_t i = 0; i < out.t.size(); ++i) out.t[i] += mid[i];
    return out;
}

LPFactorization compose_lp(const MatrixReduction& mr, const Mat& M1, const Mat& M2,
                           const LPFactorization& F2) {
    if (!verify_lp_factorization(M2, F2))
        throw FactorizationInvalidError("factorization of the target fails verification");
    LPFactorization out;
    out.T = mr.R * F2.T;
    out.U = F2.U * mr.Cm;
    out.mu = mat_vec(mr.R, F2.mu);
    for (size_t i = 0; i < out.mu.size(); ++i) out.mu[i] += mr.t[i];
    if (!verify_lp_factorization(M1, out))
        throw InternalConsistencyError("composed factorization misses the source matrix");
    return out;
}

SDPFactorization compose_sdp(const MatrixReduction& mr, const Mat& M1, const Mat& M2,
                             const SDPFactorization& F2) {
    if (!verify_sdp_factorization(M2, F2))
        throw FactorizationInvalidError("factorization of the target fails verification");
    const int d = F2.size();
    SDPFactorization out;
    out.Ts.reserve(static_cast<size_t>(mr.R.rows()));
    for (int i = 0; i < mr.R.rows(); ++i) {
        Mat acc(d, d);
        for (int k = 0; k < mr.R.cols(); ++k) {
            const Rat& c = mr.R.at(i, k);
            if (c == 0) continue;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    acc.at(a, b) += c * F2.Ts[static_cast<size_t>(k)].at(a, b);
        }
        out.Ts.push_back(std::move(acc));
    }
    out.Us.reserve(static_cast<size_t>(mr.Cm.cols()));
    for (int s = 0; s < mr.Cm.cols(); ++s) {
        Mat acc(d, d);
        for (int k = 0; k < mr.Cm.rows(); ++k) {
            const Rat& c = mr.Cm.at(k, s);
            if (c == 0) continue;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    acc.at(a, b) += c * F2.Us[static_cast<size_t>(k)].at(a, b);
        }
        out.Us.push_back(std::move(acc));
    }
    out.mu = mat_vec(mr.R, F2.mu);
    for (size_t i = 0; i < out.mu.size(); ++i) out.mu[i] += mr.t[i];
    if (!verify_sdp_factorization(M1, out))
        throw InternalConsistencyError("composed factorization misses the source matrix");
    return out;
}

SimpleReductionResult simple_reduction(const ProblemSpec& p1, const Guarantees& g1,
                                       const ProblemSpec& p2, const Guarantees& g2,
                                       const SimpleReductionSpec& spec, const Rat& tau1,
                                       const Rat& sigma1) {
    if (p1.sense != Sense::Maximize)
        throw SimpleReductionInvalidError("pointwise form needs a maximizing source");
    if (spec.alpha == 0)
        throw SimpleReductionInvalidError("alpha must be nonzero");
    const bool target_max = p2.sense == Sense::Maximize;
    if (target_max != (spec.alpha > 0))
        throw SimpleReductionInvalidError(
            "alpha sign must match the target sense (positive for max, negative for min)");

    for (int f1 = 0; f1 < p1.num_instances(); ++f1) {
        const int f2 = spec.instance_map(f1);
        if (f2 < 0 || f2 >= p2.num_instances())
            throw IdentifierError("instance map leaves the target problem");
        for (int s1 = 0; s1 < p1.num_solutions(); ++s1) {
            const int s2 = spec.solution_map(s1);
            if (s2 < 0 || s2 >= p2.num_solutions())
                throw IdentifierError("solution map leaves the target problem");
            const Rat lhs = p2.value.at(f2, s2);
            const Rat rhs = spec.alpha * p1.value.at(f1, s1) +
                            spec.mu * p1.size_of[static_cast<size_t>(f1)];
            if (lhs != rhs)
                throw SimpleReductionInvalidError(
                    "value relation fails at instance '" + p1.instances[f1] +
                    "', solution '" + p1.solutions[s1] + "': " + rat_str(lhs) + " vs " +
                    rat_str(rhs));
        }
    }

    SimpleReductionResult out;
    bool rho_set = false;
    for (int f1 = 0; f1 < p1.num_instances(); ++f1) {
        const Rat size1 = p1.size_of[static_cast<size_t>(f1)];
        const Rat size2 = p2.size_of[static_cast<size_t>(spec.instance_map(f1))];
        if (size1 == 0) {
            if (size2 != 0)
                throw SimpleReductionInvalidError("empty instance '" + p1.instances[f1] +
                                                  "' maps to a non-empty one");
            continue;
        }
        const Rat ratio = size2 / size1;
        if (!rho_set) {
            out.rho = ratio;
            rho_set = true;
        } else if (ratio != out.rho) {
            throw SimpleReductionInvalidError("size ratio is not constant: instance '" +
                                              p1.instances[f1] + "' gives " + rat_str(ratio) +
                                              " against " + rat_str(out.rho));
        }
    }
    if (!rho_set)
        throw SimpleReductionInvalidError("every source instance is empty");
    out.size_identity = out.rho == rat_abs(spec.alpha) + spec.mu;
    out.tau2 = (spec.alpha * tau1 + spec.mu) / out.rho;
    out.sigma2 = (spec.alpha * sigma1 + spec.mu) / out.rho;

    out.exact_optima = true;
    for (int f1 = 0; f1 < p1.num_instances(); ++f1) {
        const Rat opt1 = brute_force_optimum(p1, f1);
        const Rat opt2 = brute_force_optimum(p2, spec.instance_map(f1));
        if (opt2 != spec.alpha * opt1 + spec.mu * p1.size_of[static_cast<size_t>(f1)]) {
            out.exact_optima = false;
            break;
        }
    }

    Reduction red;
    red.sense1 = p1.sense;
    red.sense2 = p2.sense;
    const Rat mag = rat_abs(spec.alpha);
    const std::vector<int> sound1 = sound_instances(p1, g1);
    for (int f1 : sound1) {
        red.beta.push_back({{spec.instance_map(f1), Rat(1) / mag}});
        const Rat shift = spec.mu * p1.size_of[static_cast<size_t>(f1)] / mag;
        red.shift.push_back(spec.alpha > 0 ? Rat(-shift) : shift);
    }
    for (int s1 = 0; s1 < p1.num_solutions(); ++s1)
        red.gamma.push_back({{spec.solution_map(s1), Rat(1)}});
    check_reduction_wellformed(p1, g1, p2, g2, red);
    out.red = std::move(red);
    return out;
}

} // namespace sfc
