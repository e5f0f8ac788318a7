// Slack matrices: one row per sound instance, one column per solution,
// entry = gap between the guaranteed bound and the solution's value.
// Also direct constructions for two structured families whose entries
// have closed forms (perfect-matching odd-set slacks and junta slacks).
#pragma once

#include "slackfc/matrix.hpp"
#include "slackfc/problem.hpp"

#include <string>
#include <vector>

namespace sfc {

struct SlackMatrix {
    Mat entries;
    std::vector<int> row_instances;  // row -> instance index in the source problem
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Sense sense = Sense::Maximize;
};

// Builds the slack matrix of (problem, guarantees). Rows cover exactly the
// sound instances; a negative entry means the completeness bound is violated
// and raises GuaranteeInfeasibleError.
SlackMatrix build_slack(const ProblemSpec& p, const Guarantees& g);

// Odd-set rows of the perfect-matching slack on K_{n2}: for each odd subset
// U with |U| >= 3 (subset masks ascending) and each perfect matching M, the
// entry is (|M cut U| - 1) / 2.
Mat matching_slack_submatrix(int n2);
std::vector<std::string> matching_odd_set_labels(int n2);

// Slack of the k-junta indicator family with guarantee 1: entry for mask a
// and assignment b is (1 - t)^2 where t counts shared ones.
Mat junta_slack(int n, int k);

// Number of junta slack entries equal to 1 whose mask pair is disjoint.
long long count_disjoint_ones(int n, int k);

} // namespace sfc
