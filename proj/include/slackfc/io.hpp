#pragma once
// JSON and CSV import/export for matrices, slack matrices, factorizations,
// reductions and reports. JSON objects keep insertion order, so repeated
// runs serialize byte-identically.

#include "slackfc/factor.hpp"
#include "slackfc/problem.hpp"
#include "slackfc/rank.hpp"
#include "slackfc/reduce.hpp"
#include "slackfc/rounding.hpp"
#include "slackfc/slack.hpp"

#include "json.hpp"

#include <string>

namespace sfc {

using Json = nlohmann::ordered_json;

// Wraps nlohmann parse failures in the library's error type.
Json parse_json(const std::string& text);

Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j);
std::string matrix_to_csv(const Mat& m);
Mat matrix_from_csv(const std::string& text);

// Dispatch by file extension: .json or .csv.
Mat load_matrix(const std::string& path);
void save_matrix(const std::string& path, const Mat& m);

Json slack_to_json(const SlackMatrix& sm);

Json factorization_to_json(const LPFactorization& f);
LPFactorization factorization_from_json(const Json& j);

Json rank_interval_to_json(const RankInterval& ri);

Json problem_to_json(const ProblemSpec& p);
ProblemSpec problem_from_json(const Json& j);
Json guarantees_to_json(const Guarantees& g);
Guarantees guarantees_from_json(const Json& j);
Json reduction_to_json(const Reduction& r);
Reduction reduction_from_json(const Json& j);

// Self-contained certification input: both problems, their guarantees and
// the reduction between them.
struct ReductionBundle {
    std::string name;
    ProblemSpec source;
    Guarantees source_guarantees;
    ProblemSpec target;
    Guarantees target_guarantees;
    Reduction reduction;
    std::string notes;
};

Json bundle_to_json(const ReductionBundle& b);
ReductionBundle bundle_from_json(const Json& j);

Json rounding_to_json(const RoundingResult& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace sfc
