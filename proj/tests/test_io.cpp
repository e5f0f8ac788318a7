// Serialization round trips with exact rationals, dispatch by extension,
// and the rejection paths for malformed input. Every structure that the
// command-line tool writes gets parsed back and re-verified here.

#include "doctest.h"
#include "slackfc/catalog.hpp"
#include "slackfc/errors.hpp"
#include "slackfc/gadgets.hpp"
#include "slackfc/io.hpp"
#include "slackfc/rank.hpp"

#include <cstdio>
#include <string>

using namespace sfc;

namespace {

Mat sample_matrix() {
    return Mat::from_rows({{rat(1, 2), Rat(-3)}, {Rat(0), rat(7, 9)}});
}

LPFactorization trivial_factorization(const Mat& m) {
    LPFactorization f;
    f.T = m;
    f.U = Mat::identity(m.cols());
    f.mu.assign(static_cast<size_t>(m.rows()), Rat(0));
    return f;
}

// Unique-ish scratch path; removed by the caller.
std::string scratch(const std::string& name) {
    return std::string("/tmp/slackfc_io_test_") + name;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("matrix JSON keeps every entry exact") {
    const Mat m = sample_matrix();
    const Json j = matrix_to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 2);
    CHECK(j["entries"][0][0] == "1/2");
    CHECK(j["entries"][0][1] == "-3");
    CHECK(matrix_from_json(j) == m);

    // Plain JSON integers are accepted on the way in.
    const Json mixed = parse_json(R"({"rows":1,"cols":2,"entries":[[3,"5/2"]]})");
    CHECK(matrix_from_json(mixed) == Mat::from_rows({{Rat(3), rat(5, 2)}}));
}

TEST_CASE("matrix CSV round trip") {
    const Mat m = sample_matrix();
    const std::string csv = matrix_to_csv(m);
    CHECK(csv == "1/2,-3\n0,7/9\n");
    CHECK(matrix_from_csv(csv) == m);
    // Carriage returns and blank lines are tolerated.
    CHECK(matrix_from_csv("1,2\r\n\r\n3,4\r\n") == Mat::from_rows({{Rat(1), Rat(2)},
                                                                  {Rat(3), Rat(4)}}));
    CHECK(matrix_from_csv("").rows() == 0);
}

TEST_CASE("malformed input is rejected with the library error types") {
    CHECK_THROWS_AS(parse_json("{"), Error);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"rows":1})")), Error);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"rows":2,"cols":1,"entries":[["1"]]})")),
                    ShapeError);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"rows":1,"cols":2,"entries":[["1"]]})")),
                    ShapeError);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"rows":-1,"cols":1,"entries":[]})")),
                    ShapeError);
    CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n"), ShapeError);
    CHECK_THROWS_AS(matrix_from_csv("1,zzz\n"), Error);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"rows":1,"cols":1,"entries":[["1/0"]]})")),
                    Error);
}

TEST_CASE("factorization round trip verifies against its matrix") {
    const GraphFamily fam = build_maxcut(2);
    const Mat m = build_slack(fam.spec, exact_guarantees(fam.spec)).entries;
    const LPFactorization f = trivial_factorization(m);
    const Json j = factorization_to_json(f);
    CHECK(j["size"] == f.size());
    const LPFactorization back = factorization_from_json(j);
    CHECK(back.T == f.T);
    CHECK(back.U == f.U);
    CHECK(back.mu == f.mu);
    CHECK(verify_lp_factorization(m, back));
}

TEST_CASE("problem round trip re-validates") {
    const ProblemSpec p = build_maxcut(2).spec;
    const Json j = problem_to_json(p);
    const ProblemSpec back = problem_from_json(j);
    CHECK(back.name == p.name);
    CHECK(back.sense == p.sense);
    CHECK(back.solutions == p.solutions);
    CHECK(back.instances == p.instances);
    CHECK(back.value == p.value);
    CHECK(back.size_of == p.size_of);

    Json broken = j;
    broken["instances"] = Json::array({"only-one"});
    CHECK_THROWS_AS(problem_from_json(broken), Error);
}

TEST_CASE("guarantees and reductions round trip") {
    Guarantees g;
    g.C = {Rat(3), rat(7, 2)};
    g.S = {Rat(1), rat(5, 2)};
    const Guarantees gback = guarantees_from_json(guarantees_to_json(g));
    CHECK(gback.C == g.C);
    CHECK(gback.S == g.S);

    Reduction r;
    r.sense1 = Sense::Maximize;
    r.sense2 = Sense::Minimize;
    r.beta = {{{0, rat(1, 3)}, {2, Rat(4)}}, {}};
    r.shift = {rat(-5, 2), Rat(0)};
    r.gamma = {{{1, Rat(1)}}, {{0, rat(1, 2)}, {1, rat(1, 2)}}};
    const Reduction rback = reduction_from_json(reduction_to_json(r));
    CHECK(rback.sense1 == r.sense1);
    CHECK(rback.sense2 == r.sense2);
    CHECK(rback.beta == r.beta);
    CHECK(rback.shift == r.shift);
    CHECK(rback.gamma == r.gamma);
}

TEST_CASE("a serialized bundle still certifies") {
    const GadgetResult g = maxcut_to_dicut(2);
    ReductionBundle b;
    b.name = g.name;
    b.source = g.source;
    b.source_guarantees = g.source_guarantees;
    b.target = g.target;
    b.target_guarantees = g.target_guarantees;
    b.reduction = g.reduction;
    b.notes = g.notes;

    const Json j = bundle_to_json(b);
    const ReductionBundle back = bundle_from_json(j);
    CHECK(back.name == b.name);
    CHECK(back.notes == b.notes);
    const ReductionReport report =
        verify_reduction(back.source, back.source_guarantees, back.target,
                         back.target_guarantees, back.reduction);
    CHECK(report.ok);
    CHECK(report.violations.empty());

    Json no_notes = j;
    no_notes.erase("notes");
    CHECK(bundle_from_json(no_notes).notes.empty());
}

TEST_CASE("report serializations expose their key fields") {
    const GraphFamily fam = build_maxcut(2);
    const Guarantees g = exact_guarantees(fam.spec);
    const SlackMatrix sm = build_slack(fam.spec, g);
    const Json js = slack_to_json(sm);
    CHECK(js["sense"] == "max");
    CHECK(js["rows"] == 2);
    CHECK(js["entries"][1][0] == "1");

    const RankInterval ri = lp_rank_bounds(Mat::identity(2), RankBudget{});
    const Json jr = rank_interval_to_json(ri);
    CHECK(jr["lower"] == 2);
    CHECK(jr["upper"] == 2);
    CHECK(jr.contains("certificate_upper"));
    CHECK(jr["certificate_lower"].is_string());

    const RoundingResult rr =
        round_to_problem(fam.spec, g, sm.entries, trivial_factorization(sm.entries));
    const Json jo = rounding_to_json(rr);
    CHECK(jo["k"] == 0);
    CHECK(jo["eps"] == "0");
    CHECK(jo.contains("certificate"));
}

TEST_CASE("file round trips dispatch on the extension") {
    const Mat m = sample_matrix();
    const std::string jpath = scratch("m.json");
    const std::string cpath = scratch("m.csv");
    save_matrix(jpath, m);
    save_matrix(cpath, m);
    CHECK(load_matrix(jpath) == m);
    CHECK(load_matrix(cpath) == m);
    // The JSON file is indented text ending in a newline.
    const std::string text = read_text_file(jpath);
    CHECK(text.find("\"entries\"") != std::string::npos);
    CHECK(!text.empty());
    CHECK(text.back() == '\n');
    std::remove(jpath.c_str());
    std::remove(cpath.c_str());

    CHECK_THROWS_AS(read_text_file(scratch("missing.json")), Error);
}

} // TEST_SUITE
