// Slack matrices: gap entries against hand values in both senses, sound-row
// bookkeeping, and the two closed-form constructions (matching odd-set rows
// and junta indicators).

#include "doctest.h"
#include "slackfc/catalog.hpp"
#include "slackfc/errors.hpp"
#include "slackfc/slack.hpp"

#include <bit>

using namespace sfc;

TEST_SUITE("slack") {

TEST_CASE("gap entries for a maximizing family") {
    const GraphFamily fam = build_maxcut(2);
    const Guarantees g = exact_guarantees(fam.spec);
    const SlackMatrix sm = build_slack(fam.spec, g);
    CHECK(sm.sense == Sense::Maximize);
    CHECK(sm.row_instances == std::vector<int>{0, 1});
    CHECK(sm.row_labels == std::vector<std::string>{"{}", "{1-2}"});
    CHECK(sm.col_labels.size() == 4);
    // Empty graph: constant 0. Single edge: optimum 1 minus the cut value.
    const Mat expect = Mat::from_rows({{Rat(0), Rat(0), Rat(0), Rat(0)},
                                       {Rat(1), Rat(0), Rat(0), Rat(1)}});
    CHECK(sm.entries == expect);
}

TEST_CASE("gap entries for a minimizing family") {
    const CspFamily fam = build_min_csp(MinCspKind::UnCut, 2);
    const Guarantees g = exact_guarantees(fam.spec);
    const SlackMatrix sm = build_slack(fam.spec, g);
    CHECK(sm.sense == Sense::Minimize);
    REQUIRE(sm.entries.rows() == 4);
    // Instance with the single clause x1^x2=1: unsatisfied weight is 1 on
    // uncut assignments and 0 on cuts, optimum 0.
    const int row = 2;  // pool mask 0b10
    CHECK(sm.entries.at(row, 0) == 1);
    CHECK(sm.entries.at(row, 1) == 0);
    CHECK(sm.entries.at(row, 3) == 1);
    CHECK(all_nonnegative(sm.entries));
}

TEST_CASE("loose completeness bounds shift every row") {
    const GraphFamily fam = build_maxcut(2);
    Guarantees g = exact_guarantees(fam.spec);
    g.C[1] += rat(1, 2);
    const SlackMatrix sm = build_slack(fam.spec, g);
    CHECK(sm.entries.at(1, 0) == rat(3, 2));
    CHECK(sm.entries.at(1, 1) == rat(1, 2));
}

TEST_CASE("unsound instances drop out of the rows") {
    const GraphFamily fam = build_maxcut(2);
    // Soundness 1/2 per edge rejects the single-edge graph (optimum 1).
    const Guarantees g = proportional_guarantees(fam.spec, Rat(1), rat(1, 2));
    const SlackMatrix sm = build_slack(fam.spec, g);
    CHECK(sm.row_instances == std::vector<int>{0});
    CHECK(sm.entries.rows() == 1);
    CHECK(sm.entries.cols() == 4);
}

TEST_CASE("exact guarantees put a zero in every row") {
    const GraphFamily fam = build_maxcut(3);
    const SlackMatrix sm = build_slack(fam.spec, exact_guarantees(fam.spec));
    REQUIRE(sm.entries.rows() == 8);
    for (int r = 0; r < sm.entries.rows(); ++r) {
        bool has_zero = false;
        for (int s = 0; s < sm.entries.cols(); ++s) {
            CHECK(sm.entries.at(r, s) >= 0);
            if (sm.entries.at(r, s) == 0) has_zero = true;
        }
        CHECK(has_zero);
    }
}

TEST_CASE("guarantee order is validated before building") {
    const GraphFamily fam = build_maxcut(2);
    Guarantees g = exact_guarantees(fam.spec);
    g.C[1] = 0;  // below S[1] = 1 in a maximizing family
    CHECK_THROWS_AS(build_slack(fam.spec, g), GuaranteeOrderError);
}

TEST_CASE("matching odd-set rows at n2=4 are all zero") {
    const Mat sl = matching_slack_submatrix(4);
    // Four odd sets of size 3, three perfect matchings; each matching can
    // cross a 3-set only once, so every entry is (1-1)/2 = 0.
    CHECK(sl.rows() == 4);
    CHECK(sl.cols() == 3);
    CHECK(is_zero(sl));
    CHECK(matching_odd_set_labels(4).size() == 4);
    CHECK(matching_odd_set_labels(4)[0] == "U={1,2,3}");
}

TEST_CASE("matching odd-set rows at n2=6 against the crossing count") {
    const Mat sl = matching_slack_submatrix(6);
    const MatchingFamily fam = build_matching(6);
    const auto labels = matching_odd_set_labels(6);
    REQUIRE(sl.rows() == 26);  // 20 sets of size 3 plus 6 of size 5
    REQUIRE(sl.cols() == 15);
    CHECK(labels.size() == 26);

    // Row 0 is U={1,2,3}; the matching {1-4,2-5,3-6} crosses it three times.
    CHECK(labels[0] == "U={1,2,3}");
    int m = -1;
    for (size_t s = 0; s < fam.matchings.size(); ++s)
        if (fam.matchings[s] ==
            std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}})
            m = static_cast<int>(s);
    REQUIRE(m >= 0);
    CHECK(sl.at(0, m) == 1);
    CHECK(all_nonnegative(sl));
}

TEST_CASE("junta slack entries are squared gaps") {
    const Mat sl = junta_slack(5, 2);
    const JuntaFamily fam = build_junta_family(5, 2);
    REQUIRE(sl.rows() == 10);
    REQUIRE(sl.cols() == 32);
    for (int f = 0; f < sl.rows(); ++f)
        for (unsigned s = 0; s < 32; ++s) {
            unsigned b = 0;
            for (int v = 1; v <= 5; ++v)
                if (assignment_bit(s, 5, v)) b |= 1u << (v - 1);
            const long t = std::popcount(fam.masks_a[static_cast<size_t>(f)] & b);
            CHECK(sl.at(f, static_cast<int>(s)) == Rat((1 - t) * (1 - t)));
        }
}

TEST_CASE("disjoint ones count matches the closed form") {
    // Entry 1 with disjoint masks means t=0; the complement of a 2-set in
    // [5] has 2^3 subsets, against binom(5,2) choices of a.
    CHECK(count_disjoint_ones(5, 2) == 80);
    CHECK(count_disjoint_ones(4, 2) == 6 * 4);
}

TEST_CASE("scale guards on the closed forms") {
    CHECK_THROWS_AS(matching_slack_submatrix(3), ScaleError);
    CHECK_THROWS_AS(matching_slack_submatrix(14), ScaleError);
}

} // TEST_SUITE
