#include "slackfc/slack.hpp"

#include "slackfc/catalog.hpp"
#include "slackfc/errors.hpp"

#include <bit>

namespace sfc {

SlackMatrix build_slack(const ProblemSpec& p, const Guarantees& g) {
    const std::vector<int> rows = sound_instances(p, g);
    SlackMatrix sm;
    sm.sense = p.sense;
    sm.row_instances = rows;
    sm.entries = Mat(static_cast<int>(rows.size()), p.num_solutions());
    sm.col_labels = p.solutions;
    sm.row_labels.reserve(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        const int f = rows[r];
        sm.row_labels.push_back(p.instances[f]);
        for (int s = 0; s < p.num_solutions(); ++s) {
            const Rat val = p.value.at(f, s);
            const Rat e = p.sense == Sense::Maximize ? Rat(g.C[f] - val) : Rat(val - g.C[f]);
            if (e < 0)
                throw GuaranteeInfeasibleError(
                    p.name + ": instance " + p.instances[f] + " at solution " +
                    p.solutions[s] + " beats the completeness bound " + rat_str(g.C[f]));
            sm.entries.at(static_cast<int>(r), s) = e;
        }
    }
    return sm;
}

namespace {

std::vector<unsigned> odd_set_masks(int n2) {
    std::vector<unsigned> masks;
    for (unsigned u = 0; u < (1u << n2); ++u)
        if (std::popcount(u) >= 3 && std::popcount(u) % 2 == 1) masks.push_back(u);
    return masks;
}

} // namespace

Mat matching_slack_submatrix(int n2) {
    if (n2 < 4 || n2 % 2 != 0 || n2 > 12)
        throw ScaleError("matching slack: needs a small even vertex count");
    const std::vector<unsigned> odd = odd_set_masks(n2);
    MatchingFamily fam = build_matching_restricted(
        n2, {}, {}, "matching-odd-sets(n2=" + std::to_string(n2) + ")");
    Mat out(static_cast<int>(odd.size()), static_cast<int>(fam.matchings.size()));
    for (size_t r = 0; r < odd.size(); ++r)
        for (size_t s = 0; s < fam.matchings.size(); ++s) {
            int cross = 0;
            for (const auto& [a, b] : fam.matchings[s]) {
                const bool ina = odd[r] >> (a - 1) & 1u, inb = odd[r] >> (b - 1) & 1u;
                if (ina != inb) ++cross;
            }
            if (cross % 2 != 1)
                throw InternalConsistencyError(
                    "a perfect matching crosses an odd set an even number of times");
            out.at(static_cast<int>(r), static_cast<int>(s)) = Rat((cross - 1) / 2);
        }
    return out;
}

std::vector<std::string> matching_odd_set_labels(int n2) {
    std::vector<std::string> labels;
    for (unsigned u : odd_set_masks(n2)) {
        std::string s = "U={";
        bool first = true;
        for (int v = 1; v <= n2; ++v)
            if (u >> (v - 1) & 1u) {
                if (!first) s += ",";
                s += std::to_string(v);
                first = false;
            }
        labels.push_back(s + "}");
    }
    return labels;
}

Mat junta_slack(int n, int k) {
    JuntaFamily fam = build_junta_family(n, k);
    Mat out(static_cast<int>(fam.masks_a.size()), 1 << n);
    for (size_t f = 0; f < fam.masks_a.size(); ++f)
        for (unsigned s = 0; s < (1u << n); ++s) {
            unsigned b = 0;
            for (int v = 1; v <= n; ++v)
                if (assignment_bit(s, n, v)) b |= 1u << (v - 1);
            const long t = std::popcount(fam.masks_a[f] & b);
            out.at(static_cast<int>(f), static_cast<int>(s)) = Rat((1 - t) * (1 - t));
        }
    return out;
}

long long count_disjoint_ones(int n, int k) {
    JuntaFamily fam = build_junta_family(n, k);
    const Mat sl = junta_slack(n, k);
    long long count = 0;
    for (size_t f = 0; f < fam.masks_a.size(); ++f)
        for (unsigned s = 0; s < (1u << n); ++s) {
            unsigned b = 0;
            for (int v = 1; v <= n; ++v)
                if (assignment_bit(s, n, v)) b |= 1u << (v - 1);
            if (sl.at(static_cast<int>(f), static_cast<int>(s)) == 1 &&
                (fam.masks_a[f] & b) == 0)
                ++count;
        }
    return count;
}

} // namespace sfc
