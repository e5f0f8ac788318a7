// Batch front end over the library: build slack matrices, certify reductions
// and gadgets, bound ranks, run the formulation round trip, repair perturbed
// matrices and export certification bundles. All numeric flags are exact
// rationals; exit 0 on success, 1 on a failed certification, 2 on any error.

#include "CLI11.hpp"

#include "slackfc/catalog.hpp"
#include "slackfc/errors.hpp"
#include "slackfc/factor.hpp"
#include "slackfc/gadgets.hpp"
#include "slackfc/io.hpp"
#include "slackfc/rank.hpp"
#include "slackfc/reduce.hpp"
#include "slackfc/rounding.hpp"
#include "slackfc/slack.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace sfc;

struct Params {
    int n = 0;   // 0 means "use the command's default"
    int k = 0;
    int n2 = 4;
    int delta = 2;
    std::string eps = "1/4";
    std::string tau, sigma;
    bool exact = false;
    bool no_shift = false;
    std::string problem, gadget;
    std::string matrix_path, mtilde_path, reduction_path, seed_path, out_path;
};

void emit(const Json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

long long comb2(long long n) { return n * (n - 1) / 2; }

ProblemSpec build_problem(const std::string& name, const Params& prm) {
    const int n = prm.n ? prm.n : 3;
    if (name == "maxcut") return build_maxcut(n).spec;
    if (name == "weighted-cut") return build_weighted_cut(n).spec;
    if (name == "weighted-cut-half") return build_weighted_cut(n, true).spec;
    if (name == "xor2") return build_csp(ClauseKind::Xor, n, 2).spec;
    if (name == "max2sat")
        return build_csp(ClauseKind::Sat, n, 2, std::nullopt, static_cast<int>(2 * comb2(n)))
            .spec;
    if (name == "dicut") return build_csp(ClauseKind::Dicut, n, 2).spec;
    if (name == "matching") return build_matching(prm.n2).spec;
    if (name == "indep-uniform") return build_indep_uniform(n).spec;
    throw IdentifierError("unknown problem '" + name + "'");
}

Guarantees pick_guarantees(const ProblemSpec& p, const Params& prm) {
    if (!prm.exact && (!prm.tau.empty() || !prm.sigma.empty())) {
        const Rat tau = prm.tau.empty() ? Rat(1) : rat_parse(prm.tau);
        const Rat sigma = prm.sigma.empty() ? Rat(1) : rat_parse(prm.sigma);
        return proportional_guarantees(p, tau, sigma);
    }
    return exact_guarantees(p);
}

GadgetResult make_gadget(const std::string& name, const Params& prm) {
    const int n = prm.n ? prm.n : (name == "maxcut-to-multicut" ? 2 : 3);
    const int k = prm.k ? prm.k : 3;
    if (name == "maxcut-to-vertexcover")
        return maxcut_to_vertexcover(n, prm.delta, rat_parse(prm.eps));
    if (name == "maxcut-to-maxindep")
        return maxcut_to_maxindep(n, prm.delta, rat_parse(prm.eps));
    if (name == "maxcut-to-multicut") return maxcut_to_multicut(n, k);
    if (name == "maxcut-to-max2sat") return maxcut_to_max2sat(n);
    if (name == "maxcut-to-dicut") return maxcut_to_dicut(n);
    if (name == "maxcut-to-minuncut") return maxcut_to_minuncut(n);
    if (name == "maxcut-to-min2cnf") return maxcut_to_min2cnf(n);
    if (name == "xor2-to-conjsat") return xor2_to_conjsat(n);
    if (name == "maxcsp2-embed-xor2") return maxcsp2_embed_xor2(n);
    if (name == "matching-to-hamiltonian") return matching_to_hamiltonian(prm.n2);
    throw IdentifierError("unknown gadget '" + name + "'");
}

ReductionBundle bundle_of(GadgetResult g) {
    ReductionBundle b;
    b.name = std::move(g.name);
    b.source = std::move(g.source);
    b.source_guarantees = std::move(g.source_guarantees);
    b.target = std::move(g.target);
    b.target_guarantees = std::move(g.target_guarantees);
    b.reduction = std::move(g.reduction);
    b.notes = std::move(g.notes);
    return b;
}

int cmd_slack(const Params& prm) {
    if (prm.problem == "junta") {
        const int n = prm.n ? prm.n : 5;
        const int k = prm.k ? prm.k : 2;
        const Mat m = junta_slack(n, k);
        std::cout << "junta slack: " << m.rows() << "x" << m.cols()
                  << ", ones on disjoint mask pairs: " << count_disjoint_ones(n, k) << "\n";
        if (!prm.out_path.empty()) save_matrix(prm.out_path, m);
        return 0;
    }
    const ProblemSpec p = build_problem(prm.problem, prm);
    const Guarantees g = pick_guarantees(p, prm);
    const SlackMatrix sm = build_slack(p, g);
    int rows_with_zero = 0;
    for (int i = 0; i < sm.entries.rows(); ++i) {
        bool zero = false;
        for (int j = 0; j < sm.entries.cols() && !zero; ++j)
            if (sm.entries.at(i, j) == 0) zero = true;
        rows_with_zero += zero ? 1 : 0;
    }
    std::cout << p.name << " slack: " << sm.entries.rows() << "x" << sm.entries.cols()
              << " (" << p.num_instances() << " instances, "
              << sm.entries.rows() << " sound), rows with a zero entry: "
              << rows_with_zero << "/" << sm.entries.rows() << "\n";
    if (!prm.out_path.empty()) {
        if (prm.out_path.size() >= 4 &&
            prm.out_path.substr(prm.out_path.size() - 4) == ".csv")
            save_matrix(prm.out_path, sm.entries);
        else
            write_text_file(prm.out_path, slack_to_json(sm).dump(2) + "\n");
    }
    return 0;
}

int certify_bundle(const ReductionBundle& b, const std::string& out_path) {
    const ReductionReport rep = verify_reduction(b.source, b.source_guarantees, b.target,
                                                 b.target_guarantees, b.reduction);
    Json j;
    j["name"] = b.name;
    j["source"] = b.source.name;
    j["source_instances"] = b.source.num_instances();
    j["source_solutions"] = b.source.num_solutions();
    j["target"] = b.target.name;
    j["target_instances"] = b.target.num_instances();
    j["target_solutions"] = b.target.num_solutions();
    j["value_checks"] = rep.value_checks;
    j["guarantee_checks"] = rep.guarantee_checks;
    j["ok"] = rep.ok;
    if (!rep.ok) {
        const ReductionViolation& v = rep.violations.front();
        Json w;
        w["kind"] = v.kind;
        w["instance"] = b.source.instances[static_cast<size_t>(v.f1)];
        if (v.s1 >= 0) w["solution"] = b.source.solutions[static_cast<size_t>(v.s1)];
        w["actual"] = rat_str(v.actual);
        w["expected"] = rat_str(v.expected);
        j["violations"] = rep.violations.size();
        j["first_violation"] = w;
        emit(j, out_path);
        std::cerr << "certification failed: " << v.kind << " at instance '"
                  << b.source.instances[static_cast<size_t>(v.f1)] << "'";
        if (v.s1 >= 0)
            std::cerr << ", solution '" << b.source.solutions[static_cast<size_t>(v.s1)]
                      << "'";
        std::cerr << ": " << rat_str(v.actual) << " vs " << rat_str(v.expected) << "\n";
        return 1;
    }
    const MatrixReduction mr = matrix_reduction(b.source, b.source_guarantees, b.target,
                                                b.target_guarantees, b.reduction);
    Json m;
    m["R"] = Json::array({mr.R.rows(), mr.R.cols()});
    m["C"] = Json::array({mr.Cm.rows(), mr.Cm.cols()});
    Rat tmin = mr.t.empty() ? Rat(0) : mr.t.front();
    for (const Rat& v : mr.t) tmin = std::min(tmin, v);
    m["t_min"] = rat_str(tmin);
    j["matrix_reduction"] = m;
    j["notes"] = b.notes;
    emit(j, out_path);
    return 0;
}

int cmd_certify(const Params& prm) {
    if (!prm.gadget.empty() && !prm.reduction_path.empty())
        throw Error("pass either --gadget or --reduction, not both");
    if (!prm.gadget.empty())
        return certify_bundle(bundle_of(make_gadget(prm.gadget, prm)), prm.out_path);
    if (!prm.reduction_path.empty())
        return certify_bundle(bundle_from_json(parse_json(read_text_file(prm.reduction_path))),
                              prm.out_path);
    throw Error("certify needs --gadget or --reduction");
}

int cmd_rank(const Params& prm) {
    const Mat m = load_matrix(prm.matrix_path);
    std::optional<LPFactorization> seed;
    if (!prm.seed_path.empty())
        seed = factorization_from_json(parse_json(read_text_file(prm.seed_path)));
    const RankBudget budget = RankBudget::from_env();
    const RankInterval ri =
        lp_rank_bounds(m, budget, !prm.no_shift, seed ? &*seed : nullptr);
    emit(rank_interval_to_json(ri), prm.out_path);
    return 0;
}

int cmd_roundtrip(const Params& prm) {
    const ProblemSpec p = build_problem(prm.problem, prm);
    const Guarantees g = pick_guarantees(p, prm);
    const SlackMatrix sm = build_slack(p, g);
    LPFactorization f;
    f.T = sm.entries;
    f.U = Mat::identity(sm.entries.cols());
    f.mu = Vec(static_cast<size_t>(sm.entries.rows()), Rat(0));
    if (!verify_lp_factorization(sm, f))
        throw InternalConsistencyError("trivial factorization fails to verify");
    const LPFormulation form = formulation_from_factorization(p, g, f);
    const LPFactorization back = factorization_from_formulation(p, g, form);
    if (back.size() > form.A.rows())
        throw InternalConsistencyError("extracted size exceeds the inequality count");
    Json j;
    j["problem"] = p.name;
    j["slack"] = Json::array({sm.entries.rows(), sm.entries.cols()});
    j["factorization_size"] = f.size();
    j["inequalities"] = form.A.rows();
    j["extracted_size"] = back.size();
    j["ok"] = true;
    emit(j, prm.out_path);
    return 0;
}

int cmd_round(const Params& prm) {
    const ProblemSpec p = build_problem(prm.problem, prm);
    const Guarantees g = pick_guarantees(p, prm);
    const Mat mtilde = load_matrix(prm.mtilde_path);
    LPFactorization f;
    f.T = mtilde;
    f.U = Mat::identity(mtilde.cols());
    f.mu = Vec(static_cast<size_t>(mtilde.rows()), Rat(0));
    const RoundingResult res = round_to_problem(p, g, mtilde, f);
    emit(rounding_to_json(res), prm.out_path);
    return 0;
}

int cmd_export(const Params& prm) {
    if (prm.out_path.empty()) throw Error("export needs --out");
    if (!prm.gadget.empty()) {
        emit(bundle_to_json(bundle_of(make_gadget(prm.gadget, prm))), prm.out_path);
        return 0;
    }
    if (!prm.problem.empty()) {
        const ProblemSpec p = build_problem(prm.problem, prm);
        const Guarantees g = pick_guarantees(p, prm);
        emit(slack_to_json(build_slack(p, g)), prm.out_path);
        return 0;
    }
    throw Error("export needs --gadget or --problem");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact slack-matrix toolkit: build, factorize, reduce, certify"};
    app.require_subcommand(1);
    Params prm;

    CLI::App* slack = app.add_subcommand("slack", "Build a slack matrix");
    slack->add_option("--problem", prm.problem, "Problem family")->required();
    CLI::App* certify = app.add_subcommand("certify", "Verify a reduction or gadget");
    certify->add_option("--gadget", prm.gadget, "Named gadget");
    certify->add_option("--reduction", prm.reduction_path, "Certification bundle JSON");
    CLI::App* rank = app.add_subcommand("rank", "Certified rank interval of a matrix");
    rank->add_option("--matrix", prm.matrix_path, "Matrix file (.json or .csv)")->required();
    rank->add_option("--seed", prm.seed_path, "Starting factorization JSON");
    rank->add_flag("--no-shift", prm.no_shift, "Bound the plain nonnegative rank");
    CLI::App* roundtrip =
        app.add_subcommand("roundtrip", "Factorization to formulation and back");
    roundtrip->add_option("--problem", prm.problem, "Problem family")->required();
    CLI::App* round = app.add_subcommand("round", "Repair a perturbed slack matrix");
    round->add_option("--problem", prm.problem, "Problem family")->required();
    round->add_option("--mtilde", prm.mtilde_path, "Perturbed matrix file")->required();
    CLI::App* exportc = app.add_subcommand("export", "Write a bundle or slack matrix");
    exportc->add_option("--gadget", prm.gadget, "Named gadget");
    exportc->add_option("--problem", prm.problem, "Problem family");

    for (CLI::App* sub : {slack, certify, rank, roundtrip, round, exportc}) {
        sub->add_option("--n", prm.n, "Primary size parameter");
        sub->add_option("--k", prm.k, "Secondary size parameter");
        sub->add_option("--n2", prm.n2, "Even vertex count for matching problems");
        sub->add_option("--delta", prm.delta, "Degree bound");
        sub->add_option("--eps", prm.eps, "Guarantee margin, rational");
        sub->add_option("--tau", prm.tau, "Completeness factor, rational");
        sub->add_option("--sigma", prm.sigma, "Soundness factor, rational");
        sub->add_flag("--exact", prm.exact, "Use exact optimum guarantees");
        sub->add_option("--out", prm.out_path, "Output file");
    }

    CLI11_PARSE(app, argc, argv);
    try {
        if (slack->parsed()) return cmd_slack(prm);
        if (certify->parsed()) return cmd_certify(prm);
        if (rank->parsed()) return cmd_rank(prm);
        if (roundtrip->parsed()) return cmd_roundtrip(prm);
        if (round->parsed()) return cmd_round(prm);
        if (exportc->parsed()) return cmd_export(prm);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
