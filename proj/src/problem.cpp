#include "slackfc/problem.hpp"

#include "slackfc/errors.hpp"

namespace sfc {

std::string sense_str(Sense s) {
    return s == Sense::Maximize ? "max" : "min";
}

Sense sense_parse(const std::string& text) {
    if (text == "max" || text == "maximize") return Sense::Maximize;
    if (text == "min" || text == "minimize") return Sense::Minimize;
    throw IdentifierError("unknown sense '" + text + "'");
}

int ProblemSpec::solution_index(const std::string& id) const {
    auto it = sol_idx_.find(id);
    if (it == sol_idx_.end())
        throw IdentifierError("unknown solution id '" + id + "' in " + name);
    return it->second;
}

int ProblemSpec::instance_index(const std::string& id) const {
    auto it = inst_idx_.find(id);
    if (it == inst_idx_.end())
        throw IdentifierError("unknown instance id '" + id + "' in " + name);
    return it->second;
}

void ProblemSpec::validate() {
    sol_idx_.clear();
    inst_idx_.clear();
    sol_idx_.reserve(solutions.size());
    inst_idx_.reserve(instances.size());
    for (size_t i = 0; i < solutions.size(); ++i)
        if (!sol_idx_.emplace(solutions[i], static_cast<int>(i)).second)
            throw IdentifierError("duplicate solution id '" + solutions[i] + "' in " + name);
    for (size_t i = 0; i < instances.size(); ++i)
        if (!inst_idx_.emplace(instances[i], static_cast<int>(i)).second)
            throw IdentifierError("duplicate instance id '" + instances[i] + "' in " + name);
    if (value.rows() != num_instances() || value.cols() != num_solutions())
        throw ShapeError("value table shape does not match index sets in " + name);
    if (static_cast<int>(size_of.size()) != num_instances())
        throw ShapeError("size list does not match instance count in " + name);
    for (const Rat& s : size_of)
        if (s < 0) throw ShapeError("negative instance size in " + name);
    if (num_solutions() == 0)
        throw ShapeError("a problem needs at least one solution: " + name);
}

Rat eval_value(const ProblemSpec& p, int f, int s) { return p.value.at(f, s); }

Rat eval_value(const ProblemSpec& p, const std::string& f, const std::string& s) {
    return p.value.at(p.instance_index(f), p.solution_index(s));
}

Optimum brute_force_optimum_witness(const ProblemSpec& p, int f) {
    Optimum best{p.value.at(f, 0), 0};
    for (int s = 1; s < p.num_solutions(); ++s) {
        const Rat& v = p.value.at(f, s);
        const bool better = (p.sense == Sense::Maximize) ? v > best.value : v < best.value;
        if (better) best = Optimum{v, s};
    }
    // The witness is part of the contract: re-check it before returning.
    if (best.value != p.value.at(f, best.witness))
        throw InternalConsistencyError("optimum witness does not reproduce the optimum");
    return best;
}

Rat brute_force_optimum(const ProblemSpec& p, int f) {
    return brute_force_optimum_witness(p, f).value;
}

Rat brute_force_optimum(const ProblemSpec& p, const std::string& f) {
    return brute_force_optimum(p, p.instance_index(f));
}

Guarantees proportional_guarantees(const ProblemSpec& p, const Rat& tau, const Rat& sigma) {
    Guarantees g;
    g.C.reserve(p.num_instances());
    g.S.reserve(p.num_instances());
    for (int f = 0; f < p.num_instances(); ++f) {
        g.C.push_back(tau * p.size_of[f]);
        g.S.push_back(sigma * p.size_of[f]);
    }
    validate_guarantees(p, g);
    return g;
}

Guarantees exact_guarantees(const ProblemSpec& p) {
    Guarantees g;
    g.C.reserve(p.num_instances());
    for (int f = 0; f < p.num_instances(); ++f) g.C.push_back(brute_force_optimum(p, f));
    g.S = g.C;
    return g;
}

void validate_guarantees(const ProblemSpec& p, const Guarantees& g) {
    if (static_cast<int>(g.C.size()) != p.num_instances() ||
        static_cast<int>(g.S.size()) != p.num_instances())
        throw ShapeError("guarantee vectors do not match instance count in " + p.name);
    for (int f = 0; f < p.num_instances(); ++f) {
        const bool ok = (p.sense == Sense::Maximize) ? g.C[f] >= g.S[f] : g.C[f] <= g.S[f];
        if (!ok)
            throw GuaranteeOrderError(
                "guarantee order violated on instance '" + p.instances[f] + "': C=" +
                rat_str(g.C[f]) + " S=" + rat_str(g.S[f]) + " sense=" + sense_str(p.sense));
    }
}

std::vector<int> sound_instances(const ProblemSpec& p, const Guarantees& g) {
    validate_guarantees(p, g);
    std::vector<int> out;
    for (int f = 0; f < p.num_instances(); ++f) {
        const Rat opt = brute_force_optimum(p, f);
        const bool sound = (p.sense == Sense::Maximize) ? opt <= g.S[f] : opt >= g.S[f];
        if (sound) out.push_back(f);
    }
    return out;
}

std::vector<std::string> sound_instance_ids(const ProblemSpec& p, const Guarantees& g) {
    std::vector<std::string> out;
    for (int f : sound_instances(p, g)) out.push_back(p.instances[f]);
    return out;
}

} // namespace sfc
