#pragma once
// Finite optimization problems with exact rational objectives. A problem is
// a finite solution set, a finite instance set, a total value table and a
// size measure per instance. Guarantee pairs (C, S) attach approximation
// statements to a problem; the brute-force oracles here are the ground
// truth every other module is checked against.

#include "slackfc/matrix.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace sfc {

enum class Sense { Maximize, Minimize };

std::string sense_str(Sense s);
Sense sense_parse(const std::string& text);

class ProblemSpec {
public:
    std::string name;                    // family tag, e.g. "maxcut(n=3)"
    Sense sense = Sense::Maximize;
    std::vector<std::string> solutions;  // ordered, duplicate-free labels
    std::vector<std::string> instances;  // ordered, duplicate-free labels
    Mat value;                           // value.at(f, s) for instance f, solution s
    std::vector<Rat> size_of;            // per instance, nonnegative

    int num_solutions() const { return static_cast<int>(solutions.size()); }
    int num_instances() const { return static_cast<int>(instances.size()); }

    // Label lookup; IdentifierError when unknown.
    int solution_index(const std::string& id) const;
    int instance_index(const std::string& id) const;

    // Checks labels are unique, the value table matches the index sets and
    // sizes are nonnegative. Builders call this once at the end.
    void validate();

private:
    std::unordered_map<std::string, int> sol_idx_, inst_idx_;
};

struct Guarantees {
    Vec C;  // guarantee per instance
    Vec S;  // soundness threshold per instance
};

Rat eval_value(const ProblemSpec& p, int f, int s);
Rat eval_value(const ProblemSpec& p, const std::string& f, const std::string& s);

struct Optimum {
    Rat value;
    int witness;  // index of an optimal solution
};

Optimum brute_force_optimum_witness(const ProblemSpec& p, int f);
Rat brute_force_optimum(const ProblemSpec& p, int f);
Rat brute_force_optimum(const ProblemSpec& p, const std::string& f);

// C(f) = tau * size(f), S(f) = sigma * size(f); GuaranteeOrderError when the
// pair violates the sense order on some instance.
Guarantees proportional_guarantees(const ProblemSpec& p, const Rat& tau, const Rat& sigma);

// C(f) = S(f) = optimum of f; always order-valid.
Guarantees exact_guarantees(const ProblemSpec& p);

// Shape and order checks for an externally supplied pair.
void validate_guarantees(const ProblemSpec& p, const Guarantees& g);

// Indices of instances whose true optimum satisfies the soundness threshold
// (optimum <= S(f) when maximizing, >= S(f) when minimizing), in instance
// order.
std::vector<int> sound_instances(const ProblemSpec& p, const Guarantees& g);
std::vector<std::string> sound_instance_ids(const ProblemSpec& p, const Guarantees& g);

} // namespace sfc
