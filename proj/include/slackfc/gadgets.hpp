// Concrete certified reductions between the catalog families. Every builder
// returns the source and target problems with exact optimum guarantees, a
// Reduction that has already passed verify_reduction and the slack-matrix
// identity check, and a notes string with the measured constants.
#pragma once

#include "slackfc/catalog.hpp"
#include "slackfc/problem.hpp"
#include "slackfc/reduce.hpp"

#include <string>
#include <vector>

namespace sfc {

struct GadgetResult {
    std::string name;
    ProblemSpec source;
    Guarantees source_guarantees;
    ProblemSpec target;
    Guarantees target_guarantees;
    Reduction reduction;
    std::string notes;
};

// Cuts of a bounded-degree graph expressed through covers (resp. independent
// sets) of the conflict graph of partial assignments: instance K maps to the
// induced subgraph H(K) on the assignments over E(K), solution s to the set
// of assignments incompatible (resp. compatible) with s.
GadgetResult maxcut_to_vertexcover(int n, int delta, const Rat& eps);
GadgetResult maxcut_to_maxindep(int n, int delta, const Rat& eps);

// Cuts into k-way multicuts: each source edge becomes a bundle of almost
// complete graphs on k+2 vertices wired through k-2 shared negative vertices.
GadgetResult maxcut_to_multicut(int n, int k);

// Clause-level rewritings of weighted cut constraints.
GadgetResult maxcut_to_max2sat(int n);
GadgetResult maxcut_to_dicut(int n);
GadgetResult maxcut_to_minuncut(int n);
GadgetResult maxcut_to_min2cnf(int n);

// Parity constraints as conjunction pairs, and as a subfamily of the full
// two-variable constraint language.
GadgetResult xor2_to_conjsat(int n);
GadgetResult maxcsp2_embed_xor2(int n);

// Perfect matchings weighted by a subgraph of K_n2 expressed through
// heaviest Hamiltonian cycles on the doubled vertex set.
GadgetResult matching_to_hamiltonian(int n2);

// Per-cycle accounting for the doubled-graph construction: split the cycle's
// ladder-side edges by the components they induce on the 0-side and bound
// each weight class separately.
struct HamiltonianCycleStats {
    int k = 0;  // 0-side components whose edges all lie in G
    int l = 0;  // 0-side components using at least one non-G edge
    int m = 0;  // isolated 0-side vertices
    int zero_side_edges = 0;
    Rat zero_side_weight;
    int one_side_edges = 0;
    Rat one_side_weight;
    Rat cross_weight;
    Rat total_weight;
};

HamiltonianCycleStats analyze_hamiltonian_cycle(
    int n2, const GraphSimple& g, const std::vector<std::pair<int, int>>& cycle);

// The deterministic cycle completing rungs plus the 0-side matching edges
// with the lexicographically smallest 1-side connection.
std::vector<std::pair<int, int>> hamiltonian_cycle_for_matching(
    int n2, const std::vector<std::pair<int, int>>& matching);

// H(K) as a vertex mask of conflict_graph(n) for an edge set on [n].
unsigned conflict_subgraph_mask(int n, const GraphSimple& k);

} // namespace sfc
