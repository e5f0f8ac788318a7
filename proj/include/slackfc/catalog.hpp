#pragma once
// Generators for the concrete problem families: boolean CSPs (max and min
// flavors), cuts and multiway cuts, vertex covers and independent sets on a
// host graph, perfect matchings, weighted Hamiltonian cycles, and the
// junta-indicator family. Every generator fixes a deterministic enumeration
// order at construction and refuses to enumerate past hard limits
// (ScaleError) instead of silently exploding.

#include "slackfc/problem.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sfc {

// Enumeration guards; environment variables SLACKFC_MAX_SOLUTIONS,
// SLACKFC_MAX_INSTANCES and SLACKFC_MAX_ENTRIES override the defaults.
struct EnumLimits {
    long long max_solutions = 2'000'000;
    long long max_instances = 300'000;
    long long max_entries = 24'000'000;
    static EnumLimits get();
};

// ---------------------------------------------------------------------------
// Graphs. Vertices are 1-based; edge lists are sorted pairs (i < j) in
// lexicographic order.

struct GraphSimple {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

struct WeightedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Rat> weights;  // parallel to edges
};

std::vector<std::pair<int, int>> complete_graph_edges(int n);
GraphSimple graph_from_mask(int n, unsigned long long mask);
std::string graph_label(const GraphSimple& g);
int graph_max_degree(const GraphSimple& g);
bool graph_has_edge(const GraphSimple& g, int u, int v);

// ---------------------------------------------------------------------------
// Boolean assignments. Solution index s encodes x_1..x_n with x_1 in the top
// bit, so index order equals lexicographic order of assignment tuples.

int assignment_bit(unsigned s, int n, int var);           // value of x_var
std::string assignment_label(unsigned s, int n);          // e.g. "011"
std::vector<std::string> assignment_labels(int n);

// ---------------------------------------------------------------------------
// Clauses. One compact struct covers every kind; `tag` is a parity bit for
// Xor, a negation mask for Sat/Conj (bit t set = literal on vars[t]
// negated), unused for Dicut (vars ordered: "not x_a and x_b"), and a truth
// table mask for Csp2 (bit t = value on the assignment encoded by t, first
// variable in the high bit).

enum class ClauseKind { Xor, Sat, Dicut, Conj, Csp2 };

struct Clause {
    std::vector<int> vars;
    int tag = 0;
};

bool clause_satisfied(ClauseKind kind, const Clause& c, unsigned s, int n);
std::string clause_text(ClauseKind kind, const Clause& c);

struct CspFamily {
    ProblemSpec spec;
    ClauseKind kind;
    int n = 0;
    int k = 0;
    std::vector<Clause> pool;                        // canonical clause order
    std::vector<std::vector<int>> instance_clauses;  // pool indices per instance
    std::vector<Vec> instance_weights;               // parallel weights
};

// Max-CSP families. Instances are clause subsets with unit weights,
// optionally filtered by variable occurrence (degree_bound) and capped by
// subset size (max_clauses_per_instance); the objective is the number of
// satisfied clauses and the size measure is the clause count.
CspFamily build_csp(ClauseKind kind, int n, int k = 2,
                    std::optional<int> degree_bound = {},
                    std::optional<int> max_clauses_per_instance = {});

// Min-CSP families over XOR-2 equations (UnCut) or 2-literal disjunctions
// (TwoCnf): the objective is the weight of unsatisfied clauses. By default
// instances are the 0/1-weight clause subsets; a nonempty weighted_instances
// list (one weight per pool clause, nonnegative) replaces them.
enum class MinCspKind { UnCut, TwoCnf };
CspFamily build_min_csp(MinCspKind kind, int n,
                        const std::vector<Vec>& weighted_instances = {});

// The subfamily of the two-variable constraint family whose pool is exactly
// the two parity constraints per pair; used to embed XOR-2 instances.
CspFamily build_csp2_parity_subfamily(int n);

// Weighted cut family: the pool holds the binom(n,2) clauses x_i ^ x_j = 1.
// Instances are all 0/1 weight vectors; with half weights enabled, the
// nonzero 0-or-1/2 vectors are appended to exercise rational weights.
CspFamily build_weighted_cut(int n, bool include_half_weights = false);

// ---------------------------------------------------------------------------
// Cut families.

struct GraphFamily {
    ProblemSpec spec;
    int n = 0;
    int k = 2;  // number of cells (2 = plain cuts)
    std::vector<GraphSimple> instances;
};

// Solutions are the 2^n two-colorings, instances all graphs on [n]
// (optionally degree-filtered), objective = cut edges, size = edge count.
GraphFamily build_maxcut(int n, std::optional<int> degree_bound = {});

// Solutions are the k^n cell assignments, instances all graphs on [n],
// objective = edges with endpoints in different cells.
GraphFamily build_multicut(int n, int k);

// Same solution set over `vertex_count` vertices with an explicit instance
// list; used where the full graph family is not enumerable.
GraphFamily build_multicut_restricted(int vertex_count, int k,
                                      std::vector<GraphSimple> instances,
                                      std::vector<std::string> labels,
                                      const std::string& name);

std::vector<int> partition_cells(long long index, int n, int k);
std::string partition_label(const std::vector<int>& cells);

// ---------------------------------------------------------------------------
// Vertex covers and independent sets of a host graph. Instances are the
// induced subgraphs (one per vertex subset, degree-filtered when asked);
// the objective of solution S on instance H is |S intersect V(H)|.

struct SubgraphFamily {
    ProblemSpec spec;
    GraphSimple host;
    std::vector<unsigned> instance_vertices;  // bitmask per instance, bit v-1
    std::vector<unsigned> solution_sets;      // bitmask per solution
};

SubgraphFamily build_vertex_cover(const GraphSimple& host,
                                  std::optional<int> degree_bound = {});
SubgraphFamily build_max_indep(const GraphSimple& host,
                               std::optional<int> degree_bound = {});

// Independent-set family with instance-specific vertex sets: instances are
// all graphs G with V(G) a subset of [n], solutions all subsets S of [n],
// objective |V(G) and S| - |edges of G inside S|.
struct IndepUniformFamily {
    ProblemSpec spec;
    std::vector<unsigned> instance_vertices;
    std::vector<GraphSimple> instance_graphs;
};

IndepUniformFamily build_indep_uniform(int n);

// ---------------------------------------------------------------------------
// Matchings and Hamiltonian cycles.

struct MatchingFamily {
    ProblemSpec spec;
    int n2 = 0;
    std::vector<GraphSimple> instances;
    std::vector<std::vector<std::pair<int, int>>> matchings;  // per solution
};

// Solutions: perfect matchings of K_n2; instances: all graphs on [n2];
// objective |M intersect E(G)|, size |E(G)|.
MatchingFamily build_matching(int n2);
MatchingFamily build_matching_restricted(int n2, std::vector<GraphSimple> instances,
                                         std::vector<std::string> labels,
                                         const std::string& name);

struct HamiltonianFamily {
    ProblemSpec spec;
    int n = 0;
    std::vector<WeightedGraph> instances;
    std::vector<std::vector<std::pair<int, int>>> cycles;  // edge set per solution
};

// Solutions: Hamiltonian cycles of K_n (canonical orientation); instances:
// weighted subgraphs with edge weights in {1,2} by default, or total weight
// functions into {0,1,2} when zero_weights is set. Objective: weight of the
// cycle edges present in the instance; size: total instance weight.
HamiltonianFamily build_hamiltonian(int n, bool zero_weights = false);
HamiltonianFamily build_hamiltonian_restricted(int n, std::vector<WeightedGraph> instances,
                                               std::vector<std::string> labels,
                                               const std::string& name);

std::vector<std::vector<std::pair<int, int>>> hamiltonian_cycles(int n);

// ---------------------------------------------------------------------------
// Junta indicators: instances are the k-subsets a of [n], solutions all
// assignments b, objective t(2-t) with t = |a intersect b|, size 1. The
// exact guarantee pair C = S = 1 makes the slack entries (1 - a.b)^2.

struct JuntaFamily {
    ProblemSpec spec;
    int n = 0, k = 0;
    std::vector<unsigned> masks_a;  // bit v-1 = variable v in a
};

JuntaFamily build_junta_family(int n, int k);

// ---------------------------------------------------------------------------
// Conflict graph of partial assignments: one vertex per (pair {i<j},
// assignment with x_i != x_j), edges between assignments that disagree on a
// shared variable. Vertices are ordered pair-lex with (0,1) before (1,0).

struct ConflictVertex {
    int i = 0, j = 0;   // i < j
    int ai = 0, aj = 0; // ai xor aj == 1
};

std::vector<ConflictVertex> conflict_vertices(int n);
GraphSimple conflict_graph(int n);

// True when the partial assignment agrees with the full assignment s.
bool conflict_vertex_compatible(const ConflictVertex& v, unsigned s, int n);

} // namespace sfc
