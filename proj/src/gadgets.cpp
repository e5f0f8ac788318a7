// Ready-made certified reductions between the catalog families. Every
// builder maps instances and solutions explicitly, pins its affine constants,
// and refuses to return unless the full verifier and the matrix form agree.

#include "slackfc/gadgets.hpp"

#include "slackfc/errors.hpp"
#include "slackfc/slack.hpp"

#include <algorithm>
#include <unordered_map>

namespace sfc {

namespace {

long long comb2(long long n) { return n * (n - 1) / 2; }

GadgetResult finish(std::string name, ProblemSpec source, Guarantees g1,
                    ProblemSpec target, Guarantees g2, Reduction red, std::string notes) {
    const ReductionReport report = verify_reduction(source, g1, target, g2, red);
    if (!report.ok) {
        const ReductionViolation& v = report.violations.front();
        std::string where = "instance '" + source.instances[static_cast<size_t>(v.f1)] + "'";
        if (v.s1 >= 0)
            where += ", solution '" + source.solutions[static_cast<size_t>(v.s1)] + "'";
        throw InternalConsistencyError("gadget '" + name + "' fails its " + v.kind +
                                       " check at " + where + ": " + rat_str(v.actual) +
                                       " vs " + rat_str(v.expected));
    }
    matrix_reduction(source, g1, target, g2, red);
    GadgetResult out;
    out.name = std::move(name);
    out.source = std::move(source);
    out.source_guarantees = std::move(g1);
    out.target = std::move(target);
    out.target_guarantees = std::move(g2);
    out.reduction = std::move(red);
    out.notes = std::move(notes);
    return out;
}

std::string subset_key(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    std::string key;
    for (int v : ids) {
        key += std::to_string(v);
        key += ',';
    }
    return key;
}

// Instance index by clause-id subset; only meaningful for unit-weight pools.
std::unordered_map<std::string, int> instance_lookup(const CspFamily& fam) {
    std::unordered_map<std::string, int> out;
    for (size_t i = 0; i < fam.instance_clauses.size(); ++i)
        out.emplace(subset_key(fam.instance_clauses[i]), static_cast<int>(i));
    return out;
}

int pool_index(const CspFamily& fam, const std::vector<int>& vars, int tag) {
    for (size_t q = 0; q < fam.pool.size(); ++q)
        if (fam.pool[q].vars == vars && fam.pool[q].tag == tag) return static_cast<int>(q);
    throw InternalConsistencyError("expected clause missing from the pool");
}

// Weight per pool clause for one instance (zero where the clause is absent).
Vec pool_weights(const CspFamily& fam, int inst) {
    Vec w(fam.pool.size(), Rat(0));
    const auto& ids = fam.instance_clauses[static_cast<size_t>(inst)];
    for (size_t a = 0; a < ids.size(); ++a)
        w[static_cast<size_t>(ids[a])] = fam.instance_weights[static_cast<size_t>(inst)][a];
    return w;
}

int lookup_instance(const std::unordered_map<std::string, int>& map,
                    const std::vector<int>& ids, const std::string& what) {
    const auto it = map.find(subset_key(ids));
    if (it == map.end())
        throw InternalConsistencyError(what + ": image instance is not in the target family");
    return it->second;
}

// Shared representative pair for the proportional-guarantee bookkeeping the
// clause gadgets report in their notes.
const Rat kEpsSample(1, 8);

std::string proportional_note(const SimpleReductionResult& sr, const std::string& formulas) {
    return "rho=" + rat_str(sr.rho) + "; " + formulas + "; at (tau1,sigma1)=(7/8,5/8): tau2=" +
           rat_str(sr.tau2) + ", sigma2=" + rat_str(sr.sigma2);
}

} // namespace

// ---------------------------------------------------------------------------
// Conflict-graph gadgets.

unsigned conflict_subgraph_mask(int n, const GraphSimple& k) {
    const std::vector<ConflictVertex> verts = conflict_vertices(n);
    unsigned mask = 0;
    for (size_t v = 0; v < verts.size(); ++v)
        if (graph_has_edge(k, verts[v].i, verts[v].j)) mask |= 1u << v;
    return mask;
}

namespace {

int induced_max_degree(const GraphSimple& host, unsigned mask) {
    int best = 0;
    for (int v = 1; v <= host.n; ++v) {
        if (!(mask >> (v - 1) & 1)) continue;
        int deg = 0;
        for (const auto& [a, b] : host.edges) {
            const int other = a == v ? b : b == v ? a : 0;
            if (other && (mask >> (other - 1) & 1)) ++deg;
        }
        best = std::max(best, deg);
    }
    return best;
}

GadgetResult conflict_gadget(int n, int delta, const Rat& eps, bool cover_side) {
    if (n < 2) throw ScaleError("conflict gadget needs at least two vertices");
    if (delta < 1) throw ScaleError("degree bound must be at least one");
    if (!(eps > 0 && eps < Rat(1, 2)))
        throw GuaranteeOrderError("eps must sit strictly between 0 and 1/2");

    GraphFamily src = build_maxcut(n, delta);
    const GraphSimple host = conflict_graph(n);
    const int target_degree = 2 * delta - 1;
    SubgraphFamily tgt = cover_side ? build_vertex_cover(host, target_degree)
                                    : build_max_indep(host, target_degree);
    const std::vector<ConflictVertex> verts = conflict_vertices(n);

    std::unordered_map<unsigned, int> inst_of_mask, sol_of_mask;
    for (size_t i = 0; i < tgt.instance_vertices.size(); ++i)
        inst_of_mask.emplace(tgt.instance_vertices[i], static_cast<int>(i));
    for (size_t s = 0; s < tgt.solution_sets.size(); ++s)
        sol_of_mask.emplace(tgt.solution_sets[s], static_cast<int>(s));

    std::vector<int> image(src.instances.size(), -1);
    for (size_t f = 0; f < src.instances.size(); ++f) {
        const GraphSimple& k = src.instances[f];
        const unsigned mask = conflict_subgraph_mask(n, k);
        if (__builtin_popcount(mask) != 2 * static_cast<int>(k.edges.size()))
            throw InternalConsistencyError("image must have two assignments per edge");
        if (induced_max_degree(host, mask) > target_degree)
            throw InternalConsistencyError("image degree exceeds " +
                                           std::to_string(target_degree) + " for instance '" +
                                           src.spec.instances[f] + "'");
        const auto it = inst_of_mask.find(mask);
        if (it == inst_of_mask.end())
            throw InternalConsistencyError("image subgraph missing from the target family");
        image[f] = it->second;
    }
    std::vector<int> sol_image(static_cast<size_t>(src.spec.num_solutions()), -1);
    for (int s = 0; s < src.spec.num_solutions(); ++s) {
        unsigned mask = 0;
        for (size_t v = 0; v < verts.size(); ++v) {
            const bool compat = conflict_vertex_compatible(verts[v], static_cast<unsigned>(s), n);
            if (compat != cover_side) mask |= 1u << v;
        }
        const auto it = sol_of_mask.find(mask);
        if (it == sol_of_mask.end())
            throw InternalConsistencyError(cover_side
                                               ? "incompatible set is not a cover"
                                               : "compatible set is not independent");
        sol_image[static_cast<size_t>(s)] = it->second;
    }

    SimpleReductionSpec spec;
    spec.instance_map = [image](int f) { return image[static_cast<size_t>(f)]; };
    spec.solution_map = [sol_image](int s) { return sol_image[static_cast<size_t>(s)]; };
    spec.alpha = cover_side ? Rat(-1) : Rat(1);
    spec.mu = cover_side ? Rat(2) : Rat(0);

    Guarantees g1 = exact_guarantees(src.spec);
    Guarantees g2 = exact_guarantees(tgt.spec);
    SimpleReductionResult sr = simple_reduction(src.spec, g1, tgt.spec, g2, spec,
                                                Rat(1) - eps, Rat(1, 2) + eps);
    if (!sr.exact_optima)
        throw InternalConsistencyError("image optimum drifts from the affine law");
    const std::string notes =
        std::string(cover_side ? "alpha=-1, mu=2" : "alpha=1, mu=0") +
        "; rho=" + rat_str(sr.rho) + "; eps=" + rat_str(eps) + ": tau2=" + rat_str(sr.tau2) +
        ", sigma2=" + rat_str(sr.sigma2) + "; target degree bound " +
        std::to_string(target_degree);
    return finish(cover_side ? "maxcut-to-vertexcover" : "maxcut-to-maxindep",
                  std::move(src.spec), std::move(g1), std::move(tgt.spec), std::move(g2),
                  std::move(sr.red), notes);
}

} // namespace

GadgetResult maxcut_to_vertexcover(int n, int delta, const Rat& eps) {
    return conflict_gadget(n, delta, eps, true);
}

GadgetResult maxcut_to_maxindep(int n, int delta, const Rat& eps) {
    return conflict_gadget(n, delta, eps, false);
}

// ---------------------------------------------------------------------------
// Multiway-cut gadget. Each source edge slot owns a bundle of copies, every
// copy a complete graph on k+2 vertices minus three edges; two fresh vertices
// shadow the copy's endpoints and k-2 fresh internals fill the other cells.

namespace {

struct MulticutLayout {
    int n = 0, k = 0;
    int copies = 0;            // copies per source edge slot
    int vertices = 0;          // total vertex count shared by all instances
    std::vector<std::pair<int, int>> slots;  // complete-graph edge list on [n]

    int negative(int t) const { return n + (t - 2); }  // cells 3..k
    int block(int slot, int copy) const {
        return n + (k - 2) + (slot * copies + copy) * k;
    }
    // Endpoint pair of a copy: 0 is the source edge itself, then the two runs
    // of mixed pairs, then the negative pairs in lexicographic order.
    std::pair<int, int> endpoints(int slot, int copy) const {
        const auto [i, j] = slots[static_cast<size_t>(slot)];
        if (copy == 0) return {i, j};
        if (copy <= k - 2) return {i, negative(copy + 2)};
        if (copy <= 2 * (k - 2)) return {j, negative(copy - (k - 2) + 2)};
        int rest = copy - 2 * (k - 2) - 1;
        for (int t = 3; t <= k; ++t)
            for (int u = t + 1; u <= k; ++u)
                if (rest-- == 0) return {negative(t), negative(u)};
        throw InternalConsistencyError("copy index outside the bundle");
    }
};

MulticutLayout multicut_layout(int n, int k) {
    MulticutLayout lay;
    lay.n = n;
    lay.k = k;
    lay.copies = 1 + 2 * (k - 2) + static_cast<int>(comb2(k - 2));
    lay.slots = complete_graph_edges(n);
    lay.vertices = n + (k - 2) + static_cast<int>(lay.slots.size()) * lay.copies * k;
    return lay;
}

void append_copy_edges(const MulticutLayout& lay, int slot, int copy,
                       std::vector<std::pair<int, int>>& edges) {
    const auto [p, q] = lay.endpoints(slot, copy);
    const int base = lay.block(slot, copy);
    std::vector<int> verts = {p, q, base + 1, base + 2};
    for (int t = 0; t < lay.k - 2; ++t) verts.push_back(base + 3 + t);
    const int pc = base + 1, qc = base + 2;
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b) {
            const int u = std::min(verts[a], verts[b]), v = std::max(verts[a], verts[b]);
            if ((u == std::min(p, pc) && v == std::max(p, pc)) ||
                (u == std::min(p, q) && v == std::max(p, q)) ||
                (u == std::min(q, qc) && v == std::max(q, qc)))
                continue;
            edges.push_back({u, v});
        }
}

} // namespace

GadgetResult maxcut_to_multicut(int n, int k) {
    if (n < 2) throw ScaleError("cut source needs at least two vertices");
    if (k < 3) throw ScaleError("multiway target needs at least three cells");
    const MulticutLayout lay = multicut_layout(n, k);
    GraphFamily src = build_maxcut(n);

    std::vector<GraphSimple> targets;
    std::vector<std::string> labels;
    targets.reserve(src.instances.size());
    for (size_t f = 0; f < src.instances.size(); ++f) {
        GraphSimple beta;
        beta.n = lay.vertices;
        for (size_t slot = 0; slot < lay.slots.size(); ++slot) {
            if (!graph_has_edge(src.instances[f], lay.slots[slot].first,
                                lay.slots[slot].second))
                continue;
            for (int c = 0; c < lay.copies; ++c)
                append_copy_edges(lay, static_cast<int>(slot), c, beta.edges);
        }
        std::sort(beta.edges.begin(), beta.edges.end());
        targets.push_back(std::move(beta));
        labels.push_back(src.spec.instances[f]);
    }
    const long long edges_per_copy = comb2(k + 2) - 3;
    for (size_t f = 0; f < targets.size(); ++f)
        if (static_cast<long long>(targets[f].edges.size()) !=
            edges_per_copy * lay.copies *
                static_cast<long long>(src.instances[f].edges.size()))
            throw InternalConsistencyError("bundle edge count is off for instance '" +
                                           labels[f] + "'");

    GraphFamily tgt = build_multicut_restricted(
        lay.vertices, k, std::move(targets), std::move(labels),
        "multicut(k=" + std::to_string(k) + ",cut-bundles n=" + std::to_string(n) + ")");

    // Solution map: source cells stay, negatives take their own cell, shadow
    // vertices follow their endpoint, internals fill the lowest free cells.
    std::vector<int> sol_image(static_cast<size_t>(src.spec.num_solutions()), -1);
    for (int s = 0; s < src.spec.num_solutions(); ++s) {
        std::vector<int> cell(static_cast<size_t>(lay.vertices) + 1, 0);
        for (int v = 1; v <= n; ++v)
            cell[static_cast<size_t>(v)] = assignment_bit(static_cast<unsigned>(s), n, v) + 1;
        for (int t = 3; t <= k; ++t) cell[static_cast<size_t>(lay.negative(t))] = t;
        for (size_t slot = 0; slot < lay.slots.size(); ++slot)
            for (int c = 0; c < lay.copies; ++c) {
                const auto [p, q] = lay.endpoints(static_cast<int>(slot), c);
                const int base = lay.block(static_cast<int>(slot), c);
                cell[static_cast<size_t>(base + 1)] = cell[static_cast<size_t>(p)];
                cell[static_cast<size_t>(base + 2)] = cell[static_cast<size_t>(q)];
                int next = 1;
                for (int t = 0; t < k - 2; ++t) {
                    while (next == cell[static_cast<size_t>(p)] ||
                           next == cell[static_cast<size_t>(q)])
                        ++next;
                    cell[static_cast<size_t>(base + 3 + t)] = next;
                    ++next;
                }
            }
        long long index = 0;
        for (int v = 1; v <= lay.vertices; ++v)
            index = index * k + (cell[static_cast<size_t>(v)] - 1);
        sol_image[static_cast<size_t>(s)] = static_cast<int>(index);
    }

    const Rat mu_edge = Rat(static_cast<long>(edges_per_copy - 3)) +
                        Rat(static_cast<long>(edges_per_copy)) * (lay.copies - 1);
    SimpleReductionSpec spec;
    spec.instance_map = [](int f) { return f; };
    spec.solution_map = [sol_image](int s) { return sol_image[static_cast<size_t>(s)]; };
    spec.alpha = 3;
    spec.mu = mu_edge;

    Guarantees g1 = exact_guarantees(src.spec);
    Guarantees g2 = exact_guarantees(tgt.spec);
    SimpleReductionResult sr = simple_reduction(src.spec, g1, tgt.spec, g2, spec,
                                                Rat(1) - kEpsSample, Rat(1, 2) + kEpsSample);
    if (!sr.exact_optima)
        throw InternalConsistencyError("bundle optimum drifts from the affine law");
    const std::string notes = "alpha=3, mu=" + rat_str(mu_edge) + " per source edge; " +
                              std::to_string(lay.copies) + " copies per edge, " +
                              std::to_string(edges_per_copy) + " edges per copy; rho=" +
                              rat_str(sr.rho);
    return finish("maxcut-to-multicut", std::move(src.spec), std::move(g1),
                  std::move(tgt.spec), std::move(g2), std::move(sr.red), notes);
}

// ---------------------------------------------------------------------------
// Clause-level gadgets out of the weighted cut family.

namespace {

// Builds a clause gadget whose image places, for each cut constraint on a
// pair, the given tagged clauses with the same weight into the target family.
GadgetResult cut_clause_gadget(const std::string& name, const CspFamily& src,
                               CspFamily tgt, const std::vector<int>& tags,
                               const Rat& alpha, const Rat& mu,
                               const std::string& formulas) {
    std::unordered_map<std::string, int> inst_map = instance_lookup(tgt);
    std::vector<std::vector<int>> image_pool(src.pool.size());
    for (size_t r = 0; r < src.pool.size(); ++r)
        for (int tag : tags)
            image_pool[r].push_back(pool_index(tgt, src.pool[r].vars, tag));

    std::vector<int> image(src.instance_clauses.size(), -1);
    for (size_t f = 0; f < src.instance_clauses.size(); ++f) {
        std::vector<int> ids;
        for (int r : src.instance_clauses[f])
            for (int q : image_pool[static_cast<size_t>(r)]) ids.push_back(q);
        image[f] = lookup_instance(inst_map, ids, name);
    }

    SimpleReductionSpec spec;
    spec.instance_map = [image](int f) { return image[static_cast<size_t>(f)]; };
    spec.solution_map = [](int s) { return s; };
    spec.alpha = alpha;
    spec.mu = mu;

    Guarantees g1 = exact_guarantees(src.spec);
    Guarantees g2 = exact_guarantees(tgt.spec);
    SimpleReductionResult sr = simple_reduction(src.spec, g1, tgt.spec, g2, spec,
                                                Rat(1) - kEpsSample, Rat(1, 2) + kEpsSample);
    if (!sr.exact_optima)
        throw InternalConsistencyError("clause image optimum drifts from the affine law");
    const std::string notes = "alpha=" + rat_str(alpha) + ", mu=" + rat_str(mu) + "; " +
                              proportional_note(sr, formulas);
    return finish(name, src.spec, std::move(g1), std::move(tgt.spec), std::move(g2),
                  std::move(sr.red), notes);
}

} // namespace

GadgetResult maxcut_to_max2sat(int n) {
    if (n < 2) throw ScaleError("cut source needs at least two vertices");
    CspFamily src = build_weighted_cut(n);
    CspFamily tgt = build_csp(ClauseKind::Sat, n, 2, std::nullopt,
                              static_cast<int>(2 * comb2(n)));
    // Each cut constraint turns into the all-positive and the all-negative
    // disjunction; a cut pair satisfies both, an uncut pair exactly one.
    return cut_clause_gadget("maxcut-to-max2sat", src, std::move(tgt), {0, 3}, 1, 1,
                             "tau2=(tau1+1)/2, sigma2=(sigma1+1)/2");
}

GadgetResult maxcut_to_dicut(int n) {
    if (n < 2) throw ScaleError("cut source needs at least two vertices");
    CspFamily src = build_weighted_cut(n);
    CspFamily tgt = build_csp(ClauseKind::Dicut, n, 2);
    std::unordered_map<std::string, int> inst_map = instance_lookup(tgt);

    // Both orientations of each pair; a cut pair satisfies exactly one of
    // the two one-way constraints, an uncut pair neither.
    std::vector<int> image(src.instance_clauses.size(), -1);
    for (size_t f = 0; f < src.instance_clauses.size(); ++f) {
        std::vector<int> ids;
        for (int r : src.instance_clauses[f]) {
            const auto& vars = src.pool[static_cast<size_t>(r)].vars;
            ids.push_back(pool_index(tgt, {vars[0], vars[1]}, 0));
            ids.push_back(pool_index(tgt, {vars[1], vars[0]}, 0));
        }
        image[f] = lookup_instance(inst_map, ids, "maxcut-to-dicut");
    }

    SimpleReductionSpec spec;
    spec.instance_map = [image](int f) { return image[static_cast<size_t>(f)]; };
    spec.solution_map = [](int s) { return s; };
    spec.alpha = 1;
    spec.mu = 0;
    Guarantees g1 = exact_guarantees(src.spec);
    Guarantees g2 = exact_guarantees(tgt.spec);
    SimpleReductionResult sr = simple_reduction(src.spec, g1, tgt.spec, g2, spec,
                                                Rat(1) - kEpsSample, Rat(1, 2) + kEpsSample);
    if (!sr.exact_optima)
        throw InternalConsistencyError("orientation image optimum drifts from the affine law");
    const std::string notes =
        "alpha=1, mu=0; " + proportional_note(sr, "tau2=tau1/2, sigma2=sigma1/2");
    return finish("maxcut-to-dicut", src.spec, std::move(g1), std::move(tgt.spec),
                  std::move(g2), std::move(sr.red), notes);
}

GadgetResult xor2_to_conjsat(int n) {
    if (n < 2) throw ScaleError("parity source needs at least two variables");
    CspFamily src = build_csp(ClauseKind::Xor, n, 2, std::nullopt, 4);
    CspFamily tgt = build_csp(ClauseKind::Conj, n, 2, std::nullopt, 8);
    std::unordered_map<std::string, int> inst_map = instance_lookup(tgt);

    // A parity constraint lists its two satisfying conjunctions.
    std::vector<int> image(src.instance_clauses.size(), -1);
    for (size_t f = 0; f < src.instance_clauses.size(); ++f) {
        std::vector<int> ids;
        for (int r : src.instance_clauses[f]) {
            const Clause& c = src.pool[static_cast<size_t>(r)];
            if (c.tag == 1) {
                ids.push_back(pool_index(tgt, c.vars, 2));
                ids.push_back(pool_index(tgt, c.vars, 1));
            } else {
                ids.push_back(pool_index(tgt, c.vars, 0));
                ids.push_back(pool_index(tgt, c.vars, 3));
            }
        }
        image[f] = lookup_instance(inst_map, ids, "xor2-to-conjsat");
    }

    SimpleReductionSpec spec;
    spec.instance_map = [image](int f) { return image[static_cast<size_t>(f)]; };
    spec.solution_map = [](int s) { return s; };
    spec.alpha = 1;
    spec.mu = 0;
    Guarantees g1 = exact_guarantees(src.spec);
    Guarantees g2 = exact_guarantees(tgt.spec);
    SimpleReductionResult sr = simple_reduction(src.spec, g1, tgt.spec, g2, spec,
                                                Rat(1) - kEpsSample, Rat(1, 2) + kEpsSample);
    if (!sr.exact_optima)
        throw InternalConsistencyError("conjunction image optimum drifts from the affine law");
    const std::string notes =
        "alpha=1, mu=0; " + proportional_note(sr, "tau2=tau1/2, sigma2=sigma1/2");
    return finish("xor2-to-conjsat", src.spec, std::move(g1), std::move(tgt.spec),
                  std::move(g2), std::move(sr.red), notes);
}

GadgetResult maxcsp2_embed_xor2(int n) {
    if (n < 2) throw ScaleError("parity source needs at least two variables");
    CspFamily src = build_csp(ClauseKind::Xor, n, 2);
    CspFamily tgt = build_csp2_parity_subfamily(n);
    if (src.pool.size() != tgt.pool.size())
        throw InternalConsistencyError("parity pools differ in size");
    for (size_t q = 0; q < src.pool.size(); ++q) {
        const int want = src.pool[q].tag == 0 ? 9 : 6;
        if (src.pool[q].vars != tgt.pool[q].vars || tgt.pool[q].tag != want)
            throw InternalConsistencyError("parity pools are not aligned");
    }
    std::unordered_map<std::string, int> inst_map = instance_lookup(tgt);
    std::vector<int> image(src.instance_clauses.size(), -1);
    for (size_t f = 0; f < src.instance_clauses.size(); ++f)
        image[f] = lookup_instance(inst_map, src.instance_clauses[f], "maxcsp2-embed-xor2");

    SimpleReductionSpec spec;
    spec.instance_map = [image](int f) { return image[static_cast<size_t>(f)]; };
    spec.solution_map = [](int s) { return s; };
    spec.alpha = 1;
    spec.mu = 0;
    Guarantees g1 = exact_guarantees(src.spec);
    Guarantees g2 = exact_guarantees(tgt.spec);
    SimpleReductionResult sr = simple_reduction(src.spec, g1, tgt.spec, g2, spec,
                                                Rat(1) - kEpsSample, Rat(1, 2) + kEpsSample);
    if (!sr.exact_optima)
        throw InternalConsistencyError("embedding changes an optimum");
    const std::string notes =
        "alpha=1, mu=0; " + proportional_note(sr, "tau2=tau1, sigma2=sigma1");
    return finish("maxcsp2-embed-xor2", src.spec, std::move(g1), std::move(tgt.spec),
                  std::move(g2), std::move(sr.red), notes);
}

// ---------------------------------------------------------------------------
// Minimization targets. The affine constants are pinned by a brute-force
// probe on one pair before anything is built.

namespace {

struct CutRewriting {
    int tag_a = -1, tag_b = -1;
    Rat alpha, mu;
};

// Probes both two-clause rewritings of a single cut constraint and keeps the
// one whose unsatisfied count is a decreasing affine function of the cut.
CutRewriting min2cnf_rewriting() {
    const std::vector<std::pair<int, int>> candidates = {{0, 3}, {1, 2}};
    for (const auto& [ta, tb] : candidates) {
        const Clause a{{1, 2}, ta}, b{{1, 2}, tb};
        int unsat_cut = -1, unsat_uncut = -1;
        bool affine = true;
        for (unsigned s = 0; s < 4 && affine; ++s) {
            const int cut =
                assignment_bit(s, 2, 1) ^ assignment_bit(s, 2, 2);
            const int u = (clause_satisfied(ClauseKind::Sat, a, s, 2) ? 0 : 1) +
                          (clause_satisfied(ClauseKind::Sat, b, s, 2) ? 0 : 1);
            int& slot = cut ? unsat_cut : unsat_uncut;
            if (slot < 0)
                slot = u;
            else if (slot != u)
                affine = false;
        }
        if (affine && unsat_cut < unsat_uncut)
            return {ta, tb, Rat(unsat_cut - unsat_uncut), Rat(unsat_uncut)};
    }
    throw InternalConsistencyError("no two-clause rewriting decreases with the cut");
}

GadgetResult min_target_gadget(const std::string& name, int n, MinCspKind kind,
                               const std::string& formulas) {
    CspFamily src = build_weighted_cut(n, true);
    CutRewriting rw;
    if (kind == MinCspKind::TwoCnf) {
        rw = min2cnf_rewriting();
    } else {
        rw.alpha = -1;  // a clause kept verbatim flips satisfied and unsatisfied
        rw.mu = 1;
    }

    // One weighted target instance per source instance, in source order.
    CspFamily probe = build_min_csp(kind, n);
    std::vector<Vec> weighted;
    weighted.reserve(src.instance_clauses.size());
    for (size_t f = 0; f < src.instance_clauses.size(); ++f) {
        const Vec w = pool_weights(src, static_cast<int>(f));
        Vec w2(probe.pool.size(), Rat(0));
        for (size_t r = 0; r < src.pool.size(); ++r) {
            if (w[r] == 0) continue;
            const auto& vars = src.pool[r].vars;
            if (kind == MinCspKind::TwoCnf) {
                w2[static_cast<size_t>(pool_index(probe, vars, rw.tag_a))] += w[r];
                w2[static_cast<size_t>(pool_index(probe, vars, rw.tag_b))] += w[r];
            } else {
                w2[static_cast<size_t>(pool_index(probe, vars, 1))] += w[r];
            }
        }
        weighted.push_back(std::move(w2));
    }
    CspFamily tgt = build_min_csp(kind, n, weighted);

    SimpleReductionSpec spec;
    spec.instance_map = [](int f) { return f; };
    spec.solution_map = [](int s) { return s; };
    spec.alpha = rw.alpha;
    spec.mu = rw.mu;
    Guarantees g1 = exact_guarantees(src.spec);
    Guarantees g2 = exact_guarantees(tgt.spec);
    SimpleReductionResult sr = simple_reduction(src.spec, g1, tgt.spec, g2, spec,
                                                Rat(1) - kEpsSample, Rat(1, 2) + kEpsSample);
    if (!sr.exact_optima)
        throw InternalConsistencyError("weighted image optimum drifts from the affine law");
    const std::string notes = "alpha=" + rat_str(rw.alpha) + ", mu=" + rat_str(rw.mu) +
                              " per unit weight; " + proportional_note(sr, formulas);
    return finish(name, src.spec, std::move(g1), std::move(tgt.spec), std::move(g2),
                  std::move(sr.red), notes);
}

} // namespace

GadgetResult maxcut_to_minuncut(int n) {
    if (n < 2) throw ScaleError("cut source needs at least two vertices");
    return min_target_gadget("maxcut-to-minuncut", n, MinCspKind::UnCut,
                             "tau2=1-tau1, sigma2=1-sigma1");
}

GadgetResult maxcut_to_min2cnf(int n) {
    if (n < 2) throw ScaleError("cut source needs at least two vertices");
    return min_target_gadget("maxcut-to-min2cnf", n, MinCspKind::TwoCnf,
                             "tau2=(1-tau1)/2, sigma2=(1-sigma1)/2");
}

// ---------------------------------------------------------------------------
// Matchings through heaviest cycles on the doubled vertex set. Vertices
// 1..n2 carry the instance edges, n2+1..2*n2 form a unit-weight clique, and
// rung j,n2+j has weight two.

namespace {

bool is_single_cycle(int vertices, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(vertices) + 1);
    for (const auto& [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    for (int v = 1; v <= vertices; ++v)
        if (adj[static_cast<size_t>(v)].size() != 2) return false;
    int prev = 0, cur = 1, steps = 0;
    do {
        const auto& nb = adj[static_cast<size_t>(cur)];
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++steps;
    } while (cur != 1 && steps <= vertices);
    return cur == 1 && steps == vertices;
}

void one_side_matchings(std::vector<int>& free_verts,
                        std::vector<std::pair<int, int>>& cur,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
    if (free_verts.empty()) {
        out.push_back(cur);
        return;
    }
    const int a = free_verts.front();
    for (size_t i = 1; i < free_verts.size(); ++i) {
        const int b = free_verts[i];
        std::vector<int> rest;
        for (size_t j = 1; j < free_verts.size(); ++j)
            if (j != i) rest.push_back(free_verts[j]);
        cur.push_back({a, b});
        one_side_matchings(rest, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::pair<int, int>> hamiltonian_cycle_for_matching(
    int n2, const std::vector<std::pair<int, int>>& matching) {
    std::vector<std::pair<int, int>> fixed;
    for (int j = 1; j <= n2; ++j) fixed.push_back({j, n2 + j});
    for (const auto& [a, b] : matching) fixed.push_back({a, b});

    std::vector<int> tops;
    for (int j = 1; j <= n2; ++j) tops.push_back(n2 + j);
    std::vector<std::vector<std::pair<int, int>>> completions;
    std::vector<std::pair<int, int>> cur;
    one_side_matchings(tops, cur, completions);

    std::vector<std::pair<int, int>> best;
    for (auto& comp : completions) {
        std::vector<std::pair<int, int>> all = fixed;
        for (auto& e : comp) all.push_back(e);
        if (!is_single_cycle(2 * n2, all)) continue;
        std::sort(comp.begin(), comp.end());
        if (best.empty() || comp < best) best = comp;
    }
    if (best.empty())
        throw InternalConsistencyError("no completion closes the rung paths into a cycle");
    std::vector<std::pair<int, int>> cycle = fixed;
    for (const auto& e : best) cycle.push_back(e);
    std::sort(cycle.begin(), cycle.end());
    return cycle;
}

HamiltonianCycleStats analyze_hamiltonian_cycle(
    int n2, const GraphSimple& g, const std::vector<std::pair<int, int>>& cycle) {
    HamiltonianCycleStats st;
    st.zero_side_weight = 0;
    st.one_side_weight = 0;
    st.cross_weight = 0;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n2) + 1);
    for (const auto& [u, v] : cycle) {
        if (u <= n2 && v <= n2) {
            ++st.zero_side_edges;
            if (graph_has_edge(g, u, v)) st.zero_side_weight += 1;
            adj[static_cast<size_t>(u)].push_back(v);
            adj[static_cast<size_t>(v)].push_back(u);
        } else if (u > n2 && v > n2) {
            ++st.one_side_edges;
            st.one_side_weight += 1;
        } else {
            if (v == u + n2) st.cross_weight += 2;  // a rung, all other pairs weigh zero
        }
    }
    std::vector<bool> seen(static_cast<size_t>(n2) + 1, false);
    for (int v = 1; v <= n2; ++v) {
        if (seen[static_cast<size_t>(v)]) continue;
        if (adj[static_cast<size_t>(v)].empty()) {
            seen[static_cast<size_t>(v)] = true;
            ++st.m;
            continue;
        }
        // Walk the whole path component and classify its edges.
        std::vector<int> stack = {v};
        seen[static_cast<size_t>(v)] = true;
        bool all_in_g = true;
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            for (int nb : adj[static_cast<size_t>(cur)]) {
                if (!graph_has_edge(g, std::min(cur, nb), std::max(cur, nb)))
                    all_in_g = false;
                if (!seen[static_cast<size_t>(nb)]) {
                    seen[static_cast<size_t>(nb)] = true;
                    stack.push_back(nb);
                }
            }
        }
        if (all_in_g)
            ++st.k;
        else
            ++st.l;
    }
    st.total_weight = st.zero_side_weight + st.one_side_weight + st.cross_weight;
    return st;
}

GadgetResult matching_to_hamiltonian(int n2) {
    if (n2 != 4 && n2 != 6)
        throw ScaleError("doubled-cycle enumeration is sized for n2 = 4 or 6");
    MatchingFamily src = build_matching(n2);
    const int N = 2 * n2;
    const int half_count = n2 / 2;

    std::vector<WeightedGraph> targets;
    std::vector<std::string> labels;
    for (size_t f = 0; f < src.instances.size(); ++f) {
        WeightedGraph wg;
        wg.n = N;
        for (int j = 1; j <= n2; ++j) {
            wg.edges.push_back({j, n2 + j});
            wg.weights.push_back(2);
        }
        for (int i = 1; i <= n2; ++i)
            for (int j = i + 1; j <= n2; ++j) {
                wg.edges.push_back({n2 + i, n2 + j});
                wg.weights.push_back(1);
            }
        for (const auto& e : src.instances[f].edges) {
            wg.edges.push_back(e);
            wg.weights.push_back(1);
        }
        std::vector<size_t> order(wg.edges.size());
        for (size_t a = 0; a < order.size(); ++a) order[a] = a;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return wg.edges[a] < wg.edges[b];
        });
        WeightedGraph sorted;
        sorted.n = N;
        for (size_t a : order) {
            sorted.edges.push_back(wg.edges[a]);
            sorted.weights.push_back(wg.weights[a]);
        }
        targets.push_back(std::move(sorted));
        labels.push_back(src.spec.instances[f]);
    }
    HamiltonianFamily tgt = build_hamiltonian_restricted(
        N, std::move(targets), std::move(labels),
        "hamiltonian(doubled n2=" + std::to_string(n2) + ")");

    std::unordered_map<std::string, int> cycle_index;
    for (size_t c = 0; c < tgt.cycles.size(); ++c) {
        std::vector<std::pair<int, int>> edges = tgt.cycles[c];
        std::sort(edges.begin(), edges.end());
        std::string key;
        for (const auto& [u, v] : edges)
            key += std::to_string(u) + "-" + std::to_string(v) + ",";
        cycle_index.emplace(key, static_cast<int>(c));
    }

    Reduction red;
    red.sense1 = Sense::Maximize;
    red.sense2 = Sense::Maximize;
    Guarantees g1 = exact_guarantees(src.spec);
    Guarantees g2 = exact_guarantees(tgt.spec);
    const std::vector<int> sound1 = sound_instances(src.spec, g1);
    for (int f : sound1) {
        red.beta.push_back({{f, Rat(1)}});
        red.shift.push_back(Rat(-5 * half_count));
    }
    for (size_t m = 0; m < src.matchings.size(); ++m) {
        const auto cycle = hamiltonian_cycle_for_matching(n2, src.matchings[m]);
        std::string key;
        for (const auto& [u, v] : cycle)
            key += std::to_string(u) + "-" + std::to_string(v) + ",";
        const auto it = cycle_index.find(key);
        if (it == cycle_index.end())
            throw InternalConsistencyError("completed cycle is not canonical");
        red.gamma.push_back({{it->second, Rat(1)}});
    }
    const std::string notes = "alpha=1, additive shift 5n = " +
                              std::to_string(5 * half_count) +
                              "; rung weight 2, clique and instance edges weight 1";
    return finish("matching-to-hamiltonian", std::move(src.spec), std::move(g1),
                  std::move(tgt.spec), std::move(g2), std::move(red), notes);
}

} // namespace sfc
