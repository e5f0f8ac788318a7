#include "slackfc/catalog.hpp"

#include "slackfc/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>

namespace sfc {

namespace {

long long env_limit(const char* var, long long fallback) {
    const char* s = std::getenv(var);
    if (!s || !*s) return fallback;
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end == s || *end || v <= 0) return fallback;
    return v;
}

void check_scale(long long num_solutions, long long num_instances, const std::string& what) {
    const EnumLimits lim = EnumLimits::get();
    if (num_solutions > lim.max_solutions)
        throw ScaleError(what + ": " + std::to_string(num_solutions) +
                         " solutions exceed the enumeration limit");
    if (num_instances > lim.max_instances)
        throw ScaleError(what + ": " + std::to_string(num_instances) +
                         " instances exceed the enumeration limit");
    if (num_solutions * num_instances > lim.max_entries)
        throw ScaleError(what + ": value table of " +
                         std::to_string(num_solutions * num_instances) +
                         " entries exceeds the enumeration limit");
}

// All subsets of {0..pool-1}: masks ascending when unbounded, otherwise
// sizes ascending with combinations in lexicographic order.
std::vector<std::vector<int>> enumerate_subsets(int pool, std::optional<int> max_size,
                                                const std::string& what) {
    std::vector<std::vector<int>> out;
    if (!max_size) {
        if (pool > 24)
            throw ScaleError(what + ": 2^" + std::to_string(pool) +
                             " clause subsets exceed the enumeration limit");
        const unsigned long long total = 1ULL << pool;
        out.reserve(total);
        for (unsigned long long mask = 0; mask < total; ++mask) {
            std::vector<int> sel;
            for (int c = 0; c < pool; ++c)
                if (mask >> c & 1ULL) sel.push_back(c);
            out.push_back(std::move(sel));
        }
        return out;
    }
    const int cap = std::min(*max_size, pool);
    for (int size = 0; size <= cap; ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        for (;;) {
            out.push_back(comb);
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && comb[i] == pool - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return out;
}

std::string subset_label(ClauseKind kind, const std::vector<Clause>& pool,
                         const std::vector<int>& sel) {
    std::string s = "{";
    for (size_t i = 0; i < sel.size(); ++i) {
        if (i) s += ",";
        s += clause_text(kind, pool[sel[i]]);
    }
    s += "}";
    return s;
}

int var_occurrences_ok(const std::vector<Clause>& pool, const std::vector<int>& sel,
                       int n, int bound) {
    std::vector<int> occ(n + 1, 0);
    for (int c : sel)
        for (int v : pool[c].vars)
            if (++occ[v] > bound) return false;
    return true;
}

std::vector<Clause> make_pool(ClauseKind kind, int n, int k) {
    std::vector<Clause> pool;
    switch (kind) {
        case ClauseKind::Xor: {
            if (k != 2 && k != 3)
                throw ScaleError("parity clauses support arity 2 or 3");
            std::vector<int> vars(k);
            std::function<void(int, int)> rec = [&](int depth, int start) {
                if (depth == k) {
                    for (int parity = 0; parity <= 1; ++parity)
                        pool.push_back(Clause{vars, parity});
                    return;
                }
                for (int v = start; v <= n; ++v) {
                    vars[depth] = v;
                    rec(depth + 1, v + 1);
                }
            };
            rec(0, 1);
            break;
        }
        case ClauseKind::Sat: {
            // Tuple-lex order: a clause on (1) precedes (1,2) precedes (2).
            std::vector<int> vars;
            std::function<void(int)> rec = [&](int start) {
                if (!vars.empty()) {
                    const int m = static_cast<int>(vars.size());
                    for (int neg = 0; neg < (1 << m); ++neg)
                        pool.push_back(Clause{vars, neg});
                }
                if (static_cast<int>(vars.size()) == k) return;
                for (int v = start; v <= n; ++v) {
                    vars.push_back(v);
                    rec(v + 1);
                    vars.pop_back();
                }
            };
            rec(1);
            break;
        }
        case ClauseKind::Dicut: {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    pool.push_back(Clause{{i, j}, 0});
                    pool.push_back(Clause{{j, i}, 0});
                }
            break;
        }
        case ClauseKind::Conj: {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int neg = 0; neg < 4; ++neg)
                        pool.push_back(Clause{{i, j}, neg});
            break;
        }
        case ClauseKind::Csp2: {
            pool.push_back(Clause{{}, 0});  // never satisfied
            pool.push_back(Clause{{}, 1});  // always satisfied
            for (int v = 1; v <= n; ++v) {
                pool.push_back(Clause{{v}, 1});  // satisfied when x_v = 0
                pool.push_back(Clause{{v}, 2});  // satisfied when x_v = 1
            }
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int tag = 1; tag < 15; ++tag) {
                        // Skip tables constant or depending on one variable only.
                        if (tag == 12 || tag == 3 || tag == 10 || tag == 5) continue;
                        pool.push_back(Clause{{i, j}, tag});
                    }
            break;
        }
    }
    return pool;
}

CspFamily assemble_csp(std::string name, Sense sense, ClauseKind kind, int n, int k,
                       std::vector<Clause> pool, std::optional<int> degree_bound,
                       std::optional<int> cap, const std::vector<Vec>* weighted) {
    if (n < 1 || n > 24) throw ScaleError(name + ": variable count out of range");
    CspFamily fam;
    fam.kind = kind;
    fam.n = n;
    fam.k = k;
    fam.pool = std::move(pool);
    const int psize = static_cast<int>(fam.pool.size());

    if (weighted && !weighted->empty()) {
        for (const Vec& w : *weighted) {
            if (static_cast<int>(w.size()) != psize)
                throw ShapeError(name + ": weight vector does not match the clause pool");
            std::vector<int> sel;
            Vec wsel;
            for (int c = 0; c < psize; ++c) {
                if (w[c] < 0)
                    throw ShapeError(name + ": negative clause weight");
                if (w[c] != 0) {
                    sel.push_back(c);
                    wsel.push_back(w[c]);
                }
            }
            fam.instance_clauses.push_back(std::move(sel));
            fam.instance_weights.push_back(std::move(wsel));
        }
    } else {
        std::vector<std::vector<int>> subsets = enumerate_subsets(psize, cap, name);
        for (auto& sel : subsets) {
            if (degree_bound && !var_occurrences_ok(fam.pool, sel, n, *degree_bound)) continue;
            fam.instance_weights.push_back(Vec(sel.size(), Rat(1)));
            fam.instance_clauses.push_back(std::move(sel));
        }
    }

    const long long num_solutions = 1LL << n;
    const long long num_instances = static_cast<long long>(fam.instance_clauses.size());
    check_scale(num_solutions, num_instances, name);

    ProblemSpec& p = fam.spec;
    p.name = std::move(name);
    p.sense = sense;
    p.solutions = assignment_labels(n);
    p.value = Mat(static_cast<int>(num_instances), static_cast<int>(num_solutions));
    p.instances.reserve(num_instances);
    p.size_of.reserve(num_instances);
    for (long long f = 0; f < num_instances; ++f) {
        const auto& sel = fam.instance_clauses[f];
        const Vec& w = fam.instance_weights[f];
        if (weighted && !weighted->empty()) {
            std::string lbl = "w[";
            for (int c = 0; c < psize; ++c) {
                if (c) lbl += ",";
                auto pos = std::find(sel.begin(), sel.end(), c);
                lbl += pos == sel.end() ? "0" : rat_str(w[pos - sel.begin()]);
            }
            lbl += "]";
            p.instances.push_back(std::move(lbl));
        } else {
            p.instances.push_back(subset_label(kind, fam.pool, sel));
        }
        Rat total = 0;
        for (const Rat& wc : w) total += wc;
        p.size_of.push_back(total);
        for (long long s = 0; s < num_solutions; ++s) {
            Rat v = 0;
            for (size_t t = 0; t < sel.size(); ++t) {
                const bool sat = clause_satisfied(kind, fam.pool[sel[t]],
                                                  static_cast<unsigned>(s), n);
                if (sense == Sense::Maximize ? sat : !sat) v += w[t];
            }
            p.value.at(static_cast<int>(f), static_cast<int>(s)) = v;
        }
    }
    p.validate();
    return fam;
}

} // namespace

EnumLimits EnumLimits::get() {
    EnumLimits lim;
    lim.max_solutions = env_limit("SLACKFC_MAX_SOLUTIONS", lim.max_solutions);
    lim.max_instances = env_limit("SLACKFC_MAX_INSTANCES", lim.max_instances);
    lim.max_entries = env_limit("SLACKFC_MAX_ENTRIES", lim.max_entries);
    return lim;
}

// ---------------------------------------------------------------------------
// Graph helpers.

std::vector<std::pair<int, int>> complete_graph_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return edges;
}

GraphSimple graph_from_mask(int n, unsigned long long mask) {
    GraphSimple g;
    g.n = n;
    const auto all = complete_graph_edges(n);
    for (size_t e = 0; e < all.size(); ++e)
        if (mask >> e & 1ULL) g.edges.push_back(all[e]);
    return g;
}

std::string graph_label(const GraphSimple& g) {
    std::string s = "{";
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (e) s += ",";
        s += std::to_string(g.edges[e].first) + "-" + std::to_string(g.edges[e].second);
    }
    s += "}";
    return s;
}

int graph_max_degree(const GraphSimple& g) {
    std::vector<int> deg(g.n + 1, 0);
    int best = 0;
    for (const auto& [u, v] : g.edges) {
        best = std::max({best, ++deg[u], ++deg[v]});
    }
    return best;
}

bool graph_has_edge(const GraphSimple& g, int u, int v) {
    if (u > v) std::swap(u, v);
    return std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
}

// ---------------------------------------------------------------------------
// Assignments and clauses.

int assignment_bit(unsigned s, int n, int var) { return (s >> (n - var)) & 1u; }

std::string assignment_label(unsigned s, int n) {
    std::string lbl(n, '0');
    for (int v = 1; v <= n; ++v) lbl[v - 1] = assignment_bit(s, n, v) ? '1' : '0';
    return lbl;
}

std::vector<std::string> assignment_labels(int n) {
    std::vector<std::string> out;
    out.reserve(1u << n);
    for (unsigned s = 0; s < (1u << n); ++s) out.push_back(assignment_label(s, n));
    return out;
}

bool clause_satisfied(ClauseKind kind, const Clause& c, unsigned s, int n) {
    switch (kind) {
        case ClauseKind::Xor: {
            int parity = 0;
            for (int v : c.vars) parity ^= assignment_bit(s, n, v);
            return parity == c.tag;
        }
        case ClauseKind::Sat: {
            for (size_t t = 0; t < c.vars.size(); ++t) {
                const int bit = assignment_bit(s, n, c.vars[t]);
                const int want = (c.tag >> t & 1) ? 0 : 1;
                if (bit == want) return true;
            }
            return false;
        }
        case ClauseKind::Dicut:
            return assignment_bit(s, n, c.vars[0]) == 0 &&
                   assignment_bit(s, n, c.vars[1]) == 1;
        case ClauseKind::Conj: {
            for (size_t t = 0; t < c.vars.size(); ++t) {
                const int bit = assignment_bit(s, n, c.vars[t]);
                const int want = (c.tag >> t & 1) ? 0 : 1;
                if (bit != want) return false;
            }
            return true;
        }
        case ClauseKind::Csp2: {
            unsigned t = 0;
            for (int v : c.vars) t = (t << 1) | assignment_bit(s, n, v);
            return (c.tag >> t & 1) != 0;
        }
    }
    return false;
}

std::string clause_text(ClauseKind kind, const Clause& c) {
    auto var = [](int v) { return "x" + std::to_string(v); };
    switch (kind) {
        case ClauseKind::Xor: {
            std::string s;
            for (size_t t = 0; t < c.vars.size(); ++t) {
                if (t) s += "^";
                s += var(c.vars[t]);
            }
            return s + "=" + std::to_string(c.tag);
        }
        case ClauseKind::Sat: {
            std::string s;
            for (size_t t = 0; t < c.vars.size(); ++t) {
                if (t) s += "|";
                if (c.tag >> t & 1) s += "!";
                s += var(c.vars[t]);
            }
            return s;
        }
        case ClauseKind::Dicut:
            return "!" + var(c.vars[0]) + "&" + var(c.vars[1]);
        case ClauseKind::Conj: {
            std::string s;
            for (size_t t = 0; t < c.vars.size(); ++t) {
                if (t) s += "&";
                if (c.tag >> t & 1) s += "!";
                s += var(c.vars[t]);
            }
            return s;
        }
        case ClauseKind::Csp2: {
            std::string s = "f(";
            for (size_t t = 0; t < c.vars.size(); ++t) {
                if (t) s += ",";
                s += var(c.vars[t]);
            }
            s += ")=";
            const int bits = c.vars.empty() ? 1 : (1 << c.vars.size());
            for (int t = 0; t < bits; ++t) s += (c.tag >> t & 1) ? '1' : '0';
            return s;
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// CSP families.

CspFamily build_csp(ClauseKind kind, int n, int k, std::optional<int> degree_bound,
                    std::optional<int> max_clauses_per_instance) {
    std::string kindname;
    switch (kind) {
        case ClauseKind::Xor: kindname = "xor" + std::to_string(k); break;
        case ClauseKind::Sat: kindname = "sat" + std::to_string(k); break;
        case ClauseKind::Dicut: kindname = "dicut"; break;
        case ClauseKind::Conj: kindname = "conj2"; break;
        case ClauseKind::Csp2: kindname = "csp2"; break;
    }
    return assemble_csp(kindname + "(n=" + std::to_string(n) + ")", Sense::Maximize, kind,
                        n, k, make_pool(kind, n, k), degree_bound,
                        max_clauses_per_instance, nullptr);
}

CspFamily build_min_csp(MinCspKind kind, int n, const std::vector<Vec>& weighted_instances) {
    const bool uncut = (kind == MinCspKind::UnCut);
    std::vector<Clause> pool;
    if (uncut) {
        pool = make_pool(ClauseKind::Xor, n, 2);
    } else {
        for (const Clause& c : make_pool(ClauseKind::Sat, n, 2))
            if (c.vars.size() == 2) pool.push_back(c);
    }
    const std::string name =
        std::string(uncut ? "min-uncut" : "min-2cnf") + "(n=" + std::to_string(n) + ")";
    return assemble_csp(name, Sense::Minimize, uncut ? ClauseKind::Xor : ClauseKind::Sat,
                        n, 2, std::move(pool), std::nullopt, std::nullopt,
                        weighted_instances.empty() ? nullptr : &weighted_instances);
}

CspFamily build_weighted_cut(int n, bool include_half_weights) {
    if (n < 2 || n > 7) throw ScaleError("weighted cut: variable count out of range");
    std::vector<Clause> pool;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pool.push_back(Clause{{i, j}, 1});
    const int m = static_cast<int>(pool.size());
    std::vector<Vec> weighted;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        Vec w(m, Rat(0));
        for (int c = 0; c < m; ++c)
            if (mask >> c & 1ULL) w[c] = 1;
        weighted.push_back(std::move(w));
    }
    if (include_half_weights) {
        for (unsigned long long mask = 1; mask < (1ULL << m); ++mask) {
            Vec w(m, Rat(0));
            for (int c = 0; c < m; ++c)
                if (mask >> c & 1ULL) w[c] = Rat(1, 2);
            weighted.push_back(std::move(w));
        }
    }
    return assemble_csp("weighted-cut(n=" + std::to_string(n) + ")", Sense::Maximize,
                        ClauseKind::Xor, n, 2, std::move(pool), std::nullopt,
                        std::nullopt, &weighted);
}

CspFamily build_csp2_parity_subfamily(int n) {
    std::vector<Clause> pool;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pool.push_back(Clause{{i, j}, 9});  // satisfied on equal values
            pool.push_back(Clause{{i, j}, 6});  // satisfied on unequal values
        }
    return assemble_csp("csp2-parity(n=" + std::to_string(n) + ")", Sense::Maximize,
                        ClauseKind::Csp2, n, 2, std::move(pool), std::nullopt,
                        std::nullopt, nullptr);
}

// ---------------------------------------------------------------------------
// Cut families.

GraphFamily build_maxcut(int n, std::optional<int> degree_bound) {
    if (n < 1 || n > 7) throw ScaleError("maxcut: vertex count out of range");
    const int m = n * (n - 1) / 2;
    if (!degree_bound) check_scale(1LL << n, 1LL << m, "maxcut");
    GraphFamily fam;
    fam.n = n;
    fam.k = 2;
    ProblemSpec& p = fam.spec;
    p.name = "maxcut(n=" + std::to_string(n) + ")";
    p.sense = Sense::Maximize;
    p.solutions = assignment_labels(n);

    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        GraphSimple g = graph_from_mask(n, mask);
        if (degree_bound && graph_max_degree(g) > *degree_bound) continue;
        fam.instances.push_back(std::move(g));
    }
    check_scale(1LL << n, static_cast<long long>(fam.instances.size()), p.name);

    p.value = Mat(static_cast<int>(fam.instances.size()), 1 << n);
    for (size_t f = 0; f < fam.instances.size(); ++f) {
        const GraphSimple& g = fam.instances[f];
        p.instances.push_back(graph_label(g));
        p.size_of.push_back(Rat(static_cast<long>(g.edges.size())));
        for (unsigned s = 0; s < (1u << n); ++s) {
            int cut = 0;
            for (const auto& [u, v] : g.edges)
                if (assignment_bit(s, n, u) != assignment_bit(s, n, v)) ++cut;
            p.value.at(static_cast<int>(f), static_cast<int>(s)) = cut;
        }
    }
    p.validate();
    return fam;
}

std::vector<int> partition_cells(long long index, int n, int k) {
    std::vector<int> cells(n);
    for (int v = n - 1; v >= 0; --v) {
        cells[v] = static_cast<int>(index % k);
        index /= k;
    }
    return cells;
}

std::string partition_label(const std::vector<int>& cells) {
    std::string s;
    s.reserve(cells.size());
    for (int c : cells) s += static_cast<char>('1' + c);
    return s;
}

namespace {

GraphFamily assemble_multicut(int vertex_count, int k, std::vector<GraphSimple> instances,
                              std::vector<std::string> labels, const std::string& name) {
    if (k < 3) throw ScaleError(name + ": needs at least 3 cells");
    if (k > 9) throw ScaleError(name + ": cell count out of range");
    long long num_solutions = 1;
    for (int v = 0; v < vertex_count; ++v) {
        num_solutions *= k;
        if (num_solutions > EnumLimits::get().max_solutions)
            throw ScaleError(name + ": partition count exceeds the enumeration limit");
    }
    check_scale(num_solutions, static_cast<long long>(instances.size()), name);

    GraphFamily fam;
    fam.n = vertex_count;
    fam.k = k;
    fam.instances = std::move(instances);
    ProblemSpec& p = fam.spec;
    p.name = name;
    p.sense = Sense::Maximize;
    p.solutions.reserve(num_solutions);
    std::vector<std::vector<int>> cell_table;
    cell_table.reserve(num_solutions);
    for (long long s = 0; s < num_solutions; ++s) {
        cell_table.push_back(partition_cells(s, vertex_count, k));
        p.solutions.push_back(partition_label(cell_table.back()));
    }
    p.value = Mat(static_cast<int>(fam.instances.size()), static_cast<int>(num_solutions));
    for (size_t f = 0; f < fam.instances.size(); ++f) {
        const GraphSimple& g = fam.instances[f];
        p.instances.push_back(labels.empty() ? graph_label(g) : labels[f]);
        p.size_of.push_back(Rat(static_cast<long>(g.edges.size())));
        for (long long s = 0; s < num_solutions; ++s) {
            int cut = 0;
            const std::vector<int>& cells = cell_table[s];
            for (const auto& [u, v] : g.edges)
                if (cells[u - 1] != cells[v - 1]) ++cut;
            p.value.at(static_cast<int>(f), static_cast<int>(s)) = cut;
        }
    }
    p.validate();
    return fam;
}

} // namespace

GraphFamily build_multicut(int n, int k) {
    if (n < k) throw ScaleError("multicut: needs at least as many vertices as cells");
    const int m = n * (n - 1) / 2;
    if (m > 20) throw ScaleError("multicut: graph family out of range");
    long long num_solutions = 1;
    for (int v = 0; v < n; ++v) num_solutions *= k;
    check_scale(num_solutions, 1LL << m, "multicut");
    std::vector<GraphSimple> instances;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask)
        instances.push_back(graph_from_mask(n, mask));
    return assemble_multicut(n, k, std::move(instances), {},
                             "multicut(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
}

GraphFamily build_multicut_restricted(int vertex_count, int k,
                                      std::vector<GraphSimple> instances,
                                      std::vector<std::string> labels,
                                      const std::string& name) {
    if (!labels.empty() && labels.size() != instances.size())
        throw ShapeError(name + ": label list does not match instance list");
    return assemble_multicut(vertex_count, k, std::move(instances), std::move(labels), name);
}

// ---------------------------------------------------------------------------
// Vertex covers and independent sets.

namespace {

std::string vertex_set_label(unsigned mask, int n) {
    std::string s = "V={";
    bool first = true;
    for (int v = 1; v <= n; ++v)
        if (mask >> (v - 1) & 1u) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
    s += "}";
    return s;
}

SubgraphFamily assemble_subgraph_family(const GraphSimple& host, bool covers,
                                        std::optional<int> degree_bound) {
    if (host.n < 0 || host.n > 20)
        throw ScaleError("induced-subgraph family: host graph out of range");
    SubgraphFamily fam;
    fam.host = host;
    ProblemSpec& p = fam.spec;
    p.name = std::string(covers ? "vertexcover" : "maxindep") + "(host=" +
             std::to_string(host.n) + "v" + std::to_string(host.edges.size()) + "e)";
    p.sense = covers ? Sense::Minimize : Sense::Maximize;

    // Solutions: vertex covers, or independent sets, of the host.
    for (unsigned mask = 0; mask < (1u << host.n); ++mask) {
        bool good = true;
        for (const auto& [u, v] : host.edges) {
            const bool bu = mask >> (u - 1) & 1u, bv = mask >> (v - 1) & 1u;
            if (covers ? (!bu && !bv) : (bu && bv)) { good = false; break; }
        }
        if (good) {
            fam.solution_sets.push_back(mask);
            p.solutions.push_back(vertex_set_label(mask, host.n));
        }
    }

    // Instances: induced subgraphs, optionally degree-filtered.
    for (unsigned mask = 0; mask < (1u << host.n); ++mask) {
        if (degree_bound) {
            std::vector<int> deg(host.n + 1, 0);
            bool ok = true;
            for (const auto& [u, v] : host.edges)
                if ((mask >> (u - 1) & 1u) && (mask >> (v - 1) & 1u))
                    if (++deg[u] > *degree_bound || ++deg[v] > *degree_bound) { ok = false; break; }
            if (!ok) continue;
        }
        fam.instance_vertices.push_back(mask);
        p.instances.push_back(vertex_set_label(mask, host.n));
    }
    check_scale(static_cast<long long>(fam.solution_sets.size()),
                static_cast<long long>(fam.instance_vertices.size()), p.name);

    p.value = Mat(static_cast<int>(fam.instance_vertices.size()),
                  static_cast<int>(fam.solution_sets.size()));
    p.size_of.reserve(fam.instance_vertices.size());
    for (size_t f = 0; f < fam.instance_vertices.size(); ++f) {
        p.size_of.push_back(Rat(std::popcount(fam.instance_vertices[f])));
        for (size_t s = 0; s < fam.solution_sets.size(); ++s)
            p.value.at(static_cast<int>(f), static_cast<int>(s)) =
                std::popcount(fam.instance_vertices[f] & fam.solution_sets[s]);
    }
    p.validate();
    return fam;
}

} // namespace

SubgraphFamily build_vertex_cover(const GraphSimple& host, std::optional<int> degree_bound) {
    return assemble_subgraph_family(host, true, degree_bound);
}

SubgraphFamily build_max_indep(const GraphSimple& host, std::optional<int> degree_bound) {
    return assemble_subgraph_family(host, false, degree_bound);
}

IndepUniformFamily build_indep_uniform(int n) {
    if (n < 1 || n > 6) throw ScaleError("indep-uniform: vertex count out of range");
    IndepUniformFamily fam;
    ProblemSpec& p = fam.spec;
    p.name = "indep-uniform(n=" + std::to_string(n) + ")";
    p.sense = Sense::Maximize;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        p.solutions.push_back(vertex_set_label(mask, n));

    for (unsigned w = 0; w < (1u << n); ++w) {
        std::vector<std::pair<int, int>> cand;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if ((w >> (i - 1) & 1u) && (w >> (j - 1) & 1u)) cand.emplace_back(i, j);
        const int ce = static_cast<int>(cand.size());
        for (unsigned long long emask = 0; emask < (1ULL << ce); ++emask) {
            GraphSimple g;
            g.n = n;
            for (int e = 0; e < ce; ++e)
                if (emask >> e & 1ULL) g.edges.push_back(cand[e]);
            fam.instance_vertices.push_back(w);
            p.instances.push_back(vertex_set_label(w, n) + ",E=" + graph_label(g));
            fam.instance_graphs.push_back(std::move(g));
        }
    }
    check_scale(1LL << n, static_cast<long long>(fam.instance_graphs.size()), p.name);

    p.value = Mat(static_cast<int>(fam.instance_graphs.size()), 1 << n);
    for (size_t f = 0; f < fam.instance_graphs.size(); ++f) {
        p.size_of.push_back(Rat(std::popcount(fam.instance_vertices[f])));
        for (unsigned s = 0; s < (1u << n); ++s) {
            int v = std::popcount(fam.instance_vertices[f] & s);
            for (const auto& [a, b] : fam.instance_graphs[f].edges)
                if ((s >> (a - 1) & 1u) && (s >> (b - 1) & 1u)) --v;
            p.value.at(static_cast<int>(f), static_cast<int>(s)) = v;
        }
    }
    p.validate();
    return fam;
}

// ---------------------------------------------------------------------------
// Matchings.

namespace {

void enumerate_matchings(int n2, unsigned used, std::vector<std::pair<int, int>>& cur,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
    int first = -1;
    for (int v = 1; v <= n2; ++v)
        if (!(used >> (v - 1) & 1u)) { first = v; break; }
    if (first < 0) {
        out.push_back(cur);
        return;
    }
    for (int w = first + 1; w <= n2; ++w) {
        if (used >> (w - 1) & 1u) continue;
        cur.emplace_back(first, w);
        enumerate_matchings(n2, used | 1u << (first - 1) | 1u << (w - 1), cur, out);
        cur.pop_back();
    }
}

std::string matching_label(const std::vector<std::pair<int, int>>& m) {
    std::string s = "{";
    for (size_t e = 0; e < m.size(); ++e) {
        if (e) s += ",";
        s += std::to_string(m[e].first) + "-" + std::to_string(m[e].second);
    }
    s += "}";
    return s;
}

MatchingFamily assemble_matching(int n2, std::vector<GraphSimple> instances,
                                 std::vector<std::string> labels, const std::string& name) {
    if (n2 < 2 || n2 % 2 != 0 || n2 > 12)
        throw ScaleError(name + ": needs a small even vertex count");
    MatchingFamily fam;
    fam.n2 = n2;
    fam.instances = std::move(instances);
    std::vector<std::pair<int, int>> cur;
    enumerate_matchings(n2, 0, cur, fam.matchings);
    check_scale(static_cast<long long>(fam.matchings.size()),
                static_cast<long long>(fam.instances.size()), name);

    ProblemSpec& p = fam.spec;
    p.name = name;
    p.sense = Sense::Maximize;
    for (const auto& m : fam.matchings) p.solutions.push_back(matching_label(m));
    p.value = Mat(static_cast<int>(fam.instances.size()),
                  static_cast<int>(fam.matchings.size()));
    for (size_t f = 0; f < fam.instances.size(); ++f) {
        GraphSimple g = fam.instances[f];
        std::sort(g.edges.begin(), g.edges.end());
        p.instances.push_back(labels.empty() ? graph_label(fam.instances[f]) : labels[f]);
        p.size_of.push_back(Rat(static_cast<long>(g.edges.size())));
        for (size_t s = 0; s < fam.matchings.size(); ++s) {
            int hit = 0;
            for (const auto& [u, v] : fam.matchings[s])
                if (graph_has_edge(g, u, v)) ++hit;
            p.value.at(static_cast<int>(f), static_cast<int>(s)) = hit;
        }
    }
    p.validate();
    return fam;
}

} // namespace

MatchingFamily build_matching(int n2) {
    if (n2 < 2 || n2 % 2 != 0) throw ScaleError("matching: vertex count must be even");
    const int m = n2 * (n2 - 1) / 2;
    if (m > 18) throw ScaleError("matching: graph family out of range");
    long long num_matchings = 1;
    for (int v = n2 - 1; v > 0; v -= 2) num_matchings *= v;
    check_scale(num_matchings, 1LL << m, "matching");
    std::vector<GraphSimple> instances;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask)
        instances.push_back(graph_from_mask(n2, mask));
    return assemble_matching(n2, std::move(instances), {},
                             "matching(n2=" + std::to_string(n2) + ")");
}

MatchingFamily build_matching_restricted(int n2, std::vector<GraphSimple> instances,
                                         std::vector<std::string> labels,
                                         const std::string& name) {
    if (!labels.empty() && labels.size() != instances.size())
        throw ShapeError(name + ": label list does not match instance list");
    return assemble_matching(n2, std::move(instances), std::move(labels), name);
}

// ---------------------------------------------------------------------------
// Hamiltonian cycles.

std::vector<std::vector<std::pair<int, int>>> hamiltonian_cycles(int n) {
    if (n < 3 || n > 9) throw ScaleError("hamiltonian: vertex count out of range");
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> rest;
    for (int v = 2; v <= n; ++v) rest.push_back(v);
    // Canonical tours start at 1 and go toward the smaller neighbor, so each
    // cycle appears exactly once.
    do {
        if (rest.front() > rest.back()) continue;
        std::vector<std::pair<int, int>> edges;
        int prev = 1;
        for (int v : rest) {
            edges.emplace_back(std::min(prev, v), std::max(prev, v));
            prev = v;
        }
        edges.emplace_back(1, prev);
        std::sort(edges.begin(), edges.end());
        out.push_back(std::move(edges));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

namespace {

std::string cycle_label(const std::vector<std::pair<int, int>>& edges, int n) {
    // Rebuild the tour from the edge set for a readable label.
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::string s = "(1";
    int prev = 1, cur = std::min(adj[1][0], adj[1][1]);
    while (cur != 1) {
        s += "," + std::to_string(cur);
        const int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    }
    return s + ")";
}

std::string weighted_graph_label(const WeightedGraph& g) {
    std::string s = "{";
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (e) s += ",";
        s += std::to_string(g.edges[e].first) + "-" + std::to_string(g.edges[e].second) +
             ":" + rat_str(g.weights[e]);
    }
    s += "}";
    return s;
}

HamiltonianFamily assemble_hamiltonian(int n, std::vector<WeightedGraph> instances,
                                       std::vector<std::string> labels,
                                       const std::string& name) {
    HamiltonianFamily fam;
    fam.n = n;
    fam.cycles = hamiltonian_cycles(n);
    fam.instances = std::move(instances);
    check_scale(static_cast<long long>(fam.cycles.size()),
                static_cast<long long>(fam.instances.size()), name);

    ProblemSpec& p = fam.spec;
    p.name = name;
    p.sense = Sense::Maximize;
    for (const auto& c : fam.cycles) p.solutions.push_back(cycle_label(c, n));
    p.value = Mat(static_cast<int>(fam.instances.size()),
                  static_cast<int>(fam.cycles.size()));
    for (size_t f = 0; f < fam.instances.size(); ++f) {
        const WeightedGraph& g = fam.instances[f];
        p.instances.push_back(labels.empty() ? weighted_graph_label(g) : labels[f]);
        Rat total = 0;
        for (const Rat& w : g.weights) total += w;
        p.size_of.push_back(total);
        // Dense weight lookup keeps the cycle scan cheap.
        Mat wtab(n + 1, n + 1);
        for (size_t e = 0; e < g.edges.size(); ++e) {
            wtab.at(g.edges[e].first, g.edges[e].second) = g.weights[e];
            wtab.at(g.edges[e].second, g.edges[e].first) = g.weights[e];
        }
        for (size_t s = 0; s < fam.cycles.size(); ++s) {
            Rat v = 0;
            for (const auto& [a, b] : fam.cycles[s]) v += wtab.at(a, b);
            p.value.at(static_cast<int>(f), static_cast<int>(s)) = v;
        }
    }
    p.validate();
    return fam;
}

} // namespace

HamiltonianFamily build_hamiltonian(int n, bool zero_weights) {
    const int m = n * (n - 1) / 2;
    if (n < 3 || m > 10) throw ScaleError("hamiltonian: graph family out of range");
    const auto all = complete_graph_edges(n);
    long long total = 1;
    for (int e = 0; e < m; ++e) total *= 3;
    long long num_cycles = 1;
    for (int v = 3; v < n; ++v) num_cycles *= v;
    check_scale(num_cycles, total, "hamiltonian");
    std::vector<WeightedGraph> instances;
    instances.reserve(total);
    for (long long code = 0; code < total; ++code) {
        WeightedGraph g;
        g.n = n;
        long long rem = code;
        for (int e = 0; e < m; ++e) {
            const int digit = static_cast<int>(rem % 3);
            rem /= 3;
            if (zero_weights) {
                g.edges.push_back(all[e]);
                g.weights.push_back(Rat(digit));
            } else if (digit > 0) {
                g.edges.push_back(all[e]);
                g.weights.push_back(Rat(digit));
            }
        }
        instances.push_back(std::move(g));
    }
    return assemble_hamiltonian(n, std::move(instances), {},
                                "hamiltonian(n=" + std::to_string(n) + ")");
}

HamiltonianFamily build_hamiltonian_restricted(int n, std::vector<WeightedGraph> instances,
                                               std::vector<std::string> labels,
                                               const std::string& name) {
    if (!labels.empty() && labels.size() != instances.size())
        throw ShapeError(name + ": label list does not match instance list");
    return assemble_hamiltonian(n, std::move(instances), std::move(labels), name);
}

// ---------------------------------------------------------------------------
// Junta indicators.

JuntaFamily build_junta_family(int n, int k) {
    if (n < 1 || n > 20 || k < 0 || k > n)
        throw ScaleError("junta family: parameters out of range");
    JuntaFamily fam;
    fam.n = n;
    fam.k = k;
    ProblemSpec& p = fam.spec;
    p.name = "junta(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    p.sense = Sense::Maximize;
    p.solutions = assignment_labels(n);

    // k-subsets in combination-lex order.
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i + 1;
    for (;;) {
        unsigned mask = 0;
        std::string lbl = "a={";
        for (int i = 0; i < k; ++i) {
            mask |= 1u << (comb[i] - 1);
            if (i) lbl += ",";
            lbl += std::to_string(comb[i]);
        }
        lbl += "}";
        fam.masks_a.push_back(mask);
        p.instances.push_back(lbl);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    check_scale(1LL << n, static_cast<long long>(fam.masks_a.size()), p.name);

    p.value = Mat(static_cast<int>(fam.masks_a.size()), 1 << n);
    p.size_of.assign(fam.masks_a.size(), Rat(1));
    for (size_t f = 0; f < fam.masks_a.size(); ++f)
        for (unsigned s = 0; s < (1u << n); ++s) {
            unsigned b = 0;  // assignment as a subset mask, bit v-1 = x_v
            for (int v = 1; v <= n; ++v)
                if (assignment_bit(s, n, v)) b |= 1u << (v - 1);
            const long t = std::popcount(fam.masks_a[f] & b);
            p.value.at(static_cast<int>(f), static_cast<int>(s)) = Rat(t * (2 - t));
        }
    p.validate();
    return fam;
}

// ---------------------------------------------------------------------------
// Conflict graph.

std::vector<ConflictVertex> conflict_vertices(int n) {
    std::vector<ConflictVertex> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            out.push_back(ConflictVertex{i, j, 0, 1});
            out.push_back(ConflictVertex{i, j, 1, 0});
        }
    return out;
}

GraphSimple conflict_graph(int n) {
    const auto verts = conflict_vertices(n);
    GraphSimple g;
    g.n = static_cast<int>(verts.size());
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            const ConflictVertex &va = verts[a], &vb = verts[b];
            bool clash = false;
            // Shared variable assigned differently?
            const int avars[2] = {va.i, va.j}, avals[2] = {va.ai, va.aj};
            const int bvars[2] = {vb.i, vb.j}, bvals[2] = {vb.ai, vb.aj};
            for (int x = 0; x < 2 && !clash; ++x)
                for (int y = 0; y < 2 && !clash; ++y)
                    if (avars[x] == bvars[y] && avals[x] != bvals[y]) clash = true;
            if (clash) g.edges.emplace_back(a + 1, b + 1);
        }
    return g;
}

bool conflict_vertex_compatible(const ConflictVertex& v, unsigned s, int n) {
    return assignment_bit(s, n, v.i) == v.ai && assignment_bit(s, n, v.j) == v.aj;
}

} // namespace sfc
