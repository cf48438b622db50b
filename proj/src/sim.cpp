#include "clustnet/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include "clustnet/errors.hpp"
#include "clustnet/rng.hpp"

namespace clustnet {

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), std::uint32_t{0});
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> size;
};

std::vector<std::uint64_t> per_degree_counts(const GraphInstance& g, const std::vector<std::uint8_t>& active) {
    std::uint32_t max_deg = 0;
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) max_deg = std::max(max_deg, g.degree(v));
    std::vector<std::uint64_t> counts(max_deg + 1, 0);
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        if (active[v]) ++counts[g.degree(v)];
    }
    return counts;
}

} // namespace

SeedSet seed_single(std::uint32_t v) {
    return {SeedSet::Scheme::single, {v}};
}

SeedSet seed_all(const GraphInstance& g) {
    SeedSet s;
    s.scheme = SeedSet::Scheme::single;
    s.active.resize(g.n_vertices());
    std::iota(s.active.begin(), s.active.end(), 0u);
    return s;
}

SeedSet seed_degree_independent(const GraphInstance& g, const ActivationProfile& alpha, std::uint64_t seed) {
    Rng rng(seed);
    SeedSet s;
    s.scheme = SeedSet::Scheme::degree_independent;
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        if (rng.bernoulli(alpha(g.degree(v)))) s.active.push_back(v);
    }
    return s;
}

SeedSet seed_clique_correlated(const GraphInstance& g, const ActivationProfile& alpha, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> seeded(g.n_parents(), 0);
    for (std::uint32_t i = 0; i < g.n_parents(); ++i) {
        seeded[i] = rng.bernoulli(alpha(g.parent_degree(i))) ? 1 : 0;
    }
    SeedSet s;
    s.scheme = SeedSet::Scheme::clique_correlated;
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        if (seeded[g.parent(v)]) s.active.push_back(v);
    }
    return s;
}

PercolationOutcome bond_percolate_components(const GraphInstance& g, double pi, std::uint64_t seed) {
    if (!(pi >= 0.0 && pi <= 1.0)) throw parameter_error("percolation needs pi in [0,1]");
    Rng rng(seed);
    UnionFind uf(g.n_vertices());
    for (const Edge& e : g.edges()) {
        if (rng.bernoulli(pi)) uf.unite(e.u, e.v);
    }
    PercolationOutcome out;
    out.component.resize(g.n_vertices());
    std::uint32_t largest = 0, second = 0;
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) out.component[v] = uf.find(v);
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        if (out.component[v] != v) continue;
        const std::uint32_t s = uf.size[v];
        if (s > largest) {
            second = largest;
            largest = s;
        } else if (s > second) {
            second = s;
        }
    }
    out.largest = largest;
    out.second = second;
    return out;
}

RunResult run_diffusion(const GraphInstance& g, double pi, const SeedSet& seeds, std::uint64_t seed) {
    const PercolationOutcome perc = bond_percolate_components(g, pi, seed);
    std::vector<std::uint8_t> root_active(g.n_vertices(), 0);
    for (std::uint32_t v : seeds.active) root_active[perc.component[v]] = 1;
    std::vector<std::uint8_t> active(g.n_vertices(), 0);
    RunResult out;
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        if (root_active[perc.component[v]]) {
            active[v] = 1;
            ++out.final_active_count;
        }
    }
    out.largest_component = perc.largest;
    out.per_degree_active = per_degree_counts(g, active);
    out.replica_seed = seed;
    return out;
}

ThresholdAssignment assign_thresholds(const GraphInstance& g, const ThresholdDistribution& t,
                                      std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint32_t> parent_k(g.n_parents(), 0);
    for (std::uint32_t i = 0; i < g.n_parents(); ++i) {
        const std::uint32_t s = g.parent_degree(i);
        if (s > t.s_max()) {
            std::ostringstream os;
            os << "assign_thresholds: no threshold row for degree " << s;
            throw parameter_error(os.str());
        }
        const double u = rng.uniform01();
        double acc = 0.0;
        std::uint32_t drawn = s;
        for (std::uint32_t l = 0; l <= s; ++l) {
            acc += t(s, l);
            if (u < acc) { drawn = l; break; }
        }
        parent_k[i] = drawn;
    }
    ThresholdAssignment out;
    out.k.resize(g.n_vertices());
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) out.k[v] = parent_k[g.parent(v)];
    return out;
}

RunResult run_threshold(const GraphInstance& g, const ThresholdAssignment& assignment, const SeedSet& seeds) {
    if (assignment.k.size() != g.n_vertices()) throw parameter_error("threshold assignment size mismatch");
    std::vector<std::uint8_t> active(g.n_vertices(), 0);
    std::vector<std::uint32_t> active_neighbors(g.n_vertices(), 0);
    std::queue<std::uint32_t> queue;
    RunResult out;
    for (std::uint32_t v : seeds.active) {
        if (!active[v]) {
            active[v] = 1;
            queue.push(v);
        }
    }
    while (!queue.empty()) {
        const std::uint32_t v = queue.front();
        queue.pop();
        for (const std::uint32_t* w = g.neighbors_begin(v); w != g.neighbors_end(v); ++w) {
            if (active[*w]) continue;
            if (++active_neighbors[*w] > assignment.k[*w]) {
                active[*w] = 1;
                queue.push(*w);
            }
        }
    }
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) out.final_active_count += active[v];
    out.per_degree_active = per_degree_counts(g, active);
    return out;
}

std::vector<std::uint32_t> pivotal_set(const GraphInstance& g, const ThresholdAssignment& assignment) {
    UnionFind uf(g.n_vertices());
    for (const Edge& e : g.edges()) {
        if (assignment.k[e.u] == 0 && assignment.k[e.v] == 0) uf.unite(e.u, e.v);
    }
    std::uint32_t best_root = UINT32_MAX, best_size = 0;
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        if (assignment.k[v] != 0) continue;
        const std::uint32_t r = uf.find(v);
        if (r == v) {
            if (uf.size[r] > best_size || (uf.size[r] == best_size && r < best_root)) {
                best_size = uf.size[r];
                best_root = r;
            }
        }
    }
    std::vector<std::uint32_t> members;
    if (best_root == UINT32_MAX) return members;
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        if (assignment.k[v] == 0 && uf.find(v) == best_root) members.push_back(v);
    }
    return members;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>
two_stage_internal_percolation_census(const GraphInstance& g, double pi, std::uint64_t seed) {
    if (!(pi >= 0.0 && pi <= 1.0)) throw parameter_error("census needs pi in [0,1]");
    Rng rng(seed);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> counts;
    for (std::uint32_t i = 0; i < g.n_parents(); ++i) {
        if (!g.parent_substituted(i)) continue;
        const std::uint32_t d = g.parent_degree(i);
        if (d == 0) continue;
        UnionFind uf(d);
        for (std::uint32_t a = 0; a < d; ++a) {
            for (std::uint32_t b = a + 1; b < d; ++b) {
                if (rng.bernoulli(pi)) uf.unite(a, b);
            }
        }
        for (std::uint32_t a = 0; a < d; ++a) {
            if (uf.find(a) == a) ++counts[{d, uf.size[a]}];
        }
    }
    return counts;
}

CouplingOutcome coupling_check_with(const GraphInstance& g, const ThresholdAssignment& assignment,
                                    std::uint32_t u) {
    if (u >= g.n_vertices()) throw parameter_error("coupling seed vertex out of range");
    if (assignment.k[u] != 0) throw parameter_error("coupling seed vertex must have threshold zero");

    const ProjectionResult proj = project_full(g);
    const GraphInstance& h = proj.graph;

    // transformed per-parent thresholds, driven by the same substitution draws
    ThresholdAssignment prime;
    prime.k.assign(h.n_vertices(), 0);
    for (std::uint32_t par = 0; par < g.n_parents(); ++par) {
        const std::int64_t pv = proj.vertex_of_parent[par];
        if (pv < 0) continue;
        const std::uint32_t kv = assignment.k[g.parent_first_vertex(par)]; // shared by the clique
        std::uint32_t kprime;
        if (kv == 0) {
            kprime = 0;
        } else if (g.parent_substituted(par)) {
            kprime = h.degree(static_cast<std::uint32_t>(pv)); // never activates
        } else {
            kprime = kv;
        }
        prime.k[static_cast<std::uint32_t>(pv)] = kprime;
    }

    const auto spread = [](const GraphInstance& graph, const std::vector<std::uint32_t>& k,
                           std::uint32_t start) {
        std::vector<std::uint8_t> active(graph.n_vertices(), 0);
        std::vector<std::uint32_t> cnt(graph.n_vertices(), 0);
        std::vector<std::uint32_t> stack = {start};
        active[start] = 1;
        while (!stack.empty()) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            for (const std::uint32_t* w = graph.neighbors_begin(v); w != graph.neighbors_end(v); ++w) {
                if (active[*w]) continue;
                if (++cnt[*w] > k[*w]) {
                    active[*w] = 1;
                    stack.push_back(*w);
                }
            }
        }
        return active;
    };
    const std::uint32_t seed_pv = static_cast<std::uint32_t>(proj.vertex_of_parent[g.parent(u)]);
    const std::vector<std::uint8_t> active_tilde = spread(g, assignment.k, u);
    const std::vector<std::uint8_t> active_proj = spread(h, prime.k, seed_pv);

    std::vector<std::uint8_t> parent_active_tilde(g.n_parents(), 0);
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        if (active_tilde[v]) parent_active_tilde[g.parent(v)] = 1;
    }
    CouplingOutcome out;
    out.ran = true;
    out.equal = true;
    for (std::uint32_t par = 0; par < g.n_parents(); ++par) {
        const std::int64_t pv = proj.vertex_of_parent[par];
        const bool proj_active = pv >= 0 && active_proj[static_cast<std::uint32_t>(pv)];
        if (proj_active != (parent_active_tilde[par] != 0)) {
            out.equal = false;
            break;
        }
    }
    return out;
}

CouplingOutcome coupling_check(const GraphInstance& g, const ThresholdDistribution& t, std::uint64_t seed) {
    Rng rng(seed);
    const ThresholdAssignment assignment = assign_thresholds(g, t, rng.next_u64());
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        if (g.is_clique_member(v) && assignment.k[v] == 0) candidates.push_back(v);
    }
    if (candidates.empty()) return {};
    const std::uint32_t u = candidates[rng.uniform_below(candidates.size())];
    return coupling_check_with(g, assignment, u);
}

std::map<std::string, Aggregate> monte_carlo(std::size_t replicas, std::uint64_t base_seed,
                                             const std::function<MetricMap(std::uint64_t)>& run) {
    if (replicas < 2) throw parameter_error("monte_carlo needs at least 2 replicas for a CI");
    std::map<std::string, std::vector<double>> samples;
    for (std::size_t i = 0; i < replicas; ++i) {
        const std::uint64_t seed = split_seed(base_seed, i);
        for (const auto& [name, value] : run(seed)) samples[name].push_back(value);
    }
    std::map<std::string, Aggregate> out;
    for (const auto& [name, values] : samples) {
        Aggregate agg;
        agg.replicas = values.size();
        double sum = 0.0;
        for (double v : values) sum += v;
        agg.mean = sum / static_cast<double>(values.size());
        double ss = 0.0;
        for (double v : values) ss += (v - agg.mean) * (v - agg.mean);
        agg.stddev = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
        const double half = 1.959963984540054 * agg.stddev / std::sqrt(static_cast<double>(values.size()));
        agg.ci_lo = agg.mean - half;
        agg.ci_hi = agg.mean + half;
        out[name] = agg;
    }
    return out;
}

} // namespace clustnet
