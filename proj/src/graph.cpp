#include "clustnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "clustnet/errors.hpp"
#include "clustnet/rng.hpp"

namespace clustnet {

std::uint64_t DegreeSequence::total() const {
    return std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
}

DegreeSequence sample_degree_sequence(const DegreeDistribution& dist, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw parameter_error("degree sequence needs n >= 1");
    std::vector<double> cdf(dist.pmf().size());
    double acc = 0.0;
    for (std::size_t r = 0; r < cdf.size(); ++r) {
        acc += dist(r);
        cdf[r] = acc;
    }
    cdf.back() = 1.0;

    Rng rng(seed);
    DegreeSequence seq;
    seq.degrees.resize(n);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        const auto d = static_cast<std::uint32_t>(it - cdf.begin());
        seq.degrees[i] = d;
        total += d;
    }
    if (total % 2 != 0) seq.degrees[n - 1] += 1;
    return seq;
}

void GraphInstance::finalize() {
    adj_offset_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++adj_offset_[e.u + 1];
        ++adj_offset_[e.v + 1];
    }
    for (std::uint32_t v = 0; v < n_; ++v) adj_offset_[v + 1] += adj_offset_[v];
    adj_.assign(adj_offset_[n_], 0);
    std::vector<std::uint32_t> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
    for (const Edge& e : edges_) {
        adj_[cursor[e.u]++] = e.v;
        adj_[cursor[e.v]++] = e.u;
    }
    for (std::uint32_t v = 0; v < n_; ++v) {
        std::sort(adj_.begin() + adj_offset_[v], adj_.begin() + adj_offset_[v + 1]);
    }
    simple_ = true;
    for (const Edge& e : edges_) {
        if (e.u == e.v) { simple_ = false; break; }
    }
    if (simple_) {
        for (std::uint32_t v = 0; v < n_ && simple_; ++v) {
            for (std::uint32_t i = adj_offset_[v] + 1; i < adj_offset_[v + 1]; ++i) {
                if (adj_[i] == adj_[i - 1]) { simple_ = false; break; }
            }
        }
    }
}

GraphInstance GraphInstance::build(std::uint32_t n, std::vector<Edge> edges, SimplePolicy policy) {
    GraphInstance g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    for (const Edge& e : g.edges_) {
        if (e.u >= n || e.v >= n) throw parameter_error("edge endpoint out of range");
    }
    g.parent_.resize(n);
    std::iota(g.parent_.begin(), g.parent_.end(), 0u);
    g.parent_substituted_.assign(n, 0);
    g.parent_first_.resize(n);
    std::iota(g.parent_first_.begin(), g.parent_first_.end(), 0u);
    g.policy_ = policy;
    g.finalize();
    g.parent_degree_.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) g.parent_degree_[v] = g.degree(v);
    return g;
}

GraphInstance GraphInstance::build_substituted(std::vector<Edge> edges,
                                               std::vector<std::uint32_t> parent_of,
                                               std::vector<std::uint8_t> parent_substituted,
                                               std::vector<std::uint32_t> parent_degree,
                                               std::vector<std::uint32_t> parent_first,
                                               std::uint32_t n_vertices, SimplePolicy policy) {
    GraphInstance g;
    g.n_ = n_vertices;
    g.edges_ = std::move(edges);
    g.parent_ = std::move(parent_of);
    g.parent_substituted_ = std::move(parent_substituted);
    g.parent_degree_ = std::move(parent_degree);
    g.parent_first_ = std::move(parent_first);
    g.policy_ = policy;
    g.finalize();
    return g;
}

namespace {

bool matching_is_simple(const std::vector<Edge>& edges) {
    std::vector<std::uint64_t> keys;
    keys.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v) return false;
        const std::uint64_t a = std::min(e.u, e.v);
        const std::uint64_t b = std::max(e.u, e.v);
        keys.push_back((a << 32) | b);
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

std::vector<Edge> one_matching(const std::vector<std::uint32_t>& half_edges, Rng& rng) {
    std::vector<std::uint32_t> h = half_edges;
    for (std::size_t i = h.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
        std::swap(h[i - 1], h[j]);
    }
    std::vector<Edge> edges;
    edges.reserve(h.size() / 2);
    for (std::size_t i = 0; i + 1 < h.size(); i += 2) {
        edges.push_back({h[i], h[i + 1], EdgeKind::external});
    }
    return edges;
}

} // namespace

GraphInstance configuration_match(const DegreeSequence& seq, std::uint64_t seed,
                                  SimplePolicy policy, unsigned max_tries) {
    if (!seq.even_total()) throw parameter_error("degree sequence must have even total");
    const auto n = static_cast<std::uint32_t>(seq.degrees.size());
    std::vector<std::uint32_t> half_edges;
    half_edges.reserve(seq.total());
    for (std::uint32_t v = 0; v < n; ++v) {
        for (std::uint32_t k = 0; k < seq.degrees[v]; ++k) half_edges.push_back(v);
    }

    Rng rng(seed);
    if (policy == SimplePolicy::reject) {
        for (unsigned attempt = 0; attempt < max_tries; ++attempt) {
            std::vector<Edge> edges = one_matching(half_edges, rng);
            if (matching_is_simple(edges)) return GraphInstance::build(n, std::move(edges), policy);
        }
        std::ostringstream os;
        os << "configuration_match: no simple matching in " << max_tries << " tries";
        throw numeric_error(os.str());
    }

    std::vector<Edge> edges = one_matching(half_edges, rng);
    if (policy == SimplePolicy::erase) {
        std::vector<Edge> kept;
        kept.reserve(edges.size());
        for (Edge e : edges) {
            if (e.u == e.v) continue;
            if (e.u > e.v) std::swap(e.u, e.v);
            kept.push_back(e);
        }
        std::sort(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
            return a.u < b.u || (a.u == b.u && a.v < b.v);
        });
        kept.erase(std::unique(kept.begin(), kept.end(),
                               [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }),
                   kept.end());
        return GraphInstance::build(n, std::move(kept), policy);
    }
    return GraphInstance::build(n, std::move(edges), policy);
}

GraphInstance clique_substitute(const GraphInstance& g, const CliqueProfile& profile, std::uint64_t seed) {
    for (std::uint32_t i = 0; i < g.n_parents(); ++i) {
        if (g.parent_substituted(i)) throw parameter_error("clique_substitute: graph already has clique members");
    }
    const std::uint32_t n = g.n_vertices();
    Rng rng(seed);
    std::vector<std::uint8_t> substituted(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        substituted[i] = rng.bernoulli(profile(g.degree(i))) ? 1 : 0;
    }

    std::vector<std::uint32_t> first(n, UINT32_MAX);
    std::uint32_t next_id = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t d = g.degree(i);
        if (substituted[i]) {
            if (d > 0) { first[i] = next_id; next_id += d; }
            // d == 0: empty clique, vertex removed
        } else {
            first[i] = next_id++;
        }
    }
    const std::uint32_t n_new = next_id;

    std::vector<Edge> edges;
    edges.reserve(g.n_edges() + n); // internal edges added below
    std::vector<std::uint32_t> used(n, 0);
    const auto attach = [&](std::uint32_t old_v) -> std::uint32_t {
        if (substituted[old_v]) return first[old_v] + used[old_v]++;
        return first[old_v];
    };
    for (const Edge& e : g.edges()) {
        const std::uint32_t u = attach(e.u);
        const std::uint32_t v = attach(e.v);
        edges.push_back({u, v, EdgeKind::external});
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!substituted[i] || g.degree(i) < 2) continue;
        const std::uint32_t d = g.degree(i);
        for (std::uint32_t a = 0; a < d; ++a) {
            for (std::uint32_t b = a + 1; b < d; ++b) {
                edges.push_back({first[i] + a, first[i] + b, EdgeKind::internal});
            }
        }
    }

    std::vector<std::uint32_t> parent_of(n_new);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (first[i] == UINT32_MAX) continue;
        const std::uint32_t count = substituted[i] ? g.degree(i) : 1;
        for (std::uint32_t k = 0; k < count; ++k) parent_of[first[i] + k] = i;
    }
    std::vector<std::uint32_t> parent_degree(n);
    for (std::uint32_t i = 0; i < n; ++i) parent_degree[i] = g.degree(i);

    return GraphInstance::build_substituted(std::move(edges), std::move(parent_of),
                                            std::move(substituted), std::move(parent_degree),
                                            std::move(first), n_new, g.policy_used());
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::uint32_t{0}); }
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
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::uint32_t> parent;
};

} // namespace

ProjectionResult project(const GraphInstance& g, const std::vector<std::uint32_t>& sub_vertices,
                         const std::vector<std::uint32_t>& sub_edge_ids) {
    std::vector<std::uint8_t> in_sub(g.n_vertices(), 0);
    for (std::uint32_t v : sub_vertices) {
        if (v >= g.n_vertices()) throw parameter_error("project: vertex id out of range");
        in_sub[v] = 1;
    }
    UnionFind uf(g.n_vertices());
    for (std::uint32_t eid : sub_edge_ids) {
        if (eid >= g.n_edges()) throw parameter_error("project: edge id out of range");
        const Edge& e = g.edges()[eid];
        if (!in_sub[e.u] || !in_sub[e.v]) throw parameter_error("project: edge endpoint outside sub_vertices");
        uf.unite(e.u, e.v);
    }

    // group = (component, parent); ids in ascending order of first member
    std::unordered_map<std::uint64_t, std::uint32_t> group_id;
    group_id.reserve(sub_vertices.size());
    std::vector<std::int64_t> vertex_map(g.n_vertices(), -1);
    std::vector<std::uint32_t> group_parent;
    std::uint32_t next = 0;
    std::vector<std::uint32_t> ordered(sub_vertices.begin(), sub_vertices.end());
    std::sort(ordered.begin(), ordered.end());
    for (std::uint32_t v : ordered) {
        const std::uint64_t key = (static_cast<std::uint64_t>(uf.find(v)) << 32) | g.parent(v);
        auto [it, inserted] = group_id.try_emplace(key, next);
        if (inserted) {
            group_parent.push_back(g.parent(v));
            ++next;
        }
        vertex_map[v] = it->second;
    }

    std::vector<Edge> edges;
    edges.reserve(sub_edge_ids.size());
    for (std::uint32_t eid : sub_edge_ids) {
        const Edge& e = g.edges()[eid];
        if (e.kind == EdgeKind::internal) continue; // contracted by the merge
        edges.push_back({static_cast<std::uint32_t>(vertex_map[e.u]),
                         static_cast<std::uint32_t>(vertex_map[e.v]), EdgeKind::external});
    }

    ProjectionResult out{GraphInstance::build(next, std::move(edges), g.policy_used()),
                         std::move(vertex_map), {}};
    out.vertex_of_parent.assign(g.n_parents(), -1);
    std::vector<std::uint8_t> seen(g.n_parents(), 0);
    for (std::uint32_t pv = 0; pv < next; ++pv) {
        const std::uint32_t par = group_parent[pv];
        if (seen[par]) {
            out.vertex_of_parent[par] = -1; // parent split across groups
        } else {
            out.vertex_of_parent[par] = pv;
            seen[par] = 1;
        }
    }
    return out;
}

ProjectionResult project_full(const GraphInstance& g) {
    std::vector<std::uint32_t> vertices(g.n_vertices());
    std::iota(vertices.begin(), vertices.end(), 0u);
    std::vector<std::uint32_t> edge_ids(g.n_edges());
    std::iota(edge_ids.begin(), edge_ids.end(), 0u);
    return project(g, vertices, edge_ids);
}

DegreeDistribution empirical_degree_hist(const GraphInstance& g) {
    if (g.n_vertices() == 0) throw parameter_error("empirical_degree_hist: empty graph");
    std::uint32_t max_deg = 0;
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) max_deg = std::max(max_deg, g.degree(v));
    std::vector<double> counts(max_deg + 1, 0.0);
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) counts[g.degree(v)] += 1.0;
    return DegreeDistribution::from_pmf(std::move(counts));
}

ClusteringEstimate empirical_clustering(const GraphInstance& g) {
    if (!g.is_simple()) throw parameter_error("empirical_clustering needs a simple graph (policy erase/reject)");
    std::vector<std::uint64_t> triangles(g.n_vertices(), 0);
    bool has_degree2 = false;
    for (const Edge& e : g.edges()) {
        const std::uint32_t u = e.u, v = e.v;
        const std::uint32_t* a = g.neighbors_begin(u);
        const std::uint32_t* ae = g.neighbors_end(u);
        const std::uint32_t* b = g.neighbors_begin(v);
        const std::uint32_t* be = g.neighbors_end(v);
        const std::uint32_t cap = std::max(u, v);
        while (a != ae && b != be) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else {
                const std::uint32_t w = *a;
                if (w > cap) { // count each triangle once, at its smallest edge
                    ++triangles[u];
                    ++triangles[v];
                    ++triangles[w];
                }
                ++a;
                ++b;
            }
        }
    }
    double triples = 0.0, closed = 0.0, local_sum = 0.0;
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        const double d = g.degree(v);
        if (d >= 2) {
            has_degree2 = true;
            triples += d * (d - 1.0);
            closed += 2.0 * static_cast<double>(triangles[v]);
            local_sum += 2.0 * static_cast<double>(triangles[v]) / (d * (d - 1.0));
        }
    }
    if (!has_degree2) throw numeric_error("clustering undefined: no vertex of degree >= 2");
    ClusteringEstimate est;
    est.c = closed / triples;
    est.c2 = local_sum / static_cast<double>(g.n_vertices());
    return est;
}

std::string graph_to_string(const GraphInstance& g) {
    std::ostringstream os;
    os << g.n_vertices() << ' ' << g.n_edges() << '\n';
    for (const Edge& e : g.edges()) {
        os << e.u << ' ' << e.v << ' ' << (e.kind == EdgeKind::internal ? 'i' : 'e') << '\n';
    }
    for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
        os << v << ' ' << g.parent(v) << ' ' << (g.is_clique_member(v) ? 1 : 0) << '\n';
    }
    return os.str();
}

GraphInstance graph_from_string(const std::string& text) {
    std::istringstream in(text);
    std::uint32_t n = 0;
    std::size_t m = 0;
    if (!(in >> n >> m)) throw parameter_error("graph file: bad header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t u, v;
        char kind;
        if (!(in >> u >> v >> kind)) throw parameter_error("graph file: bad edge line");
        edges.push_back({u, v, kind == 'i' ? EdgeKind::internal : EdgeKind::external});
    }
    std::vector<std::uint32_t> parent_of(n);
    std::vector<std::uint8_t> member(n, 0);
    std::uint32_t max_parent = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t v, par;
        int flag;
        if (!(in >> v >> par >> flag) || v >= n) throw parameter_error("graph file: bad parent line");
        parent_of[v] = par;
        member[v] = static_cast<std::uint8_t>(flag != 0);
        max_parent = std::max(max_parent, par);
    }
    const std::uint32_t n_parents = n == 0 ? 0 : max_parent + 1;
    std::vector<std::uint8_t> substituted(n_parents, 0);
    std::vector<std::uint32_t> first(n_parents, UINT32_MAX);
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t p = parent_of[v];
        if (member[v]) substituted[p] = 1;
        first[p] = std::min(first[p], v);
    }
    // degrees (loops twice) recover the parent's pre-substitution degree
    std::vector<std::uint32_t> deg(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    std::vector<std::uint32_t> parent_degree(n_parents, 0);
    for (std::uint32_t v = 0; v < n; ++v) parent_degree[parent_of[v]] = deg[v];
    return GraphInstance::build_substituted(std::move(edges), std::move(parent_of), std::move(substituted),
                                            std::move(parent_degree), std::move(first), n,
                                            SimplePolicy::multigraph);
}

void save_graph(const GraphInstance& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parameter_error("cannot write graph file: " + path);
    out << graph_to_string(g);
}

GraphInstance load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_string(buf.str());
}

} // namespace clustnet
