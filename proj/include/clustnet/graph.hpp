#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clustnet/dist.hpp"
#include "clustnet/model.hpp"

namespace clustnet {

enum class EdgeKind : std::uint8_t { external = 0, internal = 1 };

struct Edge {
    std::uint32_t u;
    std::uint32_t v;
    EdgeKind kind;
};

enum class SimplePolicy { multigraph, erase, reject };

struct DegreeSequence {
    std::vector<std::uint32_t> degrees;

    std::uint64_t total() const;
    bool even_total() const { return total() % 2 == 0; }
};

/// i.i.d. draws from `dist`; if the sum comes out odd the last entry is bumped
/// by one so a matching exists. Deterministic given the seed.
DegreeSequence sample_degree_sequence(const DegreeDistribution& dist, std::size_t n, std::uint64_t seed);

/// Multigraph-capable vertex/edge store for configuration-model graphs and
/// their clique-substituted versions. Immutable once built; loops count twice
/// toward the degree. Every vertex keeps the id of its parent in the
/// pre-substitution graph, plus whether that parent was replaced by a clique.
class GraphInstance {
public:
    std::uint32_t n_vertices() const { return n_; }
    std::size_t n_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::uint32_t degree(std::uint32_t v) const { return adj_offset_[v + 1] - adj_offset_[v]; }
    /// Sorted neighbor list; a loop lists the vertex itself twice.
    const std::uint32_t* neighbors_begin(std::uint32_t v) const { return adj_.data() + adj_offset_[v]; }
    const std::uint32_t* neighbors_end(std::uint32_t v) const { return adj_.data() + adj_offset_[v + 1]; }

    std::uint32_t parent(std::uint32_t v) const { return parent_[v]; }
    bool is_clique_member(std::uint32_t v) const { return parent_substituted_[parent_[v]] != 0; }

    std::uint32_t n_parents() const { return static_cast<std::uint32_t>(parent_substituted_.size()); }
    bool parent_substituted(std::uint32_t i) const { return parent_substituted_[i] != 0; }
    std::uint32_t parent_degree(std::uint32_t i) const { return parent_degree_[i]; }
    /// First vertex id of parent i's members (members are contiguous);
    /// UINT32_MAX if the parent left no vertices (removed empty clique).
    std::uint32_t parent_first_vertex(std::uint32_t i) const { return parent_first_[i]; }

    bool is_simple() const { return simple_; }
    SimplePolicy policy_used() const { return policy_; }

    static GraphInstance build(std::uint32_t n, std::vector<Edge> edges, SimplePolicy policy);
    static GraphInstance build_substituted(std::vector<Edge> edges,
                                           std::vector<std::uint32_t> parent_of,
                                           std::vector<std::uint8_t> parent_substituted,
                                           std::vector<std::uint32_t> parent_degree,
                                           std::vector<std::uint32_t> parent_first,
                                           std::uint32_t n_vertices, SimplePolicy policy);

private:
    void finalize();

    std::uint32_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> parent_substituted_;
    std::vector<std::uint32_t> parent_degree_;
    std::vector<std::uint32_t> parent_first_;
    std::vector<std::uint32_t> adj_offset_;
    std::vector<std::uint32_t> adj_;
    bool simple_ = false;
    SimplePolicy policy_ = SimplePolicy::multigraph;
};

/// Uniform half-edge matching of the degree sequence. `erase` drops loops and
/// collapses parallel edges afterwards; `reject` resamples until the matching
/// is simple (up to max_tries, then fails).
GraphInstance configuration_match(const DegreeSequence& seq, std::uint64_t seed,
                                  SimplePolicy policy = SimplePolicy::reject,
                                  unsigned max_tries = 1000);

/// Replaces each vertex i independently with probability gamma_{deg(i)} by a
/// clique of size deg(i) whose members take over i's half-edges one each.
/// Degree-0 vertices hit by the coin are removed. Members of one clique get
/// contiguous ids.
GraphInstance clique_substitute(const GraphInstance& g, const CliqueProfile& profile, std::uint64_t seed);

struct ProjectionResult {
    GraphInstance graph;
    /// original vertex -> projected vertex (-1 if outside the subgraph)
    std::vector<std::int64_t> vertex_map;
    /// parent id -> projected vertex (-1 if absent or split across groups)
    std::vector<std::int64_t> vertex_of_parent;
};

/// Merges same-parent vertices that are connected within the subgraph
/// (internal edges contract, external edges survive; an external edge whose
/// endpoints merge becomes a loop). Projecting the full graph recovers the
/// pre-substitution graph up to removed empty cliques.
ProjectionResult project(const GraphInstance& g, const std::vector<std::uint32_t>& sub_vertices,
                         const std::vector<std::uint32_t>& sub_edge_ids);

/// project() over all vertices and edges.
ProjectionResult project_full(const GraphInstance& g);

/// Fraction of vertices per degree.
DegreeDistribution empirical_degree_hist(const GraphInstance& g);

struct ClusteringEstimate {
    double c = 0.0;  // global transitivity
    double c2 = 0.0; // mean local coefficient (degree <= 1 counts as zero)
};

/// Triangle-based clustering coefficients; needs a simple graph and at least
/// one vertex of degree >= 2.
ClusteringEstimate empirical_clustering(const GraphInstance& g);

/// Text round-trip: "n m" header, one "u v kind" line per edge (kind e|i),
/// then one "v parent is_clique" line per vertex. Byte-stable for fixed seed.
void save_graph(const GraphInstance& g, const std::string& path);
GraphInstance load_graph(const std::string& path);
std::string graph_to_string(const GraphInstance& g);
GraphInstance graph_from_string(const std::string& text);

} // namespace clustnet
