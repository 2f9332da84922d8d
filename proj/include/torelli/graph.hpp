#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace torelli {

/// Natural ordering on ids: runs of digits compare numerically, so "e2" < "e10".
bool id_less(std::string_view a, std::string_view b);

/// Subset of the edges of a fixed DecGraph, indexed by the graph's internal
/// edge order. Graphs are limited to 64 edges.
class EdgeSet {
public:
    constexpr EdgeSet() = default;
    constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr EdgeSet full(int n)
    {
        return EdgeSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr EdgeSet single(int e) { return EdgeSet(std::uint64_t{1} << e); }

    constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
    constexpr void insert(int e) { bits_ |= std::uint64_t{1} << e; }
    constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool subset_of(EdgeSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(bits_ | o.bits_); }
    constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(bits_ & o.bits_); }
    constexpr EdgeSet operator^(EdgeSet o) const { return EdgeSet(bits_ ^ o.bits_); }
    constexpr EdgeSet minus(EdgeSet o) const { return EdgeSet(bits_ & ~o.bits_); }

    /// Edge indices in increasing order.
    std::vector<int> indices() const;

    friend constexpr bool operator==(EdgeSet, EdgeSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Shortlex order: smaller sets first, then lexicographic on sorted indices.
bool shortlex_less(EdgeSet a, EdgeSet b);

struct Vertex {
    std::string id;
    int genus = 0;
};

struct Edge {
    std::string id;
    int u = 0;
    int v = 0;
    bool is_loop() const { return u == v; }
    int other(int w) const { return w == u ? v : u; }
};

struct GraphSpec {
    struct VertexSpec {
        std::string id;
        int genus = 0;
    };
    struct EdgeSpec {
        std::string id;
        std::string end0;
        std::string end1;
    };
    std::vector<VertexSpec> vertices;
    std::vector<EdgeSpec> edges;
};

/// Finite multigraph with loops whose vertices carry a geometric genus: the
/// dual graph of a nodal curve. Immutable once built; vertices and edges are
/// stored sorted by id.
class DecGraph {
public:
    DecGraph() = default;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    /// Throws InputError for unknown ids.
    int vertex_index(std::string_view id) const;
    int edge_index(std::string_view id) const;

    EdgeSet all_edges() const { return EdgeSet::full(num_edges()); }
    EdgeSet edge_set(const std::vector<std::string>& ids) const;
    std::vector<std::string> edge_ids(EdgeSet s) const;

    /// Number of edge ends at v; a loop counts twice.
    int valence(int v) const;
    /// Edge indices incident to v (a loop is listed once).
    const std::vector<int>& incident(int v) const { return incidence_[v]; }

    friend DecGraph build_graph(const GraphSpec& spec);

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

/// Validates and builds a graph. Errors (InputError) name the offending id:
/// "duplicate id", "dangling endpoint", "negative genus".
DecGraph build_graph(const GraphSpec& spec);

/// Blocks of vertex indices, each sorted, ordered by least member.
std::vector<std::vector<int>> connected_components(const DecGraph& g);
/// Component label per vertex, labels numbered in order of least member.
std::vector<int> component_labels(const DecGraph& g, EdgeSet edges);
int num_components(const DecGraph& g, EdgeSet edges);

/// b1 = #E - #V + #components.
int first_betti(const DecGraph& g);
/// Arithmetic genus; for disconnected graphs the components' genera are
/// combined as sum - (#components - 1).
int curve_genus(const DecGraph& g);
/// The bridges of g.
EdgeSet separating_edges(const DecGraph& g);
bool has_separating_edge(const DecGraph& g);
/// Requires g connected (PreconditionError otherwise).
bool is_stable(const DecGraph& g);
/// Gamma(S): contracts every edge not in S. Merged vertices get genus 0 and
/// the least id of their class.
DecGraph contract_to(const DecGraph& g, EdgeSet s);
/// Gamma minus S; vertices and genera unchanged.
DecGraph delete_edges(const DecGraph& g, EdgeSet s);
/// Subgraph induced on the vertices in `keep` (indices), keeping genera.
DecGraph induced_subgraph(const DecGraph& g, const std::vector<int>& keep);
/// Requires g connected. A single-vertex graph is 3-edge connected.
bool is_three_edge_connected(const DecGraph& g);
bool is_connected(const DecGraph& g);

/// Genus-preserving isomorphism of decorated multigraphs (ids ignored).
bool graphs_isomorphic(const DecGraph& a, const DecGraph& b);
/// Isomorphism-invariant fingerprint used to bucket graphs before testing.
std::uint64_t graph_fingerprint(const DecGraph& g);

}  // namespace torelli
