#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mpart {

/// Vertex subset of a graph with at most 64 vertices; bit v is vertex v.
using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int v) noexcept { return VertexSet{1} << v; }
constexpr VertexSet all_vertices(int n) noexcept { return n >= 64 ? ~VertexSet{0} : vertex_bit(n) - 1; }

std::vector<int> members(VertexSet s);

/// Simple undirected graph on vertices 0..n-1 stored as one adjacency bit
/// row per vertex. Rows are irreflexive, symmetric and clear above n.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    explicit Graph(int n);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    VertexSet neighbors(int v) const noexcept { return adj_[v]; }
    bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
    int degree(int v) const noexcept;
    int edge_count() const noexcept;
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

Graph parse_graph6(std::string_view s);
std::string to_graph6(const Graph& g);

/// "n; u-v, u-v, ..." (the edge list may be empty).
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph complement(const Graph& g);
/// Induced subgraph on V \ {v}; the remaining vertices keep their order.
Graph delete_vertex(const Graph& g, int v);
/// Induced subgraph on `s`, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet s);
/// Vertex v of `g` becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Upper-triangle adjacency of a canonically relabeled isomorph. Column j
/// holds bit (63 - i) for every edge ij with i < j, so comparing columns in
/// order is comparing the graph6 bit strings.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> columns;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Labeling `perm` with canonical_graph = relabel(g, perm).
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
CanonicalForm form_of(const Graph& labeled);

struct EnumerationOptions {
    int max_order = 8;
    int jobs = 1;
};

/// One canonical representative per isomorphism class on n vertices, in
/// ascending CanonicalForm order. Throws TooLarge above `max_order`.
std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& opts = {});

/// Same contract restricted to split graphs; default limit 9.
std::vector<Graph> enumerate_split_graphs(int n, const EnumerationOptions& opts = {.max_order = 9, .jobs = 1});

/// Generated levels are memoized process-wide; this drops them.
void clear_enumeration_cache();

}  // namespace mpart
