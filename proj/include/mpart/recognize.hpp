#pragma once

#include "mpart/graph.hpp"
#include "mpart/solver.hpp"

#include <optional>
#include <vector>

namespace mpart {

struct SplitPartition {
    VertexSet clique = 0;
    VertexSet independent = 0;
};

/// Split partition with the largest clique, lexicographically least clique
/// among those; nullopt iff the graph is not split. Uses the degree-sequence
/// threshold test.
std::optional<SplitPartition> split_partition(const Graph& g);

/// colors[v] in {0,1}; nullopt iff the graph has an odd cycle.
std::optional<std::vector<int>> is_bipartite(const Graph& g);
/// Two cliques covering V, as colors of the complement.
std::optional<std::vector<int>> is_cobipartite(const Graph& g);

/// Perfect elimination ordering (order[0] eliminated first) from maximum
/// cardinality search; nullopt iff the graph has a chordless cycle of length >= 4.
std::optional<std::vector<int>> is_chordal(const Graph& g);

/// Partition into k independent sets and ell cliques, via the solver on
/// make_kl_matrix(k, ell).
std::optional<PartAssignment> is_kl_graph(const Graph& g, int k, int ell);

/// Every vertex outside `h` sees all of `h` or none of it.
bool is_homogeneous_set(const Graph& g, VertexSet h);

struct HomogeneityReport {
    VertexSet part = 0;
    std::vector<VertexSet> classes;
    int max_class_size = 0;
};

/// Groups the vertices of `part` by their neighbourhood outside `part`.
/// Because `part` is a clique or an independent set, every class is a
/// homogeneous set of g. Throws PartNotUniform otherwise.
HomogeneityReport homogeneity_report(const Graph& g, VertexSet part);

/// An induced subgraph isomorphic to 2K2, as four vertices (a,b,c,d) with
/// edges ab and cd only.
std::optional<std::vector<int>> find_induced_2k2(const Graph& g);

}  // namespace mpart
