#pragma once

#include "mpart/graph.hpp"
#include "mpart/pattern.hpp"
#include "mpart/solver.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mpart {

/// G admits no M-partition.
bool is_obstruction(const Graph& g, const PatternMatrix& m);

/// Proof that `graph` is a minimal `matrix`-obstruction: witnesses[v] is an
/// M-partition of delete_vertex(graph, v).
struct MinimalityCertificate {
    PatternMatrix matrix;
    Graph graph;
    std::vector<PartAssignment> witnesses;
};

enum class MinimalityStatus { Partitionable, NotMinimal, Minimal };

std::string_view to_string(MinimalityStatus s) noexcept;

struct MinimalityCheck {
    MinimalityStatus status = MinimalityStatus::Partitionable;
    std::optional<PartAssignment> witness;  // when Partitionable
    int obstructing_vertex = -1;            // when NotMinimal: G - v is still an obstruction
    std::optional<MinimalityCertificate> certificate;
};

MinimalityCheck check_minimality(const Graph& g, const PatternMatrix& m);
std::optional<MinimalityCertificate> minimality_certificate(const Graph& g, const PatternMatrix& m);

/// Rechecks a certificate without the search that produced it: every witness
/// validates, and the whole graph has no partition (counted exhaustively
/// when small enough, otherwise by the solver).
bool verify_certificate(const MinimalityCertificate& cert);

enum class GraphClass { All, Split, Bipartite, Cobipartite, Chordal };

std::string_view to_string(GraphClass c) noexcept;
/// Throws BadParameters on an unknown name.
GraphClass parse_graph_class(std::string_view name);
/// Largest order the class can be enumerated at.
int class_limit(GraphClass c) noexcept;
bool in_class(const Graph& g, GraphClass c);

/// Canonical representatives of the class on n vertices, ascending
/// CanonicalForm. Throws TooLarge above class_limit.
std::vector<Graph> class_members(GraphClass c, int n, int jobs = 1);

struct CatalogEntry {
    std::string graph6;
    MinimalityCertificate certificate;
};

struct EnumerationReport {
    PatternMatrix matrix;
    GraphClass graph_class = GraphClass::All;
    int n_max = 0;
    /// Set when the matrix has a diagonal Star: every graph is partitionable.
    bool diagonal_star = false;
    std::vector<CatalogEntry> obstructions;  // ascending CanonicalForm
    std::map<int, int> counts;               // order -> number found
    std::map<int, int> candidates;           // order -> class members examined
    double elapsed_seconds = 0.0;
};

/// All minimal obstructions in the class with at most n_max vertices, each
/// certified. Candidates that contain a smaller obstruction as a
/// one-vertex-deleted subgraph are discarded without further solving.
EnumerationReport enumerate_minimal_obstructions(const PatternMatrix& m, GraphClass c, int n_max, int jobs = 1);

struct Theorem5Instance {
    PatternMatrix matrix;
    Graph graph;
};

/// Split obstruction for M_{2n+1,n} on 4n+1+C(2n,n) vertices. Vertex order:
/// a = 0; b_1..b_{2n} = 1..2n (a clique, all adjacent to a); mates
/// b'_1..b'_{2n} = 2n+1..4n (independent, b'_i adjacent to a and to every
/// b_j with j != i); then one vertex per n-subset T of B in lexicographic
/// order, adjacent exactly to T. Requires 1 <= n <= 3.
Theorem5Instance construct_theorem5(int n);

/// Path p_1..p_{2t} on vertices 0..2t-1 plus u = 2t adjacent to
/// p_2..p_{2t-1}. Requires 3 <= t <= 31.
Graph construct_gt(int t);

struct Bound {
    std::uint64_t value = 0;
    bool swapped = false;  // evaluated at (ell, k) because k < ell
};

/// 2^{k-1}(k+ell)(2k+3)+1, with k >= ell (swapped otherwise).
Bound theorem1_bound(int k, int ell);
/// 2^{2 ell}(k+ell)(2 ell+3).
std::uint64_t theorem4_bound(int k, int ell);
/// 4n+1+C(2n,n).
std::uint64_t theorem5_size(int n);
/// (k+1)(ell+1), for Star-free matrices.
std::uint64_t feder2008_bound(int k, int ell);

std::uint64_t binomial(int n, int r);

}  // namespace mpart
