#pragma once

#include "mpart/graph.hpp"
#include "mpart/pattern.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace mpart {

/// Part index of every vertex.
struct PartAssignment {
    std::vector<int> parts;
    friend bool operator==(const PartAssignment&, const PartAssignment&) = default;
};

/// allowed[v] has bit i set iff vertex v may go to part i.
struct ListConstraint {
    std::vector<std::uint64_t> allowed;
};

/// Throws PartOutOfRange if an index is not a part of `m`, BadParameters if
/// the assignment does not cover every vertex.
bool validate(const Graph& g, const PatternMatrix& m, const PartAssignment& assignment);

/// Exact backtracking search with forward checking. Vertices are chosen by
/// fewest remaining parts (lowest index on ties) and parts are tried in
/// increasing order, so the returned witness is deterministic. Returns
/// nullopt only when no M-partition respecting the lists exists.
std::optional<PartAssignment> solve(const Graph& g, const PatternMatrix& m,
                                    const std::optional<ListConstraint>& lists = std::nullopt);

struct BoundedSolve {
    bool completed = true;
    std::optional<PartAssignment> witness;
};

/// Same search, abandoned once `deadline` passes. `completed == false` means
/// nothing is known about the instance.
BoundedSolve solve_until(const Graph& g, const PatternMatrix& m, std::chrono::steady_clock::time_point deadline,
                         const std::optional<ListConstraint>& lists = std::nullopt);

enum class SplitRoute {
    StarInC,       // two-part witness from the split partition
    Occupants,     // cross-occupant enumeration plus residual search
};

struct SplitSolve {
    SplitRoute route = SplitRoute::Occupants;
    std::optional<PartAssignment> witness;
};

/// Solver for split inputs. When block C has a Star the clique and the
/// independent set of a split partition go to the two parts of that Star.
/// Otherwise each independent part holds at most one clique vertex and each
/// clique part at most one independent vertex; those occupants are
/// enumerated before the rest is completed. Throws NotSplit or DiagonalStar.
SplitSolve solve_split_detailed(const Graph& g, const PatternMatrix& m);
std::optional<PartAssignment> solve_split(const Graph& g, const PatternMatrix& m);

/// Number of valid assignments among all m^n. Guarded to n <= 10, m <= 4.
std::uint64_t count_partitions(const Graph& g, const PatternMatrix& m);

}  // namespace mpart
