// Canonical labeling by individualization-refinement and exhaustive graph
// generation on top of it.

#include "mpart/error.hpp"
#include "mpart/graph.hpp"
#include "mpart/parallel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>

namespace mpart {

namespace {

using Cells = std::vector<VertexSet>;

/// Splits every cell by the number of neighbours each vertex has in cell
/// `w`; sub-cells are ordered by ascending count. Returns true if any cell
/// split.
bool split_against(const Graph& g, Cells& cells, VertexSet w) {
    Cells next;
    next.reserve(cells.size() * 2);
    bool split = false;
    for (VertexSet cell : cells) {
        if (std::popcount(cell) == 1) {
            next.push_back(cell);
            continue;
        }
        std::map<int, VertexSet> by_count;
        for (int v : members(cell)) by_count[std::popcount(g.neighbors(v) & w)] |= vertex_bit(v);
        split |= by_count.size() > 1;
        for (const auto& [count, part] : by_count) next.push_back(part);
    }
    cells = std::move(next);
    return split;
}

/// Equitable refinement. The result depends only on the ordered partition
/// and the graph, never on vertex labels inside a cell.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size(); ++w) {
            if (split_against(g, cells, cells[w])) {
                changed = true;
                break;
            }
        }
    }
}

bool twins(const Graph& g, int u, int v) {
    return (g.neighbors(u) & ~vertex_bit(v)) == (g.neighbors(v) & ~vertex_bit(u));
}

std::vector<std::uint64_t> leaf_key(const Graph& g, const Cells& cells) {
    const int n = g.order();
    std::vector<int> at(n);
    for (int i = 0; i < n; ++i) at[i] = std::countr_zero(cells[i]);
    std::vector<std::uint64_t> cols(n, 0);
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(at[i], at[j])) cols[j] |= std::uint64_t{1} << (63 - i);
        }
    }
    return cols;
}

struct Search {
    const Graph& g;
    std::vector<std::uint64_t> best_key;
    Cells best_cells;
    bool found = false;

    void run(Cells cells) {
        refine(g, cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return std::popcount(c) > 1; });
        if (target == cells.end()) {
            auto key = leaf_key(g, cells);
            if (!found || key < best_key) {
                best_key = std::move(key);
                best_cells = cells;
                found = true;
            }
            return;
        }
        const auto idx = static_cast<std::size_t>(target - cells.begin());
        const VertexSet cell = *target;
        std::vector<int> tried;
        for (int v : members(cell)) {
            // Swapping twins in a common cell is an automorphism fixing the
            // partition, so their subtrees yield the same leaves.
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<long>(idx));
            child.push_back(vertex_bit(v));
            child.push_back(cell & ~vertex_bit(v));
            child.insert(child.end(), cells.begin() + static_cast<long>(idx) + 1, cells.end());
            run(std::move(child));
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {};
    Search search{g, {}, {}, false};
    search.run(Cells{all_vertices(n)});
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[std::countr_zero(search.best_cells[i])] = i;
    return perm;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

CanonicalForm form_of(const Graph& labeled) {
    CanonicalForm f;
    f.n = labeled.order();
    f.columns.assign(f.n, 0);
    for (int j = 1; j < f.n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (labeled.adjacent(i, j)) f.columns[j] |= std::uint64_t{1} << (63 - i);
        }
    }
    return f;
}

CanonicalForm canonical_form(const Graph& g) { return form_of(canonical_graph(g)); }

namespace {

std::vector<Graph> sorted_representatives(std::vector<std::map<CanonicalForm, Graph>>& shards) {
    std::map<CanonicalForm, Graph> merged;
    for (auto& shard : shards) merged.merge(shard);
    std::vector<Graph> out;
    out.reserve(merged.size());
    for (auto& [form, g] : merged) out.push_back(std::move(g));
    return out;
}

void insert_canonical(std::map<CanonicalForm, Graph>& into, const Graph& g) {
    Graph canon = canonical_graph(g);
    auto form = form_of(canon);
    into.try_emplace(std::move(form), std::move(canon));
}

// Generated levels are reused across calls; the lists are immutable once stored.
std::mutex cache_mutex;
std::map<std::pair<int, int>, std::vector<Graph>> level_cache;  // (kind, n)

const std::vector<Graph>* cached(int kind, int n) {
    std::lock_guard lock(cache_mutex);
    auto it = level_cache.find({kind, n});
    return it == level_cache.end() ? nullptr : &it->second;
}

const std::vector<Graph>& store(int kind, int n, std::vector<Graph> graphs) {
    std::lock_guard lock(cache_mutex);
    return level_cache.try_emplace({kind, n}, std::move(graphs)).first->second;
}

/// Every graph on n vertices is a graph on n-1 vertices plus one vertex with
/// some neighbourhood, so augmenting all representatives of order n-1 in
/// every possible way and deduplicating reaches every class.
const std::vector<Graph>& all_graphs_level(int n, int jobs) {
    if (const auto* hit = cached(0, n)) return *hit;
    if (n == 0) return store(0, 0, {Graph(0)});
    const auto& parents = all_graphs_level(n - 1, jobs);
    std::vector<std::map<CanonicalForm, Graph>> shards(parents.size());
    parallel_for(parents.size(), jobs, [&](std::size_t p) {
        const Graph& parent = parents[p];
        for (VertexSet nbhd = 0; nbhd <= all_vertices(n - 1); ++nbhd) {
            Graph child(n);
            for (auto [u, v] : parent.edges()) child.add_edge(u, v);
            for (int u : members(nbhd)) child.add_edge(u, n - 1);
            insert_canonical(shards[p], child);
        }
    });
    return store(0, n, sorted_representatives(shards));
}

/// Clique vertices 0..c-1, independent vertices c..n-1. Independent vertices
/// are interchangeable, so their neighbourhoods into the clique only need to
/// range over non-decreasing sequences.
const std::vector<Graph>& split_graphs_level(int n, int jobs) {
    if (const auto* hit = cached(1, n)) return *hit;
    std::vector<std::map<CanonicalForm, Graph>> shards(n + 1);
    parallel_for(static_cast<std::size_t>(n + 1), jobs, [&](std::size_t c_idx) {
        const int c = static_cast<int>(c_idx);
        const int r = n - c;
        const VertexSet limit = all_vertices(c);
        std::vector<VertexSet> nbhd(r, 0);
        while (true) {
            Graph g(n);
            for (int u = 0; u < c; ++u) {
                for (int v = u + 1; v < c; ++v) g.add_edge(u, v);
            }
            for (int i = 0; i < r; ++i) {
                for (int u : members(nbhd[i])) g.add_edge(u, c + i);
            }
            insert_canonical(shards[c_idx], g);
            // Next non-decreasing sequence.
            int pos = r - 1;
            while (pos >= 0 && nbhd[pos] == limit) --pos;
            if (pos < 0) break;
            ++nbhd[pos];
            for (int i = pos + 1; i < r; ++i) nbhd[i] = nbhd[pos];
        }
    });
    return store(1, n, sorted_representatives(shards));
}

void check_limit(int n, int max_order) {
    if (n < 0) throw Error(Errc::BadParameters, "order must be non-negative");
    if (n > max_order) {
        throw Error(Errc::TooLarge, "order " + std::to_string(n) + " exceeds enumeration limit " +
                                        std::to_string(max_order));
    }
}

}  // namespace

void clear_enumeration_cache() {
    std::lock_guard lock(cache_mutex);
    level_cache.clear();
}

std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& opts) {
    check_limit(n, opts.max_order);
    return all_graphs_level(n, opts.jobs);
}

std::vector<Graph> enumerate_split_graphs(int n, const EnumerationOptions& opts) {
    check_limit(n, opts.max_order);
    return split_graphs_level(n, opts.jobs);
}

}  // namespace mpart
