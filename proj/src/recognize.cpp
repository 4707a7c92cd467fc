#include "mpart/recognize.hpp"

#include "mpart/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace mpart {

namespace {

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : members(s)) {
        if ((s & ~vertex_bit(v) & ~g.neighbors(v)) != 0) return false;
    }
    return true;
}

bool is_independent(const Graph& g, VertexSet s) {
    for (int v : members(s)) {
        if (g.neighbors(v) & s) return false;
    }
    return true;
}

}  // namespace

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    // Hammer-Simeone: with degrees d_1 >= ... >= d_n and m the largest i with
    // d_i >= i - 1, the graph is split iff
    //   sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i.
    int m = 0;
    for (int i = 1; i <= n; ++i) {
        if (g.degree(order[i - 1]) >= i - 1) m = i;
    }
    long lhs = 0;
    long rhs = static_cast<long>(m) * (m - 1);
    for (int i = 0; i < n; ++i) (i < m ? lhs : rhs) += g.degree(order[i]);
    if (lhs != rhs) return std::nullopt;

    VertexSet base = 0;
    for (int i = 0; i < m; ++i) base |= vertex_bit(order[i]);

    // Any other split partition with a maximum clique exchanges at most one
    // vertex with the base one.
    const VertexSet all = all_vertices(n);
    std::vector<VertexSet> candidates{base};
    for (int x : members(base)) {
        for (int y : members(all & ~base)) {
            const VertexSet swapped = (base & ~vertex_bit(x)) | vertex_bit(y);
            if (is_clique(g, swapped) && is_independent(g, all & ~swapped)) candidates.push_back(swapped);
        }
    }
    const auto best = *std::min_element(candidates.begin(), candidates.end(),
                                        [](VertexSet a, VertexSet b) { return members(a) < members(b); });
    return SplitPartition{best, all & ~best};
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int u : members(g.neighbors(v))) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::optional<std::vector<int>> is_cobipartite(const Graph& g) { return is_bipartite(complement(g)); }

std::optional<std::vector<int>> is_chordal(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(n, 0);
    VertexSet unvisited = all_vertices(n);
    std::vector<int> visit;
    visit.reserve(n);
    while (unvisited) {
        int pick = -1;
        for (int v : members(unvisited)) {
            if (pick < 0 || weight[v] > weight[pick]) pick = v;
        }
        visit.push_back(pick);
        unvisited &= ~vertex_bit(pick);
        for (int u : members(g.neighbors(pick) & unvisited)) ++weight[u];
    }
    std::vector<int> peo(visit.rbegin(), visit.rend());
    VertexSet later = all_vertices(n);
    for (int v : peo) {
        later &= ~vertex_bit(v);
        if (!is_clique(g, g.neighbors(v) & later)) return std::nullopt;
    }
    return peo;
}

std::optional<PartAssignment> is_kl_graph(const Graph& g, int k, int ell) {
    return solve(g, make_kl_matrix(k, ell));
}

bool is_homogeneous_set(const Graph& g, VertexSet h) {
    const VertexSet all = all_vertices(g.order());
    if (h & ~all) throw Error(Errc::VertexOutOfRange, "vertex set exceeds graph order");
    for (int v : members(all & ~h)) {
        const VertexSet seen = g.neighbors(v) & h;
        if (seen != 0 && seen != h) return false;
    }
    return true;
}

HomogeneityReport homogeneity_report(const Graph& g, VertexSet part) {
    const VertexSet all = all_vertices(g.order());
    if (part & ~all) throw Error(Errc::VertexOutOfRange, "vertex set exceeds graph order");
    if (!is_clique(g, part) && !is_independent(g, part)) {
        throw Error(Errc::PartNotUniform, "part induces neither a clique nor an independent set");
    }
    std::map<VertexSet, VertexSet> by_outside;
    for (int v : members(part)) by_outside[g.neighbors(v) & ~part] |= vertex_bit(v);
    HomogeneityReport report;
    report.part = part;
    for (const auto& [outside, cls] : by_outside) {
        report.classes.push_back(cls);
        report.max_class_size = std::max(report.max_class_size, std::popcount(cls));
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](VertexSet a, VertexSet b) { return std::countr_zero(a) < std::countr_zero(b); });
    return report;
}

std::optional<std::vector<int>> find_induced_2k2(const Graph& g) {
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [a, b] = edges[i];
            const auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (!g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, c) && !g.adjacent(b, d)) {
                return std::vector<int>{a, b, c, d};
            }
        }
    }
    return std::nullopt;
}

}  // namespace mpart
