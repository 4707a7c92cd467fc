#include "mpart/graph.hpp"

#include "mpart/error.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <string>

namespace mpart {

std::vector<int> members(VertexSet s) {
    std::vector<int> out;
    out.reserve(std::popcount(s));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n) {
    if (n < 0 || n > kMaxOrder) {
        throw Error(Errc::TooLarge, "graph order must be in [0, 64], got " + std::to_string(n));
    }
    adj_.assign(n, 0);
}

int Graph::degree(int v) const noexcept { return std::popcount(adj_[v]); }

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u) {
        for (int v : members(adj_[u] & ~all_vertices(u + 1))) out.emplace_back(u, v);
    }
    return out;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
        throw Error(Errc::VertexOutOfRange, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                                " outside 0.." + std::to_string(order() - 1));
    }
    if (u == v) throw Error(Errc::SelfLoop, "self loop at vertex " + std::to_string(u));
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
}

void Graph::remove_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
        throw Error(Errc::VertexOutOfRange, "edge endpoint out of range");
    }
    adj_[u] &= ~vertex_bit(v);
    adj_[v] &= ~vertex_bit(u);
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// packed six bits per byte, each byte offset by 63.

Graph parse_graph6(std::string_view s) {
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    for (char ch : s) {
        if (ch < 63 || ch > 126) throw Error(Errc::MalformedGraph6, "byte outside 63..126");
    }
    if (s.empty()) throw Error(Errc::MalformedGraph6, "empty string");
    std::size_t pos = 0;
    long n = 0;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() < 4 || s[1] == '~') throw Error(Errc::MalformedGraph6, "unsupported order prefix");
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
        if (n < 63) throw Error(Errc::MalformedGraph6, "non-minimal order prefix");
        pos = 4;
    }
    if (n > Graph::kMaxOrder) throw Error(Errc::TooLarge, "graph6 order " + std::to_string(n) + " exceeds 64");
    const long bits = n * (n - 1) / 2;
    const long bytes = (bits + 5) / 6;
    if (static_cast<long>(s.size() - pos) != bytes) {
        throw Error(Errc::MalformedGraph6, "expected " + std::to_string(bytes) + " data bytes for n=" +
                                               std::to_string(n));
    }
    Graph g(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = s[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; k < bytes * 6; ++k) {
        if (((s[pos + k / 6] - 63) >> (5 - k % 6)) & 1) {
            throw Error(Errc::MalformedGraph6, "non-zero padding bits");
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s) {
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(Errc::MalformedEdgeList, "expected an integer, got '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw Error(Errc::MalformedEdgeList, "missing ';' after vertex count");
    const int n = parse_int(text.substr(0, semi));
    Graph g(n);
    std::string_view rest = trim(text.substr(semi + 1));
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : trim(rest.substr(comma + 1));
        if (item.empty()) continue;
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            throw Error(Errc::MalformedEdgeList, "edge '" + std::string(item) + "' is not of the form u-v");
        }
        g.add_edge(parse_int(item.substr(0, dash)), parse_int(item.substr(dash + 1)));
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out += first ? " " : ", ";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s & ~all_vertices(g.order())) throw Error(Errc::VertexOutOfRange, "vertex set exceeds graph order");
    const auto keep = members(s);
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            if (g.adjacent(keep[a], keep[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    return induced_subgraph(g, all_vertices(g.order()) & ~vertex_bit(v));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw Error(Errc::BadParameters, "permutation size mismatch");
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph path(int n) {
    if (n < 0) throw Error(Errc::BadParameters, "path order must be non-negative");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw Error(Errc::BadParameters, "cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) { return complement(empty(n)); }

Graph empty(int n) {
    if (n < 0) throw Error(Errc::BadParameters, "graph order must be non-negative");
    return Graph(n);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int offset = g.order();
    Graph out(offset + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(u + offset, v + offset);
    return out;
}

}  // namespace mpart
