#include "mpart/obstruction.hpp"

#include "mpart/error.hpp"
#include "mpart/parallel.hpp"
#include "mpart/recognize.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace mpart {

bool is_obstruction(const Graph& g, const PatternMatrix& m) { return !solve(g, m).has_value(); }

std::string_view to_string(MinimalityStatus s) noexcept {
    switch (s) {
        case MinimalityStatus::Partitionable: return "partitionable";
        case MinimalityStatus::NotMinimal: return "obstruction-not-minimal";
        case MinimalityStatus::Minimal: return "minimal-obstruction";
    }
    return "unknown";
}

MinimalityCheck check_minimality(const Graph& g, const PatternMatrix& m) {
    MinimalityCheck out;
    if (auto w = solve(g, m)) {
        out.witness = std::move(w);
        return out;
    }
    MinimalityCertificate cert{m, g, {}};
    for (int v = 0; v < g.order(); ++v) {
        auto w = solve(delete_vertex(g, v), m);
        if (!w) {
            out.status = MinimalityStatus::NotMinimal;
            out.obstructing_vertex = v;
            return out;
        }
        cert.witnesses.push_back(std::move(*w));
    }
    out.status = MinimalityStatus::Minimal;
    out.certificate = std::move(cert);
    return out;
}

std::optional<MinimalityCertificate> minimality_certificate(const Graph& g, const PatternMatrix& m) {
    return check_minimality(g, m).certificate;
}

bool verify_certificate(const MinimalityCertificate& cert) {
    const Graph& g = cert.graph;
    if (static_cast<int>(cert.witnesses.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v) {
        const Graph sub = delete_vertex(g, v);
        if (static_cast<int>(cert.witnesses[v].parts.size()) != sub.order()) return false;
        if (!validate(sub, cert.matrix, cert.witnesses[v])) return false;
    }
    if (g.order() <= 10 && cert.matrix.order() <= 4) return count_partitions(g, cert.matrix) == 0;
    return is_obstruction(g, cert.matrix);
}

std::string_view to_string(GraphClass c) noexcept {
    switch (c) {
        case GraphClass::All: return "all";
        case GraphClass::Split: return "split";
        case GraphClass::Bipartite: return "bipartite";
        case GraphClass::Cobipartite: return "cobipartite";
        case GraphClass::Chordal: return "chordal";
    }
    return "unknown";
}

GraphClass parse_graph_class(std::string_view name) {
    for (auto c : {GraphClass::All, GraphClass::Split, GraphClass::Bipartite, GraphClass::Cobipartite,
                   GraphClass::Chordal}) {
        if (to_string(c) == name) return c;
    }
    throw Error(Errc::BadParameters, "unknown graph class '" + std::string(name) + "'");
}

int class_limit(GraphClass c) noexcept { return c == GraphClass::Split ? 9 : 8; }

bool in_class(const Graph& g, GraphClass c) {
    switch (c) {
        case GraphClass::All: return true;
        case GraphClass::Split: return split_partition(g).has_value();
        case GraphClass::Bipartite: return is_bipartite(g).has_value();
        case GraphClass::Cobipartite: return is_cobipartite(g).has_value();
        case GraphClass::Chordal: return is_chordal(g).has_value();
    }
    return false;
}

std::vector<Graph> class_members(GraphClass c, int n, int jobs) {
    if (n > class_limit(c)) {
        throw Error(Errc::TooLarge, std::string(to_string(c)) + " graphs are enumerated up to order " +
                                        std::to_string(class_limit(c)));
    }
    if (c == GraphClass::Split) return enumerate_split_graphs(n, {.max_order = class_limit(c), .jobs = jobs});
    auto graphs = enumerate_graphs(n, {.max_order = class_limit(c), .jobs = jobs});
    if (c == GraphClass::All) return graphs;
    std::erase_if(graphs, [c](const Graph& g) { return !in_class(g, c); });
    return graphs;
}

namespace {

struct LevelResult {
    bool obstruction = false;
    std::optional<MinimalityCertificate> certificate;
};

/// Level-by-level search over a hereditary class. Every member of order
/// n-1 has been classified before order n starts, so "G - v is an
/// obstruction" is a lookup.
std::vector<CatalogEntry> search_class(const PatternMatrix& m, GraphClass c, int n_max, int jobs,
                                       std::map<int, int>& candidates) {
    std::vector<CatalogEntry> found;
    std::set<CanonicalForm> previous_obstructions;
    for (int n = 1; n <= n_max; ++n) {
        const auto members_n = class_members(c, n, jobs);
        candidates[n] = static_cast<int>(members_n.size());
        std::vector<LevelResult> results(members_n.size());
        parallel_for(members_n.size(), jobs, [&](std::size_t i) {
            const Graph& g = members_n[i];
            if (solve(g, m)) return;
            results[i].obstruction = true;
            for (int v = 0; v < n; ++v) {
                if (previous_obstructions.contains(canonical_form(delete_vertex(g, v)))) return;
            }
            MinimalityCertificate cert{m, g, {}};
            for (int v = 0; v < n; ++v) {
                auto w = solve(delete_vertex(g, v), m);
                if (!w) return;
                cert.witnesses.push_back(std::move(*w));
            }
            results[i].certificate = std::move(cert);
        });
        std::set<CanonicalForm> current;
        for (std::size_t i = 0; i < members_n.size(); ++i) {
            if (!results[i].obstruction) continue;
            current.insert(form_of(members_n[i]));
            if (results[i].certificate) {
                found.push_back({to_graph6(members_n[i]), std::move(*results[i].certificate)});
            }
        }
        previous_obstructions = std::move(current);
    }
    return found;
}

}  // namespace

EnumerationReport enumerate_minimal_obstructions(const PatternMatrix& m, GraphClass c, int n_max, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    if (n_max < 0) throw Error(Errc::BadParameters, "n_max must be non-negative");
    if (n_max > class_limit(c)) {
        throw Error(Errc::TooLarge, "n_max " + std::to_string(n_max) + " exceeds the " + std::string(to_string(c)) +
                                        " limit " + std::to_string(class_limit(c)));
    }
    EnumerationReport report;
    report.matrix = m;
    report.graph_class = c;
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) report.counts[n] = 0;

    if (first_diagonal_star(m) >= 0) {
        report.diagonal_star = true;
    } else if (c == GraphClass::Cobipartite) {
        // G is a cobipartite minimal M-obstruction iff its complement is a
        // bipartite minimal obstruction for the complement matrix.
        const auto dual = search_class(complement_matrix(m), GraphClass::Bipartite, n_max, jobs, report.candidates);
        std::vector<std::pair<CanonicalForm, CatalogEntry>> keyed;
        for (const auto& entry : dual) {
            const Graph g = canonical_graph(complement(entry.certificate.graph));
            auto cert = minimality_certificate(g, m);
            if (!cert) throw Error(Errc::BadParameters, "complement duality violated for " + entry.graph6);
            keyed.emplace_back(form_of(g), CatalogEntry{to_graph6(g), std::move(*cert)});
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [form, entry] : keyed) report.obstructions.push_back(std::move(entry));
    } else {
        report.obstructions = search_class(m, c, n_max, jobs, report.candidates);
    }
    for (const auto& entry : report.obstructions) ++report.counts[entry.certificate.graph.order()];
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::uint64_t binomial(int n, int r) {
    if (n < 0 || r < 0 || r > n) throw Error(Errc::BadParameters, "binomial needs 0 <= r <= n");
    r = std::min(r, n - r);
    std::uint64_t out = 1;
    for (int i = 1; i <= r; ++i) {
        // out * (n - r + i) is divisible by i at every step.
        std::uint64_t next = 0;
        if (__builtin_mul_overflow(out, static_cast<std::uint64_t>(n - r + i), &next)) {
            throw Error(Errc::BadParameters, "binomial overflows 64 bits");
        }
        out = next / i;
    }
    return out;
}

Theorem5Instance construct_theorem5(int n) {
    if (n < 1 || n > 3) {
        throw Error(Errc::BadParameters, "construction needs 1 <= n <= 3 to stay within 64 vertices");
    }
    const int b0 = 1;          // b_i  -> b0 + i
    const int mate0 = 2 * n + 1;  // b'_i -> mate0 + i
    const int s0 = 4 * n + 1;
    const int total = static_cast<int>(theorem5_size(n));
    Graph g(total);
    for (int i = 0; i < 2 * n; ++i) {
        g.add_edge(0, b0 + i);
        g.add_edge(0, mate0 + i);
        for (int j = 0; j < 2 * n; ++j) {
            if (j > i) g.add_edge(b0 + i, b0 + j);
            if (j != i) g.add_edge(mate0 + i, b0 + j);
        }
    }
    // n-subsets of {0..2n-1} in lexicographic order.
    std::vector<int> subset(n);
    for (int i = 0; i < n; ++i) subset[i] = i;
    int s = s0;
    while (true) {
        for (int i : subset) g.add_edge(s, b0 + i);
        ++s;
        int pos = n - 1;
        while (pos >= 0 && subset[pos] == 2 * n - n + pos) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int i = pos + 1; i < n; ++i) subset[i] = subset[i - 1] + 1;
    }
    return {make_m_kt(2 * n + 1, n), std::move(g)};
}

Graph construct_gt(int t) {
    if (t < 3 || t > 31) throw Error(Errc::BadParameters, "G(t) is defined for t >= 3 (and t <= 31 here)");
    Graph g = path(2 * t);
    Graph out(2 * t + 1);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (int v = 1; v < 2 * t - 1; ++v) out.add_edge(2 * t, v);
    return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::BadParameters, "bound overflows 64 bits");
    return out;
}

std::uint64_t pow2(int e) {
    if (e < 0 || e > 62) throw Error(Errc::BadParameters, "bound overflows 64 bits");
    return std::uint64_t{1} << e;
}

void check_kl(int k, int ell) {
    if (k < 0 || ell < 0 || k + ell < 1) throw Error(Errc::BadParameters, "bounds need k, ell >= 0 and k+ell >= 1");
}

}  // namespace

Bound theorem1_bound(int k, int ell) {
    check_kl(k, ell);
    Bound b;
    if (k < ell) {
        std::swap(k, ell);
        b.swapped = true;
    }
    b.value = checked_mul(checked_mul(pow2(k - 1), static_cast<std::uint64_t>(k + ell)),
                          static_cast<std::uint64_t>(2 * k + 3)) + 1;
    return b;
}

std::uint64_t theorem4_bound(int k, int ell) {
    check_kl(k, ell);
    return checked_mul(checked_mul(pow2(2 * ell), static_cast<std::uint64_t>(k + ell)),
                       static_cast<std::uint64_t>(2 * ell + 3));
}

std::uint64_t theorem5_size(int n) {
    if (n < 1) throw Error(Errc::BadParameters, "size formula needs n >= 1");
    return 4 * static_cast<std::uint64_t>(n) + 1 + binomial(2 * n, n);
}

std::uint64_t feder2008_bound(int k, int ell) {
    check_kl(k, ell);
    return static_cast<std::uint64_t>(k + 1) * static_cast<std::uint64_t>(ell + 1);
}

}  // namespace mpart
