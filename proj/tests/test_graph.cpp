#include "mpart/error.hpp"
#include "mpart/graph.hpp"
#include "mpart/recognize.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace mpart;

namespace {

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an mpart::Error");
    return Errc::BadParameters;
}

// Test-only oracle: labeled graphs on n vertices as upper-triangle masks,
// deduplicated by applying every permutation.
std::size_t brute_force_class_count(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    // index of pair (i,j), i<j
    auto index = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return b * (b - 1) / 2 + a;
    };
    std::set<std::uint32_t> reps;
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::uint32_t best = mask;
        for (const auto& perm : perms) {
            std::uint32_t image = 0;
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                if ((mask >> e) & 1U) image |= std::uint32_t{1} << index(perm[pairs[e].first], perm[pairs[e].second]);
            }
            best = std::min(best, image);
            if (best < mask) break;
        }
        if (best == mask) reps.insert(mask);
    }
    return reps.size();
}

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (relabel(a, p) == b) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

Graph random_graph(std::mt19937_64& rng, int n, double density) {
    std::bernoulli_distribution coin(density);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("from_edges") {
    const auto k2 = from_edges(2, {{0, 1}});
    CHECK(k2.adjacent(0, 1));
    CHECK(k2.edge_count() == 1);
    const auto c4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 0}});
    CHECK(c4 == cycle(4));
    CHECK(c4.edge_count() == 4);
    CHECK(error_of([] { from_edges(2, {{0, 0}}); }) == Errc::SelfLoop);
    CHECK(error_of([] { from_edges(2, {{0, 2}}); }) == Errc::VertexOutOfRange);
}

TEST_CASE("graph6 small cases, hand encoded") {
    // n=2: N = 63+2 = 'A'. Single bit x(0,1)=1 padded to 100000b = 32 -> 95 '_'.
    CHECK(to_graph6(complete(2)) == std::string{char(63 + 2), char(63 + 0b100000)});
    CHECK(to_graph6(complete(2)) == "A_");
    CHECK(to_graph6(empty(2)) == "A?");
    CHECK(to_graph6(empty(1)) == "@");
    CHECK(to_graph6(empty(0)) == "?");
    CHECK(parse_graph6("A_") == complete(2));
    CHECK(parse_graph6("A?") == empty(2));
    CHECK(parse_graph6("@") == empty(1));
    // C4 0-1-2-3-0: bits x01 x02 x12 x03 x13 x23 = 1 0 1 1 0 1 = 45 -> 108 'l'.
    CHECK(to_graph6(cycle(4)) == "Cl");
}

TEST_CASE("graph6 errors") {
    CHECK(error_of([] { parse_graph6(""); }) == Errc::MalformedGraph6);
    CHECK(error_of([] { parse_graph6("A"); }) == Errc::MalformedGraph6);
    CHECK(error_of([] { parse_graph6("A__"); }) == Errc::MalformedGraph6);
    CHECK(error_of([] { parse_graph6("A`"); }) == Errc::MalformedGraph6);  // padding bit set
    CHECK(error_of([] { parse_graph6("A\x20"); }) == Errc::MalformedGraph6);
}

TEST_CASE("graph6 round trip is the identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 65);
        const Graph g = random_graph(rng, n, 0.4);
        const auto s = to_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(to_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("edge list text") {
    const auto g = parse_edge_list("4; 0-1, 1-2,2-3 , 3-0");
    CHECK(g == cycle(4));
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    CHECK(parse_edge_list("3;").edge_count() == 0);
    CHECK(error_of([] { parse_edge_list("3 0-1"); }) == Errc::MalformedEdgeList);
    CHECK(error_of([] { parse_edge_list("3; 0-x"); }) == Errc::MalformedEdgeList);
    CHECK(error_of([] { parse_edge_list("3; 0-3"); }) == Errc::VertexOutOfRange);
}

TEST_CASE("complement") {
    const auto two_k2 = disjoint_union(complete(2), complete(2));
    CHECK(canonical_form(complement(two_k2)) == canonical_form(cycle(4)));
    CHECK(canonical_form(complement(cycle(5))) == canonical_form(cycle(5)));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, static_cast<int>(rng() % 12), 0.5);
        CHECK(complement(complement(g)) == g);
        for (int v = 0; v < g.order(); ++v) CHECK(complement(delete_vertex(g, v)) == delete_vertex(complement(g), v));
    }
}

TEST_CASE("delete_vertex and induced_subgraph") {
    for (int v = 0; v < 5; ++v) CHECK(canonical_form(delete_vertex(cycle(5), v)) == canonical_form(path(4)));
    CHECK(delete_vertex(complete(2), 0) == empty(1));
    CHECK(error_of([] { delete_vertex(complete(2), 2); }) == Errc::VertexOutOfRange);

    const auto c6 = cycle(6);
    CHECK(induced_subgraph(c6, 0b000111) == path(3));
    CHECK(induced_subgraph(c6, 0b111111) == c6);
    CHECK(induced_subgraph(c6, 0) == empty(0));
    CHECK(error_of([&] { induced_subgraph(c6, 0b1000000); }) == Errc::VertexOutOfRange);
}

TEST_CASE("generators") {
    CHECK(disjoint_union(complete(2), complete(2)) == from_edges(4, {{0, 1}, {2, 3}}));
    const auto c5 = cycle(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(complete(4).edge_count() == 6);
    CHECK(empty(4).edge_count() == 0);
    CHECK(path(1).edge_count() == 0);
    CHECK(error_of([] { cycle(2); }) == Errc::BadParameters);
}

TEST_CASE("canonical form is invariant and exact") {
    CHECK(canonical_form(cycle(4)) == canonical_form(relabel(cycle(4), {2, 0, 3, 1})));
    CHECK(canonical_form(complete(3)) != canonical_form(path(3)));

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng() % 9);
        const Graph g = random_graph(rng, n, 0.5);
        CHECK(canonical_form(g) == canonical_form(relabel(g, random_perm(rng, n))));
    }
    // Against brute-force isomorphism on random pairs with equal degree sequences likely.
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Graph a = random_graph(rng, n, 0.5);
        const Graph b = random_graph(rng, n, 0.5);
        CHECK((canonical_form(a) == canonical_form(b)) == brute_force_isomorphic(a, b));
    }
}

TEST_CASE("canonical form handles large symmetric graphs") {
    std::mt19937_64 rng(5);
    for (const Graph& g : {empty(64), complete(40), cycle(33), disjoint_union(cycle(16), cycle(16))}) {
        CHECK(canonical_form(g) == canonical_form(relabel(g, random_perm(rng, g.order()))));
    }
    CHECK(canonical_form(cycle(32)) != canonical_form(disjoint_union(cycle(16), cycle(16))));
}

TEST_CASE("enumerate_graphs counts match the permutation oracle") {
    CHECK(enumerate_graphs(0).size() == 1);
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(enumerate_graphs(n).size() == brute_force_class_count(n));
    }
    CHECK(enumerate_graphs(3).size() == 4);
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK(enumerate_graphs(6).size() == 156);
    CHECK_THROWS_AS(enumerate_graphs(9), Error);
    CHECK(error_of([] { enumerate_graphs(9); }) == Errc::TooLarge);
}

TEST_CASE("enumerate_graphs stream is canonical, sorted and job independent") {
    for (int n = 1; n <= 7; ++n) {
        const auto graphs = enumerate_graphs(n);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            CHECK(canonical_graph(graphs[i]) == graphs[i]);
            if (i > 0) CHECK(form_of(graphs[i - 1]) < form_of(graphs[i]));
        }
    }
    const auto sequential = enumerate_graphs(7);
    clear_enumeration_cache();
    CHECK(enumerate_graphs(7, {.max_order = 8, .jobs = 4}) == sequential);
}

TEST_CASE("enumerate_split_graphs equals filtering all graphs") {
    CHECK(enumerate_split_graphs(2).size() == 2);
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        auto all = enumerate_graphs(n);
        std::erase_if(all, [](const Graph& g) { return !split_partition(g).has_value(); });
        const auto split = enumerate_split_graphs(n);
        CHECK(split == all);
    }
    for (const auto& g : enumerate_split_graphs(9)) CHECK(split_partition(g).has_value());
    CHECK(error_of([] { enumerate_split_graphs(10); }) == Errc::TooLarge);
}
