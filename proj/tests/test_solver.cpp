#include "mpart/error.hpp"
#include "mpart/obstruction.hpp"
#include "mpart/recognize.hpp"
#include "mpart/solver.hpp"
#include "mpart/verify.hpp"

#include <doctest.h>

#include <chrono>

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

// Test oracle: direct check of the definition.
bool satisfies(const Graph& g, const PatternMatrix& m, const std::vector<int>& parts) {
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            const Entry e = m(parts[u], parts[v]);
            if (e == Entry::One && !g.adjacent(u, v)) return false;
            if (e == Entry::Zero && g.adjacent(u, v)) return false;
        }
    }
    return true;
}

// Test oracle: odometer over all m^n assignments.
std::uint64_t brute_force_count(const Graph& g, const PatternMatrix& m, const ListConstraint* lists = nullptr) {
    const int n = g.order();
    std::vector<int> parts(n, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = satisfies(g, m, parts);
        if (ok && lists) {
            for (int v = 0; v < n; ++v) ok &= ((lists->allowed[v] >> parts[v]) & 1U) != 0;
        }
        count += ok;
        int i = 0;
        while (i < n && ++parts[i] == m.order()) parts[i++] = 0;
        if (i == n) break;
    }
    return count;
}

Graph random_graph(std::mt19937_64& rng, int n) {
    std::bernoulli_distribution coin(0.5);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

const std::vector<Entry> kAll{Entry::Zero, Entry::One, Entry::Star};
const std::vector<Entry> kBinary{Entry::Zero, Entry::One};

}  // namespace

TEST_CASE("validate") {
    const auto m = make_kl_matrix(1, 1);  // part 0 independent, part 1 clique
    const auto p3 = path(3);
    CHECK(validate(p3, m, {{1, 1, 0}}));
    CHECK_FALSE(validate(p3, m, {{0, 0, 1}}));
    CHECK(error_of([&] { validate(p3, m, {{0, 2, 1}}); }) == Errc::PartOutOfRange);
    CHECK(error_of([&] { validate(p3, m, {{0, -1, 1}}); }) == Errc::PartOutOfRange);
    CHECK(error_of([&] { validate(p3, m, {{0, 1}}); }) == Errc::BadParameters);
}

TEST_CASE("solve examples") {
    CHECK_FALSE(solve(complete(3), make_kl_matrix(2, 0)));
    CHECK_FALSE(solve(complete(2), parse_matrix("0")));
    CHECK_FALSE(solve(cycle(5), parse_matrix("0*;*0")));
    CHECK_FALSE(solve(disjoint_union(complete(2), complete(2)), parse_matrix("0*;*1")));
    const auto p4 = solve(path(4), parse_matrix("0*;*1"));
    REQUIRE(p4);
    CHECK(validate(path(4), parse_matrix("0*;*1"), *p4));
    const auto zero = solve(empty(0), parse_matrix("0"));
    REQUIRE(zero);
    CHECK(zero->parts.empty());
}

TEST_CASE("lists restrict the parts") {
    const auto m = make_kl_matrix(2, 0);
    const auto c4 = cycle(4);
    ListConstraint lists{{0b01, 0b11, 0b11, 0b11}};
    const auto w = solve(c4, m, lists);
    REQUIRE(w);
    CHECK(w->parts[0] == 0);
    CHECK(w->parts[2] == 0);
    lists.allowed = {0b01, 0b11, 0b01, 0b01};
    CHECK_FALSE(solve(c4, m, lists));
    lists.allowed = {0b01, 0b11, 0b11, 0};
    CHECK_FALSE(solve(c4, m, lists));
    lists.allowed = {0b100, 0b11, 0b11, 0b11};
    CHECK(error_of([&] { solve(c4, m, lists); }) == Errc::ListPartOutOfRange);
    lists.allowed = {0b1, 0b1};
    CHECK(error_of([&] { solve(c4, m, lists); }) == Errc::BadParameters);
}

TEST_CASE("lists agree with the brute-force oracle") {
    for (int trial = 0; trial < 300; ++trial) {
        auto rng = case_rng(77, trial);
        const int m_order = 1 + static_cast<int>(rng() % 4);
        const int n = static_cast<int>(rng() % 7);
        const auto m = random_matrix(rng, std::vector<Entry>(m_order, Entry::Zero), kAll);
        const Graph g = random_graph(rng, n);
        ListConstraint lists;
        for (int v = 0; v < n; ++v) lists.allowed.push_back(rng() & ((std::uint64_t{1} << m_order) - 1));
        const auto w = solve(g, m, lists);
        CHECK(w.has_value() == (brute_force_count(g, m, &lists) > 0));
        if (w) {
            CHECK(satisfies(g, m, w->parts));
            for (int v = 0; v < n; ++v) CHECK(((lists.allowed[v] >> w->parts[v]) & 1U) != 0);
        }
    }
}

TEST_CASE("diagonal Star puts everything in one part") {
    const auto m = parse_matrix("0*;**");
    const auto w = solve(complete(12), m);
    REQUIRE(w);
    CHECK(w->parts == std::vector<int>(12, 1));
}

TEST_CASE("count_partitions") {
    CHECK(count_partitions(empty(0), parse_matrix("0")) == 1);
    CHECK(count_partitions(empty(1), parse_matrix("0")) == 1);
    CHECK(count_partitions(complete(2), make_kl_matrix(2, 0)) == 2);
    CHECK(count_partitions(cycle(5), parse_matrix("0*;*0")) == 0);
    CHECK(error_of([] { count_partitions(empty(11), parse_matrix("0")); }) == Errc::TooLarge);
    CHECK(error_of([] { count_partitions(empty(3), PatternMatrix(5, Entry::Zero)); }) == Errc::TooLarge);
}

TEST_CASE("solver is exact against the oracle") {
    for (int trial = 0; trial < 600; ++trial) {
        auto rng = case_rng(4242, trial);
        const int m_order = 1 + static_cast<int>(rng() % 4);
        const int n = static_cast<int>(rng() % 8);
        std::vector<Entry> diag;
        for (int i = 0; i < m_order; ++i) diag.push_back(kBinary[rng() % 2]);
        const auto m = random_matrix(rng, diag, kAll);
        const Graph g = random_graph(rng, n);
        const auto expected = brute_force_count(g, m);
        if (n <= 7) CHECK(count_partitions(g, m) == expected);
        const auto w = solve(g, m);
        CHECK(w.has_value() == (expected > 0));
        if (w) CHECK(satisfies(g, m, w->parts));
    }
}

TEST_CASE("complement duality and heredity") {
    for (int trial = 0; trial < 300; ++trial) {
        auto rng = case_rng(9, trial);
        const int m_order = 1 + static_cast<int>(rng() % 4);
        std::vector<Entry> diag;
        for (int i = 0; i < m_order; ++i) diag.push_back(kBinary[rng() % 2]);
        const auto m = random_matrix(rng, diag, kAll);
        const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9));
        const auto w = solve(g, m);
        const auto wc = solve(complement(g), complement_matrix(m));
        CHECK(w.has_value() == wc.has_value());
        if (wc) CHECK(validate(g, m, *wc));
        if (w) {
            for (int v = 0; v < g.order(); ++v) CHECK(solve(delete_vertex(g, v), m).has_value());
        }
    }
}

TEST_CASE("solve_until") {
    const auto far = std::chrono::steady_clock::now() + std::chrono::hours(1);
    const auto done = solve_until(cycle(5), parse_matrix("0*;*0"), far);
    CHECK(done.completed);
    CHECK_FALSE(done.witness);
    const auto found = solve_until(path(4), parse_matrix("0*;*1"), far);
    CHECK(found.completed);
    CHECK(found.witness == solve(path(4), parse_matrix("0*;*1")));

    const auto inst = construct_theorem5(3);
    const auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    const auto expired = solve_until(inst.graph, inst.matrix, past);
    CHECK_FALSE(expired.completed);
    CHECK_FALSE(expired.witness);
}

TEST_CASE("solve_split routes") {
    const auto star_c = parse_matrix("0*;*1");
    const auto w = solve_split_detailed(path(4), star_c);
    CHECK(w.route == SplitRoute::StarInC);
    REQUIRE(w.witness);
    CHECK(validate(path(4), star_c, *w.witness));

    const auto inst = construct_theorem5(1);
    const auto s = solve_split_detailed(inst.graph, inst.matrix);
    CHECK(s.route == SplitRoute::Occupants);
    CHECK_FALSE(s.witness);
    CHECK_FALSE(solve(inst.graph, inst.matrix));

    CHECK(error_of([] { solve_split(cycle(4), make_kl_matrix(1, 1)); }) == Errc::NotSplit);
    CHECK(error_of([] { solve_split(path(3), parse_matrix("0*;**")); }) == Errc::DiagonalStar);
}

TEST_CASE("solve_split agrees with solve on split graphs") {
    for (int trial = 0; trial < 400; ++trial) {
        auto rng = case_rng(31337, trial);
        const int k = static_cast<int>(rng() % 3);
        const int ell = static_cast<int>(rng() % 3);
        if (k + ell == 0) continue;
        std::vector<Entry> diag(k, Entry::Zero);
        diag.insert(diag.end(), ell, Entry::One);
        const auto m = random_matrix(rng, diag, kAll);
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = random_split_graph(rng, n, static_cast<int>(rng() % (n + 1)), 0.5);
        const auto expected = solve(g, m);
        const auto got = solve_split(g, m);
        CHECK(got.has_value() == expected.has_value());
        if (got) CHECK(validate(g, m, *got));
    }
}
