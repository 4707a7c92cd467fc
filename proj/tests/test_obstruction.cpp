#include "mpart/error.hpp"
#include "mpart/obstruction.hpp"
#include "mpart/recognize.hpp"

#include <doctest.h>

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

std::set<std::string> graph6_set(const EnumerationReport& r) {
    std::set<std::string> out;
    for (const auto& e : r.obstructions) out.insert(e.graph6);
    return out;
}

std::set<std::string> canonical_g6(std::initializer_list<Graph> graphs) {
    std::set<std::string> out;
    for (const auto& g : graphs) out.insert(to_graph6(canonical_graph(g)));
    return out;
}

// Test oracle: every graph in the class, a minimal obstruction iff it is an
// obstruction and every one-vertex deletion is not.
std::set<std::string> filtered_minimal(const PatternMatrix& m, GraphClass c, int n_max) {
    std::set<std::string> out;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& g : enumerate_graphs(n)) {
            if (!in_class(g, c) || solve(g, m)) continue;
            bool minimal = true;
            for (int v = 0; v < n && minimal; ++v) minimal = solve(delete_vertex(g, v), m).has_value();
            if (minimal) out.insert(to_graph6(g));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("is_obstruction") {
    CHECK(is_obstruction(cycle(5), make_kl_matrix(2, 0)));
    CHECK_FALSE(is_obstruction(cycle(6), make_kl_matrix(2, 0)));
    CHECK(is_obstruction(cycle(4), make_kl_matrix(1, 1)));
}

TEST_CASE("minimality examples") {
    const auto bip = make_kl_matrix(2, 0);
    const auto c5 = check_minimality(cycle(5), bip);
    CHECK(c5.status == MinimalityStatus::Minimal);
    REQUIRE(c5.certificate);
    CHECK(c5.certificate->witnesses.size() == 5);
    CHECK(verify_certificate(*c5.certificate));

    const auto c6 = check_minimality(cycle(6), bip);
    CHECK(c6.status == MinimalityStatus::Partitionable);
    REQUIRE(c6.witness);
    CHECK(validate(cycle(6), bip, *c6.witness));

    const auto two = check_minimality(disjoint_union(complete(3), complete(3)), bip);
    CHECK(two.status == MinimalityStatus::NotMinimal);
    REQUIRE(two.obstructing_vertex >= 0);
    CHECK(is_obstruction(delete_vertex(disjoint_union(complete(3), complete(3)), two.obstructing_vertex), bip));

    CHECK(to_string(MinimalityStatus::Minimal) == "minimal-obstruction");
    CHECK(to_string(MinimalityStatus::NotMinimal) == "obstruction-not-minimal");
    CHECK(to_string(MinimalityStatus::Partitionable) == "partitionable");

    CHECK(check_minimality(cycle(7), bip).status == MinimalityStatus::Minimal);
    CHECK(check_minimality(path(6), bip).status == MinimalityStatus::Partitionable);
    CHECK(check_minimality(construct_gt(3), make_m_kt(3, 1)).status == MinimalityStatus::Minimal);
    CHECK_FALSE(minimality_certificate(cycle(6), bip));
}

TEST_CASE("certificate verification rejects tampering") {
    auto cert = *minimality_certificate(cycle(5), make_kl_matrix(2, 0));
    CHECK(verify_certificate(cert));
    auto bad = cert;
    bad.witnesses[0].parts[0] = 1 - bad.witnesses[0].parts[0];
    CHECK_FALSE(verify_certificate(bad));
    auto short_cert = cert;
    short_cert.witnesses.pop_back();
    CHECK_FALSE(verify_certificate(short_cert));
    auto partitionable = cert;
    partitionable.graph = cycle(6);
    CHECK_FALSE(verify_certificate(partitionable));
}

TEST_CASE("graph classes") {
    CHECK(parse_graph_class("split") == GraphClass::Split);
    CHECK(parse_graph_class("all") == GraphClass::All);
    CHECK(error_of([] { parse_graph_class("planar"); }) == Errc::BadParameters);
    for (auto c : {GraphClass::All, GraphClass::Split, GraphClass::Bipartite, GraphClass::Cobipartite,
                   GraphClass::Chordal}) {
        CHECK(parse_graph_class(to_string(c)) == c);
    }
    CHECK(class_limit(GraphClass::Split) == 9);
    CHECK(class_limit(GraphClass::Chordal) == 8);
    CHECK(error_of([] { class_members(GraphClass::All, 9); }) == Errc::TooLarge);
    CHECK(in_class(cycle(4), GraphClass::Bipartite));
    CHECK_FALSE(in_class(cycle(4), GraphClass::Chordal));
    CHECK(in_class(cycle(4), GraphClass::Cobipartite));
    for (int n = 1; n <= 6; ++n) {
        for (auto c : {GraphClass::Bipartite, GraphClass::Cobipartite, GraphClass::Chordal, GraphClass::Split}) {
            auto all = enumerate_graphs(n);
            std::erase_if(all, [&](const Graph& g) { return !in_class(g, c); });
            CHECK(class_members(c, n) == all);
        }
    }
}

TEST_CASE("enumerated obstructions match known families") {
    const auto bip = enumerate_minimal_obstructions(make_kl_matrix(2, 0), GraphClass::All, 7);
    CHECK(graph6_set(bip) == canonical_g6({complete(3), cycle(5), cycle(7)}));
    CHECK(bip.counts.at(3) == 1);
    CHECK(bip.counts.at(4) == 0);

    const auto split = enumerate_minimal_obstructions(make_kl_matrix(1, 1), GraphClass::All, 6);
    CHECK(graph6_set(split) ==
          canonical_g6({cycle(4), cycle(5), disjoint_union(complete(2), complete(2))}));

    const auto none = enumerate_minimal_obstructions(make_kl_matrix(1, 1), GraphClass::Split, 9);
    CHECK(none.obstructions.empty());

    for (const auto& e : split.obstructions) CHECK(verify_certificate(e.certificate));
}

TEST_CASE("class-restricted enumeration equals direct filtering") {
    const auto m = parse_matrix("0*1;*1*;1*0");
    for (auto c : {GraphClass::All, GraphClass::Bipartite, GraphClass::Cobipartite, GraphClass::Chordal}) {
        CAPTURE(to_string(c));
        const auto r = enumerate_minimal_obstructions(m, c, 6);
        CHECK(graph6_set(r) == filtered_minimal(m, c, 6));
    }
    const auto m2 = make_kl_matrix(2, 1);
    CHECK(graph6_set(enumerate_minimal_obstructions(m2, GraphClass::Cobipartite, 6)) ==
          filtered_minimal(m2, GraphClass::Cobipartite, 6));
}

TEST_CASE("chordal M_{3,1} obstructions include G(3)") {
    const auto r = enumerate_minimal_obstructions(make_m_kt(3, 1), GraphClass::Chordal, 7);
    CHECK(graph6_set(r).count(to_graph6(canonical_graph(construct_gt(3)))) == 1);
}

TEST_CASE("enumeration output is heredity-minimal and job independent") {
    const auto m = make_kl_matrix(2, 1);
    const auto r1 = enumerate_minimal_obstructions(m, GraphClass::All, 6, 1);
    const auto r4 = enumerate_minimal_obstructions(m, GraphClass::All, 6, 4);
    CHECK(graph6_set(r1) == graph6_set(r4));
    CHECK(r1.counts == r4.counts);
    for (const auto& e : r1.obstructions) {
        const Graph g = parse_graph6(e.graph6);
        const VertexSet all = all_vertices(g.order());
        for (VertexSet s = 0; s < all; ++s) CHECK(solve(induced_subgraph(g, s), m).has_value());
    }
}

TEST_CASE("diagonal Star and limits") {
    const auto r = enumerate_minimal_obstructions(parse_matrix("*0;00"), GraphClass::All, 5);
    CHECK(r.diagonal_star);
    CHECK(r.obstructions.empty());
    CHECK(error_of([] { enumerate_minimal_obstructions(make_kl_matrix(1, 1), GraphClass::All, 9); }) ==
          Errc::TooLarge);
}

TEST_CASE("large split obstruction construction") {
    const auto inst = construct_theorem5(2);
    CHECK(inst.graph.order() == 15);
    CHECK(inst.matrix.order() == 5);
    CHECK(split_partition(inst.graph).has_value());
    // a together with b_1..b_4 is a clique.
    for (int u = 0; u < 5; ++u) {
        for (int v = u + 1; v < 5; ++v) CHECK(inst.graph.adjacent(u, v));
    }
    for (int n = 1; n <= 2; ++n) {
        const auto t = construct_theorem5(n);
        CHECK(static_cast<std::uint64_t>(t.graph.order()) == theorem5_size(n));
        CHECK(check_minimality(t.graph, t.matrix).status == MinimalityStatus::Minimal);
    }
    CHECK(error_of([] { construct_theorem5(0); }) == Errc::BadParameters);
    CHECK(error_of([] { construct_theorem5(4); }) == Errc::BadParameters);
}

TEST_CASE("G(t) construction") {
    const auto g3 = construct_gt(3);
    CHECK(g3.order() == 7);
    CHECK(g3.degree(6) == 4);
    CHECK(delete_vertex(g3, 6) == path(6));
    CHECK(is_chordal(construct_gt(5)).has_value());
    CHECK(error_of([] { construct_gt(2); }) == Errc::BadParameters);
}

TEST_CASE("bounds") {
    CHECK(theorem1_bound(1, 1).value == 11);
    CHECK_FALSE(theorem1_bound(1, 1).swapped);
    CHECK(theorem1_bound(1, 2).swapped);
    CHECK(theorem1_bound(1, 2).value == theorem1_bound(2, 1).value);
    CHECK(theorem4_bound(2, 0) == 6);
    CHECK(theorem5_size(2) == 15);
    CHECK(theorem5_size(3) == 33);
    CHECK(feder2008_bound(1, 1) == 4);
    CHECK(binomial(6, 3) == 20);
    CHECK(error_of([] { binomial(3, 5); }) == Errc::BadParameters);
}
