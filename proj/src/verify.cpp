#include "mpart/verify.hpp"

#include "mpart/parallel.hpp"
#include "mpart/recognize.hpp"
#include "mpart/report.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace mpart {

namespace {

using Check = std::function<std::pair<bool, std::string>()>;

CriterionResult timed(int id, std::string name, double budget, const Check& check) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult row{id, std::move(name), false, "", 0.0, budget};
    try {
        auto [ok, measured] = check();
        row.pass = ok;
        row.measured = std::move(measured);
    } catch (const std::exception& e) {
        row.measured = std::string("exception: ") + e.what();
    }
    row.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget > 0 && row.elapsed_seconds > budget) {
        row.pass = false;
        row.measured += " (over time budget)";
    }
    return row;
}

std::set<CanonicalForm> forms_of(const EnumerationReport& r) {
    std::set<CanonicalForm> out;
    for (const auto& e : r.obstructions) out.insert(canonical_form(e.certificate.graph));
    return out;
}

std::string names_of(const EnumerationReport& r) {
    std::string out = "{";
    for (const auto& e : r.obstructions) out += (out.size() > 1 ? "," : "") + e.graph6;
    return out + "}";
}

bool all_certified(const EnumerationReport& r) {
    return std::all_of(r.obstructions.begin(), r.obstructions.end(),
                       [](const CatalogEntry& e) { return verify_certificate(e.certificate); });
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::vector<PatternMatrix> small_star_free_diagonal_matrices() {
    auto out = all_symmetric_matrices(2, false);
    auto three = all_symmetric_matrices(3, false);
    out.insert(out.end(), three.begin(), three.end());
    return out;
}

// ---------------------------------------------------------------------------

CriterionResult odd_cycles(const VerifyOptions& opts) {
    return timed(1, "bipartition minimal obstructions n<=7 are exactly C3,C5,C7", 10.0, [&] {
        const auto r = enumerate_minimal_obstructions(make_kl_matrix(2, 0), GraphClass::All, 7, opts.jobs);
        const std::set<CanonicalForm> expected{canonical_form(cycle(3)), canonical_form(cycle(5)),
                                               canonical_form(cycle(7))};
        return std::pair{forms_of(r) == expected && all_certified(r), names_of(r)};
    });
}

CriterionResult split_characterization(const VerifyOptions& opts) {
    return timed(2, "split minimal obstructions n<=6 are exactly 2K2,C4,C5 (count oracle)", 30.0, [&] {
        const auto m = make_kl_matrix(1, 1);
        const auto r = enumerate_minimal_obstructions(m, GraphClass::All, 6, opts.jobs);
        const std::set<CanonicalForm> expected{canonical_form(disjoint_union(complete(2), complete(2))),
                                               canonical_form(cycle(4)), canonical_form(cycle(5))};
        std::set<CanonicalForm> oracle;
        int disagreements = 0;
        int candidates = 0;
        for (int n = 1; n <= 6; ++n) {
            for (const auto& g : enumerate_graphs(n)) {
                ++candidates;
                const bool obstruction = count_partitions(g, m) == 0;
                if (obstruction != is_obstruction(g, m)) ++disagreements;
                bool minimal = obstruction;
                for (int v = 0; v < n && minimal; ++v) minimal = count_partitions(delete_vertex(g, v), m) > 0;
                if (minimal) oracle.insert(canonical_form(g));
            }
        }
        const bool ok = forms_of(r) == expected && oracle == expected && disagreements == 0 && all_certified(r);
        return std::pair{ok, names_of(r) + " candidates=" + std::to_string(candidates) +
                                 " oracle_disagreements=" + std::to_string(disagreements)};
    });
}

CriterionResult feder2008(const VerifyOptions& opts) {
    return timed(3, "Star-free 2x2 (k=l=1): minimal obstructions n<=6 have <= (k+1)(l+1) = 4 vertices", 120.0,
                 [&] {
        const auto bound = feder2008_bound(1, 1);
        int largest = 0;
        int matrices = 0;
        for (Entry d0 : {Entry::Zero, Entry::One}) {
            for (Entry off : {Entry::Zero, Entry::One}) {
                PatternMatrix m(2);
                m.set(0, 0, d0);
                m.set(1, 1, d0 == Entry::Zero ? Entry::One : Entry::Zero);
                m.set(0, 1, off);
                ++matrices;
                const auto r = enumerate_minimal_obstructions(m, GraphClass::All, 6, opts.jobs);
                for (const auto& e : r.obstructions) largest = std::max(largest, e.certificate.graph.order());
            }
        }
        return std::pair{static_cast<std::uint64_t>(largest) <= bound && matrices == 4,
                         "matrices=" + std::to_string(matrices) + " largest=" + std::to_string(largest) +
                             " bound=" + std::to_string(bound)};
    });
}

CriterionResult star_in_c(const VerifyOptions& opts) {
    return timed(4, "split n<=8, Star in C: solve_split gives a valid witness via the Star pair", 120.0, [&] {
        std::vector<PatternMatrix> matrices;
        for (const auto& m : small_star_free_diagonal_matrices()) {
            if (block_c_has_star(m)) matrices.push_back(m);
        }
        std::vector<Graph> graphs;
        for (int n = 1; n <= 8; ++n) {
            const auto level = enumerate_split_graphs(n, {.max_order = 9, .jobs = opts.jobs});
            graphs.insert(graphs.end(), level.begin(), level.end());
        }
        std::atomic<long> failures{0};
        parallel_for(graphs.size(), opts.jobs, [&](std::size_t i) {
            for (const auto& m : matrices) {
                const auto r = solve_split_detailed(graphs[i], m);
                if (r.route != SplitRoute::StarInC || !r.witness || !validate(graphs[i], m, *r.witness)) ++failures;
            }
        });
        return std::pair{failures == 0, "graphs=" + std::to_string(graphs.size()) + " matrices=" +
                                             std::to_string(matrices.size()) + " failures=" +
                                             std::to_string(failures.load())};
    });
}

CriterionResult theorem5_instance(int n, double budget) {
    return timed(5, "thm5 n=" + std::to_string(n) + " is a split minimal M_{2n+1,n}-obstruction",
                 budget, [n] {
        const auto inst = construct_theorem5(n);
        const auto expected = 4 * n + 1 + static_cast<int>(binomial(2 * n, n));
        const bool size_ok = inst.graph.order() == expected;
        const bool split = split_partition(inst.graph).has_value();
        const auto check = check_minimality(inst.graph, inst.matrix);
        const bool certified = check.certificate && verify_certificate(*check.certificate);
        std::ostringstream out;
        out << "vertices=" << inst.graph.order() << " split=" << split << " status=" << to_string(check.status)
            << " certificate=" << certified;
        return std::pair{size_ok && split && check.status == MinimalityStatus::Minimal && certified, out.str()};
    });
}

CriterionResult theorem5_sizes() {
    return timed(5, "thm5 size 4n+1+C(2n,n) exact for n<=10", 1.0, [] {
        // Pascal's triangle, independent of binomial().
        std::vector<std::vector<std::uint64_t>> pascal(21);
        for (int r = 0; r <= 20; ++r) {
            pascal[r].assign(r + 1, 1);
            for (int c = 1; c < r; ++c) pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
        }
        std::string measured;
        bool ok = true;
        for (int n = 1; n <= 10; ++n) {
            const auto value = theorem5_size(n);
            ok &= value == 4 * static_cast<std::uint64_t>(n) + 1 + pascal[2 * n][n];
            measured += (n > 1 ? "," : "") + std::to_string(value);
        }
        return std::pair{ok, measured};
    });
}

CriterionResult gt_family() {
    return timed(6, "G(t), t=3..6: chordal, induced 2K2, (3,0)&(2,1), minimal M_{3,1}-obstruction; complements dual",
                 60.0, [] {
        const auto m31 = make_m_kt(3, 1);
        const auto m31c = complement_matrix(m31);
        std::string measured;
        bool ok = true;
        for (int t = 3; t <= 6; ++t) {
            const Graph g = construct_gt(t);
            const Graph gc = complement(g);
            const bool direct = is_chordal(g) && find_induced_2k2(g) && is_kl_graph(g, 3, 0) &&
                                is_kl_graph(g, 2, 1) && minimality_certificate(g, m31);
            const bool dual = is_kl_graph(gc, 1, 2) && is_kl_graph(gc, 0, 3) && minimality_certificate(gc, m31c);
            ok &= direct && dual;
            measured += "t=" + std::to_string(t) + (direct && dual ? ":ok " : ":FAIL ");
        }
        return std::pair{ok, measured};
    });
}

CriterionResult proposition2(const VerifyOptions& opts) {
    return timed(7, "split A-partitions: every part has a homogeneous class >= (|P|-1)/2^(k-1)", 120.0, [&] {
        constexpr int kCases = 1000;
        std::atomic<long> violations{0};
        std::atomic<long> parts{0};
        parallel_for(kCases, opts.jobs, [&](std::size_t i) {
            auto rng = case_rng(opts.seed, 2'000'000 + i);
            while (true) {
                const int k = std::uniform_int_distribution<int>(1, 4)(rng);
                const int n = std::uniform_int_distribution<int>(1, 24)(rng);
                const int c = std::uniform_int_distribution<int>(0, std::min(n, k))(rng);
                const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
                const auto a = random_matrix(rng, std::vector<Entry>(k, Entry::Zero),
                                             {Entry::Zero, Entry::One, Entry::Star});
                const Graph g = random_split_graph(rng, n, c, p);
                const auto w = solve(g, a);
                if (!w) continue;
                for (int part = 0; part < k; ++part) {
                    VertexSet s = 0;
                    for (int v = 0; v < n; ++v) {
                        if (w->parts[v] == part) s |= vertex_bit(v);
                    }
                    if (!s) continue;
                    ++parts;
                    const auto size = static_cast<std::uint64_t>(std::popcount(s));
                    const auto need = size == 0 ? 0 : ceil_div(size - 1, std::uint64_t{1} << (k - 1));
                    if (static_cast<std::uint64_t>(homogeneity_report(g, s).max_class_size) < need) ++violations;
                }
                break;
            }
        });
        return std::pair{violations == 0, "instances=" + std::to_string(kCases) + " parts=" +
                                              std::to_string(parts.load()) + " violations=" +
                                              std::to_string(violations.load())};
    });
}

CriterionResult proposition4(const VerifyOptions& opts) {
    return timed(8, "bipartite, Star-free A: every A-part has a homogeneous class >= |P|/2^(2l)", 120.0, [&] {
        constexpr int kCases = 1000;
        std::atomic<long> violations{0};
        std::atomic<long> parts{0};
        parallel_for(kCases, opts.jobs, [&](std::size_t i) {
            auto rng = case_rng(opts.seed, 3'000'000 + i);
            while (true) {
                const int k = std::uniform_int_distribution<int>(1, 3)(rng);
                const int ell = std::uniform_int_distribution<int>(0, 2)(rng);
                const int n = std::uniform_int_distribution<int>(1, 20)(rng);
                const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
                std::vector<Entry> diagonal(k, Entry::Zero);
                diagonal.resize(k + ell, Entry::One);
                auto m = random_matrix(rng, diagonal, {Entry::Zero, Entry::One, Entry::Star});
                for (int x = 0; x < k; ++x) {
                    for (int y = x + 1; y < k; ++y) {
                        m.set(x, y, std::bernoulli_distribution(0.5)(rng) ? Entry::One : Entry::Zero);
                    }
                }
                const Graph g = random_bipartite_graph(rng, n, p);
                const auto w = solve(g, m);
                if (!w) continue;
                for (int part = 0; part < k; ++part) {
                    VertexSet s = 0;
                    for (int v = 0; v < n; ++v) {
                        if (w->parts[v] == part) s |= vertex_bit(v);
                    }
                    if (!s) continue;
                    ++parts;
                    const auto need = ceil_div(static_cast<std::uint64_t>(std::popcount(s)),
                                               std::uint64_t{1} << (2 * ell));
                    if (static_cast<std::uint64_t>(homogeneity_report(g, s).max_class_size) < need) ++violations;
                }
                break;
            }
        });
        return std::pair{violations == 0, "instances=" + std::to_string(kCases) + " parts=" +
                                              std::to_string(parts.load()) + " violations=" +
                                              std::to_string(violations.load())};
    });
}

CriterionResult solver_exactness(const VerifyOptions& opts) {
    return timed(9, "solve agrees with count_partitions on all graphs n<=5 x all symmetric 3x3 matrices", 300.0,
                 [&] {
        const auto matrices = all_symmetric_matrices(3, true);
        std::vector<Graph> graphs;
        for (int n = 0; n <= 5; ++n) {
            const auto level = enumerate_graphs(n);
            graphs.insert(graphs.end(), level.begin(), level.end());
        }
        std::atomic<long> disagreements{0};
        parallel_for(graphs.size(), opts.jobs, [&](std::size_t i) {
            for (const auto& m : matrices) {
                const auto w = solve(graphs[i], m);
                const bool oracle = count_partitions(graphs[i], m) > 0;
                if (w.has_value() != oracle || (w && !validate(graphs[i], m, *w))) ++disagreements;
            }
        });
        return std::pair{disagreements == 0, "graphs=" + std::to_string(graphs.size()) + " matrices=" +
                                                 std::to_string(matrices.size()) + " disagreements=" +
                                                 std::to_string(disagreements.load())};
    });
}

CriterionResult split_solver_equivalence(const VerifyOptions& opts) {
    return timed(10, "solve_split == solve on 1000 random split graphs n<=14, m<=4", 120.0, [&] {
        constexpr int kCases = 1000;
        std::atomic<long> disagreements{0};
        std::atomic<long> solvable{0};
        parallel_for(kCases, opts.jobs, [&](std::size_t i) {
            auto rng = case_rng(opts.seed, 1'000'000 + i);
            const int n = std::uniform_int_distribution<int>(1, 14)(rng);
            const int c = std::uniform_int_distribution<int>(0, n)(rng);
            const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            const Graph g = random_split_graph(rng, n, c, p);
            const int size = std::uniform_int_distribution<int>(1, 4)(rng);
            std::vector<Entry> diagonal(size);
            for (auto& d : diagonal) d = std::bernoulli_distribution(0.5)(rng) ? Entry::One : Entry::Zero;
            const auto m = random_matrix(rng, diagonal, {Entry::Zero, Entry::One, Entry::Star});
            const auto general = solve(g, m);
            const auto split = solve_split(g, m);
            if (general.has_value() != split.has_value() || (split && !validate(g, m, *split))) ++disagreements;
            if (general) ++solvable;
        });
        return std::pair{disagreements == 0, "pairs=" + std::to_string(kCases) + " solvable=" +
                                                 std::to_string(solvable.load()) + " disagreements=" +
                                                 std::to_string(disagreements.load())};
    });
}

CriterionResult determinism() {
    return timed(11, "enumeration report for criterion 1 is byte-identical at jobs=1 and jobs=8", 60.0, [] {
        auto render = [](int jobs) {
            clear_enumeration_cache();
            const auto r = enumerate_minimal_obstructions(make_kl_matrix(2, 0), GraphClass::All, 7, jobs);
            return report_json(r).dump(2) + "\n" + report_tsv(r);
        };
        const auto one = render(1);
        const auto eight = render(8);
        return std::pair{one == eight, "bytes=" + std::to_string(one.size()) + (one == eight ? " identical" : " differ")};
    });
}

CriterionResult bound_consistency(const VerifyOptions& opts) {
    return timed(12, "split (n<=9) / bipartite (n<=8) minimal obstructions respect the closed-form bounds", 600.0,
                 [&] {
        const auto matrices = small_star_free_diagonal_matrices();
        std::atomic<long> violations{0};
        std::atomic<int> largest_split{0};
        std::atomic<int> largest_bipartite{0};
        std::atomic<long> found{0};
        // Warm the generation caches before fanning out.
        for (int n = 1; n <= 9; ++n) enumerate_split_graphs(n, {.max_order = 9, .jobs = opts.jobs});
        for (int n = 1; n <= 8; ++n) enumerate_graphs(n, {.max_order = 8, .jobs = opts.jobs});
        auto raise = [](std::atomic<int>& a, int v) {
            int cur = a.load();
            while (v > cur && !a.compare_exchange_weak(cur, v)) {
            }
        };
        parallel_for(matrices.size(), opts.jobs, [&](std::size_t i) {
            const auto& m = matrices[i];
            const auto counts = diag_counts(m);
            const auto split_bound = theorem1_bound(counts.zeros, counts.ones).value;
            const auto bip_bound = theorem4_bound(counts.zeros, counts.ones);
            for (const auto& e : enumerate_minimal_obstructions(m, GraphClass::Split, 9, 1).obstructions) {
                ++found;
                raise(largest_split, e.certificate.graph.order());
                if (static_cast<std::uint64_t>(e.certificate.graph.order()) > split_bound) ++violations;
            }
            for (const auto& e : enumerate_minimal_obstructions(m, GraphClass::Bipartite, 8, 1).obstructions) {
                ++found;
                raise(largest_bipartite, e.certificate.graph.order());
                if (static_cast<std::uint64_t>(e.certificate.graph.order()) > bip_bound) ++violations;
            }
        });
        return std::pair{violations == 0, "matrices=" + std::to_string(matrices.size()) + " obstructions=" +
                                              std::to_string(found.load()) + " largest_split=" +
                                              std::to_string(largest_split.load()) + " largest_bipartite=" +
                                              std::to_string(largest_bipartite.load()) + " violations=" +
                                              std::to_string(violations.load())};
    });
}

}  // namespace

std::mt19937_64 case_rng(std::uint64_t master, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

Graph random_split_graph(std::mt19937_64& rng, int n, int clique_size, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < clique_size; ++u) {
        for (int v = u + 1; v < clique_size; ++v) g.add_edge(u, v);
        for (int v = clique_size; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

Graph random_bipartite_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution side(0.5);
    std::bernoulli_distribution coin(p);
    std::vector<bool> left(n);
    for (int v = 0; v < n; ++v) left[v] = side(rng);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (left[u] != left[v] && coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

PatternMatrix random_matrix(std::mt19937_64& rng, const std::vector<Entry>& diagonal,
                            const std::vector<Entry>& off_diagonal) {
    const int m = static_cast<int>(diagonal.size());
    PatternMatrix out(m);
    std::uniform_int_distribution<std::size_t> pick(0, off_diagonal.size() - 1);
    for (int i = 0; i < m; ++i) {
        out.set(i, i, diagonal[i]);
        for (int j = i + 1; j < m; ++j) out.set(i, j, off_diagonal[pick(rng)]);
    }
    return out;
}

std::vector<PatternMatrix> all_symmetric_matrices(int m, bool diagonal_stars) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) cells.emplace_back(i, j);
    }
    std::vector<PatternMatrix> out;
    std::vector<int> digit(cells.size(), 0);
    constexpr Entry kValues[] = {Entry::Zero, Entry::One, Entry::Star};
    while (true) {
        bool keep = true;
        PatternMatrix mat(m);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto [i, j] = cells[c];
            if (i == j && !diagonal_stars && digit[c] == 2) keep = false;
            mat.set(i, j, kValues[digit[c]]);
        }
        if (keep) out.push_back(std::move(mat));
        std::size_t pos = 0;
        while (pos < digit.size() && digit[pos] == 2) digit[pos++] = 0;
        if (pos == digit.size()) break;
        ++digit[pos];
    }
    return out;
}

CriterionResult check_catalog_claim(const PatternMatrix& m, GraphClass c, const Graph& g, const std::string& label) {
    return timed(0, "catalog claim: " + label, 0.0, [&] {
        const bool member = in_class(g, c);
        const auto cert = minimality_certificate(g, m);
        const bool ok = member && cert && verify_certificate(*cert);
        return std::pair{ok, std::string("in_class=") + (member ? "yes" : "no") +
                                 " certificate=" + (cert ? "yes" : "no")};
    });
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts) {
    const bool full = opts.level == VerifyLevel::Full;
    std::vector<CriterionResult> rows;
    rows.push_back(odd_cycles(opts));
    rows.push_back(split_characterization(opts));
    rows.push_back(feder2008(opts));
    rows.push_back(star_in_c(opts));
    rows.push_back(theorem5_instance(1, 1.0));
    if (full) rows.push_back(theorem5_instance(2, 60.0));
    if (opts.deep) rows.push_back(theorem5_instance(3, 0.0));
    rows.push_back(theorem5_sizes());
    rows.push_back(gt_family());
    if (full) {
        rows.push_back(proposition2(opts));
        rows.push_back(proposition4(opts));
    }
    rows.push_back(solver_exactness(opts));
    rows.push_back(split_solver_equivalence(opts));
    rows.push_back(determinism());
    rows.push_back(bound_consistency(opts));
    if (opts.negative_control) {
        rows.push_back(check_catalog_claim(make_kl_matrix(1, 1), GraphClass::Split, cycle(4),
                                           "C4 as a split minimal obstruction for 0*;*1 (negative control)"));
    }
    return rows;
}

}  // namespace mpart
