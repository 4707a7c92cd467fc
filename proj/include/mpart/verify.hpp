#pragma once

#include "mpart/obstruction.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mpart {

/// One row of the reproduction table.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string measured;
    double elapsed_seconds = 0.0;
    double budget_seconds = 0.0;
};

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Full;
    int jobs = 1;
    std::uint64_t seed = 20240601;
    /// Adds the 33-vertex thm5 instance (no time guarantee).
    bool deep = false;
    /// Adds a row that checks a deliberately false catalog claim; it must FAIL.
    bool negative_control = false;
};

/// Runs every criterion allowed by the options, in order. A row fails when
/// its check fails or when it overruns its time budget.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts);

/// Independent check of a catalog claim "g is a minimal obstruction for m
/// within class c": class membership plus a freshly computed certificate.
CriterionResult check_catalog_claim(const PatternMatrix& m, GraphClass c, const Graph& g, const std::string& label);

/// Per-case generator seeded from (master seed, case index).
std::mt19937_64 case_rng(std::uint64_t master, std::uint64_t index);

/// Clique on 0..clique_size-1, independent set on the rest, each cross pair
/// an edge with probability p.
Graph random_split_graph(std::mt19937_64& rng, int n, int clique_size, double p);
/// Random sides, each cross pair an edge with probability p.
Graph random_bipartite_graph(std::mt19937_64& rng, int n, double p);
/// Symmetric matrix with the given diagonal and off-diagonal entries drawn
/// uniformly from `off_diagonal`.
PatternMatrix random_matrix(std::mt19937_64& rng, const std::vector<Entry>& diagonal,
                            const std::vector<Entry>& off_diagonal);

/// Every symmetric m x m matrix over {0,1,*} (3^(m(m+1)/2) of them), or only
/// those without diagonal Stars.
std::vector<PatternMatrix> all_symmetric_matrices(int m, bool diagonal_stars);

}  // namespace mpart
