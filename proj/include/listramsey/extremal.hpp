#pragma once

#include "listramsey/hypergraph.hpp"
#include "listramsey/rational.hpp"

#include <optional>
#include <vector>

namespace listramsey {

enum class TuranMode { CopyFree, HomFree };

enum class TuranStatus { Ok, EdgelessPattern, BudgetExceeded };

struct TuranResult {
    int n = 0;
    int r = 0;
    TuranMode mode = TuranMode::CopyFree;
    TuranStatus status = TuranStatus::Ok;
    int value = 0;
    Hypergraph witness;
    long long nodes_explored = 0;
    double elapsed_ms = 0.0;
};

struct SearchBudget {
    long long max_nodes = -1; // -1 = unbounded
    double max_ms = -1.0;
};

/// Exact maximum edge count of a pattern-free (copy-free) or
/// pattern-homomorphism-free r-graph on n vertices, by branch and bound over
/// the C(n,r) candidate edges in colex order with include/exclude branching.
/// Single-threaded runs return the canonical (first-found) witness; with
/// threads > 1 the value is unchanged but the witness may differ.
TuranResult turan_number(int n, const Hypergraph& pattern, TuranMode mode,
                         SearchBudget budget = {}, int threads = 1);

struct DensityEstimate {
    struct Entry {
        int n;
        int ex_value;
        double ratio; // ex / C(n, r)
    };
    std::vector<Entry> entries;
    bool monotone = true;  // ratios non-increasing in n
    bool truncated = false; // budget ran out before n_max
    int truncated_at = -1;
    double pi_upper_estimate = 1.0; // last ratio
};

/// Table of ex(n, pattern) / C(n, r) for r <= n <= n_max; the last ratio is
/// the working upper estimate of the Turan density.
DensityEstimate density_estimate(const Hypergraph& pattern, int n_max,
                                 TuranMode mode = TuranMode::CopyFree,
                                 SearchBudget per_cell_budget = {});

/// max over subgraphs H' with e(H') > 1 of (e(H')-1)/(v(H')-r), where v(H')
/// counts vertices incident to the chosen edges. nullopt when the pattern has
/// fewer than two edges.
std::optional<Rational> m_parameter(const Hypergraph& pattern);

enum class SymmetrizeStatus { Success, Stuck };

struct SymmetrizationStep {
    int removed = 0;
    int copied = 0;
    int edges_before = 0;
    int edges_after = 0;
};

struct SymmetrizationTrace {
    std::vector<SymmetrizationStep> steps;
    Hypergraph final_graph;
    SymmetrizeStatus status = SymmetrizeStatus::Success;
    int target_min_degree = 0;
};

/// While some vertex has degree below the target, remove a minimum-degree
/// vertex and insert a copy of a maximum-degree one (smallest ids on ties);
/// accept only strict edge-count increases, stop "stuck" otherwise. Every
/// accepted step is re-verified pattern-homomorphism-free. The input must be
/// pattern-homomorphism-free.
SymmetrizationTrace symmetrize(const Hypergraph& g, const Hypergraph& pattern, int target_min_degree);

/// Degree target (pi_hat - eps) * n^(r-1) / (r-1)! used when driving
/// symmetrize from a density estimate.
double symmetrize_degree_target(double pi_hat, double eps, int n, int r);

/// C(n, r) with overflow guard.
long long binomial(long long n, long long r);

} // namespace listramsey
