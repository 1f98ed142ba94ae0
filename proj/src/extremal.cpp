#include "listramsey/extremal.hpp"
#include "listramsey/morphism.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace listramsey {

long long binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    __int128 acc = 1;
    for (long long i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > static_cast<__int128>(1) << 62) throw std::overflow_error("binomial: value too large");
    }
    return static_cast<long long>(acc);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

uint64_t edge_key(const Edge& e) {
    uint64_t k = 0;
    for (size_t i = 0; i < e.size(); ++i) k |= static_cast<uint64_t>(e[i]) << (8 * i);
    return k;
}

std::vector<Edge> colex_candidates(int n, int r) {
    auto g = Hypergraph::complete(r, n);
    return g.edges();
}

// Shared, immutable description of one Turan instance.
struct TuranProblem {
    int n;
    const Hypergraph& pattern;
    TuranMode mode;
    std::vector<Edge> candidates;
    std::unordered_map<uint64_t, int> key_to_index;

    TuranProblem(int n_, const Hypergraph& p, TuranMode m) : n(n_), pattern(p), mode(m) {
        candidates = colex_candidates(n, p.r());
        key_to_index.reserve(candidates.size() * 2);
        for (int i = 0; i < static_cast<int>(candidates.size()); ++i)
            key_to_index.emplace(edge_key(candidates[i]), i);
    }
};

// One worker's view of a partial graph plus the DFS driving it.
struct TuranWorker {
    const TuranProblem& prob;
    std::vector<char> included;
    int current = 0;
    long long nodes = 0;

    std::atomic<int>* shared_best;
    int best_local = -1;
    std::vector<char> best_set;

    long long node_budget;
    double ms_budget;
    Clock::time_point t0;
    bool aborted = false;

    EdgeOracle oracle;

    TuranWorker(const TuranProblem& p, std::atomic<int>* best, long long nb, double mb,
                Clock::time_point start)
        : prob(p), included(p.candidates.size(), 0), shared_best(best), node_budget(nb),
          ms_budget(mb), t0(start) {
        oracle = [this](const Edge& e) {
            auto it = prob.key_to_index.find(edge_key(e));
            return it != prob.key_to_index.end() && included[it->second];
        };
    }

    bool budget_hit() {
        if (node_budget >= 0 && nodes > node_budget) return true;
        if (ms_budget >= 0 && (nodes & 1023) == 0 && ms_since(t0) > ms_budget) return true;
        return false;
    }

    // Would adding candidate i complete a forbidden pattern occurrence
    // through that edge? Assumes the current graph is already clean, so any
    // new occurrence must use the new edge as an image.
    bool addable(int i) {
        included[i] = 1;
        bool injective = prob.mode == TuranMode::CopyFree;
        auto hit = find_map(prob.pattern, prob.n, oracle, injective, &prob.candidates[i]);
        included[i] = 0;
        return !hit.has_value();
    }

    void record_leaf() {
        if (current <= best_local) return;
        best_local = current;
        best_set = included;
        if (shared_best) {
            int seen = shared_best->load(std::memory_order_relaxed);
            while (current > seen &&
                   !shared_best->compare_exchange_weak(seen, current, std::memory_order_relaxed)) {
            }
        }
    }

    int best_bound() const {
        if (!shared_best) return best_local;
        return std::max(best_local, shared_best->load(std::memory_order_relaxed));
    }

    void dfs(int i) {
        ++nodes;
        if (aborted || budget_hit()) {
            aborted = true;
            return;
        }
        int m = static_cast<int>(prob.candidates.size());
        if (i == m) {
            record_leaf();
            return;
        }
        if (current + (m - i) <= best_bound()) return;
        if (addable(i)) {
            included[i] = 1;
            ++current;
            dfs(i + 1);
            --current;
            included[i] = 0;
            if (aborted) return;
        }
        dfs(i + 1);
    }
};

Hypergraph witness_from_set(const TuranProblem& prob, const std::vector<char>& set) {
    std::vector<Edge> es;
    for (size_t i = 0; i < set.size(); ++i)
        if (set[i]) es.push_back(prob.candidates[i]);
    return Hypergraph(prob.pattern.r(), prob.n, std::move(es));
}

} // namespace

TuranResult turan_number(int n, const Hypergraph& pattern, TuranMode mode, SearchBudget budget,
                         int threads) {
    const int r = pattern.r();
    if (n < r) throw std::invalid_argument("turan_number: n < r");
    if (n > 64 || r > 8) throw std::invalid_argument("turan_number: outside supported range (n <= 64, r <= 8)");

    TuranResult res;
    res.n = n;
    res.r = r;
    res.mode = mode;

    auto t0 = Clock::now();
    if (pattern.edge_count() == 0) {
        res.status = TuranStatus::EdgelessPattern;
        res.witness = Hypergraph::complete(r, n);
        res.value = res.witness.edge_count();
        res.elapsed_ms = ms_since(t0);
        return res;
    }

    TuranProblem prob(n, pattern, mode);
    const int m = static_cast<int>(prob.candidates.size());

    if (threads <= 1) {
        TuranWorker w(prob, nullptr, budget.max_nodes, budget.max_ms, t0);
        w.dfs(0);
        res.nodes_explored = w.nodes;
        res.value = std::max(0, w.best_local);
        res.witness = w.best_local >= 0 ? witness_from_set(prob, w.best_set)
                                        : Hypergraph(r, n, {});
        res.status = w.aborted ? TuranStatus::BudgetExceeded : TuranStatus::Ok;
    } else {
        // Split on the include/exclude pattern of the first few candidates.
        int depth = 0;
        while ((1 << depth) < 4 * threads && depth < m && depth < 12) ++depth;
        std::atomic<int> shared_best{-1};
        std::atomic<int> next_prefix{0};
        std::atomic<long long> total_nodes{0};
        std::atomic<bool> any_abort{false};
        const int prefixes = 1 << depth;

        std::vector<TuranWorker> results;
        std::mutex res_mu;
        auto run = [&]() {
            for (;;) {
                int pf = next_prefix.fetch_add(1);
                if (pf >= prefixes) return;
                TuranWorker w(prob, &shared_best, budget.max_nodes, budget.max_ms, t0);
                bool viable = true;
                for (int i = 0; i < depth && viable; ++i) {
                    if ((pf >> i) & 1) {
                        if (w.addable(i)) {
                            w.included[i] = 1;
                            ++w.current;
                        } else {
                            viable = false; // sequential search never takes this branch
                        }
                    }
                }
                if (viable) w.dfs(depth);
                total_nodes += w.nodes;
                if (w.aborted) any_abort = true;
                std::lock_guard<std::mutex> lk(res_mu);
                results.push_back(std::move(w));
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run);
        for (auto& t : pool) t.join();

        int best = -1;
        const std::vector<char>* best_set = nullptr;
        for (const auto& w : results) {
            if (w.best_local > best) {
                best = w.best_local;
                best_set = &w.best_set;
            }
        }
        res.nodes_explored = total_nodes.load();
        res.value = std::max(0, best);
        res.witness = best_set ? witness_from_set(prob, *best_set) : Hypergraph(r, n, {});
        res.status = any_abort ? TuranStatus::BudgetExceeded : TuranStatus::Ok;
    }

    res.elapsed_ms = ms_since(t0);

    if (res.status == TuranStatus::Ok) {
        bool clean = mode == TuranMode::CopyFree ? !find_copy(res.witness, pattern).has_value()
                                                 : is_hom_free(res.witness, pattern);
        if (!clean || res.witness.edge_count() != res.value)
            throw std::logic_error("turan_number: witness failed re-verification");
    }
    return res;
}

DensityEstimate density_estimate(const Hypergraph& pattern, int n_max, TuranMode mode,
                                 SearchBudget per_cell_budget) {
    DensityEstimate out;
    const int r = pattern.r();
    double prev = 2.0;
    for (int n = r; n <= n_max; ++n) {
        auto cell = turan_number(n, pattern, mode, per_cell_budget);
        if (cell.status == TuranStatus::BudgetExceeded) {
            out.truncated = true;
            out.truncated_at = n;
            break;
        }
        double ratio = static_cast<double>(cell.value) / static_cast<double>(binomial(n, r));
        if (ratio > prev + 1e-12) out.monotone = false;
        prev = ratio;
        out.entries.push_back({n, cell.value, ratio});
    }
    if (!out.entries.empty()) out.pi_upper_estimate = out.entries.back().ratio;
    return out;
}

std::optional<Rational> m_parameter(const Hypergraph& pattern) {
    const int m = pattern.edge_count();
    if (m < 2) return std::nullopt;
    if (m > 30) throw std::invalid_argument("m_parameter: pattern too large (> 30 edges)");
    const int r = pattern.r();
    std::optional<Rational> best;
    std::vector<char> seen(pattern.n(), 0);
    for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
        int ecount = std::popcount(mask);
        if (ecount < 2) continue;
        std::fill(seen.begin(), seen.end(), 0);
        int vcount = 0;
        for (int i = 0; i < m; ++i) {
            if (!((mask >> i) & 1)) continue;
            for (int v : pattern.edges()[i]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    ++vcount;
                }
            }
        }
        Rational ratio(ecount - 1, vcount - r);
        if (!best || *best < ratio) best = ratio;
    }
    return best;
}

SymmetrizationTrace symmetrize(const Hypergraph& g, const Hypergraph& pattern, int target_min_degree) {
    if (!is_hom_free(g, pattern))
        throw std::invalid_argument("symmetrize: input graph is not pattern-homomorphism-free");
    if (g.n() == 0) throw std::invalid_argument("symmetrize: empty vertex set");

    SymmetrizationTrace trace;
    trace.target_min_degree = target_min_degree;
    Hypergraph cur = g;
    for (;;) {
        int v = 0;
        for (int i = 1; i < cur.n(); ++i)
            if (cur.degree(i) < cur.degree(v)) v = i;
        if (cur.degree(v) >= target_min_degree) {
            trace.status = SymmetrizeStatus::Success;
            break;
        }
        int u = -1;
        for (int i = 0; i < cur.n(); ++i) {
            if (i == v) continue;
            if (u < 0 || cur.degree(i) > cur.degree(u)) u = i;
        }
        if (u < 0) { // single-vertex graph cannot improve
            trace.status = SymmetrizeStatus::Stuck;
            break;
        }
        Hypergraph next = duplicate_vertex(cur, v, u);
        if (next.edge_count() <= cur.edge_count()) {
            trace.status = SymmetrizeStatus::Stuck;
            break;
        }
        if (!is_hom_free(next, pattern))
            throw std::logic_error("symmetrize: duplication broke homomorphism-freeness");
        trace.steps.push_back({v, u, cur.edge_count(), next.edge_count()});
        cur = std::move(next);
    }
    trace.final_graph = std::move(cur);
    return trace;
}

double symmetrize_degree_target(double pi_hat, double eps, int n, int r) {
    double fact = 1.0;
    for (int i = 2; i <= r - 1; ++i) fact *= i;
    return (pi_hat - eps) * std::pow(static_cast<double>(n), r - 1) / fact;
}

} // namespace listramsey
