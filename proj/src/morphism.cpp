#include "listramsey/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace listramsey {

namespace {

struct MapSearch {
    const Hypergraph& pattern;
    int host_n;
    const EdgeOracle& edge_ok;
    bool injective;
    const std::vector<int>* host_degrees;

    std::vector<int> order;      // pattern vertices, decreasing degree, ties by id
    std::vector<int> assignment; // pattern vertex -> host vertex or -1
    std::vector<char> used;      // host vertex taken (injective mode)
    Edge image_buf;

    // return true to stop the whole search
    std::function<bool(const VertexMap&)> on_found;
    bool stopped = false;

    MapSearch(const Hypergraph& p, int hn, const EdgeOracle& ok, bool inj,
              const std::vector<int>* degs)
        : pattern(p), host_n(hn), edge_ok(ok), injective(inj), host_degrees(degs) {
        order.resize(p.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return p.degree(a) > p.degree(b);
        });
        assignment.assign(p.n(), -1);
        used.assign(host_n, 0);
        image_buf.resize(p.r());
    }

    bool edge_image_ok(const Edge& pe) {
        for (size_t i = 0; i < pe.size(); ++i) image_buf[i] = assignment[pe[i]];
        std::sort(image_buf.begin(), image_buf.end());
        for (size_t i = 1; i < image_buf.size(); ++i)
            if (image_buf[i] == image_buf[i - 1]) return false; // edges need r distinct images
        return edge_ok(image_buf);
    }

    // check all pattern edges through v whose vertices are now all assigned
    bool edges_through_ok(int v) {
        for (int ei : pattern.incident_edges(v)) {
            const Edge& pe = pattern.edges()[ei];
            bool ready = true;
            for (int w : pe) {
                if (assignment[w] < 0) {
                    ready = false;
                    break;
                }
            }
            if (ready && !edge_image_ok(pe)) return false;
        }
        return true;
    }

    void emit() {
        VertexMap m{pattern.n(), assignment};
        if (on_found(m)) stopped = true;
    }

    void dfs(int oi) {
        if (stopped) return;
        if (oi == static_cast<int>(order.size())) {
            emit();
            return;
        }
        int v = order[oi];
        if (assignment[v] >= 0) { // pre-assigned by a required edge
            dfs(oi + 1);
            return;
        }
        for (int g = 0; g < host_n && !stopped; ++g) {
            if (injective && used[g]) continue;
            if (host_degrees && injective && (*host_degrees)[g] < pattern.degree(v)) continue;
            assignment[v] = g;
            if (injective) used[g] = 1;
            if (edges_through_ok(v)) dfs(oi + 1);
            assignment[v] = -1;
            if (injective) used[g] = 0;
        }
    }

    // validate every pattern edge already fully covered by pre-assignments
    bool preassigned_edges_ok() {
        for (const Edge& pe : pattern.edges()) {
            bool ready = true;
            for (int w : pe) {
                if (assignment[w] < 0) {
                    ready = false;
                    break;
                }
            }
            if (ready && !edge_image_ok(pe)) return false;
        }
        return true;
    }
};

std::optional<VertexMap> run_search(const Hypergraph& pattern, int host_n, const EdgeOracle& edge_ok,
                                    bool injective, const Edge* require_image_edge,
                                    const std::vector<int>* host_degrees,
                                    const std::function<bool(const VertexMap&)>* visitor) {
    std::optional<VertexMap> found;
    std::function<bool(const VertexMap&)> sink;
    if (visitor) {
        sink = *visitor;
    } else {
        sink = [&](const VertexMap& m) {
            found = m;
            return true;
        };
    }

    if (!require_image_edge) {
        MapSearch s(pattern, host_n, edge_ok, injective, host_degrees);
        s.on_found = sink;
        s.dfs(0);
        return found;
    }

    // Some pattern edge must map onto exactly the required r-set: try every
    // pattern edge under every bijection onto it, then extend.
    const Edge& target = *require_image_edge;
    for (const Edge& pe : pattern.edges()) {
        std::vector<int> perm(target.begin(), target.end());
        std::sort(perm.begin(), perm.end());
        do {
            MapSearch s(pattern, host_n, edge_ok, injective, host_degrees);
            s.on_found = sink;
            bool clash = false;
            for (size_t i = 0; i < pe.size(); ++i) {
                int pv = pe[i], hv = perm[i];
                if (s.assignment[pv] >= 0 && s.assignment[pv] != hv) {
                    clash = true;
                    break;
                }
                s.assignment[pv] = hv;
                if (injective) {
                    if (s.used[hv]) {
                        clash = true;
                        break;
                    }
                    s.used[hv] = 1;
                }
            }
            if (!clash && s.preassigned_edges_ok()) {
                s.dfs(0);
                if (s.stopped && !visitor) return found;
                if (s.stopped) return std::nullopt; // visitor asked to stop
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return found;
}

} // namespace

std::optional<VertexMap> find_map(const Hypergraph& pattern, int host_n, const EdgeOracle& edge_ok,
                                  bool injective, const Edge* require_image_edge,
                                  const std::vector<int>* host_degrees) {
    if (injective && pattern.n() > host_n) return std::nullopt;
    if (pattern.n() > 0 && host_n == 0) return std::nullopt;
    return run_search(pattern, host_n, edge_ok, injective, require_image_edge, host_degrees, nullptr);
}

std::optional<VertexMap> find_homomorphism(const Hypergraph& pattern, const Hypergraph& target) {
    if (pattern.r() != target.r()) throw std::invalid_argument("find_homomorphism: uniformity mismatch");
    EdgeOracle ok = [&target](const Edge& e) { return target.has_edge(e); };
    return find_map(pattern, target.n(), ok, /*injective=*/false);
}

bool is_hom_free(const Hypergraph& g, const Hypergraph& pattern) {
    return !find_homomorphism(pattern, g).has_value();
}

std::optional<Embedding> find_copy(const Hypergraph& host, const Hypergraph& pattern) {
    if (pattern.r() != host.r()) throw std::invalid_argument("find_copy: uniformity mismatch");
    EdgeOracle ok = [&host](const Edge& e) { return host.has_edge(e); };
    std::vector<int> degs(host.n());
    for (int v = 0; v < host.n(); ++v) degs[v] = host.degree(v);
    auto m = find_map(pattern, host.n(), ok, /*injective=*/true, nullptr, &degs);
    if (!m) return std::nullopt;
    return Embedding{std::move(*m)};
}

void for_each_copy(const Hypergraph& host, const Hypergraph& pattern,
                   const std::function<bool(const VertexMap&)>& visit) {
    if (pattern.r() != host.r()) throw std::invalid_argument("for_each_copy: uniformity mismatch");
    if (pattern.n() > host.n() || (pattern.n() > 0 && host.n() == 0)) return;
    EdgeOracle ok = [&host](const Edge& e) { return host.has_edge(e); };
    run_search(pattern, host.n(), ok, /*injective=*/true, nullptr, nullptr, &visit);
}

std::optional<MonoWitness> verify_coloring(const Hypergraph& host, const Coloring& coloring,
                                           const Hypergraph& pattern) {
    if (pattern.r() != host.r()) throw std::invalid_argument("verify_coloring: uniformity mismatch");
    if (static_cast<int>(coloring.by_edge.size()) != host.edge_count())
        throw std::invalid_argument("verify_coloring: coloring does not cover every host edge");
    std::vector<int> colors = coloring.by_edge;
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    std::vector<int> degs(host.n());
    for (int v = 0; v < host.n(); ++v) degs[v] = host.degree(v);
    for (int c : colors) {
        EdgeOracle in_class = [&host, &coloring, c](const Edge& e) {
            int idx = host.edge_index(e);
            return idx >= 0 && coloring.by_edge[idx] == c;
        };
        auto m = find_map(pattern, host.n(), in_class, /*injective=*/true, nullptr, &degs);
        if (m) return MonoWitness{c, Embedding{std::move(*m)}};
    }
    return std::nullopt;
}

bool map_preserves_edges(const Hypergraph& pattern, const VertexMap& map, const EdgeOracle& edge_ok) {
    if (map.from_n != pattern.n() || static_cast<int>(map.image.size()) != pattern.n()) return false;
    Edge img(pattern.r());
    for (const Edge& pe : pattern.edges()) {
        for (size_t i = 0; i < pe.size(); ++i) img[i] = map.image[pe[i]];
        std::sort(img.begin(), img.end());
        bool distinct = true;
        for (size_t i = 1; i < img.size(); ++i)
            if (img[i] == img[i - 1]) distinct = false;
        if (!distinct || !edge_ok(img)) return false;
    }
    return true;
}

} // namespace listramsey
