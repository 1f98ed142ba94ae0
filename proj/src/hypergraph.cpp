#include "listramsey/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace listramsey {

bool colex_less(const Edge& a, const Edge& b) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Hypergraph::Hypergraph(int r, int n, std::vector<Edge> edges) : r_(r), n_(n), edges_(std::move(edges)) {
    if (r_ < 2) throw std::invalid_argument("Hypergraph: uniformity must be >= 2");
    if (n_ < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != r_)
            throw std::invalid_argument("Hypergraph: edge arity != r");
        std::sort(e.begin(), e.end());
        for (int i = 0; i < r_; ++i) {
            if (e[i] < 0 || e[i] >= n_)
                throw std::invalid_argument("Hypergraph: vertex id out of range");
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("Hypergraph: repeated vertex in edge");
        }
    }
    std::sort(edges_.begin(), edges_.end(), colex_less);
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build_index();
}

void Hypergraph::build_index() {
    incident_.assign(n_, {});
    for (int i = 0; i < edge_count(); ++i) {
        for (int v : edges_[i]) incident_[v].push_back(i);
    }
    adj_.clear();
    if (r_ == 2 && n_ <= 64) {
        adj_.assign(n_, 0);
        for (const auto& e : edges_) {
            adj_[e[0]] |= uint64_t{1} << e[1];
            adj_[e[1]] |= uint64_t{1} << e[0];
        }
    }
}

int Hypergraph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e, colex_less);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

int Hypergraph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("degree: vertex out of range");
    return static_cast<int>(incident_[v].size());
}

int Hypergraph::min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min_degree: empty vertex set");
    int best = degree(0);
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

const std::vector<int>& Hypergraph::incident_edges(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("incident_edges: vertex out of range");
    return incident_[v];
}

bool Hypergraph::has_pair(int u, int v) const {
    if (r_ != 2) throw std::invalid_argument("has_pair: r != 2");
    if (!adj_.empty()) return (adj_[u] >> v) & 1;
    Edge e{std::min(u, v), std::max(u, v)};
    return has_edge(e);
}

uint64_t Hypergraph::adjacency_mask(int v) const {
    if (adj_.empty()) throw std::invalid_argument("adjacency_mask: available only for r == 2, n <= 64");
    return adj_[v];
}

namespace {

void r_subsets(int n, int r, std::vector<Edge>& out) {
    Edge cur(r);
    // recursive lexicographic generation; constructor re-sorts to colex
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == r) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v < n; ++v) {
            cur[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
}

} // namespace

Hypergraph Hypergraph::complete(int r, int n) {
    std::vector<Edge> es;
    if (n >= r) r_subsets(n, r, es);
    return Hypergraph(r, n, std::move(es));
}

Hypergraph Hypergraph::complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return Hypergraph(2, a + b, std::move(es));
}

Hypergraph Hypergraph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
    return Hypergraph(2, n, std::move(es));
}

Hypergraph Hypergraph::from_name(const std::string& name) {
    auto fail = [&]() -> Hypergraph {
        throw std::invalid_argument("unrecognized graph name: \"" + name +
                                    "\" (expected K<t>, K<t>^(<r>), C<t> or K<a>,<b>)");
    };
    if (name.size() < 2) return fail();
    char kind = name[0];
    std::string rest = name.substr(1);
    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (kind == 'C') {
        if (!all_digits(rest)) return fail();
        return cycle(std::stoi(rest));
    }
    if (kind != 'K') return fail();
    auto caret = rest.find("^(");
    if (caret != std::string::npos) {
        if (rest.back() != ')') return fail();
        std::string t = rest.substr(0, caret);
        std::string r = rest.substr(caret + 2, rest.size() - caret - 3);
        if (!all_digits(t) || !all_digits(r)) return fail();
        return complete(std::stoi(r), std::stoi(t));
    }
    auto comma = rest.find(',');
    if (comma != std::string::npos) {
        std::string a = rest.substr(0, comma);
        std::string b = rest.substr(comma + 1);
        if (!all_digits(a) || !all_digits(b)) return fail();
        return complete_bipartite(std::stoi(a), std::stoi(b));
    }
    if (!all_digits(rest)) return fail();
    return complete_graph(std::stoi(rest));
}

Hypergraph Hypergraph::parse_text(std::istream& in) {
    int r = 0, n = 0;
    if (!(in >> r >> n)) throw std::invalid_argument("parse_text: expected header \"r n\"");
    std::vector<Edge> es;
    Edge e(r > 0 ? r : 0);
    while (true) {
        int first;
        if (!(in >> first)) break;
        e[0] = first;
        for (int i = 1; i < r; ++i) {
            if (!(in >> e[i])) throw std::invalid_argument("parse_text: truncated edge line");
        }
        es.push_back(e);
    }
    return Hypergraph(r, n, std::move(es));
}

void Hypergraph::write_text(std::ostream& out) const {
    out << r_ << ' ' << n_ << '\n';
    for (const auto& e : edges_) {
        for (int i = 0; i < r_; ++i) out << e[i] << (i + 1 == r_ ? '\n' : ' ');
    }
}

namespace {

// Shared backtracking over vertex classes with "first occurrence of each
// class id is in increasing vertex order" symmetry breaking. `edge_ok` is
// called once per edge when its last vertex gets a class.
template <typename EdgeOk>
bool partition_search(int n, int t, const std::vector<std::vector<int>>& edges_by_max,
                      const std::vector<Edge>& edges, EdgeOk edge_ok, std::vector<int>& out) {
    std::vector<int> cls(n, -1);
    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == n) {
            out = cls;
            return true;
        }
        int limit = std::min(t - 1, used); // may open exactly one new class
        for (int c = 0; c <= limit; ++c) {
            cls[v] = c;
            bool ok = true;
            for (int ei : edges_by_max[v]) {
                if (!edge_ok(edges[ei], cls)) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, v + 1, std::max(used, c + 1))) return true;
        }
        cls[v] = -1;
        return false;
    };
    return rec(rec, 0, 0);
}

std::vector<std::vector<int>> group_edges_by_max(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> by_max(n);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) by_max[edges[i].back()].push_back(i);
    return by_max;
}

} // namespace

bool weak_colorable_edges(int n, const std::vector<Edge>& edges, int t) {
    if (t <= 0) return n == 0;
    auto by_max = group_edges_by_max(n, edges);
    std::vector<int> out;
    return partition_search(n, t, by_max, edges,
                            [](const Edge& e, const std::vector<int>& cls) {
                                int c0 = cls[e[0]];
                                for (size_t i = 1; i < e.size(); ++i)
                                    if (cls[e[i]] != c0) return true;
                                return false;
                            },
                            out);
}

bool weak_colorable(const Hypergraph& g, int t) { return weak_colorable_edges(g.n(), g.edges(), t); }

int weak_chromatic_number(const Hypergraph& g) {
    if (g.n() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    for (int t = 2; t <= g.n(); ++t) {
        if (weak_colorable(g, t)) return t;
    }
    return g.n(); // unreachable: t = n always works since edges have >= 2 distinct vertices
}

std::optional<VertexPartition> rainbow_r_partition(const Hypergraph& g) {
    auto by_max = group_edges_by_max(g.n(), g.edges());
    std::vector<int> out;
    bool found = partition_search(g.n(), g.r(), by_max, g.edges(),
                                  [](const Edge& e, const std::vector<int>& cls) {
                                      // all classes distinct <=> exactly one vertex per class
                                      unsigned seen = 0;
                                      for (int v : e) {
                                          unsigned bit = 1u << cls[v];
                                          if (seen & bit) return false;
                                          seen |= bit;
                                      }
                                      return true;
                                  },
                                  out);
    if (!found) return std::nullopt;
    return VertexPartition{std::move(out), g.r()};
}

bool is_r_partite(const Hypergraph& g) { return rainbow_r_partition(g).has_value(); }

Hypergraph duplicate_vertex(const Hypergraph& g, int remove, int copy_of) {
    if (remove == copy_of) throw std::invalid_argument("duplicate_vertex: remove == copy_of");
    if (remove < 0 || remove >= g.n() || copy_of < 0 || copy_of >= g.n())
        throw std::invalid_argument("duplicate_vertex: vertex out of range");
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
        if (std::binary_search(e.begin(), e.end(), remove)) continue;
        es.push_back(e);
        if (std::binary_search(e.begin(), e.end(), copy_of)) {
            Edge copy;
            copy.reserve(e.size());
            for (int v : e)
                if (v != copy_of) copy.push_back(v);
            copy.push_back(remove); // freed id hosts the new vertex u'
            es.push_back(std::move(copy));
        }
    }
    return Hypergraph(g.r(), g.n(), std::move(es));
}

Hypergraph relabel(const Hypergraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("relabel: permutation size != n");
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        Edge m;
        m.reserve(e.size());
        for (int v : e) m.push_back(perm[v]);
        es.push_back(std::move(m));
    }
    return Hypergraph(g.r(), g.n(), std::move(es));
}

} // namespace listramsey
