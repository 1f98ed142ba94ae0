#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace listramsey {

/// An edge of an r-uniform hypergraph: r distinct vertex ids, sorted ascending.
using Edge = std::vector<int>;

/// Colexicographic order on sorted same-size tuples (compare largest entries first).
bool colex_less(const Edge& a, const Edge& b);

/// Immutable r-uniform hypergraph on vertices 0..n-1. Edges are kept as
/// sorted r-tuples in colexicographic order with set semantics (duplicates
/// collapse). For r == 2 with n <= 64 an adjacency-bitmask mirror is kept
/// for fast pair queries.
class Hypergraph {
  public:
    Hypergraph() : r_(2), n_(0) {}
    Hypergraph(int r, int n, std::vector<Edge> edges);

    int r() const { return r_; }
    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// e must be sorted ascending.
    bool has_edge(const Edge& e) const { return edge_index(e) >= 0; }
    /// Index of e in edges(), or -1.
    int edge_index(const Edge& e) const;

    int degree(int v) const;
    int min_degree() const;
    const std::vector<int>& incident_edges(int v) const;

    bool has_pair(int u, int v) const; // r == 2 only
    uint64_t adjacency_mask(int v) const; // r == 2, n <= 64 only

    static Hypergraph complete(int r, int n);
    static Hypergraph complete_graph(int n) { return complete(2, n); }
    static Hypergraph complete_bipartite(int a, int b);
    static Hypergraph cycle(int n);

    /// Resolve "K<t>", "K<t>^(<r>)", "C<t>" or "K<a>,<b>".
    static Hypergraph from_name(const std::string& name);

    /// Text format: first line "r n", then one edge per line as r
    /// space-separated vertex ids.
    static Hypergraph parse_text(std::istream& in);
    void write_text(std::ostream& out) const;

  private:
    int r_;
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<uint64_t> adj_; // r == 2, n <= 64

    void build_index();
};

/// Assignment of every vertex to one of t classes.
struct VertexPartition {
    std::vector<int> part; // vertex -> class id in [0, t)
    int t = 0;
};

/// Is there a t-class partition with no edge entirely inside one class?
bool weak_colorable(const Hypergraph& g, int t);

/// Same question for a bare edge list on n vertices (no Hypergraph needed).
bool weak_colorable_edges(int n, const std::vector<Edge>& edges, int t);

/// Smallest t admitting a partition with no monochromatic edge
/// (1 for an edgeless hypergraph with n >= 1, 0 for n == 0).
int weak_chromatic_number(const Hypergraph& g);

/// Partition into exactly r classes where every edge meets each class once,
/// if one exists. Exhaustive with first-occurrence symmetry breaking.
std::optional<VertexPartition> rainbow_r_partition(const Hypergraph& g);

bool is_r_partite(const Hypergraph& g);

/// Remove vertex `remove` with its edges, then insert a copy u' of `copy_of`
/// reusing the freed id: u' gets edge (e \ {u}) + {u'} for every edge e of
/// g - remove containing u. Vertex count is unchanged; no edge ever contains
/// both u and u'.
Hypergraph duplicate_vertex(const Hypergraph& g, int remove, int copy_of);

/// Image of g under a vertex relabeling (perm[v] = new id of v).
Hypergraph relabel(const Hypergraph& g, const std::vector<int>& perm);

} // namespace listramsey
