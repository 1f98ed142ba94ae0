#pragma once

#include "listramsey/hypergraph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace listramsey {

/// Total map from the vertices of a source hypergraph into some target.
struct VertexMap {
    int from_n = 0;
    std::vector<int> image; // image[v] = target vertex
};

/// Injective VertexMap witnessing a (not necessarily induced) copy.
struct Embedding {
    VertexMap map;
};

/// One color per host edge, aligned with host.edges() order.
struct Coloring {
    std::vector<int> by_edge;
};

/// Predicate answering "is this sorted r-set an edge of the (possibly
/// implicit) target?". Used to search inside color classes and partially
/// built graphs without materializing them.
using EdgeOracle = std::function<bool(const Edge&)>;

/// Core search: map pattern vertices into [0, host_n) so that every pattern
/// edge's image is an r-set accepted by edge_ok. Vertices are processed in
/// decreasing-degree order (ties by id), candidates ascending, so witnesses
/// are reproducible. If require_image_edge is set, some pattern edge must map
/// onto exactly that r-set. host_degrees enables degree pruning (injective
/// searches against a full host only).
std::optional<VertexMap> find_map(const Hypergraph& pattern, int host_n, const EdgeOracle& edge_ok,
                                  bool injective, const Edge* require_image_edge = nullptr,
                                  const std::vector<int>* host_degrees = nullptr);

/// Homomorphism from pattern to target: every pattern edge maps to r
/// distinct vertices forming an edge of target. Maps may be non-injective
/// globally.
std::optional<VertexMap> find_homomorphism(const Hypergraph& pattern, const Hypergraph& target);

bool is_hom_free(const Hypergraph& g, const Hypergraph& pattern);

/// Injective copy of pattern inside host.
std::optional<Embedding> find_copy(const Hypergraph& host, const Hypergraph& pattern);

/// Visit every injective copy of pattern in host (all vertex assignments);
/// return true from the visitor to stop early.
void for_each_copy(const Hypergraph& host, const Hypergraph& pattern,
                   const std::function<bool(const VertexMap&)>& visit);

struct MonoWitness {
    int color = 0;
    Embedding embedding;
};

/// First monochromatic copy of pattern in the coloring (colors scanned in
/// ascending order), or nullopt if every color class is pattern-free.
std::optional<MonoWitness> verify_coloring(const Hypergraph& host, const Coloring& coloring,
                                           const Hypergraph& pattern);

/// Does `map` send every pattern edge to an r-set of distinct vertices
/// accepted by edge_ok? (Re-verification helper.)
bool map_preserves_edges(const Hypergraph& pattern, const VertexMap& map, const EdgeOracle& edge_ok);

} // namespace listramsey
