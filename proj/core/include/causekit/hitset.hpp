#pragma once

#include <causekit/error.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace causekit {

using Vertex = std::uint32_t;
/// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<Vertex>;

/// Hypergraph with edges bounded by a rank d. Edges are kept sorted and
/// deduplicated; every edge is a nonempty subset of the vertex set.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(VertexSet vertices, std::vector<VertexSet> edges);

    const VertexSet& vertices() const noexcept { return vertices_; }
    const std::vector<VertexSet>& edges() const noexcept { return edges_; }
    /// d: the largest edge size.
    std::size_t rank() const noexcept { return rank_; }
    bool has_vertex(Vertex v) const;
    bool hits_all(const VertexSet& s) const;
    VertexSet neighbours(Vertex v) const;

private:
    VertexSet vertices_;
    std::vector<VertexSet> edges_;
    std::size_t rank_ = 0;
};

struct HittingSetBudget {
    std::size_t max_results = 1'000'000;
    std::size_t max_vertices = 4096;
};

/// All S-minimal hitting sets, each sorted, collection in lexicographic
/// order. No edges gives {∅}. Throws ResourceLimitError past the budget.
std::vector<VertexSet> minimal_hitting_sets(const Hypergraph& h, const HittingSetBudget& budget = {});

/// Members of minimal_hitting_sets of minimum cardinality.
std::vector<VertexSet> minimum_hitting_sets(const Hypergraph& h, const HittingSetBudget& budget = {});

/// Is there a hitting set of size ≤ k (containing `forced` when given)?
/// Depth-bounded branching on the canonically smallest unhit edge.
bool exists_hs_within(const Hypergraph& h, std::size_t k, std::optional<Vertex> forced = std::nullopt);

/// Size of a minimum hitting set.
std::size_t min_hs_size(const Hypergraph& h);

/// Size of a minimum hitting set that contains `t`; nullopt when `t` is in
/// no edge. Throws Error when `t` is not a vertex.
std::optional<std::size_t> min_hs_size_containing(const Hypergraph& h, Vertex t);

/// `h` with `t` and every edge containing `t` removed.
Hypergraph residual(const Hypergraph& h, Vertex t);

/// Is there an S-minimal hitting set of size ≤ k that contains `t`?
///
/// Such a set leaves some edge e ∋ t hit only by t, so the search picks e and
/// covers the remaining edges of `t`'s residual without e's other vertices.
bool exists_minimal_hs_within(const Hypergraph& h, std::size_t k, Vertex t);

/// Smallest S-minimal hitting set containing `t` (binary search over k with
/// exists_minimal_hs_within); nullopt when no S-minimal hitting set
/// contains `t`.
std::optional<std::size_t> min_minimal_hs_size_containing(const Hypergraph& h, Vertex t);

/// For a graph (every edge of size 2) and a non-isolated vertex v: one
/// extension per neighbour v' of v, adding a fresh vertex adjacent to exactly
/// the neighbours of v'. The minimum over the extensions' minimum vertex
/// covers equals the minimum vertex cover of the graph that contains v.
std::vector<Hypergraph> extend_for_vertex(const Hypergraph& g, Vertex v);

} // namespace causekit
