#include <causekit/hitset.hpp>
#include <causekit/sets.hpp>

#include <algorithm>

namespace causekit {

namespace {

// Depth-bounded d-way branching: can `edges` be hit with ≤ budget vertices
// outside `forbidden`, given the vertices already chosen in `hit`?
class CoverSearch {
public:
    CoverSearch(const std::vector<VertexSet>& edges, const VertexSet& forbidden)
        : edges_(edges), forbidden_(forbidden) {}

    bool run(std::size_t budget) {
        chosen_.clear();
        return search(budget);
    }

private:
    bool search(std::size_t budget) {
        // Edges are in canonical order, so the first unhit one is the
        // canonically smallest.
        const VertexSet* unhit = nullptr;
        for (const auto& e : edges_) {
            if (sets::disjoint(e, chosen_)) {
                unhit = &e;
                break;
            }
        }
        if (!unhit)
            return true;
        if (budget == 0)
            return false;
        for (Vertex v : *unhit) {
            if (sets::contains(forbidden_, v))
                continue;
            chosen_.insert(std::lower_bound(chosen_.begin(), chosen_.end(), v), v);
            const bool found = search(budget - 1);
            chosen_.erase(std::lower_bound(chosen_.begin(), chosen_.end(), v));
            if (found)
                return true;
        }
        return false;
    }

    const std::vector<VertexSet>& edges_;
    const VertexSet& forbidden_;
    VertexSet chosen_;
};

bool coverable_within(const std::vector<VertexSet>& edges, std::size_t k, const VertexSet& forbidden = {}) {
    return CoverSearch(edges, forbidden).run(k);
}

std::vector<VertexSet> edges_without(const Hypergraph& h, Vertex t) {
    std::vector<VertexSet> out;
    for (const auto& e : h.edges())
        if (!sets::contains(e, t))
            out.push_back(e);
    return out;
}

// Enumerates candidate hitting sets by branching on the first unhit edge;
// a vertex skipped in a branch is forbidden below it, so every S-minimal
// hitting set is produced exactly once. Non-minimal candidates are dropped.
class MinimalEnumerator {
public:
    MinimalEnumerator(const Hypergraph& h, const HittingSetBudget& budget) : h_(h), budget_(budget) {}

    std::vector<VertexSet> run() {
        search();
        std::sort(results_.begin(), results_.end());
        return std::move(results_);
    }

private:
    void search() {
        const VertexSet* unhit = nullptr;
        for (const auto& e : h_.edges()) {
            if (sets::disjoint(e, chosen_)) {
                unhit = &e;
                break;
            }
        }
        if (!unhit) {
            if (is_minimal()) {
                if (results_.size() >= budget_.max_results)
                    throw ResourceLimitError("more than " + std::to_string(budget_.max_results) +
                                             " minimal hitting sets");
                results_.push_back(chosen_);
            }
            return;
        }
        std::vector<Vertex> newly_forbidden;
        for (Vertex v : *unhit) {
            if (sets::contains(forbidden_, v))
                continue;
            chosen_ = sets::insert(std::move(chosen_), v);
            if (every_chosen_has_private_edge())
                search();
            chosen_ = sets::erase(std::move(chosen_), v);
            forbidden_ = sets::insert(std::move(forbidden_), v);
            newly_forbidden.push_back(v);
        }
        for (Vertex v : newly_forbidden)
            forbidden_ = sets::erase(std::move(forbidden_), v);
    }

    // Pruning: a chosen vertex whose every edge is already hit by another
    // chosen vertex can never become necessary again.
    bool every_chosen_has_private_edge() const {
        for (Vertex c : chosen_) {
            bool has_private = false;
            for (const auto& e : h_.edges()) {
                if (!sets::contains(e, c))
                    continue;
                bool only_c = true;
                for (Vertex u : e)
                    if (u != c && sets::contains(chosen_, u)) {
                        only_c = false;
                        break;
                    }
                if (only_c) {
                    has_private = true;
                    break;
                }
            }
            if (!has_private)
                return false;
        }
        return true;
    }

    bool is_minimal() const { return every_chosen_has_private_edge(); }

    const Hypergraph& h_;
    const HittingSetBudget& budget_;
    VertexSet chosen_;
    VertexSet forbidden_;
    std::vector<VertexSet> results_;
};

} // namespace

Hypergraph::Hypergraph(VertexSet vertices, std::vector<VertexSet> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.empty())
            throw Error("hypergraph edges must be nonempty");
        if (!sets::is_subset(e, vertices_))
            throw Error("hypergraph edge mentions an unknown vertex");
        rank_ = std::max(rank_, e.size());
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::has_vertex(Vertex v) const { return sets::contains(vertices_, v); }

bool Hypergraph::hits_all(const VertexSet& s) const {
    return std::none_of(edges_.begin(), edges_.end(), [&](const VertexSet& e) { return sets::disjoint(e, s); });
}

VertexSet Hypergraph::neighbours(Vertex v) const {
    VertexSet out;
    for (const auto& e : edges_)
        if (sets::contains(e, v))
            for (Vertex u : e)
                if (u != v)
                    out.push_back(u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexSet> minimal_hitting_sets(const Hypergraph& h, const HittingSetBudget& budget) {
    if (h.vertices().size() > budget.max_vertices)
        throw ResourceLimitError("hypergraph has " + std::to_string(h.vertices().size()) +
                                 " vertices, budget is " + std::to_string(budget.max_vertices));
    return MinimalEnumerator(h, budget).run();
}

std::vector<VertexSet> minimum_hitting_sets(const Hypergraph& h, const HittingSetBudget& budget) {
    auto all = minimal_hitting_sets(h, budget);
    if (all.empty())
        return all;
    const auto smallest = std::min_element(all.begin(), all.end(), [](const auto& a, const auto& b) {
                              return a.size() < b.size();
                          })->size();
    std::erase_if(all, [&](const VertexSet& s) { return s.size() != smallest; });
    return all;
}

bool exists_hs_within(const Hypergraph& h, std::size_t k, std::optional<Vertex> forced) {
    if (!forced)
        return coverable_within(h.edges(), k);
    if (!h.has_vertex(*forced))
        throw Error("forced vertex is not in the hypergraph");
    if (k == 0)
        return false;
    return coverable_within(edges_without(h, *forced), k - 1);
}

std::size_t min_hs_size(const Hypergraph& h) {
    std::size_t lo = 0;
    std::size_t hi = h.vertices().size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (exists_hs_within(h, mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::optional<std::size_t> min_hs_size_containing(const Hypergraph& h, Vertex t) {
    if (!h.has_vertex(t))
        throw Error("vertex is not in the hypergraph");
    const bool in_some_edge =
        std::any_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) { return sets::contains(e, t); });
    if (!in_some_edge)
        return std::nullopt;
    std::size_t lo = 1;
    std::size_t hi = h.vertices().size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (exists_hs_within(h, mid, t))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

Hypergraph residual(const Hypergraph& h, Vertex t) {
    return Hypergraph(sets::erase(h.vertices(), t), edges_without(h, t));
}

bool exists_minimal_hs_within(const Hypergraph& h, std::size_t k, Vertex t) {
    if (!h.has_vertex(t))
        throw Error("vertex is not in the hypergraph");
    if (k == 0)
        return false;
    const auto rest = edges_without(h, t);
    for (const auto& witness : h.edges()) {
        if (!sets::contains(witness, t))
            continue;
        if (coverable_within(rest, k - 1, sets::erase(witness, t)))
            return true;
    }
    return false;
}

std::optional<std::size_t> min_minimal_hs_size_containing(const Hypergraph& h, Vertex t) {
    if (!h.has_vertex(t))
        throw Error("vertex is not in the hypergraph");
    const bool in_some_edge =
        std::any_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) { return sets::contains(e, t); });
    if (!in_some_edge)
        return std::nullopt;
    std::size_t lo = 1;
    std::size_t hi = h.vertices().size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (exists_minimal_hs_within(h, mid, t))
            hi = mid;
        else
            lo = mid + 1;
    }
    // Possible only when an edge contains another one.
    if (!exists_minimal_hs_within(h, lo, t))
        return std::nullopt;
    return lo;
}

std::vector<Hypergraph> extend_for_vertex(const Hypergraph& g, Vertex v) {
    if (!g.has_vertex(v))
        throw Error("vertex is not in the graph");
    if (std::any_of(g.edges().begin(), g.edges().end(), [](const VertexSet& e) { return e.size() != 2; }))
        throw Error("extend_for_vertex expects a graph: every edge must have exactly two vertices");
    const VertexSet around_v = g.neighbours(v);
    if (around_v.empty())
        throw Error("vertex is isolated; its minimum cover size is 1 plus the graph's minimum cover");

    const Vertex fresh = g.vertices().back() + 1;
    std::vector<Hypergraph> out;
    for (Vertex neighbour : around_v) {
        VertexSet vertices = g.vertices();
        vertices.push_back(fresh);
        std::vector<VertexSet> edges = g.edges();
        for (Vertex w : g.neighbours(neighbour))
            edges.push_back({w, fresh});
        out.emplace_back(std::move(vertices), std::move(edges));
    }
    return out;
}

} // namespace causekit
