#pragma once

#include <causekit/hitset.hpp>
#include <causekit/model.hpp>
#include <causekit/query.hpp>
#include <causekit/support.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace causekit {

/// Exact responsibility: 0 or 1/k with k ≥ 1.
class Responsibility {
public:
    constexpr Responsibility() = default;
    static constexpr Responsibility zero() { return {}; }
    /// 1/k; throws Error for k = 0.
    static Responsibility inverse(std::size_t k);
    /// Parses "0", "1", "1/k" (and "0/1").
    static Responsibility parse(const std::string& text);

    constexpr bool is_zero() const noexcept { return denominator_ == 0; }
    constexpr std::size_t numerator() const noexcept { return is_zero() ? 0 : 1; }
    /// 1 for zero, so numerator()/denominator() is always a valid fraction.
    constexpr std::size_t denominator() const noexcept { return is_zero() ? 1 : denominator_; }

    /// "num/den", e.g. "1/2", "1/1", "0/1".
    std::string fraction() const;
    /// Human form: "0", "1", "1/2".
    std::string display() const;

    friend constexpr bool operator==(Responsibility, Responsibility) = default;
    friend constexpr std::strong_ordering operator<=>(Responsibility a, Responsibility b) {
        if (a.is_zero() || b.is_zero())
            return a.numerator() <=> b.numerator();
        return b.denominator_ <=> a.denominator_;
    }

private:
    std::size_t denominator_ = 0; // 0 encodes the value zero
};

struct CauseReport {
    TupleId tuple = 0;
    bool is_cause = false;
    Responsibility responsibility;
    /// S-minimal contingency sets; filled only on request.
    std::optional<std::vector<TupleSet>> contingencies;
};

/// Causes, responsibilities and contingency sets for one query over one
/// instance. Computes 𝔖(D), 𝔖^n(D) and the hypergraph ⟨D^n, 𝔖^n(D)⟩ once.
class CausalAnalysis {
public:
    CausalAnalysis(Instance instance, UCQ query);

    const Instance& instance() const noexcept { return instance_; }
    const UCQ& query() const noexcept { return query_; }
    bool holds() const noexcept { return !support_.empty(); }
    const SupportFamily& support() const noexcept { return support_; }
    const SupportFamily& endogenous_support() const noexcept { return endogenous_support_; }
    /// ⟨D^n, 𝔖^n(D)⟩; no edges when the family is vacuous or the query is false.
    const Hypergraph& hypergraph() const noexcept { return hypergraph_; }

    TupleSet causes() const;
    bool is_cause(TupleId t) const;
    Responsibility responsibility(TupleId t) const;
    /// 𝒞𝒯(D, D^n, q, t). Exponential in the worst case.
    std::vector<TupleSet> contingencies(TupleId t, const HittingSetBudget& budget = {}) const;
    TupleSet most_responsible() const;

    /// ρ(t) > v. Requires D ⊨ q.
    bool decide_rpd(TupleId t, Responsibility v) const;
    /// 0 < ρ(t) and ρ(t) is maximal over D^n.
    bool decide_mrcd(TupleId t) const;

    /// One report per endogenous tuple, canonical order.
    std::vector<CauseReport> report(bool with_contingencies = false, const HittingSetBudget& budget = {}) const;

private:
    void require_endogenous_id(TupleId t) const;

    Instance instance_;
    UCQ query_;
    SupportFamily support_;
    SupportFamily endogenous_support_;
    Hypergraph hypergraph_;
};

std::vector<GroundTuple> actual_causes(const Instance& d, const UCQ& q);
std::vector<std::vector<GroundTuple>> minimal_contingencies(const Instance& d, const UCQ& q, const GroundTuple& t);
Responsibility responsibility(const Instance& d, const UCQ& q, const GroundTuple& t);
std::vector<GroundTuple> most_responsible(const Instance& d, const UCQ& q);
bool decide_rpd(const Instance& d, const UCQ& q, const GroundTuple& t, Responsibility v);
bool decide_mrcd(const Instance& d, const UCQ& q, const GroundTuple& t);

/// Membership in MCCD: is Γ an S-minimal contingency set for t? Checked
/// directly against the definition with polynomially many evaluations.
bool is_minimal_contingency(const Instance& d, const UCQ& q, const GroundTuple& t,
                            const std::vector<GroundTuple>& gamma);

/// Undirected simple graph with labelled vertices.
struct Graph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct GraphEncoding {
    Instance instance;
    Disjunct query;
    GroundTuple tuple;
};

/// Encodes (G, v) as Ver/Edges relations with every edge stored n = |V|
/// times under labels 1..n|E|, the query
/// Ver(V1), Ver(V2), Edges(V1,V2,E), and the tuple Ver(v).
GraphEncoding encode_graph(const Graph& g, std::size_t v);

} // namespace causekit
