#include <causekit/causal.hpp>
#include <causekit/sets.hpp>

#include <algorithm>
#include <charconv>
#include <set>

namespace causekit {

Responsibility Responsibility::inverse(std::size_t k) {
    if (k == 0)
        throw Error("responsibility 1/0 is undefined");
    Responsibility r;
    r.denominator_ = k;
    return r;
}

Responsibility Responsibility::parse(const std::string& text) {
    auto number = [&](std::string_view s) {
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || end != s.data() + s.size())
            throw Error("malformed responsibility '" + text + "'");
        return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        const std::size_t v = number(text);
        if (v == 0)
            return zero();
        if (v == 1)
            return inverse(1);
        throw Error("responsibility must be 0 or 1/k, got '" + text + "'");
    }
    const std::size_t num = number(std::string_view(text).substr(0, slash));
    const std::size_t den = number(std::string_view(text).substr(slash + 1));
    if (den == 0 || num > 1)
        throw Error("responsibility must be 0 or 1/k, got '" + text + "'");
    return num == 0 ? zero() : inverse(den);
}

std::string Responsibility::fraction() const {
    return std::to_string(numerator()) + "/" + std::to_string(denominator());
}

std::string Responsibility::display() const {
    if (is_zero())
        return "0";
    if (denominator_ == 1)
        return "1";
    return "1/" + std::to_string(denominator_);
}

CausalAnalysis::CausalAnalysis(Instance instance, UCQ query)
    : instance_(std::move(instance)), query_(std::move(query)),
      support_(support_family(query_, instance_)),
      endogenous_support_(causekit::endogenous_support(support_, instance_)) {
    std::vector<VertexSet> edges;
    if (!endogenous_support_.is_vacuous())
        edges = endogenous_support_.sets();
    hypergraph_ = Hypergraph(instance_.endogenous(), std::move(edges));
}

void CausalAnalysis::require_endogenous_id(TupleId t) const {
    if (t >= instance_.size())
        throw Error("tuple id out of range");
    if (!instance_.is_endogenous(t))
        throw Error("tuple " + to_string(instance_.tuple(t)) + " is not endogenous");
}

TupleSet CausalAnalysis::causes() const {
    if (endogenous_support_.is_vacuous())
        return {};
    return endogenous_support_.base();
}

bool CausalAnalysis::is_cause(TupleId t) const {
    require_endogenous_id(t);
    return !endogenous_support_.is_vacuous() && sets::contains(causes(), t);
}

Responsibility CausalAnalysis::responsibility(TupleId t) const {
    require_endogenous_id(t);
    if (endogenous_support_.is_vacuous())
        return Responsibility::zero();
    auto size = min_minimal_hs_size_containing(hypergraph_, t);
    return size ? Responsibility::inverse(*size) : Responsibility::zero();
}

std::vector<TupleSet> CausalAnalysis::contingencies(TupleId t, const HittingSetBudget& budget) const {
    require_endogenous_id(t);
    if (!is_cause(t))
        return {};
    std::vector<TupleSet> out;
    for (auto& h : minimal_hitting_sets(hypergraph_, budget))
        if (sets::contains(h, t))
            out.push_back(sets::erase(std::move(h), t));
    std::sort(out.begin(), out.end());
    return out;
}

TupleSet CausalAnalysis::most_responsible() const {
    TupleSet best;
    Responsibility best_value;
    for (TupleId t : causes()) {
        const Responsibility r = responsibility(t);
        if (r > best_value) {
            best_value = r;
            best.clear();
        }
        if (r == best_value && !r.is_zero())
            best.push_back(t);
    }
    return best;
}

bool CausalAnalysis::decide_rpd(TupleId t, Responsibility v) const {
    require_endogenous_id(t);
    if (!holds())
        throw Error("the query is false in the instance; responsibility decision requires D |= q");
    if (endogenous_support_.is_vacuous())
        return false;
    if (v.is_zero())
        return is_cause(t);
    // ρ(t) > 1/k  ⟺  some S-minimal hitting set containing t has fewer than k members.
    const std::size_t k = v.denominator();
    return exists_minimal_hs_within(hypergraph_, k - 1, t);
}

bool CausalAnalysis::decide_mrcd(TupleId t) const {
    require_endogenous_id(t);
    const Responsibility r = responsibility(t);
    if (r.is_zero())
        return false;
    for (TupleId other : causes())
        if (responsibility(other) > r)
            return false;
    return true;
}

std::vector<CauseReport> CausalAnalysis::report(bool with_contingencies, const HittingSetBudget& budget) const {
    std::vector<CauseReport> out;
    std::vector<VertexSet> all_minimal;
    if (with_contingencies && !causes().empty())
        all_minimal = minimal_hitting_sets(hypergraph_, budget);
    for (TupleId t : instance_.endogenous()) {
        CauseReport r;
        r.tuple = t;
        r.responsibility = responsibility(t);
        r.is_cause = !r.responsibility.is_zero();
        if (with_contingencies) {
            std::vector<TupleSet> cts;
            if (r.is_cause)
                for (const auto& h : all_minimal)
                    if (sets::contains(h, t))
                        cts.push_back(sets::erase(h, t));
            std::sort(cts.begin(), cts.end());
            r.contingencies = std::move(cts);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<GroundTuple> actual_causes(const Instance& d, const UCQ& q) {
    CausalAnalysis analysis(d, q);
    return d.materialize(analysis.causes());
}

std::vector<std::vector<GroundTuple>> minimal_contingencies(const Instance& d, const UCQ& q, const GroundTuple& t) {
    const TupleId id = require_endogenous(d, t);
    CausalAnalysis analysis(d, q);
    std::vector<std::vector<GroundTuple>> out;
    for (const auto& gamma : analysis.contingencies(id))
        out.push_back(d.materialize(gamma));
    return out;
}

Responsibility responsibility(const Instance& d, const UCQ& q, const GroundTuple& t) {
    const TupleId id = require_endogenous(d, t);
    return CausalAnalysis(d, q).responsibility(id);
}

std::vector<GroundTuple> most_responsible(const Instance& d, const UCQ& q) {
    CausalAnalysis analysis(d, q);
    return d.materialize(analysis.most_responsible());
}

bool decide_rpd(const Instance& d, const UCQ& q, const GroundTuple& t, Responsibility v) {
    const TupleId id = require_endogenous(d, t);
    return CausalAnalysis(d, q).decide_rpd(id, v);
}

bool decide_mrcd(const Instance& d, const UCQ& q, const GroundTuple& t) {
    const TupleId id = require_endogenous(d, t);
    return CausalAnalysis(d, q).decide_mrcd(id);
}

bool is_minimal_contingency(const Instance& d, const UCQ& q, const GroundTuple& t,
                            const std::vector<GroundTuple>& gamma) {
    const TupleId tid = require_endogenous(d, t);
    TupleSet ids;
    for (const auto& g : gamma)
        ids.push_back(require_endogenous(d, g));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (sets::contains(ids, tid))
        return false;

    std::vector<bool> present(d.size(), true);
    for (TupleId g : ids)
        present[g] = false;
    if (!eval(q, d, present))
        return false;
    present[tid] = false;
    if (eval(q, d, present))
        return false;
    // Query monotonicity: checking Γ minus one element covers every proper subset.
    for (TupleId g : ids) {
        present[g] = true;
        const bool still_counterfactual_without_g = !eval(q, d, present);
        present[g] = false;
        if (still_counterfactual_without_g)
            return false;
    }
    return true;
}

GraphEncoding encode_graph(const Graph& g, std::size_t v) {
    const std::size_t n = g.vertices.size();
    if (v >= n)
        throw Error("vertex index out of range");
    if (std::set<std::string>(g.vertices.begin(), g.vertices.end()).size() != n)
        throw Error("graph vertex labels must be unique");

    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : g.edges) {
        if (a >= n || b >= n)
            throw Error("edge endpoint out of range");
        if (a == b)
            throw Error("self-loops are not supported");
        auto la = g.vertices[a];
        auto lb = g.vertices[b];
        if (lb < la)
            std::swap(la, lb);
        edges.emplace_back(std::move(la), std::move(lb));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("duplicate edge");

    const RelationName ver("Ver");
    const RelationName edge_rel("Edges");
    std::vector<GroundTuple> tuples;
    for (const auto& label : g.vertices)
        tuples.push_back({ver, {label}});
    std::size_t next_label = 1;
    for (const auto& [a, b] : edges)
        for (std::size_t copy = 0; copy < n; ++copy)
            tuples.push_back({edge_rel, {a, b, std::to_string(next_label++)}});

    Disjunct query({
        QueryAtom{ver, {Variable{"V1"}}},
        QueryAtom{ver, {Variable{"V2"}}},
        QueryAtom{edge_rel, {Variable{"V1"}, Variable{"V2"}, Variable{"E"}}},
    });
    return {Instance(std::move(tuples), {}), std::move(query), GroundTuple{ver, {g.vertices[v]}}};
}

} // namespace causekit
