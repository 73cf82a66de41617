#include <causekit/causal.hpp>
#include <causekit/repair.hpp>
#include <causekit/sets.hpp>
#include <causekit/support.hpp>

#include <algorithm>

namespace causekit {

namespace {

std::vector<TupleSet> removal_sets(const Instance& all_endo, const UCQ& violations, Semantics semantics,
                                   const HittingSetBudget& budget) {
    const SupportFamily family = support_family(violations, all_endo);
    Hypergraph h(all_endo.endogenous(), family.sets());
    return semantics == Semantics::subset ? minimal_hitting_sets(h, budget) : minimum_hitting_sets(h, budget);
}

} // namespace

Semantics parse_semantics(std::string_view text) {
    if (text == "s" || text == "S" || text == "subset")
        return Semantics::subset;
    if (text == "c" || text == "C" || text == "cardinality")
        return Semantics::cardinality;
    throw Error("unknown semantics '" + std::string(text) + "' (expected s or c)");
}

const char* to_string(Semantics s) { return s == Semantics::subset ? "s" : "c"; }

std::vector<Repair> repairs(const Instance& d, std::span<const DenialConstraint> constraints, Semantics semantics,
                            const HittingSetBudget& budget) {
    const Instance all_endo = d.all_endogenous();
    TupleSet everything = all_endo.endogenous();
    std::vector<Repair> out;
    for (auto& removed : removal_sets(all_endo, dcs_to_ucq(constraints), semantics, budget)) {
        Repair r;
        r.kept = sets::set_difference(everything, removed);
        r.removed = std::move(removed);
        r.semantics = semantics;
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const Repair& a, const Repair& b) { return a.removed < b.removed; });
    return out;
}

std::vector<TupleSet> difference_sets(const Instance& d, const DenialConstraint& kappa, const GroundTuple& t,
                                      Semantics semantics) {
    const TupleId id = require_endogenous(d, t);
    std::vector<TupleSet> out;
    for (auto& r : repairs(d, std::span(&kappa, 1), semantics)) {
        if (!sets::contains(r.removed, id))
            continue;
        const bool all_endogenous =
            std::all_of(r.removed.begin(), r.removed.end(), [&](TupleId x) { return d.is_endogenous(x); });
        if (all_endogenous)
            out.push_back(std::move(r.removed));
    }
    return out;
}

bool is_s_repair(const Instance& d, std::span<const DenialConstraint> constraints,
                 std::span<const GroundTuple> candidate) {
    std::vector<bool> present(d.size(), false);
    for (const auto& t : candidate) {
        auto id = d.find(t);
        if (!id)
            throw Error("candidate tuple " + to_string(t) + " is not in the instance");
        present[*id] = true;
    }
    const UCQ violations = dcs_to_ucq(constraints);
    // Violations are witnessed by members of 𝔖(D); D' ⊆ D is consistent iff it
    // contains none of them.
    const SupportFamily family = support_family(violations, d);
    auto violated = [&](const std::vector<bool>& mask) {
        return std::any_of(family.sets().begin(), family.sets().end(), [&](const TupleSet& s) {
            return std::all_of(s.begin(), s.end(), [&](TupleId x) { return mask[x]; });
        });
    };
    if (violated(present))
        return false;
    for (TupleId id = 0; id < d.size(); ++id) {
        if (present[id])
            continue;
        present[id] = true;
        const bool breaks = violated(present);
        present[id] = false;
        if (!breaks)
            return false;
    }
    return true;
}

bool repair_size_at_least(const Instance& d, const DenialConstraint& kappa, const GroundTuple& t, std::size_t m) {
    const TupleId id = require_tuple(d, t);
    const std::size_t n = d.size();
    if (m > n)
        throw Error("bound m = " + std::to_string(m) + " exceeds |D| = " + std::to_string(n));
    CausalAnalysis analysis(d.all_endogenous(), dcs_to_ucq(std::span(&kappa, 1)));
    auto smallest = min_minimal_hs_size_containing(analysis.hypergraph(), id);
    return smallest && n - *smallest >= m;
}

} // namespace causekit
