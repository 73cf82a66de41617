#include <causekit/causal.hpp>
#include <causekit/cqa.hpp>
#include <causekit/sets.hpp>

namespace causekit {

bool consistent_answer(const Instance& d, std::span<const DenialConstraint> constraints,
                       std::span<const GroundTuple> conjunction, Semantics semantics) {
    if (conjunction.empty())
        throw Error("a ground conjunction needs at least one atom");
    const CausalAnalysis analysis(d.all_endogenous(), dcs_to_ucq(constraints));
    const TupleSet excluded = semantics == Semantics::subset ? analysis.causes() : analysis.most_responsible();
    for (const auto& atom : conjunction) {
        auto id = d.find(atom);
        if (!id || sets::contains(excluded, *id))
            return false;
    }
    return true;
}

} // namespace causekit
