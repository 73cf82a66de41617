#pragma once

#include <causekit/model.hpp>
#include <causekit/query.hpp>
#include <causekit/repair.hpp>

#include <span>
#include <vector>

namespace causekit {

/// Is the ground conjunction P_1(c_1) ∧ ... ∧ P_k(c_k) true in every S-repair
/// (C-repair) of D wrt. Σ? Decided through causes for V^Σ: every atom must be
/// in D and not be an actual (most responsible) cause. D is taken
/// all-endogenous. Throws Error for an empty conjunction.
bool consistent_answer(const Instance& d, std::span<const DenialConstraint> constraints,
                       std::span<const GroundTuple> conjunction, Semantics semantics);

} // namespace causekit
