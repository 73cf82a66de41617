#pragma once

#include <causekit/hitset.hpp>
#include <causekit/model.hpp>
#include <causekit/query.hpp>
#include <causekit/repair.hpp>
#include <causekit/support.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace causekit {

/// Consistency-based diagnosis problem M = (SD, D^n, Q): the observation Q is
/// true, yet SD asserts κ(Q) under the assumption that no tuple is abnormal.
struct DiagnosisProblem {
    Instance instance;
    Disjunct observation;
    /// Rendered FO system description, for inspection only.
    std::string sd_text;
};

DiagnosisProblem build_diagnosis_problem(const Instance& d, const Disjunct& q);

/// The system description as ASCII text: completion and unique-names axioms,
/// κ(Q)^Ab, inclusion dependencies, and normality defaults.
std::string render_theory(const Instance& d, const Disjunct& q);

/// S-minimal conflict sets; equal to 𝔖^n(D) for the observation.
SupportFamily conflict_sets(const DiagnosisProblem& m);

/// S-minimal diagnoses (hitting sets of the conflict sets), restricted to
/// those containing `t` when given; with `cardinality`, only the smallest of
/// those. A vacuous conflict family admits no diagnosis.
std::vector<TupleSet> diagnoses(const DiagnosisProblem& m, const std::optional<GroundTuple>& t, Semantics minimality,
                                const HittingSetBudget& budget = {});

/// Repairs D ∖ Δ for the minimal diagnoses Δ of the all-endogenous problem
/// over V^Σ. Requires every tuple of D to be endogenous.
std::vector<Repair> repairs_from_diagnoses(const Instance& d, std::span<const DenialConstraint> constraints,
                                           Semantics minimality, const HittingSetBudget& budget = {});

} // namespace causekit
