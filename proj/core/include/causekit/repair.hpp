#pragma once

#include <causekit/hitset.hpp>
#include <causekit/model.hpp>
#include <causekit/query.hpp>

#include <span>
#include <string_view>
#include <vector>

namespace causekit {

/// Repair (or diagnosis) minimality: S = subset-minimal, C = cardinality-minimal.
enum class Semantics { subset, cardinality };

Semantics parse_semantics(std::string_view text);
const char* to_string(Semantics s);

/// A consistent sub-instance D' ⊆ D, obtained by deleting `removed`.
/// Ids refer to the instance the repair was computed from.
struct Repair {
    TupleSet kept;
    TupleSet removed;
    Semantics semantics = Semantics::subset;

    friend bool operator==(const Repair&, const Repair&) = default;
};

/// S- or C-repairs of D wrt. Σ, computed as complements of the minimal
/// (minimum) hitting sets of 𝔖(D) for the violation view V^Σ with every
/// tuple endogenous. Sorted by removed set.
std::vector<Repair> repairs(const Instance& d, std::span<const DenialConstraint> constraints, Semantics semantics,
                            const HittingSetBudget& budget = {});

/// 𝒟ℱ^s / 𝒟ℱ^c: removed sets D ∖ D' of repairs with t ∈ D ∖ D' ⊆ D^n.
std::vector<TupleSet> difference_sets(const Instance& d, const DenialConstraint& kappa, const GroundTuple& t,
                                      Semantics semantics);

/// D' ⊨ Σ and adding back any removed tuple violates Σ. Throws Error if
/// `candidate` is not a subset of D.
bool is_s_repair(const Instance& d, std::span<const DenialConstraint> constraints,
                 std::span<const GroundTuple> candidate);

/// RepSize: is there an S-repair D' with |D'| ≥ m and t ∉ D'? D is taken
/// all-endogenous; requires t ∈ D and m ≤ |D|.
bool repair_size_at_least(const Instance& d, const DenialConstraint& kappa, const GroundTuple& t, std::size_t m);

} // namespace causekit
