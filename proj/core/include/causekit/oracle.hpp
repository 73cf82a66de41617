#pragma once

#include <causekit/causal.hpp>
#include <causekit/model.hpp>
#include <causekit/query.hpp>
#include <causekit/repair.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

/// Brute-force reference implementations that apply the definitions of
/// cause, contingency set, responsibility and repair literally, by subset
/// enumeration. Shares no evaluation or search code with the library paths
/// it is used to check.
namespace causekit::oracle {

struct Limits {
    /// Largest endogenous set (all of D for repairs) that may be enumerated.
    std::size_t max_endogenous = 14;
};

using TupleList = std::vector<GroundTuple>;

/// Naive query evaluation over an explicit tuple list.
bool holds(const UCQ& q, std::span<const GroundTuple> tuples);

TupleList causes(const Instance& d, const UCQ& q, const Limits& limits = {});
Responsibility responsibility(const Instance& d, const UCQ& q, const GroundTuple& t, const Limits& limits = {});
std::vector<TupleList> contingencies(const Instance& d, const UCQ& q, const GroundTuple& t,
                                     const Limits& limits = {});

struct RepairSets {
    TupleList kept;
    TupleList removed;
    friend bool operator==(const RepairSets&, const RepairSets&) = default;
};

/// Maximal (S) or maximum (C) consistent subsets of D, sorted by removed set.
std::vector<RepairSets> repairs(const Instance& d, std::span<const DenialConstraint> constraints,
                                Semantics semantics, const Limits& limits = {});

/// Minimum hitting set of `family` containing `t`, by subset enumeration of
/// the family's union; nullopt when no member contains `t`.
std::optional<std::size_t> min_hs_containing(const std::vector<TupleList>& family, const GroundTuple& t,
                                             const Limits& limits = {});

} // namespace causekit::oracle
