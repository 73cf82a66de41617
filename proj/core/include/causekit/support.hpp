#pragma once

#include <causekit/model.hpp>
#include <causekit/query.hpp>

#include <vector>

namespace causekit {

/// A collection of S-minimal tuple sets over one instance: either the family
/// 𝔖(D) of minimal satisfying subsets or its endogenous projection 𝔖^n(D).
///
/// `vacuous` marks the case where the query already holds on exogenous tuples
/// alone. It is distinct from an empty family, which means the query is false.
class SupportFamily {
public:
    SupportFamily() = default;
    explicit SupportFamily(std::vector<TupleSet> sets);
    static SupportFamily vacuous();

    bool is_vacuous() const noexcept { return vacuous_; }
    /// True iff the family has no members and is not vacuous (query false).
    bool empty() const noexcept { return !vacuous_ && sets_.empty(); }
    const std::vector<TupleSet>& sets() const noexcept { return sets_; }
    std::size_t size() const noexcept { return sets_.size(); }

    /// Union of all members.
    TupleSet base() const;

    friend bool operator==(const SupportFamily&, const SupportFamily&) = default;

private:
    std::vector<TupleSet> sets_;
    bool vacuous_ = false;
};

/// D ⊨ q.
bool eval(const UCQ& q, const Instance& instance);
/// D' ⊨ q where D' holds the tuples whose `present` flag is set.
bool eval(const UCQ& q, const Instance& instance, const std::vector<bool>& present);

/// Tuple sets that are images of homomorphisms from `q` into the instance.
/// Not reduced: an image may contain another one.
std::vector<TupleSet> homomorphism_images(const Disjunct& q, const Instance& instance);

/// 𝔖(D).
SupportFamily support_family(const UCQ& q, const Instance& instance);
/// 𝔖^n(D).
SupportFamily endogenous_support(const UCQ& q, const Instance& instance);
/// 𝔖^n(D) from an already computed 𝔖(D).
SupportFamily endogenous_support(const SupportFamily& full, const Instance& instance);

/// Throws Error when a query atom disagrees with the instance on a relation's arity.
void check_compatible(const UCQ& q, const Instance& instance);

} // namespace causekit
