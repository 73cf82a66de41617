#pragma once

#include <causekit/error.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace causekit {

/// Relation identifier. Names compare case-insensitively (by their lower-case
/// key) but remember the spelling they were first written with.
class RelationName {
public:
    RelationName() = default;
    explicit RelationName(std::string spelling);

    const std::string& key() const noexcept { return key_; }
    const std::string& spelling() const noexcept { return spelling_; }

    friend bool operator==(const RelationName& a, const RelationName& b) noexcept {
        return a.key_ == b.key_;
    }
    friend std::strong_ordering operator<=>(const RelationName& a, const RelationName& b) noexcept {
        return a.key_ <=> b.key_;
    }

private:
    std::string key_;
    std::string spelling_;
};

/// A ground atom `rel(c1,...,ck)`. Constants are opaque symbols.
///
/// The defaulted ordering is the canonical order used for every serialized
/// output: relation name first, then arguments left to right.
struct GroundTuple {
    RelationName relation;
    std::vector<std::string> args;

    std::size_t arity() const noexcept { return args.size(); }

    friend bool operator==(const GroundTuple&, const GroundTuple&) = default;
    friend std::strong_ordering operator<=>(const GroundTuple&, const GroundTuple&) = default;
};

/// Index of a tuple inside an Instance. Ids follow canonical order, so
/// sorting ids sorts tuples.
using TupleId = std::uint32_t;

/// Sorted, duplicate-free list of tuple ids.
using TupleSet = std::vector<TupleId>;

/// A finite relational instance D = D^n ∪ D^x. Immutable once built.
class Instance {
public:
    Instance() = default;

    /// Duplicates are collapsed. Throws Error when a tuple occurs in both
    /// partitions or a relation is used with two arities.
    Instance(std::vector<GroundTuple> endogenous, std::vector<GroundTuple> exogenous);

    std::size_t size() const noexcept { return tuples_.size(); }
    bool empty() const noexcept { return tuples_.empty(); }

    const GroundTuple& tuple(TupleId id) const { return tuples_.at(id); }
    std::span<const GroundTuple> tuples() const noexcept { return tuples_; }

    bool is_endogenous(TupleId id) const { return endogenous_.at(id); }
    std::optional<TupleId> find(const GroundTuple& t) const;

    TupleSet endogenous() const;
    TupleSet exogenous() const;
    std::size_t endogenous_count() const noexcept { return endogenous_count_; }
    std::size_t exogenous_count() const noexcept { return tuples_.size() - endogenous_count_; }

    /// Ids of the tuples of one relation; contiguous because of canonical order.
    std::pair<TupleId, TupleId> extension(const RelationName& relation) const;
    std::optional<std::size_t> arity(const RelationName& relation) const;
    std::vector<RelationName> relations() const;

    /// Same tuples (and ids), every tuple endogenous.
    Instance all_endogenous() const;

    /// The sub-instance made of `keep`, with partitions preserved. Ids of the
    /// result are renumbered.
    Instance restrict_to(const TupleSet& keep) const;

    std::vector<GroundTuple> materialize(const TupleSet& ids) const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.tuples_ == b.tuples_ && a.endogenous_ == b.endogenous_;
    }

private:
    std::vector<GroundTuple> tuples_;
    std::vector<bool> endogenous_;
    std::size_t endogenous_count_ = 0;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

/// Facts in file order, no section headers; used for ground conjunctions.
std::vector<GroundTuple> parse_facts(std::string_view text);

/// A single fact without the trailing period, e.g. `s(a3)`.
GroundTuple parse_tuple(std::string_view text);

std::vector<GroundTuple> canonical_sort(std::vector<GroundTuple> tuples);

std::string to_string(const GroundTuple& t);
std::string format_symbol(std::string_view symbol);

/// Looks `t` up in `instance`, throwing Error if absent.
TupleId require_tuple(const Instance& instance, const GroundTuple& t);
/// As require_tuple, additionally requiring t ∈ D^n.
TupleId require_endogenous(const Instance& instance, const GroundTuple& t);

} // namespace causekit
