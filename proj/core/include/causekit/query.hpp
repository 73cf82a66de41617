#pragma once

#include <causekit/model.hpp>

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace causekit {

struct Variable {
    std::string name;
    friend bool operator==(const Variable&, const Variable&) = default;
};

struct Constant {
    std::string value;
    friend bool operator==(const Constant&, const Constant&) = default;
};

using Term = std::variant<Variable, Constant>;

struct QueryAtom {
    RelationName relation;
    std::vector<Term> terms;

    std::size_t arity() const noexcept { return terms.size(); }
    friend bool operator==(const QueryAtom&, const QueryAtom&) = default;
};

/// A boolean conjunctive query: an existentially closed, nonempty conjunction.
class Disjunct {
public:
    explicit Disjunct(std::vector<QueryAtom> atoms);

    std::span<const QueryAtom> atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    /// Distinct variable names in order of first occurrence.
    std::vector<std::string> variables() const;

    friend bool operator==(const Disjunct&, const Disjunct&) = default;

private:
    std::vector<QueryAtom> atoms_;
};

/// Union of boolean conjunctive queries C_1 ∨ ... ∨ C_k.
class UCQ {
public:
    explicit UCQ(std::vector<Disjunct> disjuncts);

    std::span<const Disjunct> disjuncts() const noexcept { return disjuncts_; }
    std::size_t size() const noexcept { return disjuncts_.size(); }
    /// Largest atom count over the disjuncts, the bound d on support set size.
    std::size_t max_atoms() const noexcept;

    friend bool operator==(const UCQ&, const UCQ&) = default;

private:
    std::vector<Disjunct> disjuncts_;
};

/// Denial constraint `<- A_1, ..., A_n`, the negation of a BCQ.
class DenialConstraint {
public:
    explicit DenialConstraint(std::vector<QueryAtom> atoms);

    std::span<const QueryAtom> atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }

    friend bool operator==(const DenialConstraint&, const DenialConstraint&) = default;

private:
    std::vector<QueryAtom> atoms_;
};

using Program = std::variant<UCQ, std::vector<DenialConstraint>>;

/// Parses `q :- a, b.` rules (one UCQ) or `:- a, b.` constraints (a DC list).
Program parse_program(std::string_view text);

DenialConstraint bcq_to_dc(const Disjunct& q);
Disjunct dc_to_bcq(const DenialConstraint& dc);
/// The violation view V^Σ: one disjunct per constraint, in order.
UCQ dcs_to_ucq(std::span<const DenialConstraint> constraints);
std::vector<DenialConstraint> ucq_to_dcs(const UCQ& q);

/// Views either program form as a query / as constraints.
UCQ as_query(const Program& program);
std::vector<DenialConstraint> as_constraints(const Program& program);

std::string to_string(const Term& term);
std::string to_string(const QueryAtom& atom);
std::string to_string(const Disjunct& q);
std::string to_string(const UCQ& q);
std::string to_string(const DenialConstraint& dc);

} // namespace causekit
