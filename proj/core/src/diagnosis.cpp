#include <causekit/diagnosis.hpp>
#include <causekit/sets.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace causekit {

namespace {

std::vector<std::string> completion_variables(std::size_t arity) {
    static const char* short_names[] = {"x", "y", "z"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arity; ++i)
        out.push_back(arity <= 3 ? short_names[i] : "x" + std::to_string(i + 1));
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::string atom_text(const std::string& predicate, const std::vector<std::string>& args) {
    return predicate + "(" + join(args, ",") + ")";
}

// forall x y (P(x,y) <-> x = a /\ y = b \/ ...)
std::string completion_axiom(const std::string& predicate, std::size_t arity,
                             const std::vector<const GroundTuple*>& extension) {
    const auto vars = completion_variables(arity);
    std::string rhs;
    if (extension.empty()) {
        rhs = "false";
    } else {
        std::vector<std::string> disjuncts;
        for (const GroundTuple* t : extension) {
            std::vector<std::string> eqs;
            for (std::size_t i = 0; i < arity; ++i)
                eqs.push_back(vars[i] + " = " + format_symbol(t->args[i]));
            std::string conj = join(eqs, " /\\ ");
            if (arity > 1 && extension.size() > 1)
                conj = "(" + conj + ")";
            disjuncts.push_back(std::move(conj));
        }
        rhs = join(disjuncts, " \\/ ");
    }
    return "forall " + join(vars, " ") + " (" + atom_text(predicate, vars) + " <-> " + rhs + ")";
}

std::string implication(const std::string& from, const std::string& to, std::size_t arity) {
    const auto vars = completion_variables(arity);
    return "forall " + join(vars, " ") + " (" + atom_text(from, vars) + " -> " +
           (to == "false" ? to : atom_text(to, vars)) + ")";
}

struct SchemaEntry {
    std::string spelling;
    std::size_t arity;
};

std::map<std::string, SchemaEntry> schema_of(const Instance& d, const Disjunct& q) {
    std::map<std::string, SchemaEntry> schema;
    for (const auto& r : d.relations())
        schema.emplace(r.key(), SchemaEntry{r.spelling(), *d.arity(r)});
    for (const auto& atom : q.atoms())
        schema.emplace(atom.relation.key(), SchemaEntry{atom.relation.spelling(), atom.arity()});
    return schema;
}

std::vector<TupleSet> diagnose(const Instance& d, const SupportFamily& conflicts, const std::optional<TupleId>& t,
                               Semantics minimality, const HittingSetBudget& budget) {
    if (conflicts.is_vacuous())
        return {};
    Hypergraph h(d.endogenous(), conflicts.sets());
    std::vector<TupleSet> out;
    for (auto& delta : minimal_hitting_sets(h, budget))
        if (!t || sets::contains(delta, *t))
            out.push_back(std::move(delta));
    if (minimality == Semantics::cardinality && !out.empty()) {
        const std::size_t smallest =
            std::min_element(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); })
                ->size();
        std::erase_if(out, [&](const TupleSet& s) { return s.size() != smallest; });
    }
    return out;
}

} // namespace

std::string render_theory(const Instance& d, const Disjunct& q) {
    const auto schema = schema_of(d, q);
    std::string out;
    auto line = [&](const std::string& s) { out += s + "\n"; };

    line("(a) Predicate completion axioms:");
    for (bool endogenous_only : {false, true}) {
        for (const auto& [key, entry] : schema) {
            std::vector<const GroundTuple*> extension;
            const auto [lo, hi] = d.extension(RelationName(key));
            for (TupleId id = lo; id < hi; ++id)
                if (!endogenous_only || d.is_endogenous(id))
                    extension.push_back(&d.tuple(id));
            const std::string predicate = endogenous_only ? "End_" + entry.spelling : entry.spelling;
            line(completion_axiom(predicate, entry.arity, extension));
        }
    }

    line("Unique names assumption:");
    std::set<std::string> constants;
    for (const auto& t : d.tuples())
        constants.insert(t.args.begin(), t.args.end());
    for (auto a = constants.begin(); a != constants.end(); ++a)
        for (auto b = std::next(a); b != constants.end(); ++b)
            line(format_symbol(*a) + " != " + format_symbol(*b));

    line("(b) kappa(Q)^Ab:");
    std::vector<std::string> conjuncts;
    for (const auto& atom : q.atoms()) {
        std::vector<std::string> args;
        for (const auto& term : atom.terms)
            args.push_back(to_string(term));
        const std::string& p = atom.relation.spelling();
        conjuncts.push_back(atom_text(p, args));
        conjuncts.push_back(atom_text("End_" + p, args));
        conjuncts.push_back("~" + atom_text("Ab_" + p, args));
    }
    const auto vars = q.variables();
    line((vars.empty() ? std::string() : "forall " + join(vars, " ") + " ") + "~(" + join(conjuncts, " /\\ ") + ")");

    line("(c) Inclusion dependencies:");
    for (const auto& [key, entry] : schema)
        line(implication("Ab_" + entry.spelling, entry.spelling, entry.arity));
    for (const auto& [key, entry] : schema)
        line(implication("End_" + entry.spelling, entry.spelling, entry.arity));
    for (const auto& [key, entry] : schema)
        line(implication("Ab_" + entry.spelling, "End_" + entry.spelling, entry.arity));

    line("Defaults (normality assumptions):");
    for (const auto& [key, entry] : schema)
        line(implication("Ab_" + entry.spelling, "false", entry.arity));
    return out;
}

DiagnosisProblem build_diagnosis_problem(const Instance& d, const Disjunct& q) {
    return DiagnosisProblem{d, q, render_theory(d, q)};
}

SupportFamily conflict_sets(const DiagnosisProblem& m) {
    return endogenous_support(UCQ({m.observation}), m.instance);
}

std::vector<TupleSet> diagnoses(const DiagnosisProblem& m, const std::optional<GroundTuple>& t, Semantics minimality,
                                const HittingSetBudget& budget) {
    std::optional<TupleId> id;
    if (t)
        id = require_endogenous(m.instance, *t);
    return diagnose(m.instance, conflict_sets(m), id, minimality, budget);
}

std::vector<Repair> repairs_from_diagnoses(const Instance& d, std::span<const DenialConstraint> constraints,
                                           Semantics minimality, const HittingSetBudget& budget) {
    if (d.exogenous_count() != 0)
        throw Error("repairs from diagnoses require an instance with only endogenous tuples");
    const SupportFamily conflicts = endogenous_support(dcs_to_ucq(constraints), d);
    const TupleSet everything = d.endogenous();
    std::vector<Repair> out;
    for (auto& delta : diagnose(d, conflicts, std::nullopt, minimality, budget))
        out.push_back(Repair{sets::set_difference(everything, delta), std::move(delta), minimality});
    std::sort(out.begin(), out.end(), [](const Repair& a, const Repair& b) { return a.removed < b.removed; });
    return out;
}

} // namespace causekit
