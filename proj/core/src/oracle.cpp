#include <causekit/oracle.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace causekit::oracle {

namespace {

using Mask = std::uint32_t;

bool match_atoms(std::span<const QueryAtom> atoms, std::size_t next, std::span<const GroundTuple> tuples,
                 std::map<std::string, std::string>& binding) {
    if (next == atoms.size())
        return true;
    const QueryAtom& atom = atoms[next];
    for (const auto& t : tuples) {
        if (t.relation != atom.relation || t.args.size() != atom.terms.size())
            continue;
        auto saved = binding;
        bool ok = true;
        for (std::size_t i = 0; i < t.args.size() && ok; ++i) {
            if (const auto* c = std::get_if<Constant>(&atom.terms[i])) {
                ok = c->value == t.args[i];
            } else {
                const auto& name = std::get<Variable>(atom.terms[i]).name;
                auto [it, inserted] = binding.emplace(name, t.args[i]);
                ok = inserted || it->second == t.args[i];
            }
        }
        if (ok && match_atoms(atoms, next + 1, tuples, binding))
            return true;
        binding = std::move(saved);
    }
    return false;
}

void check_limit(std::size_t n, const Limits& limits) {
    if (n > limits.max_endogenous || n >= 31)
        throw ResourceLimitError("oracle refuses to enumerate 2^" + std::to_string(n) + " subsets (cap is " +
                                 std::to_string(limits.max_endogenous) + ")");
}

// truth[removed] = (D ∖ removed ⊨ q), removed ranging over subsets of D^n.
struct RemovalTable {
    TupleList endogenous;
    TupleList exogenous;
    std::vector<bool> truth;

    RemovalTable(const Instance& d, const UCQ& q, const Limits& limits) {
        for (TupleId id = 0; id < d.size(); ++id)
            (d.is_endogenous(id) ? endogenous : exogenous).push_back(d.tuple(id));
        check_limit(endogenous.size(), limits);
        const Mask subsets = Mask{1} << endogenous.size();
        truth.resize(subsets);
        TupleList remaining;
        for (Mask removed = 0; removed < subsets; ++removed) {
            remaining = exogenous;
            for (std::size_t i = 0; i < endogenous.size(); ++i)
                if (!(removed >> i & 1))
                    remaining.push_back(endogenous[i]);
            truth[removed] = holds(q, remaining);
        }
    }

    std::size_t index_of(const GroundTuple& t) const {
        auto it = std::find(endogenous.begin(), endogenous.end(), t);
        if (it == endogenous.end())
            throw Error("tuple " + to_string(t) + " is not endogenous");
        return static_cast<std::size_t>(it - endogenous.begin());
    }

    // Γ is a contingency for t: D∖Γ ⊨ q, D∖(Γ∪{t}) ⊭ q.
    bool contingency(Mask gamma, Mask t_bit) const {
        return !(gamma & t_bit) && truth[gamma] && !truth[gamma | t_bit];
    }

    TupleList members(Mask m) const {
        TupleList out;
        for (std::size_t i = 0; i < endogenous.size(); ++i)
            if (m >> i & 1)
                out.push_back(endogenous[i]);
        std::sort(out.begin(), out.end());
        return out;
    }
};

} // namespace

bool holds(const UCQ& q, std::span<const GroundTuple> tuples) {
    for (const auto& disjunct : q.disjuncts()) {
        std::map<std::string, std::string> binding;
        if (match_atoms(disjunct.atoms(), 0, tuples, binding))
            return true;
    }
    return false;
}

TupleList causes(const Instance& d, const UCQ& q, const Limits& limits) {
    RemovalTable table(d, q, limits);
    const Mask subsets = Mask{1} << table.endogenous.size();
    TupleList out;
    for (std::size_t i = 0; i < table.endogenous.size(); ++i) {
        const Mask t_bit = Mask{1} << i;
        for (Mask gamma = 0; gamma < subsets; ++gamma)
            if (table.contingency(gamma, t_bit)) {
                out.push_back(table.endogenous[i]);
                break;
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Responsibility responsibility(const Instance& d, const UCQ& q, const GroundTuple& t, const Limits& limits) {
    RemovalTable table(d, q, limits);
    const Mask t_bit = Mask{1} << table.index_of(t);
    const Mask subsets = Mask{1} << table.endogenous.size();
    std::optional<std::size_t> smallest;
    for (Mask gamma = 0; gamma < subsets; ++gamma)
        if (table.contingency(gamma, t_bit)) {
            const std::size_t size = static_cast<std::size_t>(std::popcount(gamma));
            if (!smallest || size < *smallest)
                smallest = size;
        }
    return smallest ? Responsibility::inverse(*smallest + 1) : Responsibility::zero();
}

std::vector<TupleList> contingencies(const Instance& d, const UCQ& q, const GroundTuple& t, const Limits& limits) {
    RemovalTable table(d, q, limits);
    const Mask t_bit = Mask{1} << table.index_of(t);
    const Mask subsets = Mask{1} << table.endogenous.size();
    std::vector<TupleList> out;
    for (Mask gamma = 0; gamma < subsets; ++gamma) {
        if (!table.contingency(gamma, t_bit))
            continue;
        // Every proper subset Γ'' must still satisfy D ∖ (Γ'' ∪ {t}) ⊨ q.
        bool minimal = true;
        for (Mask sub = (gamma - 1) & gamma;; sub = (sub - 1) & gamma) {
            if (!table.truth[sub | t_bit]) {
                minimal = false;
                break;
            }
            if (sub == 0)
                break;
        }
        if (gamma == 0)
            minimal = true;
        if (minimal)
            out.push_back(table.members(gamma));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RepairSets> repairs(const Instance& d, std::span<const DenialConstraint> constraints,
                                Semantics semantics, const Limits& limits) {
    const UCQ violations = dcs_to_ucq(constraints);
    const auto all = d.tuples();
    const std::size_t n = all.size();
    check_limit(n, limits);
    const Mask subsets = Mask{1} << n;

    std::vector<bool> consistent(subsets);
    TupleList kept;
    for (Mask m = 0; m < subsets; ++m) {
        kept.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1)
                kept.push_back(all[i]);
        consistent[m] = !holds(violations, kept);
    }

    std::vector<Mask> chosen;
    if (semantics == Semantics::subset) {
        // Subsets of consistent sets are consistent, so maximality only needs
        // single-tuple extensions.
        for (Mask m = 0; m < subsets; ++m) {
            if (!consistent[m])
                continue;
            bool maximal = true;
            for (std::size_t i = 0; i < n && maximal; ++i)
                if (!(m >> i & 1) && consistent[m | (Mask{1} << i)])
                    maximal = false;
            if (maximal)
                chosen.push_back(m);
        }
    } else {
        int best = -1;
        for (Mask m = 0; m < subsets; ++m)
            if (consistent[m])
                best = std::max(best, std::popcount(m));
        for (Mask m = 0; m < subsets; ++m)
            if (consistent[m] && std::popcount(m) == best)
                chosen.push_back(m);
    }

    std::vector<RepairSets> out;
    for (Mask m : chosen) {
        RepairSets r;
        for (std::size_t i = 0; i < n; ++i)
            ((m >> i & 1) ? r.kept : r.removed).push_back(all[i]);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const RepairSets& a, const RepairSets& b) { return a.removed < b.removed; });
    return out;
}

std::optional<std::size_t> min_hs_containing(const std::vector<TupleList>& family, const GroundTuple& t,
                                             const Limits& limits) {
    TupleList universe;
    for (const auto& s : family)
        universe.insert(universe.end(), s.begin(), s.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    auto pos = std::find(universe.begin(), universe.end(), t);
    if (pos == universe.end())
        return std::nullopt;
    check_limit(universe.size(), limits);

    std::vector<Mask> member_masks;
    for (const auto& s : family) {
        Mask m = 0;
        for (const auto& x : s)
            m |= Mask{1} << (std::find(universe.begin(), universe.end(), x) - universe.begin());
        member_masks.push_back(m);
    }
    const Mask t_bit = Mask{1} << (pos - universe.begin());
    std::optional<std::size_t> best;
    for (Mask m = 0; m < (Mask{1} << universe.size()); ++m) {
        if (!(m & t_bit))
            continue;
        if (std::all_of(member_masks.begin(), member_masks.end(), [&](Mask s) { return (s & m) != 0; })) {
            const auto size = static_cast<std::size_t>(std::popcount(m));
            if (!best || size < *best)
                best = size;
        }
    }
    return best;
}

} // namespace causekit::oracle
