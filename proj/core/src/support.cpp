#include <causekit/sets.hpp>
#include <causekit/support.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace causekit {

namespace {

// A disjunct compiled against one instance: atoms in join order, terms
// resolved to variable slots or constants.
struct CompiledAtom {
    TupleId lo = 0;
    TupleId hi = 0;
    std::vector<int> slot;                 // variable slot, or -1 for a constant
    std::vector<const std::string*> value; // constant value when slot == -1
};

struct CompiledQuery {
    std::vector<CompiledAtom> atoms;
    std::size_t variable_count = 0;
    bool unsatisfiable = false;
};

CompiledQuery compile(const Disjunct& q, const Instance& instance) {
    CompiledQuery out;
    std::map<std::string, int> slots;
    std::vector<CompiledAtom> atoms;
    for (const auto& atom : q.atoms()) {
        CompiledAtom c;
        std::tie(c.lo, c.hi) = instance.extension(atom.relation);
        if (c.lo == c.hi || instance.tuple(c.lo).arity() != atom.arity())
            out.unsatisfiable = true;
        for (const auto& term : atom.terms) {
            if (const auto* v = std::get_if<Variable>(&term)) {
                auto [it, inserted] = slots.emplace(v->name, static_cast<int>(slots.size()));
                c.slot.push_back(it->second);
                c.value.push_back(nullptr);
            } else {
                c.slot.push_back(-1);
                c.value.push_back(&std::get<Constant>(term).value);
            }
        }
        atoms.push_back(std::move(c));
    }
    // Join order: smallest extension first. Stable, so ties keep query order.
    std::vector<std::size_t> order(atoms.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return atoms[a].hi - atoms[a].lo < atoms[b].hi - atoms[b].lo;
    });
    for (std::size_t i : order)
        out.atoms.push_back(std::move(atoms[i]));
    out.variable_count = slots.size();
    return out;
}

// Backtracking homomorphism search. `visit` receives the tuple ids matched
// per atom and returns false to stop the search.
template <class Visit>
class Matcher {
public:
    Matcher(const CompiledQuery& q, const Instance& instance, const std::vector<bool>* present, Visit& visit)
        : q_(q), instance_(instance), present_(present), visit_(visit),
          binding_(q.variable_count, nullptr), matched_(q.atoms.size()) {}

    // Returns false if the visitor stopped the search.
    bool run() { return q_.unsatisfiable || search(0); }

private:
    bool search(std::size_t depth) {
        if (depth == q_.atoms.size())
            return visit_(matched_);
        const CompiledAtom& atom = q_.atoms[depth];
        std::vector<int> bound_here;
        for (TupleId id = atom.lo; id < atom.hi; ++id) {
            if (present_ && !(*present_)[id])
                continue;
            const auto& args = instance_.tuple(id).args;
            bool ok = true;
            bound_here.clear();
            for (std::size_t i = 0; i < args.size() && ok; ++i) {
                const int slot = atom.slot[i];
                if (slot < 0) {
                    ok = *atom.value[i] == args[i];
                } else if (binding_[slot]) {
                    ok = *binding_[slot] == args[i];
                } else {
                    binding_[slot] = &args[i];
                    bound_here.push_back(slot);
                }
            }
            if (ok) {
                matched_[depth] = id;
                if (!search(depth + 1)) {
                    unbind(bound_here);
                    return false;
                }
            }
            unbind(bound_here);
        }
        return true;
    }

    void unbind(const std::vector<int>& slots) {
        for (int s : slots)
            binding_[s] = nullptr;
    }

    const CompiledQuery& q_;
    const Instance& instance_;
    const std::vector<bool>* present_;
    Visit& visit_;
    std::vector<const std::string*> binding_;
    std::vector<TupleId> matched_;
};

bool eval_impl(const UCQ& q, const Instance& instance, const std::vector<bool>* present) {
    for (const auto& disjunct : q.disjuncts()) {
        CompiledQuery compiled = compile(disjunct, instance);
        bool found = false;
        auto stop_at_first = [&](const std::vector<TupleId>&) {
            found = true;
            return false;
        };
        Matcher<decltype(stop_at_first)>(compiled, instance, present, stop_at_first).run();
        if (found)
            return true;
    }
    return false;
}

} // namespace

SupportFamily::SupportFamily(std::vector<TupleSet> sets) : sets_(sets::minimal_members(std::move(sets))) {}

SupportFamily SupportFamily::vacuous() {
    SupportFamily f;
    f.vacuous_ = true;
    return f;
}

TupleSet SupportFamily::base() const {
    TupleSet out;
    for (const auto& s : sets_)
        out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool eval(const UCQ& q, const Instance& instance) { return eval_impl(q, instance, nullptr); }

bool eval(const UCQ& q, const Instance& instance, const std::vector<bool>& present) {
    if (present.size() != instance.size())
        throw Error("presence mask does not match the instance size");
    return eval_impl(q, instance, &present);
}

std::vector<TupleSet> homomorphism_images(const Disjunct& q, const Instance& instance) {
    CompiledQuery compiled = compile(q, instance);
    std::vector<TupleSet> images;
    auto collect = [&](const std::vector<TupleId>& matched) {
        TupleSet image(matched);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        images.push_back(std::move(image));
        return true;
    };
    Matcher<decltype(collect)>(compiled, instance, nullptr, collect).run();
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return images;
}

SupportFamily support_family(const UCQ& q, const Instance& instance) {
    std::vector<TupleSet> all;
    for (const auto& disjunct : q.disjuncts()) {
        auto images = homomorphism_images(disjunct, instance);
        all.insert(all.end(), std::make_move_iterator(images.begin()), std::make_move_iterator(images.end()));
    }
    return SupportFamily(std::move(all));
}

SupportFamily endogenous_support(const SupportFamily& full, const Instance& instance) {
    if (full.is_vacuous())
        return full;
    std::vector<TupleSet> projected;
    projected.reserve(full.size());
    for (const auto& s : full.sets()) {
        TupleSet p;
        for (TupleId id : s)
            if (instance.is_endogenous(id))
                p.push_back(id);
        if (p.empty())
            return SupportFamily::vacuous();
        projected.push_back(std::move(p));
    }
    return SupportFamily(std::move(projected));
}

SupportFamily endogenous_support(const UCQ& q, const Instance& instance) {
    return endogenous_support(support_family(q, instance), instance);
}

void check_compatible(const UCQ& q, const Instance& instance) {
    for (const auto& disjunct : q.disjuncts())
        for (const auto& atom : disjunct.atoms())
            if (auto arity = instance.arity(atom.relation); arity && *arity != atom.arity())
                throw Error("query atom " + to_string(atom) + " has arity " + std::to_string(atom.arity()) +
                            " but relation '" + atom.relation.spelling() + "' has arity " +
                            std::to_string(*arity) + " in the instance");
}

} // namespace causekit
