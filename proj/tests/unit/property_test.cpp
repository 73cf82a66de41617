#include "fixtures.hpp"
#include "oracle_check.hpp"
#include "random.hpp"

#include <causekit/sets.hpp>

#include <doctest.h>

using namespace causekit;
using namespace causekit::testing;

namespace {

constexpr int rounds = 120;

void report(const Comparison& c) {
    for (const auto& m : c.mismatches)
        FAIL_CHECK(m);
}

} // namespace

TEST_CASE("production causality matches the oracle") {
    std::mt19937_64 rng(11);
    Comparison c;
    for (int i = 0; i < rounds; ++i) {
        const auto rc = random_case(rng);
        compare_causality(rc.instance, rc.query, c);
        compare_fpt(rc.instance, rc.query, c);
    }
    report(c);
    CHECK(c.checks > 1000);
}

TEST_CASE("production repairs match the oracle") {
    std::mt19937_64 rng(12);
    Comparison c;
    for (int i = 0; i < rounds; ++i) {
        const auto rc = random_case(rng);
        compare_repairs(rc.instance, rc.query, c, {.max_endogenous = 16});
    }
    report(c);
}

TEST_CASE("support families are antichains of locally minimal witnesses") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < rounds; ++i) {
        const auto rc = random_case(rng);
        const auto& d = rc.instance;
        const auto f = support_family(rc.query, d);
        CHECK(eval(rc.query, d) == !f.empty());
        for (const auto& family : {f, endogenous_support(rc.query, d)})
            for (const auto& a : family.sets())
                for (const auto& b : family.sets())
                    if (a != b)
                        CHECK_FALSE(sets::is_subset(a, b));
        for (const auto& s : f.sets()) {
            CHECK(s.size() <= rc.query.max_atoms());
            std::vector<bool> present(d.size(), false);
            for (TupleId x : s)
                present[x] = true;
            CHECK(eval(rc.query, d, present));
            for (TupleId x : s) {
                present[x] = false;
                CHECK_FALSE(eval(rc.query, d, present));
                present[x] = true;
            }
        }
        // Monotonicity: a superset instance keeps the query true.
        if (eval(rc.query, d)) {
            auto extra = random_case(rng).instance;
            std::vector<GroundTuple> endo(d.tuples().begin(), d.tuples().end());
            for (const auto& t : extra.tuples())
                if (!d.arity(t.relation) || *d.arity(t.relation) == t.arity())
                    endo.push_back(t);
            CHECK(eval(rc.query, Instance(endo, {})));
        }
    }
}

TEST_CASE("causes never shrink when exogenous tuples become endogenous") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < rounds; ++i) {
        const auto rc = random_case(rng);
        const auto before = actual_causes(rc.instance, rc.query);
        const auto after = actual_causes(rc.instance.all_endogenous(), rc.query);
        CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    }
}

TEST_CASE("contingency sets re-evaluate correctly") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < rounds; ++i) {
        const auto rc = random_case(rng);
        const auto& d = rc.instance;
        CausalAnalysis a(d, rc.query);
        for (TupleId t : a.causes()) {
            std::vector<bool> present(d.size(), true);
            for (const auto& gamma : a.contingencies(t)) {
                for (TupleId g : gamma)
                    present[g] = false;
                CHECK(eval(rc.query, d, present));
                present[t] = false;
                CHECK_FALSE(eval(rc.query, d, present));
                present.assign(d.size(), true);
                CHECK(is_minimal_contingency(d, rc.query, d.tuple(t), d.materialize(gamma)));
            }
            const bool counterfactual = [&] {
                present[t] = false;
                return !eval(rc.query, d, present);
            }();
            CHECK((a.responsibility(t) == Responsibility::inverse(1)) == counterfactual);
        }
    }
}

TEST_CASE("diagnoses mirror causes and responsibilities") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < rounds; ++i) {
        const auto rc = random_case(rng);
        const auto& d = rc.instance;
        const UCQ q({rc.query.disjuncts()[0]});
        const auto m = build_diagnosis_problem(d, q.disjuncts()[0]);
        const auto causes = actual_causes(d, q);
        for (TupleId id : d.endogenous()) {
            const auto& t = d.tuple(id);
            const bool cause = std::binary_search(causes.begin(), causes.end(), t);
            CHECK(cause == !diagnoses(m, t, Semantics::subset).empty());
            const auto mcd = diagnoses(m, t, Semantics::cardinality);
            const auto rho = responsibility(d, q, t);
            CHECK(rho == (mcd.empty() ? Responsibility::zero() : Responsibility::inverse(mcd.front().size())));
        }
        // Removing a diagnosis leaves no conflict behind.
        const auto conflicts = conflict_sets(m);
        for (const auto& delta : diagnoses(m, std::nullopt, Semantics::subset)) {
            std::vector<bool> present(d.size(), true);
            for (TupleId x : delta)
                present[x] = false;
            for (const auto& s : conflicts.sets())
                CHECK(std::any_of(s.begin(), s.end(), [&](TupleId x) { return !present[x]; }));
        }
    }
}

TEST_CASE("repairs and causes are dual") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < rounds; ++i) {
        const auto rc = random_case(rng);
        const auto d = rc.instance.all_endogenous();
        const auto sigma = ucq_to_dcs(rc.query);
        CausalAnalysis a(d, rc.query);
        const auto causes = a.causes();
        const auto mrc = a.most_responsible();
        for (const auto& r : repairs(d, sigma, Semantics::subset)) {
            CHECK(sets::is_subset(r.removed, causes));
            for (TupleId t : r.removed) {
                const auto gamma = sets::erase(r.removed, t);
                const auto cts = a.contingencies(t);
                CHECK(std::find(cts.begin(), cts.end(), gamma) != cts.end());
            }
        }
        for (const auto& r : repairs(d, sigma, Semantics::cardinality))
            CHECK(sets::is_subset(r.removed, mrc));
        for (TupleId t : causes)
            for (const auto& gamma : a.contingencies(t)) {
                const auto removed = sets::insert(gamma, t);
                CHECK(is_s_repair(d, sigma, d.materialize(sets::set_difference(d.endogenous(), removed))));
            }
        for (const auto& t : d.tuples()) {
            const std::vector<GroundTuple> g{t};
            if (consistent_answer(d, sigma, g, Semantics::subset))
                CHECK(consistent_answer(d, sigma, g, Semantics::cardinality));
        }
        if (sigma.size() == 1)
            for (TupleId t : d.endogenous()) {
                const auto ds = difference_sets(d, sigma[0], d.tuple(t), Semantics::subset);
                const auto dc = difference_sets(d, sigma[0], d.tuple(t), Semantics::cardinality);
                for (const auto& s : dc)
                    CHECK(std::find(ds.begin(), ds.end(), s) != ds.end());
                const auto rho = a.responsibility(t);
                if (ds.empty()) {
                    CHECK(rho.is_zero());
                } else {
                    std::size_t smallest = ds.front().size();
                    for (const auto& s : ds)
                        smallest = std::min(smallest, s.size());
                    CHECK(rho == Responsibility::inverse(smallest));
                }
            }
    }
}
