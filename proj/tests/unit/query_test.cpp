#include "fixtures.hpp"

#include <causekit/query.hpp>
#include <causekit/support.hpp>

#include <doctest.h>

using namespace causekit;
using namespace causekit::testing;

TEST_CASE("parse_program: single rule") {
    const auto p = parse_program("q :- s(X), r(X,Y), s(Y).");
    REQUIRE(std::holds_alternative<UCQ>(p));
    const auto& q = std::get<UCQ>(p);
    CHECK(q.size() == 1);
    CHECK(q.disjuncts()[0].size() == 3);
    CHECK(q.max_atoms() == 3);
    CHECK(q.disjuncts()[0].variables() == std::vector<std::string>{"X", "Y"});
}

TEST_CASE("parse_program: denial constraints") {
    const auto p = parse_program(":- p(X), q(X,Y).  :- p(X), r(X,Y).");
    REQUIRE(std::holds_alternative<std::vector<DenialConstraint>>(p));
    CHECK(std::get<std::vector<DenialConstraint>>(p).size() == 2);
}

TEST_CASE("parse_program: smallest program") {
    const auto q = as_query(parse_program("q :- a(X)."));
    CHECK(q.size() == 1);
    CHECK(q.disjuncts()[0].size() == 1);
}

TEST_CASE("parse_program: union of rules, constants and wildcards") {
    const auto q = as_query(parse_program("v :- p(X), q(X, Y).\nv :- p(a), r(_, \"B c\")."));
    CHECK(q.size() == 2);
    const auto& atom = q.disjuncts()[1].atoms()[0];
    CHECK(std::holds_alternative<Constant>(atom.terms[0]));
    CHECK(std::holds_alternative<Variable>(q.disjuncts()[1].atoms()[1].terms[0]));
    CHECK(std::get<Constant>(q.disjuncts()[1].atoms()[1].terms[1]).value == "B c");
}

TEST_CASE("parse_program: errors") {
    CHECK_THROWS_AS(parse_program(""), ParseError);
    CHECK_THROWS_AS(parse_program("% nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_program("q :- a(X). :- a(X)."), ParseError);
    CHECK_THROWS_AS(parse_program("q :- a(X). p :- b(X)."), ParseError);
    CHECK_THROWS_AS(parse_program("q(X) :- a(X)."), ParseError);
    CHECK_THROWS_AS(parse_program("q :- ."), ParseError);
    CHECK_THROWS_AS(parse_program("q :- a(X)"), ParseError);
    CHECK_THROWS_AS(parse_program("q :- a(X), a(X, Y)."), Error);
}

TEST_CASE("bcq_to_dc and dc_to_bcq") {
    const auto q = as_query(parse_program("q :- s(X), r(X,Y), s(Y).")).disjuncts()[0];
    const auto dc = bcq_to_dc(q);
    CHECK(to_string(dc) == ":- s(X), r(X,Y), s(Y).");
    CHECK(dc_to_bcq(dc) == q);
    CHECK(bcq_to_dc(dc_to_bcq(dc)) == dc);
    const auto single = as_query(parse_program("q :- a(X).")).disjuncts()[0];
    CHECK(bcq_to_dc(single).size() == 1);
}

TEST_CASE("dcs_to_ucq keeps order and atoms") {
    const auto sigma = load_constraints("ex4.dc");
    const auto v = dcs_to_ucq(sigma);
    REQUIRE(v.size() == 2);
    for (std::size_t i = 0; i < sigma.size(); ++i)
        CHECK(std::vector<QueryAtom>(v.disjuncts()[i].atoms().begin(), v.disjuncts()[i].atoms().end()) ==
              std::vector<QueryAtom>(sigma[i].atoms().begin(), sigma[i].atoms().end()));
    CHECK(ucq_to_dcs(v) == sigma);
    CHECK(dcs_to_ucq(std::vector<DenialConstraint>{sigma[0]}).size() == 1);
    CHECK_THROWS_AS(dcs_to_ucq(std::vector<DenialConstraint>{}), Error);
}

TEST_CASE("constraint order does not change causes") {
    auto sigma = load_constraints("ex4.dc");
    const auto d = load_instance("ex4.db");
    const auto forward = support_family(dcs_to_ucq(sigma), d);
    std::reverse(sigma.begin(), sigma.end());
    CHECK(support_family(dcs_to_ucq(sigma), d) == forward);
}

TEST_CASE("D satisfies a DC iff its violation view is false") {
    const auto d = load_instance("ex4.db");
    for (const auto& dc : load_constraints("ex4.dc")) {
        const UCQ view({dc_to_bcq(dc)});
        CHECK(eval(view, d));
        const auto consistent = d.restrict_to(ids(d, {"p(e)", "q(a,b)", "r(a,c)"}));
        CHECK_FALSE(eval(view, consistent));
    }
}

TEST_CASE("program conversions") {
    const auto dcs = parse_program(":- a(X).");
    CHECK(as_query(dcs).size() == 1);
    const auto q = parse_program("q :- a(X). q :- b(X).");
    CHECK(as_constraints(q).size() == 2);
    CHECK(to_string(as_query(q)) == "q :- a(X).\nq :- b(X).\n");
}

TEST_CASE("empty query forms are rejected") {
    CHECK_THROWS_AS(Disjunct(std::vector<QueryAtom>{}), Error);
    CHECK_THROWS_AS(UCQ(std::vector<Disjunct>{}), Error);
    CHECK_THROWS_AS(DenialConstraint(std::vector<QueryAtom>{}), Error);
}
