#include "fixtures.hpp"

#include <causekit/model.hpp>

#include <doctest.h>

using namespace causekit;
using namespace causekit::testing;

TEST_CASE("parse_instance: unlabelled facts are endogenous") {
    const auto d = parse_instance("s(a3). s(a4). r(a4,a3).");
    CHECK(d.size() == 3);
    CHECK(d.endogenous_count() == 3);
    CHECK(d.exogenous_count() == 0);
    CHECK(d.materialize(d.endogenous()) == tuples({"s(a3)", "s(a4)", "r(a4,a3)"}));
}

TEST_CASE("parse_instance: sections") {
    const auto d = parse_instance("[endogenous] p(a). r(a,c). [exogenous] p(e). q(a,b).");
    CHECK(d.materialize(d.endogenous()) == tuples({"p(a)", "r(a,c)"}));
    CHECK(d.materialize(d.exogenous()) == tuples({"p(e)", "q(a,b)"}));
    CHECK(d.size() == d.endogenous_count() + d.exogenous_count());
}

TEST_CASE("parse_instance: empty input") {
    const auto d = parse_instance("");
    CHECK(d.empty());
    CHECK(d.endogenous().empty());
    CHECK(d.exogenous().empty());
    CHECK(parse_instance("% only a comment\n\n").empty());
}

TEST_CASE("parse_instance: duplicates collapse") {
    const auto d = parse_instance("p(a). p(a). [endogenous] p(a).");
    CHECK(d.size() == 1);
}

TEST_CASE("parse_instance: quoted constants") {
    const auto d = parse_instance(R"(p("Hello World"). p("a\"b"). p(x_1).)");
    CHECK(d.size() == 3);
    CHECK(d.find(GroundTuple{RelationName("p"), {"Hello World"}}).has_value());
    CHECK(d.find(GroundTuple{RelationName("p"), {"a\"b"}}).has_value());
}

TEST_CASE("parse_instance: errors") {
    CHECK_THROWS_AS(parse_instance("p(a). [exogenous] p(a)."), Error);
    CHECK_THROWS_AS(parse_instance("p(a). p(a,b)."), Error);
    CHECK_THROWS_AS(parse_instance("p(a)"), ParseError);
    CHECK_THROWS_AS(parse_instance("p(X)."), ParseError);
    CHECK_THROWS_AS(parse_instance("[somewhere] p(a)."), ParseError);
    CHECK_THROWS_AS(parse_instance("p(a,)."), ParseError);
    CHECK_THROWS_AS(parse_instance("p(\"open)."), ParseError);
    try {
        parse_instance("p(a).\n  q(B).");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
}

TEST_CASE("relation names compare case-insensitively and keep the first spelling") {
    const auto d = parse_instance("S(a3). s(a4).");
    CHECK(d.relations().size() == 1);
    CHECK(d.relations().front().spelling() == "S");
    CHECK(to_string(d.tuple(1)) == "S(a4)");
    CHECK(d.find(parse_tuple("s(a3)")).has_value());
}

TEST_CASE("canonical_sort") {
    CHECK(canonical_sort({T("s(a4)"), T("r(a4,a3)"), T("s(a3)")}) ==
          std::vector<GroundTuple>{T("r(a4,a3)"), T("s(a3)"), T("s(a4)")});
    CHECK(canonical_sort({}).empty());
    CHECK(canonical_sort({T("p(e)"), T("p(a)")}) == std::vector<GroundTuple>{T("p(a)"), T("p(e)")});
}

TEST_CASE("ids follow canonical order regardless of input order") {
    const auto a = parse_instance("s(a4). r(a4,a3). s(a3).");
    const auto b = parse_instance("s(a3). s(a4). r(a4,a3).");
    CHECK(a == b);
    CHECK(to_string(a.tuple(0)) == "r(a4,a3)");
}

TEST_CASE("serialize_instance round-trips") {
    for (const char* name : {"ex1.db", "ex6.db", "ex9.db", "empty.db", "m8.db"}) {
        CAPTURE(name);
        const auto d = load_instance(name);
        CHECK(parse_instance(serialize_instance(d)) == d);
    }
    const auto quoted = parse_instance(R"(p("A b"). [exogenous] q("x\\y", z).)");
    CHECK(parse_instance(serialize_instance(quoted)) == quoted);
}

TEST_CASE("format_symbol") {
    CHECK(format_symbol("a3") == "a3");
    CHECK(format_symbol("12") == "12");
    CHECK(format_symbol("Abc") == "\"Abc\"");
    CHECK(format_symbol("") == "\"\"");
    CHECK(format_symbol("a\"b") == "\"a\\\"b\"");
}

TEST_CASE("parse_tuple and parse_facts") {
    CHECK(to_string(parse_tuple("s(a3)")) == "s(a3)");
    CHECK(to_string(parse_tuple("r(a4, a3).")) == "r(a4,a3)");
    CHECK_THROWS_AS(parse_tuple("s(a3) s(a4)"), ParseError);
    CHECK_THROWS_AS(parse_tuple(""), ParseError);
    const auto facts = parse_facts("p(e). p(a).");
    REQUIRE(facts.size() == 2);
    CHECK(facts[0] == T("p(e)"));
}

TEST_CASE("instance queries") {
    const auto d = load_instance("ex6.db");
    CHECK(d.arity(RelationName("q")) == 2u);
    CHECK_FALSE(d.arity(RelationName("zzz")).has_value());
    const auto [lo, hi] = d.extension(RelationName("p"));
    CHECK(hi - lo == 2);
    CHECK(d.all_endogenous().endogenous_count() == 4);
    CHECK(d.all_endogenous().tuples().size() == d.size());
    const auto sub = d.restrict_to(ids(d, {"p(a)", "q(a,b)"}));
    CHECK(sub.size() == 2);
    CHECK(sub.endogenous_count() == 1);
    CHECK_THROWS_AS(require_tuple(d, T("p(z)")), Error);
    CHECK_THROWS_AS(require_endogenous(d, T("p(e)")), Error);
    CHECK_NOTHROW(require_endogenous(d, T("p(a)")));
}
