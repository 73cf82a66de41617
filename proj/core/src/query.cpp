#include <causekit/query.hpp>

#include "lexer.hpp"

#include <algorithm>
#include <map>

namespace causekit {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

namespace {

Term parse_term(Lexer& lex) {
    const Token& t = lex.peek();
    switch (t.kind) {
    case TokenKind::number:
    case TokenKind::quoted:
        return Constant{lex.next().text};
    case TokenKind::identifier:
        if (detail::is_bare_constant(t.text))
            return Constant{lex.next().text};
        return Variable{lex.next().text};
    default:
        lex.fail(std::string("expected a term, found ") + describe(t.kind));
    }
}

QueryAtom parse_query_atom(Lexer& lex, std::map<std::string, std::size_t>& arities) {
    Token name = lex.expect(TokenKind::identifier, "as relation name");
    QueryAtom atom{RelationName(name.text), {}};
    lex.expect(TokenKind::lparen, "after relation name");
    atom.terms.push_back(parse_term(lex));
    while (lex.at(TokenKind::comma)) {
        lex.next();
        atom.terms.push_back(parse_term(lex));
    }
    lex.expect(TokenKind::rparen, "to close the argument list");
    auto [it, inserted] = arities.emplace(atom.relation.key(), atom.arity());
    if (!inserted && it->second != atom.arity())
        Lexer::fail_at(name, "relation '" + name.text + "' used with arity " +
                                 std::to_string(atom.arity()) + ", previously " + std::to_string(it->second));
    return atom;
}

std::vector<QueryAtom> parse_body(Lexer& lex, std::map<std::string, std::size_t>& arities) {
    std::vector<QueryAtom> atoms;
    atoms.push_back(parse_query_atom(lex, arities));
    while (lex.at(TokenKind::comma)) {
        lex.next();
        atoms.push_back(parse_query_atom(lex, arities));
    }
    lex.expect(TokenKind::period, "at the end of the rule");
    return atoms;
}

std::string join_atoms(std::span<const QueryAtom> atoms) {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(atoms[i]);
    }
    return out;
}

} // namespace

Disjunct::Disjunct(std::vector<QueryAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw Error("a conjunctive query needs at least one atom");
}

std::vector<std::string> Disjunct::variables() const {
    std::vector<std::string> out;
    for (const auto& atom : atoms_)
        for (const auto& term : atom.terms)
            if (const auto* v = std::get_if<Variable>(&term))
                if (std::find(out.begin(), out.end(), v->name) == out.end())
                    out.push_back(v->name);
    return out;
}

UCQ::UCQ(std::vector<Disjunct> disjuncts) : disjuncts_(std::move(disjuncts)) {
    if (disjuncts_.empty())
        throw Error("a union of conjunctive queries needs at least one disjunct");
}

std::size_t UCQ::max_atoms() const noexcept {
    std::size_t d = 0;
    for (const auto& c : disjuncts_)
        d = std::max(d, c.size());
    return d;
}

DenialConstraint::DenialConstraint(std::vector<QueryAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw Error("a denial constraint needs at least one atom");
}

Program parse_program(std::string_view text) {
    Lexer lex(text);
    std::map<std::string, std::size_t> arities;
    std::vector<Disjunct> rules;
    std::vector<DenialConstraint> constraints;
    std::string head;

    while (!lex.at(TokenKind::end)) {
        if (lex.at(TokenKind::implied_by)) {
            Token start = lex.next();
            if (!rules.empty())
                Lexer::fail_at(start, "cannot mix query rules and denial constraints in one program");
            constraints.emplace_back(parse_body(lex, arities));
            continue;
        }
        Token name = lex.expect(TokenKind::identifier, "as rule head");
        if (!constraints.empty())
            Lexer::fail_at(name, "cannot mix query rules and denial constraints in one program");
        if (lex.at(TokenKind::lparen))
            lex.fail("query heads take no arguments; only boolean queries are supported");
        if (head.empty())
            head = name.text;
        else if (head != name.text)
            Lexer::fail_at(name, "all rules must share the head '" + head + "'");
        lex.expect(TokenKind::implied_by, "after rule head");
        rules.emplace_back(parse_body(lex, arities));
    }

    if (!rules.empty())
        return UCQ(std::move(rules));
    if (!constraints.empty())
        return constraints;
    throw ParseError("empty program", 1, 1);
}

DenialConstraint bcq_to_dc(const Disjunct& q) {
    return DenialConstraint({q.atoms().begin(), q.atoms().end()});
}

Disjunct dc_to_bcq(const DenialConstraint& dc) {
    return Disjunct({dc.atoms().begin(), dc.atoms().end()});
}

UCQ dcs_to_ucq(std::span<const DenialConstraint> constraints) {
    if (constraints.empty())
        throw Error("the set of denial constraints is empty");
    std::vector<Disjunct> out;
    out.reserve(constraints.size());
    for (const auto& dc : constraints)
        out.push_back(dc_to_bcq(dc));
    return UCQ(std::move(out));
}

std::vector<DenialConstraint> ucq_to_dcs(const UCQ& q) {
    std::vector<DenialConstraint> out;
    for (const auto& c : q.disjuncts())
        out.push_back(bcq_to_dc(c));
    return out;
}

UCQ as_query(const Program& program) {
    if (const auto* q = std::get_if<UCQ>(&program))
        return *q;
    return dcs_to_ucq(std::get<std::vector<DenialConstraint>>(program));
}

std::vector<DenialConstraint> as_constraints(const Program& program) {
    if (const auto* dcs = std::get_if<std::vector<DenialConstraint>>(&program))
        return *dcs;
    return ucq_to_dcs(std::get<UCQ>(program));
}

std::string to_string(const Term& term) {
    if (const auto* v = std::get_if<Variable>(&term))
        return v->name;
    return format_symbol(std::get<Constant>(term).value);
}

std::string to_string(const QueryAtom& atom) {
    std::string out = atom.relation.spelling() + "(";
    for (std::size_t i = 0; i < atom.terms.size(); ++i) {
        if (i)
            out += ",";
        out += to_string(atom.terms[i]);
    }
    return out + ")";
}

std::string to_string(const Disjunct& q) { return "q :- " + join_atoms(q.atoms()) + "."; }

std::string to_string(const UCQ& q) {
    std::string out;
    for (const auto& c : q.disjuncts())
        out += to_string(c) + "\n";
    return out;
}

std::string to_string(const DenialConstraint& dc) { return ":- " + join_atoms(dc.atoms()) + "."; }

} // namespace causekit
