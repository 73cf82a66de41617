#include <causekit/model.hpp>

#include "lexer.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace causekit {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string parse_constant(Lexer& lex) {
    const Token& t = lex.peek();
    switch (t.kind) {
    case TokenKind::number:
    case TokenKind::quoted:
        return lex.next().text;
    case TokenKind::identifier:
        if (!detail::is_bare_constant(t.text))
            Lexer::fail_at(t, "constant '" + t.text +
                                  "' must start with a lower-case letter or digit (or be quoted)");
        return lex.next().text;
    default:
        lex.fail(std::string("expected a constant, found ") + describe(t.kind));
    }
}

// rel(c1,...,ck) without the trailing period.
GroundTuple parse_atom(Lexer& lex) {
    Token name = lex.expect(TokenKind::identifier, "as relation name");
    GroundTuple t{RelationName(name.text), {}};
    lex.expect(TokenKind::lparen, "after relation name");
    t.args.push_back(parse_constant(lex));
    while (lex.at(TokenKind::comma)) {
        lex.next();
        t.args.push_back(parse_constant(lex));
    }
    lex.expect(TokenKind::rparen, "to close the argument list");
    return t;
}

struct ArityTable {
    std::map<std::string, std::size_t> arity;

    void check(const GroundTuple& t, const Token& at) {
        auto [it, inserted] = arity.emplace(t.relation.key(), t.arity());
        if (!inserted && it->second != t.arity())
            Lexer::fail_at(at, "relation '" + t.relation.spelling() + "' used with arity " +
                                   std::to_string(t.arity()) + ", previously " +
                                   std::to_string(it->second));
    }
};

} // namespace

RelationName::RelationName(std::string spelling) : key_(lower(spelling)), spelling_(std::move(spelling)) {}

Instance::Instance(std::vector<GroundTuple> endogenous, std::vector<GroundTuple> exogenous) {
    // First spelling wins for every relation; arities must agree.
    std::map<std::string, std::pair<std::string, std::size_t>> seen;
    auto normalize = [&](GroundTuple& t) {
        auto [it, inserted] = seen.emplace(t.relation.key(), std::make_pair(t.relation.spelling(), t.arity()));
        if (!inserted) {
            if (it->second.second != t.arity())
                throw Error("relation '" + t.relation.spelling() + "' used with arity " +
                            std::to_string(t.arity()) + ", previously " + std::to_string(it->second.second));
            t.relation = RelationName(it->second.first);
        }
    };
    for (auto& t : endogenous)
        normalize(t);
    for (auto& t : exogenous)
        normalize(t);

    std::sort(endogenous.begin(), endogenous.end());
    endogenous.erase(std::unique(endogenous.begin(), endogenous.end()), endogenous.end());
    std::sort(exogenous.begin(), exogenous.end());
    exogenous.erase(std::unique(exogenous.begin(), exogenous.end()), exogenous.end());

    tuples_.reserve(endogenous.size() + exogenous.size());
    endogenous_.reserve(endogenous.size() + exogenous.size());
    auto en = endogenous.begin();
    auto ex = exogenous.begin();
    while (en != endogenous.end() || ex != exogenous.end()) {
        if (ex == exogenous.end() || (en != endogenous.end() && *en < *ex)) {
            tuples_.push_back(std::move(*en++));
            endogenous_.push_back(true);
        } else if (en == endogenous.end() || *ex < *en) {
            tuples_.push_back(std::move(*ex++));
            endogenous_.push_back(false);
        } else {
            throw Error("fact " + to_string(*en) + " is both endogenous and exogenous");
        }
    }
    endogenous_count_ = endogenous.size();
}

std::optional<TupleId> Instance::find(const GroundTuple& t) const {
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
    if (it == tuples_.end() || *it != t)
        return std::nullopt;
    return static_cast<TupleId>(it - tuples_.begin());
}

TupleSet Instance::endogenous() const {
    TupleSet out;
    out.reserve(endogenous_count_);
    for (TupleId i = 0; i < tuples_.size(); ++i)
        if (endogenous_[i])
            out.push_back(i);
    return out;
}

TupleSet Instance::exogenous() const {
    TupleSet out;
    for (TupleId i = 0; i < tuples_.size(); ++i)
        if (!endogenous_[i])
            out.push_back(i);
    return out;
}

std::pair<TupleId, TupleId> Instance::extension(const RelationName& relation) const {
    auto lo = std::partition_point(tuples_.begin(), tuples_.end(),
                                   [&](const GroundTuple& t) { return t.relation < relation; });
    auto hi = std::partition_point(lo, tuples_.end(),
                                   [&](const GroundTuple& t) { return t.relation == relation; });
    return {static_cast<TupleId>(lo - tuples_.begin()), static_cast<TupleId>(hi - tuples_.begin())};
}

std::optional<std::size_t> Instance::arity(const RelationName& relation) const {
    auto [lo, hi] = extension(relation);
    if (lo == hi)
        return std::nullopt;
    return tuples_[lo].arity();
}

std::vector<RelationName> Instance::relations() const {
    std::vector<RelationName> out;
    for (const auto& t : tuples_)
        if (out.empty() || out.back() != t.relation)
            out.push_back(t.relation);
    return out;
}

Instance Instance::all_endogenous() const {
    Instance copy = *this;
    copy.endogenous_.assign(tuples_.size(), true);
    copy.endogenous_count_ = tuples_.size();
    return copy;
}

Instance Instance::restrict_to(const TupleSet& keep) const {
    Instance out;
    for (TupleId id : keep) {
        out.tuples_.push_back(tuples_.at(id));
        out.endogenous_.push_back(endogenous_[id]);
        if (endogenous_[id])
            ++out.endogenous_count_;
    }
    return out;
}

std::vector<GroundTuple> Instance::materialize(const TupleSet& ids) const {
    std::vector<GroundTuple> out;
    out.reserve(ids.size());
    for (TupleId id : ids)
        out.push_back(tuples_.at(id));
    return out;
}

Instance parse_instance(std::string_view text) {
    Lexer lex(text);
    std::vector<GroundTuple> endo, exo;
    ArityTable arities;
    bool in_exogenous = false;
    while (!lex.at(TokenKind::end)) {
        if (lex.at(TokenKind::lbracket)) {
            lex.next();
            Token name = lex.expect(TokenKind::identifier, "as section name");
            if (name.text == "endogenous")
                in_exogenous = false;
            else if (name.text == "exogenous")
                in_exogenous = true;
            else
                Lexer::fail_at(name, "unknown section '" + name.text + "'");
            lex.expect(TokenKind::rbracket, "to close the section header");
            continue;
        }
        Token start = lex.peek();
        GroundTuple t = parse_atom(lex);
        lex.expect(TokenKind::period, "after fact");
        arities.check(t, start);
        (in_exogenous ? exo : endo).push_back(std::move(t));
    }
    return Instance(std::move(endo), std::move(exo));
}

std::vector<GroundTuple> parse_facts(std::string_view text) {
    Lexer lex(text);
    std::vector<GroundTuple> out;
    ArityTable arities;
    while (!lex.at(TokenKind::end)) {
        Token start = lex.peek();
        GroundTuple t = parse_atom(lex);
        lex.expect(TokenKind::period, "after fact");
        arities.check(t, start);
        out.push_back(std::move(t));
    }
    return out;
}

GroundTuple parse_tuple(std::string_view text) {
    Lexer lex(text);
    GroundTuple t = parse_atom(lex);
    if (lex.at(TokenKind::period))
        lex.next();
    lex.expect(TokenKind::end, "after tuple");
    return t;
}

std::string format_symbol(std::string_view symbol) {
    if (detail::is_bare_constant(symbol))
        return std::string(symbol);
    std::string out = "\"";
    for (char c : symbol) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string to_string(const GroundTuple& t) {
    std::string out = t.relation.spelling();
    out.push_back('(');
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i)
            out.push_back(',');
        out += format_symbol(t.args[i]);
    }
    out.push_back(')');
    return out;
}

std::string serialize_instance(const Instance& instance) {
    std::string endo, exo;
    for (TupleId id = 0; id < instance.size(); ++id)
        (instance.is_endogenous(id) ? endo : exo) += to_string(instance.tuple(id)) + ".\n";
    std::string out = "[endogenous]\n" + endo;
    if (!exo.empty())
        out += "[exogenous]\n" + exo;
    return out;
}

std::vector<GroundTuple> canonical_sort(std::vector<GroundTuple> tuples) {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    return tuples;
}

TupleId require_tuple(const Instance& instance, const GroundTuple& t) {
    auto id = instance.find(t);
    if (!id)
        throw Error("tuple " + to_string(t) + " is not in the instance");
    return *id;
}

TupleId require_endogenous(const Instance& instance, const GroundTuple& t) {
    TupleId id = require_tuple(instance, t);
    if (!instance.is_endogenous(id))
        throw Error("tuple " + to_string(t) + " is not endogenous");
    return id;
}

} // namespace causekit
