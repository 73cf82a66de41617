#pragma once

#include <causekit/model.hpp>
#include <causekit/query.hpp>

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace causekit::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(CAUSEKIT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in)
        throw std::runtime_error("missing fixture " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline Instance load_instance(const std::string& name) { return parse_instance(read_fixture(name)); }
inline UCQ load_query(const std::string& name) { return as_query(parse_program(read_fixture(name))); }
inline std::vector<DenialConstraint> load_constraints(const std::string& name) {
    return as_constraints(parse_program(read_fixture(name)));
}

inline GroundTuple T(const std::string& text) { return parse_tuple(text); }

using Tuples = std::vector<GroundTuple>;
using TupleSets = std::vector<Tuples>;

/// Canonically sorted tuple list.
inline Tuples tuples(std::initializer_list<const char*> texts) {
    Tuples out;
    for (const char* t : texts)
        out.push_back(parse_tuple(t));
    return canonical_sort(std::move(out));
}

/// Sorted collection of canonically sorted tuple lists.
inline TupleSets tuple_sets(std::initializer_list<std::initializer_list<const char*>> sets) {
    TupleSets out;
    for (auto s : sets)
        out.push_back(tuples(s));
    std::sort(out.begin(), out.end());
    return out;
}

inline TupleSets materialize_all(const Instance& d, const std::vector<TupleSet>& sets) {
    TupleSets out;
    for (const auto& s : sets)
        out.push_back(d.materialize(s));
    std::sort(out.begin(), out.end());
    return out;
}

inline TupleSet ids(const Instance& d, std::initializer_list<const char*> texts) {
    TupleSet out;
    for (const char* t : texts)
        out.push_back(require_tuple(d, parse_tuple(t)));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace causekit::testing
