#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

namespace causekit {

/// Helpers over sorted, duplicate-free id vectors (TupleSet, VertexSet).
namespace sets {

template <class Set>
bool contains(const Set& s, typename Set::value_type x) {
    return std::binary_search(s.begin(), s.end(), x);
}

template <class Set>
bool is_subset(const Set& sub, const Set& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

template <class Set>
bool disjoint(const Set& a, const Set& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return false;
    }
    return true;
}

template <class Set>
Set set_union(const Set& a, const Set& b) {
    Set out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <class Set>
Set set_difference(const Set& a, const Set& b) {
    Set out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <class Set>
Set erase(Set s, typename Set::value_type x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it != s.end() && *it == x)
        s.erase(it);
    return s;
}

template <class Set>
Set insert(Set s, typename Set::value_type x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x)
        s.insert(it, x);
    return s;
}

/// Sorts the collection, drops duplicates and every set that strictly
/// contains another member. The result is an antichain in canonical order.
template <class Set>
std::vector<Set> minimal_members(std::vector<Set> family) {
    std::sort(family.begin(), family.end(), [](const Set& a, const Set& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<Set> kept;
    for (auto& s : family) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [&](const Set& k) { return is_subset(k, s); });
        if (!dominated)
            kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace sets
} // namespace causekit
