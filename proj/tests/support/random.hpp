#pragma once

#include <causekit/causal.hpp>
#include <causekit/model.hpp>
#include <causekit/query.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace causekit::testing {

struct CaseShape {
    std::size_t max_endogenous = 12;
    std::size_t max_exogenous = 4;
    std::size_t max_relations = 3;
    std::size_t max_arity = 2;
    std::size_t max_disjuncts = 3;
    std::size_t max_atoms = 3;
    std::size_t domain = 3;
};

struct RandomCase {
    Instance instance;
    UCQ query;
};

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random instance and UCQ over a shared small schema.
inline RandomCase random_case(std::mt19937_64& rng, const CaseShape& shape = {}) {
    const std::size_t relation_count = uniform(rng, 1, shape.max_relations);
    std::vector<std::size_t> arity(relation_count);
    for (auto& a : arity)
        a = uniform(rng, 1, shape.max_arity);
    auto name = [](std::size_t r) { return std::string(1, static_cast<char>('p' + r)); };
    auto constant = [&] { return "c" + std::to_string(uniform(rng, 0, shape.domain - 1)); };

    auto random_tuples = [&](std::size_t count) {
        std::vector<GroundTuple> out;
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t r = uniform(rng, 0, relation_count - 1);
            GroundTuple t{RelationName(name(r)), {}};
            for (std::size_t k = 0; k < arity[r]; ++k)
                t.args.push_back(constant());
            out.push_back(std::move(t));
        }
        return out;
    };
    auto endo = random_tuples(uniform(rng, 0, shape.max_endogenous));
    auto exo = random_tuples(uniform(rng, 0, shape.max_exogenous));
    // Drop exogenous copies of endogenous facts so the partition stays disjoint.
    std::erase_if(exo, [&](const GroundTuple& t) { return std::find(endo.begin(), endo.end(), t) != endo.end(); });

    static const char* variables[] = {"X", "Y", "Z"};
    std::vector<Disjunct> disjuncts;
    const std::size_t disjunct_count = uniform(rng, 1, shape.max_disjuncts);
    for (std::size_t i = 0; i < disjunct_count; ++i) {
        std::vector<QueryAtom> atoms;
        const std::size_t atom_count = uniform(rng, 1, shape.max_atoms);
        for (std::size_t j = 0; j < atom_count; ++j) {
            const std::size_t r = uniform(rng, 0, relation_count - 1);
            QueryAtom atom{RelationName(name(r)), {}};
            for (std::size_t k = 0; k < arity[r]; ++k) {
                if (uniform(rng, 0, 9) == 0)
                    atom.terms.emplace_back(Constant{constant()});
                else
                    atom.terms.emplace_back(Variable{variables[uniform(rng, 0, 2)]});
            }
            atoms.push_back(std::move(atom));
        }
        disjuncts.emplace_back(std::move(atoms));
    }
    return {Instance(std::move(endo), std::move(exo)), UCQ(std::move(disjuncts))};
}

/// Random simple graph on 1..max_vertices vertices with edge probability p.
inline Graph random_graph(std::mt19937_64& rng, std::size_t min_vertices, std::size_t max_vertices, double p = 0.4) {
    Graph g;
    const std::size_t n = uniform(rng, min_vertices, max_vertices);
    for (std::size_t i = 0; i < n; ++i)
        g.vertices.push_back("v" + std::to_string(i));
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                g.edges.emplace_back(i, j);
    return g;
}

} // namespace causekit::testing
