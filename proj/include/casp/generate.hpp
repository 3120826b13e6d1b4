#pragma once
// Seeded random generators for programs and QBFs. Draws use raw engine output
// reduced modulo n so sequences are identical across standard libraries.

#include "casp/model.hpp"
#include "casp/qbf.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace casp::gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish value in [0, n).
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    /// Value in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::mt19937_64 engine_;
};

struct ProgramShape {
    std::size_t max_components = 3;
    std::size_t max_atoms = 4;
    std::size_t max_rules = 8;
    std::size_t max_body = 3;
    unsigned naf_percent = 30;
    unsigned negation_percent = 20;
    unsigned remote_percent = 40;
    /// Percentage of rules with a second head literal; 0 keeps the program normal.
    unsigned disjunction_percent = 0;
    /// Percentage of rule slots spent, two at a time, on a pair of rules that
    /// block each other through naf (a :- not R:b. and R: b :- not Q:a.).
    unsigned choice_percent = 15;
};

inline ComponentName component_name(std::size_t i) { return ComponentName{std::string(1, static_cast<char>('A' + i))}; }
inline Atom atom_name(std::size_t i) { return Atom{std::string(1, static_cast<char>('a' + i))}; }

inline CommunicatingProgram random_program(Rng& rng, const ProgramShape& shape = {}) {
    const auto components = rng.between(1, shape.max_components);
    const auto atoms = rng.between(1, shape.max_atoms);
    const auto rules = rng.between(0, shape.max_rules);

    auto literal = [&](std::size_t component) {
        return SituatedLiteral{component_name(component),
                               Literal{atom_name(rng.below(atoms)), !rng.chance(shape.negation_percent)}};
    };
    CommunicatingProgram p;
    for (std::size_t c = 0; c < components; ++c) p.component(component_name(c));
    for (std::size_t k = 0; k < rules; ++k) {
        if (k + 1 < rules && rng.chance(shape.choice_percent)) {
            auto x = literal(rng.below(components));
            auto y = literal(rng.below(components));
            p.component(x.component).rules.push_back(make_rule({x}, {}, {y}));
            p.component(y.component).rules.push_back(make_rule({y}, {}, {x}));
            ++k;
            continue;
        }
        const auto owner = rng.below(components);
        Rule r;
        r.head.push_back(literal(owner));
        if (rng.chance(shape.disjunction_percent)) r.head.push_back(literal(owner));
        const auto body = rng.between(0, shape.max_body);
        for (std::size_t b = 0; b < body; ++b) {
            auto s = literal(rng.chance(shape.remote_percent) ? rng.below(components) : owner);
            (rng.chance(shape.naf_percent) ? r.body_neg : r.body_pos).push_back(s);
        }
        p.component(component_name(owner)).rules.push_back(r.normalize());
    }
    p.canonicalize();
    return p;
}

struct QbfShape {
    std::size_t max_variables = 5;
    std::size_t max_blocks = 3;
    std::size_t max_clauses = 4;
    std::size_t max_clause_size = 3;
};

/// Alternating prenex-DNF QBF whose prefix starts with `first`.
inline Qbf random_qbf(Rng& rng, Quantifier first, const QbfShape& shape = {}) {
    const auto blocks = rng.between(1, shape.max_blocks);
    const auto variables = rng.between(blocks, std::max(blocks, shape.max_variables));
    std::vector<std::size_t> sizes(blocks, 1);
    for (std::size_t k = blocks; k < variables; ++k) ++sizes[rng.below(blocks)];

    Qbf q;
    std::size_t next = 0;
    auto quantifier = first;
    for (auto size : sizes) {
        QuantifierBlock b{quantifier, {}};
        for (std::size_t k = 0; k < size; ++k) b.variables.push_back(Atom{"x" + std::to_string(next++)});
        q.blocks.push_back(std::move(b));
        quantifier = quantifier == Quantifier::exists ? Quantifier::forall : Quantifier::exists;
    }
    const auto vars = q.variables();
    const auto clauses = rng.between(1, shape.max_clauses);
    for (std::size_t c = 0; c < clauses; ++c) {
        QbfClause clause;
        const auto size = rng.between(1, std::min(shape.max_clause_size, vars.size()));
        for (std::size_t k = 0; k < size; ++k) clause.push_back(QbfLiteral{vars[rng.below(vars.size())], rng.chance(50)});
        std::sort(clause.begin(), clause.end());
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        q.matrix.push_back(std::move(clause));
    }
    return q;
}

} // namespace casp::gen
