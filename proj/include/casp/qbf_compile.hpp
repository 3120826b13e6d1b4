#pragma once
// Compilation of a prenex-DNF QBF into a communicating normal program whose
// focused answer sets decide the formula.

#include "casp/engine.hpp"
#include "casp/focus.hpp"
#include "casp/model.hpp"
#include "casp/qbf.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace casp {

struct CompiledQbf {
    CommunicatingProgram program;
    FocusSequence focus;
    /// brave Q0:sat for an existential prefix, cautious Q0:sat for a universal one.
    Query query;
};

inline const Atom& sat_atom() {
    static const Atom atom{"sat"};
    return atom;
}

/// Components Q0..Q(n-1) for n quantifier blocks. Q0 guesses an assignment and
/// derives sat / -sat; Qj copies the variables of the first n-j blocks and
/// either sat or -sat depending on the parity of n-j.
inline CompiledQbf compile_qbf(const Qbf& q) {
    if (auto problems = qbf_problems(q); !problems.empty()) throw std::invalid_argument("invalid QBF: " + problems.front());
    for (const auto& v : q.variables())
        if (v == sat_atom()) throw std::invalid_argument("QBF variable may not be named 'sat'");

    const std::size_t n = q.blocks.size();
    auto name = [](std::size_t j) { return ComponentName{"Q" + std::to_string(j)}; };
    auto at = [](const ComponentName& c, const Atom& a, bool positive = true) {
        return SituatedLiteral{c, Literal{a, positive}};
    };

    CompiledQbf out;
    const auto q0 = name(0);
    auto& base = out.program.component(q0);
    for (const auto& x : q.variables()) {
        base.rules.push_back(make_rule({at(q0, x)}, {}, {at(q0, x, false)}));
        base.rules.push_back(make_rule({at(q0, x, false)}, {}, {at(q0, x)}));
    }
    for (const auto& clause : q.matrix) {
        std::vector<SituatedLiteral> body;
        for (const auto& l : clause) body.push_back(at(q0, l.variable, l.positive));
        base.rules.push_back(make_rule({at(q0, sat_atom())}, body));
    }
    base.rules.push_back(make_rule({at(q0, sat_atom(), false)}, {}, {at(q0, sat_atom())}));

    const bool exists_first = q.first_quantifier() == Quantifier::exists;
    for (std::size_t j = 1; j < n; ++j) {
        const auto qj = name(j);
        auto& comp = out.program.component(qj);
        for (std::size_t b = 0; b < n - j; ++b) {
            for (const auto& x : q.blocks[b].variables) {
                comp.rules.push_back(make_rule({at(qj, x)}, {at(q0, x)}));
                comp.rules.push_back(make_rule({at(qj, x, false)}, {at(q0, x, false)}));
            }
        }
        const bool even = (n - j) % 2 == 0;
        const bool mirror_positive = exists_first ? !even : even;
        comp.rules.push_back(make_rule({at(qj, sat_atom(), mirror_positive)}, {at(q0, sat_atom(), mirror_positive)}));
        out.focus.names.push_back(qj);
    }
    out.program.canonicalize();
    out.query = exists_first ? Query::brave(at(q0, sat_atom())) : Query::cautious(at(q0, sat_atom()));
    return out;
}

/// Decides `q` through its compiled program.
inline bool qbf_via_asp(const Qbf& q, const EnumerateOptions& opts = {}) {
    auto c = compile_qbf(q);
    return focused_query(c.program, c.focus, c.query, opts);
}

} // namespace casp
