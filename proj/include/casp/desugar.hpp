#pragma once

#include "casp/model.hpp"

#include <vector>

namespace casp {

/// Atom used to encode constraints as rules: ":- body." becomes
/// "__fail :- not __fail, body." in the owning component.
inline const Atom& fail_atom() {
    static const Atom atom{"__fail"};
    return atom;
}

inline bool is_constraint(const Rule& r) { return r.head.empty(); }

/// Rewrites every empty-head rule of component `q` with the component-local
/// fail atom. Other rules are returned unchanged.
inline std::vector<Rule> desugar_constraints(const ComponentName& q, std::vector<Rule> rules) {
    const SituatedLiteral fail{q, Literal{fail_atom(), true}};
    for (auto& r : rules) {
        if (!is_constraint(r)) continue;
        r.head = {fail};
        r.body_neg.push_back(fail);
        r.normalize();
    }
    return rules;
}

/// True for the rules desugar_constraints produces; `rest` receives the
/// original constraint body.
inline bool is_desugared_constraint(const ComponentName& q, const Rule& r, Rule* rest = nullptr) {
    const SituatedLiteral fail{q, Literal{fail_atom(), true}};
    if (r.head.size() != 1 || r.head.front() != fail) return false;
    if (!detail::contains_sorted(r.body_neg, fail)) return false;
    Rule body{{}, r.body_pos, {}};
    for (const auto& s : r.body_neg)
        if (s != fail) body.body_neg.push_back(s);
    if (body.is_fact()) return false;
    if (rest) *rest = std::move(body);
    return true;
}

} // namespace casp
