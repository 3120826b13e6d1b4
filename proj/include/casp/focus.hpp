#pragma once
// Multi-focused answer sets: successive subset-minimization of the
// answer-set pool on the projections of a sequence of components.

#include "casp/engine.hpp"
#include "casp/model.hpp"

#include <algorithm>
#include <vector>

namespace casp {

/// Keeps the members of `pool` whose projection on `q` is not a strict
/// superset of another member's projection on `q`.
inline std::vector<Interpretation> minimize_on(const std::vector<Interpretation>& pool, const ComponentName& q) {
    std::vector<std::vector<Literal>> projections;
    projections.reserve(pool.size());
    for (const auto& m : pool) projections.push_back(project(m, q));
    std::vector<Interpretation> out;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < pool.size() && !beaten; ++j) {
            beaten = projections[j].size() < projections[i].size() &&
                     detail::includes_sorted(projections[i], projections[j]);
        }
        if (!beaten) out.push_back(pool[i]);
    }
    return out;
}

/// Applies the focus sequence to an answer-set pool.
inline std::vector<Interpretation> apply_focus(std::vector<Interpretation> pool, const FocusSequence& f) {
    for (const auto& q : f.names) pool = minimize_on(pool, q);
    return pool;
}

/// The f-focused answer sets of `p`, canonically ordered.
inline std::vector<Interpretation> focused_answer_sets(const CommunicatingProgram& p, const FocusSequence& f,
                                                       const EnumerateOptions& opts = {}) {
    check_focus(p, f);
    return apply_focus(enumerate_answer_sets(p, opts), f);
}

/// For simple programs the least fixpoint is focused for every sequence, so it
/// is returned directly in polynomial time.
inline Interpretation focused_fixpoint_simple(const CommunicatingProgram& p, const FocusSequence& f) {
    check_focus(p, f);
    return communicating_fixpoint(p);
}

inline bool focused_query(const CommunicatingProgram& p, const FocusSequence& f, const Query& q,
                          const EnumerateOptions& opts = {}) {
    check_query(p, q);
    return evaluate(q, focused_answer_sets(p, f, opts));
}

} // namespace casp
