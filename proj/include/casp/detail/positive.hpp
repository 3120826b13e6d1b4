#pragma once
// Fixpoints and minimal models of positive programs over integer literal ids.
// A literal id is 2*atom + sign (sign 1 = classical negation); id ^ 1 is the
// complementary literal.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace casp::detail {

struct IRule {
    std::vector<int> head;
    std::vector<int> pos;
    std::vector<int> neg;
};

using Membership = std::vector<char>;

inline bool all_in(const std::vector<int>& lits, const Membership& m) {
    return std::all_of(lits.begin(), lits.end(), [&](int l) { return m[l] != 0; });
}

inline bool any_in(const std::vector<int>& lits, const Membership& m) {
    return std::any_of(lits.begin(), lits.end(), [&](int l) { return m[l] != 0; });
}

inline bool consistent(const Membership& m) {
    for (std::size_t i = 0; i + 1 < m.size(); i += 2)
        if (m[i] && m[i + 1]) return false;
    return true;
}

/// Least fixpoint of the immediate consequence operator from the empty set.
/// Rules with several head literals are not allowed; naf parts are ignored.
inline Membership least_model(std::span<const IRule> rules, std::size_t universe) {
    Membership m(universe, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rules) {
            int h = r.head.front();
            if (!m[h] && all_in(r.pos, m)) {
                m[h] = 1;
                changed = true;
            }
        }
    }
    return m;
}

inline bool is_model(std::span<const IRule> rules, const Membership& m) {
    return std::all_of(rules.begin(), rules.end(),
                       [&](const IRule& r) { return !all_in(r.pos, m) || any_in(r.head, m); });
}

namespace minimal {

struct Search {
    std::span<const IRule> rules;
    const Membership* allowed;
    Membership current;
    std::vector<Membership> found;

    void run() {
        const IRule* violated = nullptr;
        for (const auto& r : rules) {
            if (all_in(r.pos, current) && !any_in(r.head, current)) {
                violated = &r;
                break;
            }
        }
        if (!violated) {
            found.push_back(current);
            return;
        }
        for (int h : violated->head) {
            if (current[h ^ 1]) continue;
            if (allowed && !(*allowed)[h]) continue;
            current[h] = 1;
            run();
            current[h] = 0;
        }
    }
};

inline bool subset(const Membership& a, const Membership& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

} // namespace minimal

/// All subset-minimal consistent models of a positive disjunctive program.
/// When `allowed` is given, only models inside it are considered.
inline std::vector<Membership> minimal_models(std::span<const IRule> rules, std::size_t universe,
                                              const Membership* allowed = nullptr) {
    minimal::Search s{rules, allowed, Membership(universe, 0), {}};
    s.run();
    std::sort(s.found.begin(), s.found.end());
    s.found.erase(std::unique(s.found.begin(), s.found.end()), s.found.end());
    std::vector<Membership> out;
    for (const auto& m : s.found) {
        bool dominated = std::any_of(s.found.begin(), s.found.end(),
                                     [&](const Membership& o) { return &o != &m && o != m && minimal::subset(o, m); });
        if (!dominated) out.push_back(m);
    }
    return out;
}

/// True iff `m` is consistent, a model, and no proper subset of it is a model.
inline bool is_minimal_model(std::span<const IRule> rules, const Membership& m) {
    if (!consistent(m) || !is_model(rules, m)) return false;
    auto inside = minimal_models(rules, m.size(), &m);
    return inside.size() == 1 && inside.front() == m;
}

} // namespace casp::detail
