#pragma once
// Reference implementations used to check the engine and the transforms.
// Only the data types are shared with the rest of the library.

#include "casp/classical.hpp"
#include "casp/error.hpp"
#include "casp/qbf.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace casp::oracle {

using LiteralSet = std::set<Literal>;

inline constexpr std::size_t default_max_atoms = 16;

namespace detail {

inline bool has_complementary(const LiteralSet& s) {
    return std::any_of(s.begin(), s.end(), [&](const Literal& l) { return l.positive && s.contains(Literal{l.atom, false}); });
}

inline bool subset_of(const std::vector<Literal>& v, const LiteralSet& s) {
    return std::all_of(v.begin(), v.end(), [&](const Literal& l) { return s.contains(l); });
}

inline bool meets(const std::vector<Literal>& v, const LiteralSet& s) {
    return std::any_of(v.begin(), v.end(), [&](const Literal& l) { return s.contains(l); });
}

/// Least set closed under the single-head rules selected by `use`, naf ignored.
template <class Use>
LiteralSet closure(const ClassicalProgram& p, Use&& use) {
    LiteralSet m;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : p.rules) {
            if (!use(r) || !subset_of(r.body_pos, m)) continue;
            if (m.insert(r.head.front()).second) changed = true;
        }
    }
    return m;
}

/// Depth-first search over which naf-mentioned literals belong to the answer
/// set. `in` literals must be derived, `out` literals must not be; the lower
/// and upper closures prune and propagate.
class NormalSearch {
public:
    explicit NormalSearch(const ClassicalProgram& p) : p_(p) {
        for (const auto& r : p.rules) naf_.insert(r.body_neg.begin(), r.body_neg.end());
    }

    std::vector<LiteralSet> run() {
        std::map<Literal, bool> assigned;
        step(assigned);
        return found_;
    }

private:
    void step(std::map<Literal, bool> assigned) {
        for (;;) {
            auto lower = closure(p_, [&](const ClassicalRule& r) {
                return std::all_of(r.body_neg.begin(), r.body_neg.end(), [&](const Literal& l) {
                    auto it = assigned.find(l);
                    return it != assigned.end() && !it->second;
                });
            });
            auto upper = closure(p_, [&](const ClassicalRule& r) {
                return std::none_of(r.body_neg.begin(), r.body_neg.end(), [&](const Literal& l) {
                    auto it = assigned.find(l);
                    return it != assigned.end() && it->second;
                });
            });
            if (has_complementary(lower)) return;
            bool forced = false;
            for (const auto& l : naf_) {
                auto it = assigned.find(l);
                bool must_in = lower.contains(l);
                bool may_in = upper.contains(l);
                if (it != assigned.end()) {
                    if (it->second && !may_in) return;
                    if (!it->second && must_in) return;
                    continue;
                }
                if (must_in) {
                    assigned[l] = true;
                    forced = true;
                } else if (!may_in) {
                    assigned[l] = false;
                    forced = true;
                }
            }
            if (forced) continue;
            if (assigned.size() == naf_.size()) {
                if (lower == upper) found_.push_back(std::move(lower));
                return;
            }
            break;
        }
        for (const auto& l : naf_) {
            if (assigned.contains(l)) continue;
            for (bool v : {false, true}) {
                auto next = assigned;
                next[l] = v;
                step(std::move(next));
            }
            return;
        }
    }

    const ClassicalProgram& p_;
    LiteralSet naf_;
    std::vector<LiteralSet> found_;
};

inline bool is_model_of(const ClassicalProgram& positive, const LiteralSet& m) {
    return std::all_of(positive.rules.begin(), positive.rules.end(),
                       [&](const ClassicalRule& r) { return !subset_of(r.body_pos, m) || meets(r.head, m); });
}

/// I is a model of P^I and no proper subset of I is.
inline bool disjunctive_answer_set(const ClassicalProgram& p, const LiteralSet& i) {
    ClassicalProgram reduct;
    for (const auto& r : p.rules)
        if (!meets(r.body_neg, i)) reduct.rules.push_back(ClassicalRule{r.head, r.body_pos, {}});
    if (!is_model_of(reduct, i)) return false;
    std::vector<Literal> members(i.begin(), i.end());
    const std::uint64_t n = std::uint64_t{1} << members.size();
    for (std::uint64_t mask = 0; mask + 1 < n; ++mask) {
        LiteralSet sub;
        for (std::size_t k = 0; k < members.size(); ++k)
            if (mask >> k & 1) sub.insert(members[k]);
        if (is_model_of(reduct, sub)) return false;
    }
    return true;
}

inline std::vector<std::vector<Literal>> sorted(std::vector<LiteralSet> sets) {
    std::vector<std::vector<Literal>> out;
    for (auto& s : sets) out.emplace_back(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::size_t atom_count(const ClassicalProgram& p) {
    std::set<Atom> atoms;
    for (const auto& r : p.rules)
        for (const auto* v : {&r.head, &r.body_pos, &r.body_neg})
            for (const auto& l : *v) atoms.insert(l.atom);
    return atoms.size();
}

inline bool disjunctive(const ClassicalProgram& p) {
    return std::any_of(p.rules.begin(), p.rules.end(), [](const ClassicalRule& r) { return r.head.size() != 1; });
}

} // namespace detail

/// All answer sets of a classical program, each sorted, in lexicographic
/// order. Normal programs are searched over naf assumptions; disjunctive
/// programs by checking every consistent set of head literals.
inline std::vector<std::vector<Literal>> classical_answer_sets(const ClassicalProgram& p,
                                                              std::size_t max_atoms = default_max_atoms) {
    const auto atoms = detail::atom_count(p);
    if (atoms > max_atoms) throw bound_exceeded(atoms, max_atoms);
    if (!detail::disjunctive(p)) return detail::sorted(detail::NormalSearch(p).run());

    std::vector<Literal> heads;
    for (const auto& r : p.rules) heads.insert(heads.end(), r.head.begin(), r.head.end());
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    std::vector<LiteralSet> found;
    const std::uint64_t n = std::uint64_t{1} << heads.size();
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        LiteralSet i;
        for (std::size_t k = 0; k < heads.size(); ++k)
            if (mask >> k & 1) i.insert(heads[k]);
        if (!detail::has_complementary(i) && detail::disjunctive_answer_set(p, i)) found.push_back(std::move(i));
    }
    return detail::sorted(std::move(found));
}

/// Definition-level enumeration over every consistent literal set. Exponential
/// in 3^atoms; used to cross-check classical_answer_sets on tiny programs.
inline std::vector<std::vector<Literal>> naive_answer_sets(const ClassicalProgram& p, std::size_t max_atoms = 8) {
    std::set<Atom> atom_set;
    for (const auto& r : p.rules)
        for (const auto* v : {&r.head, &r.body_pos, &r.body_neg})
            for (const auto& l : *v) atom_set.insert(l.atom);
    std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
    if (atoms.size() > max_atoms) throw bound_exceeded(atoms.size(), max_atoms);

    std::uint64_t total = 1;
    for (std::size_t k = 0; k < atoms.size(); ++k) total *= 3;
    std::vector<LiteralSet> found;
    for (std::uint64_t code = 0; code < total; ++code) {
        LiteralSet i;
        auto c = code;
        for (const auto& a : atoms) {
            if (c % 3 == 1) i.insert(Literal{a, true});
            if (c % 3 == 2) i.insert(Literal{a, false});
            c /= 3;
        }
        if (detail::disjunctive_answer_set(p, i)) found.push_back(std::move(i));
    }
    return detail::sorted(std::move(found));
}

inline constexpr std::size_t max_qbf_variables = 20;

namespace detail {

inline bool qbf_step(const Qbf& q, const std::vector<Atom>& vars, std::size_t k, std::map<Atom, bool>& value,
                     const std::map<Atom, Quantifier>& quantifier) {
    if (k == vars.size()) {
        return std::any_of(q.matrix.begin(), q.matrix.end(), [&](const QbfClause& c) {
            return std::all_of(c.begin(), c.end(), [&](const QbfLiteral& l) { return value.at(l.variable) == l.positive; });
        });
    }
    const bool exists = quantifier.at(vars[k]) == Quantifier::exists;
    for (bool v : {false, true}) {
        value[vars[k]] = v;
        bool r = qbf_step(q, vars, k + 1, value, quantifier);
        if (exists && r) return true;
        if (!exists && !r) return false;
    }
    return !exists;
}

} // namespace detail

/// Truth value of a closed prenex-DNF QBF.
inline bool qbf_eval(const Qbf& q) {
    std::vector<Atom> vars;
    std::map<Atom, Quantifier> quantifier;
    for (const auto& b : q.blocks)
        for (const auto& v : b.variables) {
            vars.push_back(v);
            quantifier[v] = b.quantifier;
        }
    if (vars.size() > max_qbf_variables) throw bound_exceeded(vars.size(), max_qbf_variables);
    std::map<Atom, bool> value;
    return detail::qbf_step(q, vars, 0, value, quantifier);
}

} // namespace casp::oracle
