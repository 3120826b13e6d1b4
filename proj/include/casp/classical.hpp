#pragma once
// Classical (single-program) answer set machinery: reduct, least fixpoint of
// simple programs, minimal models of positive disjunctive programs.

#include "casp/detail/positive.hpp"
#include "casp/error.hpp"
#include "casp/model.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace casp {

struct ClassicalRule {
    std::vector<Literal> head;
    std::vector<Literal> body_pos;
    std::vector<Literal> body_neg;

    ClassicalRule& normalize() {
        detail::sort_unique(head);
        detail::sort_unique(body_pos);
        detail::sort_unique(body_neg);
        return *this;
    }

    friend bool operator==(const ClassicalRule&, const ClassicalRule&) = default;
    friend auto operator<=>(const ClassicalRule&, const ClassicalRule&) = default;
};

struct ClassicalProgram {
    std::vector<ClassicalRule> rules;
    ProgramClass program_class = ProgramClass::simple;

    ProgramClass inferred_class() const {
        auto cls = ProgramClass::simple;
        for (const auto& r : rules) {
            if (r.head.size() > 1) cls = ProgramClass::disjunctive;
            else if (!r.body_neg.empty()) cls = std::max(cls, ProgramClass::normal);
        }
        return cls;
    }

    ClassicalProgram& canonicalize() {
        for (auto& r : rules) r.normalize();
        detail::sort_unique(rules);
        program_class = inferred_class();
        return *this;
    }

    bool positive() const {
        return std::all_of(rules.begin(), rules.end(), [](const ClassicalRule& r) { return r.body_neg.empty(); });
    }

    std::vector<Atom> atoms() const {
        std::vector<Atom> out;
        for (const auto& r : rules)
            for (const auto* v : {&r.head, &r.body_pos, &r.body_neg})
                for (const auto& l : *v) out.push_back(l.atom);
        detail::sort_unique(out);
        return out;
    }

    friend bool operator==(const ClassicalProgram&, const ClassicalProgram&) = default;
};

/// Result of a least-fixpoint computation; `literals` is meaningful only when
/// the fixpoint is consistent.
struct Fixpoint {
    std::vector<Literal> literals;
    bool consistent = true;
};

/// Treats every literal of a single component as a plain literal.
inline ClassicalProgram as_classical(const ComponentProgram& q) {
    ClassicalProgram out;
    auto strip = [](const std::vector<SituatedLiteral>& v) {
        std::vector<Literal> ls;
        for (const auto& s : v) ls.push_back(s.literal);
        return ls;
    };
    for (const auto& r : q.rules) out.rules.push_back(ClassicalRule{strip(r.head), strip(r.body_pos), strip(r.body_neg)});
    out.canonicalize();
    return out;
}

/// Wraps a classical program as the only component of a communicating program.
inline CommunicatingProgram as_communicating(const ClassicalProgram& p, const ComponentName& name) {
    CommunicatingProgram out;
    auto& comp = out.component(name);
    auto situate = [&](const std::vector<Literal>& v) {
        std::vector<SituatedLiteral> ss;
        for (const auto& l : v) ss.push_back(SituatedLiteral{name, l});
        return ss;
    };
    for (const auto& r : p.rules) comp.rules.push_back(make_rule(situate(r.head), situate(r.body_pos), situate(r.body_neg)));
    out.canonicalize();
    return out;
}

namespace detail {

/// Maps atoms to dense indices (in atom order) for the integer algorithms.
class AtomIndex {
public:
    explicit AtomIndex(std::vector<Atom> atoms) : atoms_(std::move(atoms)) { sort_unique(atoms_); }

    std::size_t universe() const { return 2 * atoms_.size(); }
    int id(const Literal& l) const {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), l.atom);
        return 2 * static_cast<int>(it - atoms_.begin()) + (l.positive ? 0 : 1);
    }
    Literal literal(int id) const { return Literal{atoms_[id / 2], id % 2 == 0}; }

    std::vector<int> ids(const std::vector<Literal>& ls) const {
        std::vector<int> out;
        for (const auto& l : ls) out.push_back(id(l));
        return out;
    }
    std::vector<IRule> rules(const ClassicalProgram& p) const {
        std::vector<IRule> out;
        for (const auto& r : p.rules) out.push_back(IRule{ids(r.head), ids(r.body_pos), ids(r.body_neg)});
        return out;
    }
    Membership membership(const std::vector<Literal>& ls) const {
        Membership m(universe(), 0);
        for (const auto& l : ls) m[id(l)] = 1;
        return m;
    }
    std::vector<Literal> literals(const Membership& m) const {
        std::vector<Literal> out;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) out.push_back(literal(static_cast<int>(i)));
        return out;
    }

private:
    std::vector<Atom> atoms_;
};

inline AtomIndex index_for(const ClassicalProgram& p, const std::vector<Literal>& extra = {}) {
    auto atoms = p.atoms();
    for (const auto& l : extra) atoms.push_back(l.atom);
    return AtomIndex(std::move(atoms));
}

} // namespace detail

/// P^I: keeps the rules whose naf part is disjoint from `i`, without the naf part.
inline ClassicalProgram classical_reduct(const ClassicalProgram& p, const std::vector<Literal>& i) {
    std::vector<Literal> sorted = i;
    detail::sort_unique(sorted);
    ClassicalProgram out;
    for (const auto& r : p.rules) {
        bool blocked = std::any_of(r.body_neg.begin(), r.body_neg.end(),
                                   [&](const Literal& l) { return detail::contains_sorted(sorted, l); });
        if (!blocked) out.rules.push_back(ClassicalRule{r.head, r.body_pos, {}});
    }
    out.program_class = out.inferred_class();
    return out;
}

/// Least fixpoint of T_P from the empty set. Requires a simple program.
inline Fixpoint classical_fixpoint(const ClassicalProgram& p) {
    for (const auto& r : p.rules) {
        if (r.head.size() != 1 || !r.body_neg.empty())
            throw class_mismatch("classical_fixpoint needs a simple program");
    }
    auto index = detail::index_for(p);
    auto rules = index.rules(p);
    auto m = detail::least_model(rules, index.universe());
    return Fixpoint{index.literals(m), detail::consistent(m)};
}

/// All subset-minimal consistent models. Requires a program without naf.
inline std::vector<std::vector<Literal>> minimal_models(const ClassicalProgram& p) {
    if (!p.positive()) throw class_mismatch("minimal_models needs a program without negation-as-failure");
    auto index = detail::index_for(p);
    auto rules = index.rules(p);
    std::vector<std::vector<Literal>> out;
    for (const auto& m : detail::minimal_models(rules, index.universe())) out.push_back(index.literals(m));
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff `i` is consistent and a subset-minimal model of the positive program `p`.
inline bool is_minimal_model(const ClassicalProgram& p, const std::vector<Literal>& i) {
    if (!p.positive()) throw class_mismatch("is_minimal_model needs a program without negation-as-failure");
    auto index = detail::index_for(p, i);
    auto rules = index.rules(p);
    return detail::is_minimal_model(rules, index.membership(i));
}

inline std::string render_rule(const ClassicalRule& r) {
    std::string out;
    const char* sep = "";
    for (const auto& h : r.head) out += std::exchange(sep, " ; ") + to_string(h);
    if (r.body_pos.empty() && r.body_neg.empty()) return out + ".";
    out += " :- ";
    sep = "";
    for (const auto& l : r.body_pos) out += std::exchange(sep, ", ") + to_string(l);
    for (const auto& l : r.body_neg) out += std::string(std::exchange(sep, ", ")) + "not " + to_string(l);
    return out + ".";
}

} // namespace casp
