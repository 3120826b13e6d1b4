#pragma once
// Domain types for communicating programs: atoms, (situated) literals, rules,
// component programs, interpretations and focus sequences.

#include "casp/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace casp {

namespace detail {

inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_ident_char(char c) {
    return is_lower(c) || is_upper(c) || (c >= '0' && c <= '9') || c == '_';
}

// Identifiers are [a-z][A-Za-z0-9_]* (atoms) or [A-Z][A-Za-z0-9_]* (components),
// optionally behind the reserved "__" prefix used for generated names.
inline bool valid_identifier(std::string_view s, bool upper) {
    if (s.starts_with("__")) s.remove_prefix(2);
    if (s.empty()) return false;
    if (upper ? !is_upper(s.front()) : !is_lower(s.front())) return false;
    return std::all_of(s.begin(), s.end(), is_ident_char);
}

inline bool is_keyword(std::string_view s) { return s == "not" || s == "program"; }

template <class T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <class T>
bool is_sorted_unique(const std::vector<T>& v) {
    return std::adjacent_find(v.begin(), v.end(), [](const T& a, const T& b) { return !(a < b); }) == v.end();
}

template <class T>
bool contains_sorted(const std::vector<T>& v, const T& x) {
    return std::binary_search(v.begin(), v.end(), x);
}

template <class T>
bool includes_sorted(const std::vector<T>& big, const std::vector<T>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

struct atom_tag {
    static constexpr bool upper = false;
    static constexpr const char* what = "atom";
};
struct component_tag {
    static constexpr bool upper = true;
    static constexpr const char* what = "component name";
};

} // namespace detail

/// Validated identifier. Ordering is lexicographic on the name, which is the
/// total order every canonical output uses.
template <class Tag>
class Identifier {
public:
    explicit Identifier(std::string name) : name_(std::move(name)) {
        if (!detail::valid_identifier(name_, Tag::upper) || detail::is_keyword(name_)) {
            throw std::invalid_argument(std::string("invalid ") + Tag::what + " '" + name_ + "'");
        }
    }

    const std::string& name() const noexcept { return name_; }
    bool reserved() const noexcept { return name_.starts_with("__"); }

    friend bool operator==(const Identifier&, const Identifier&) = default;
    friend auto operator<=>(const Identifier&, const Identifier&) = default;

private:
    std::string name_;
};

using Atom = Identifier<detail::atom_tag>;
using ComponentName = Identifier<detail::component_tag>;

/// An atom or its classical negation.
struct Literal {
    Atom atom;
    bool positive = true;

    Literal negated() const { return Literal{atom, !positive}; }

    friend bool operator==(const Literal&, const Literal&) = default;
    // a < -a < b < -b
    friend std::strong_ordering operator<=>(const Literal& x, const Literal& y) {
        if (auto c = x.atom <=> y.atom; c != 0) return c;
        return y.positive <=> x.positive;
    }
};

inline std::string to_string(const Literal& l) { return (l.positive ? "" : "-") + l.atom.name(); }

/// A literal asked of a particular component: Q:l.
struct SituatedLiteral {
    ComponentName component;
    Literal literal;

    SituatedLiteral negated() const { return SituatedLiteral{component, literal.negated()}; }
    bool local_to(const ComponentName& q) const { return component == q; }

    friend bool operator==(const SituatedLiteral&, const SituatedLiteral&) = default;
    friend auto operator<=>(const SituatedLiteral&, const SituatedLiteral&) = default;
};

inline std::string to_string(const SituatedLiteral& s) {
    return s.component.name() + ":" + to_string(s.literal);
}

/// Body element with its naf flag.
struct ExtendedSituatedLiteral {
    SituatedLiteral inner;
    bool naf = false;

    friend bool operator==(const ExtendedSituatedLiteral&, const ExtendedSituatedLiteral&) = default;
    friend auto operator<=>(const ExtendedSituatedLiteral&, const ExtendedSituatedLiteral&) = default;
};

/// head :- body_pos, not body_neg.  The head is a disjunction.
struct Rule {
    std::vector<SituatedLiteral> head;
    std::vector<SituatedLiteral> body_pos;
    std::vector<SituatedLiteral> body_neg;

    /// Sorts and deduplicates the three parts.
    Rule& normalize() {
        detail::sort_unique(head);
        detail::sort_unique(body_pos);
        detail::sort_unique(body_neg);
        return *this;
    }

    std::vector<ExtendedSituatedLiteral> body() const {
        std::vector<ExtendedSituatedLiteral> out;
        for (const auto& s : body_pos) out.push_back({s, false});
        for (const auto& s : body_neg) out.push_back({s, true});
        return out;
    }

    bool is_fact() const { return body_pos.empty() && body_neg.empty(); }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

inline Rule make_rule(std::vector<SituatedLiteral> head, std::vector<SituatedLiteral> pos = {},
                      std::vector<SituatedLiteral> neg = {}) {
    Rule r{std::move(head), std::move(pos), std::move(neg)};
    r.normalize();
    return r;
}

struct ComponentProgram {
    ComponentName name;
    std::vector<Rule> rules;

    friend bool operator==(const ComponentProgram&, const ComponentProgram&) = default;
};

enum class ProgramClass { simple, normal, disjunctive };

inline const char* to_string(ProgramClass c) {
    switch (c) {
    case ProgramClass::simple: return "simple";
    case ProgramClass::normal: return "normal";
    case ProgramClass::disjunctive: return "disjunctive";
    }
    return "?";
}

/// Weakest class a single rule fits in.
inline ProgramClass rule_class(const Rule& r) {
    if (r.head.size() > 1) return ProgramClass::disjunctive;
    return r.body_neg.empty() ? ProgramClass::simple : ProgramClass::normal;
}

struct CommunicatingProgram {
    std::map<ComponentName, ComponentProgram> components;
    ProgramClass program_class = ProgramClass::simple;

    const ComponentProgram* find(const ComponentName& name) const {
        auto it = components.find(name);
        return it == components.end() ? nullptr : &it->second;
    }
    bool has(const ComponentName& name) const { return components.contains(name); }

    /// Adds an empty component if absent and returns it.
    ComponentProgram& component(const ComponentName& name) {
        return components.try_emplace(name, ComponentProgram{name, {}}).first->second;
    }

    std::vector<ComponentName> names() const {
        std::vector<ComponentName> out;
        for (const auto& [name, _] : components) out.push_back(name);
        return out;
    }

    std::size_t rule_count() const {
        std::size_t n = 0;
        for (const auto& [_, c] : components) n += c.rules.size();
        return n;
    }

    ProgramClass inferred_class() const {
        auto cls = ProgramClass::simple;
        for (const auto& [_, c] : components)
            for (const auto& r : c.rules) cls = std::max(cls, rule_class(r));
        return cls;
    }

    /// Normalizes every rule, deduplicates and sorts rules, and sets the class
    /// to the weakest one consistent with the rules.
    CommunicatingProgram& canonicalize() {
        for (auto& [_, c] : components) {
            for (auto& r : c.rules) r.normalize();
            detail::sort_unique(c.rules);
        }
        program_class = inferred_class();
        return *this;
    }

    friend bool operator==(const CommunicatingProgram&, const CommunicatingProgram&) = default;
};

/// A consistent set of situated literals, kept sorted.
class Interpretation {
public:
    Interpretation() = default;

    /// Throws std::invalid_argument if the literals are inconsistent.
    explicit Interpretation(std::vector<SituatedLiteral> literals) : literals_(std::move(literals)) {
        detail::sort_unique(literals_);
        if (auto clash = find_clash(literals_)) {
            throw std::invalid_argument("inconsistent interpretation: contains " + to_string(*clash) + " and " +
                                        to_string(clash->negated()));
        }
    }

    Interpretation(std::initializer_list<SituatedLiteral> literals)
        : Interpretation(std::vector<SituatedLiteral>(literals)) {}

    static std::optional<Interpretation> try_make(std::vector<SituatedLiteral> literals) {
        detail::sort_unique(literals);
        if (find_clash(literals)) return std::nullopt;
        Interpretation out;
        out.literals_ = std::move(literals);
        return out;
    }

    const std::vector<SituatedLiteral>& literals() const noexcept { return literals_; }
    std::size_t size() const noexcept { return literals_.size(); }
    bool empty() const noexcept { return literals_.empty(); }
    bool contains(const SituatedLiteral& s) const { return detail::contains_sorted(literals_, s); }
    bool includes(const Interpretation& other) const { return detail::includes_sorted(literals_, other.literals_); }

    auto begin() const { return literals_.begin(); }
    auto end() const { return literals_.end(); }

    friend bool operator==(const Interpretation&, const Interpretation&) = default;
    friend auto operator<=>(const Interpretation&, const Interpretation&) = default;

private:
    // Sorted input keeps Q:a and Q:-a adjacent.
    static std::optional<SituatedLiteral> find_clash(const std::vector<SituatedLiteral>& sorted) {
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            const auto& a = sorted[i];
            const auto& b = sorted[i + 1];
            if (a.component == b.component && a.literal.atom == b.literal.atom) return a;
        }
        return std::nullopt;
    }

    std::vector<SituatedLiteral> literals_;
};

inline std::string to_string(const Interpretation& i) {
    std::string out = "{";
    const char* sep = "";
    for (const auto& s : i) {
        out += std::exchange(sep, ", ");
        out += to_string(s);
    }
    return out + "}";
}

/// Ordered list of components to minimize on, one after the other.
struct FocusSequence {
    std::vector<ComponentName> names;

    friend bool operator==(const FocusSequence&, const FocusSequence&) = default;
};

/// Throws unknown_component if some name of `f` is not a component of `p`.
inline void check_focus(const CommunicatingProgram& p, const FocusSequence& f) {
    for (const auto& n : f.names) {
        if (!p.has(n)) throw unknown_component("focus names unknown component '" + n.name() + "'");
    }
}

// ---------------------------------------------------------------------------
// Operations

/// { l | q:l in i }, canonically ordered.
inline std::vector<Literal> project(const Interpretation& i, const ComponentName& q) {
    std::vector<Literal> out;
    for (const auto& s : i)
        if (s.component == q) out.push_back(s.literal);
    return out;
}

/// Atoms of the q-local literals that occur in component q.
inline std::vector<Atom> local_atoms(const ComponentProgram& q) {
    std::vector<Atom> out;
    auto add = [&](const std::vector<SituatedLiteral>& v) {
        for (const auto& s : v)
            if (s.component == q.name) out.push_back(s.literal.atom);
    };
    for (const auto& r : q.rules) {
        add(r.head);
        add(r.body_pos);
        add(r.body_neg);
    }
    detail::sort_unique(out);
    return out;
}

/// Atoms occurring anywhere in the program, local or not.
inline std::vector<Atom> all_atoms(const CommunicatingProgram& p) {
    std::vector<Atom> out;
    for (const auto& [_, c] : p.components)
        for (const auto& r : c.rules)
            for (const auto* v : {&r.head, &r.body_pos, &r.body_neg})
                for (const auto& s : *v) out.push_back(s.literal.atom);
    detail::sort_unique(out);
    return out;
}

/// Every component paired with every atom of the components' local Herbrand
/// bases. Positive situated atoms only.
inline std::vector<SituatedLiteral> herbrand_base(const CommunicatingProgram& p) {
    std::vector<Atom> atoms;
    for (const auto& [_, c] : p.components) {
        auto local = local_atoms(c);
        atoms.insert(atoms.end(), local.begin(), local.end());
    }
    detail::sort_unique(atoms);
    std::vector<SituatedLiteral> out;
    for (const auto& [name, _] : p.components)
        for (const auto& a : atoms) out.push_back(SituatedLiteral{name, Literal{a, true}});
    return out;
}

/// herbrand_base(p) together with the negations, sorted.
inline std::vector<SituatedLiteral> herbrand_literals(const CommunicatingProgram& p) {
    std::vector<SituatedLiteral> out;
    for (const auto& s : herbrand_base(p)) {
        out.push_back(s);
        out.push_back(s.negated());
    }
    detail::sort_unique(out);
    return out;
}

enum class ViolationKind { empty_head, non_local_head, duplicate_literal, class_violation, unknown_component };

inline const char* to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::empty_head: return "empty head";
    case ViolationKind::non_local_head: return "locality violation";
    case ViolationKind::duplicate_literal: return "duplicate literal";
    case ViolationKind::class_violation: return "class violation";
    case ViolationKind::unknown_component: return "unknown component";
    }
    return "?";
}

struct Violation {
    ComponentName component;
    std::size_t rule_index;
    ViolationKind kind;
    std::string reason;

    friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string to_string(const Violation& v) {
    return v.component.name() + " rule " + std::to_string(v.rule_index) + ": " + to_string(v.kind) + ": " +
           v.reason;
}

/// Checks every structural invariant. An empty result means the program is valid.
inline std::vector<Violation> validate(const CommunicatingProgram& p) {
    std::vector<Violation> out;
    for (const auto& [name, c] : p.components) {
        if (c.name != name) {
            out.push_back({name, 0, ViolationKind::non_local_head,
                           "component stored under '" + name.name() + "' is named '" + c.name.name() + "'"});
        }
        for (std::size_t i = 0; i < c.rules.size(); ++i) {
            const auto& r = c.rules[i];
            auto report = [&](ViolationKind k, std::string why) { out.push_back({name, i, k, std::move(why)}); };
            if (r.head.empty()) report(ViolationKind::empty_head, "constraints must be desugared");
            for (const auto& h : r.head) {
                if (h.component != name) {
                    report(ViolationKind::non_local_head, "head literal " + to_string(h) + " is not " + name.name() +
                                                              "-local");
                }
            }
            for (const auto* part : {&r.head, &r.body_pos, &r.body_neg}) {
                auto sorted = *part;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                    report(ViolationKind::duplicate_literal, "a rule part lists the same literal twice");
                }
                for (const auto& s : *part) {
                    if (!p.has(s.component)) {
                        report(ViolationKind::unknown_component, "literal " + to_string(s) +
                                                                     " refers to an undeclared component");
                    }
                }
            }
            if (p.program_class == ProgramClass::simple && !r.body_neg.empty()) {
                report(ViolationKind::class_violation, "simple program with negation-as-failure in a body");
            }
            if (p.program_class != ProgramClass::disjunctive && r.head.size() > 1) {
                report(ViolationKind::class_violation,
                       std::string(to_string(p.program_class)) + " program with a disjunctive head");
            }
        }
    }
    return out;
}

} // namespace casp
