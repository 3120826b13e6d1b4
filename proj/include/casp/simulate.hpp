#pragma once
// Negation-as-failure elimination: a communicating normal program is
// rewritten into a communicating simple program with a primed copy Q' and a
// mirror component N per original component Q. Answer sets map back and forth
// through lift_answer_set / project_back.

#include "casp/engine.hpp"
#include "casp/error.hpp"
#include "casp/model.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace casp {

/// Naming of the simulation: component renames and the fresh atom chosen for
/// every naf-mentioned situated literal.
struct FreshLiteralMap {
    /// Q -> Q'
    std::map<ComponentName, ComponentName> primed;
    /// Q -> N
    std::map<ComponentName, ComponentName> mirror;
    /// Q:b (mentioned under naf somewhere) -> fresh atom of N, written b^ below.
    std::map<SituatedLiteral, Atom> fresh;

    /// Fresh atoms of one mirror component, in atom order.
    std::vector<Atom> fresh_atoms_of(const ComponentName& source) const {
        std::vector<Atom> out;
        for (const auto& [s, atom] : fresh)
            if (s.component == source) out.push_back(atom);
        detail::sort_unique(out);
        return out;
    }
};

struct NafSimulation {
    CommunicatingProgram program;
    FreshLiteralMap map;
    /// N:__total for every mirror component.
    std::vector<SituatedLiteral> total_markers;
    /// Rules of the naf-free rewrite excluding totality rules; at most
    /// 3 * |fresh| more than the source.
    std::size_t core_rule_count = 0;
};

inline const Atom& total_atom() {
    static const Atom atom{"__total"};
    return atom;
}

namespace detail {

inline ComponentName primed_name(const ComponentName& q) { return ComponentName{"__P_" + q.name()}; }
inline ComponentName mirror_name(const ComponentName& q) { return ComponentName{"__N_" + q.name()}; }

/// __f_a for a, __nf_a for -a.
inline Atom fresh_name(const Literal& l) { return Atom{(l.positive ? "__f_" : "__nf_") + l.atom.name()}; }

inline Atom cover_name(const Atom& fresh) { return Atom{"__cover" + fresh.name().substr(1)}; }

inline SituatedLiteral at(const ComponentName& c, const Atom& a, bool positive = true) {
    return SituatedLiteral{c, Literal{a, positive}};
}

/// Rewrites the rules of q: positives move to the primed components, `not Q_j:k`
/// becomes N_j:-k^.
inline std::vector<Rule> rewrite_positive(const ComponentProgram& q, const FreshLiteralMap& map) {
    std::vector<Rule> out;
    for (const auto& r : q.rules) {
        Rule nr;
        nr.head.push_back(SituatedLiteral{map.primed.at(q.name), r.head.front().literal});
        for (const auto& s : r.body_pos) nr.body_pos.push_back(SituatedLiteral{map.primed.at(s.component), s.literal});
        for (const auto& s : r.body_neg) nr.body_pos.push_back(at(map.mirror.at(s.component), map.fresh.at(s), false));
        out.push_back(nr.normalize());
    }
    return out;
}

} // namespace detail

/// Builds the simple program simulating the normal program `p`, including the
/// totality rules N:__cover_x :- N:x^ / N:-x^ and N:__total :- all covers.
inline NafSimulation simulate_naf(const CommunicatingProgram& p) {
    if (p.inferred_class() == ProgramClass::disjunctive || p.program_class == ProgramClass::disjunctive)
        throw class_mismatch("naf simulation needs a simple or normal program");

    NafSimulation sim;
    auto& map = sim.map;
    for (const auto& [name, _] : p.components) {
        map.primed.emplace(name, detail::primed_name(name));
        map.mirror.emplace(name, detail::mirror_name(name));
    }
    for (const auto& [_, comp] : p.components)
        for (const auto& r : comp.rules)
            for (const auto& s : r.body_neg) map.fresh.emplace(s, detail::fresh_name(s.literal));

    auto& out = sim.program;
    for (const auto& [name, comp] : p.components) {
        const auto& qp = map.primed.at(name);
        const auto& n = map.mirror.at(name);
        auto& primed = out.component(qp);
        auto& mirror = out.component(n);
        primed.rules = detail::rewrite_positive(comp, map);
        for (const auto& [s, hat] : map.fresh) {
            if (s.component != name) continue;
            primed.rules.push_back(make_rule({detail::at(qp, hat, false)}, {detail::at(n, hat, false)}));
            mirror.rules.push_back(make_rule({detail::at(n, hat, false)}, {detail::at(qp, hat, false)}));
            mirror.rules.push_back(make_rule({detail::at(n, hat)}, {SituatedLiteral{qp, s.literal}}));
        }
    }
    sim.core_rule_count = out.rule_count();

    for (const auto& [name, _] : p.components) {
        const auto& n = map.mirror.at(name);
        auto& mirror = out.component(n);
        std::vector<SituatedLiteral> covers;
        for (const auto& hat : map.fresh_atoms_of(name)) {
            auto cover = detail::at(n, detail::cover_name(hat));
            mirror.rules.push_back(make_rule({cover}, {detail::at(n, hat)}));
            mirror.rules.push_back(make_rule({cover}, {detail::at(n, hat, false)}));
            covers.push_back(cover);
        }
        mirror.rules.push_back(make_rule({detail::at(n, total_atom())}, covers));
        sim.total_markers.push_back(detail::at(n, total_atom()));
    }
    out.canonicalize();
    detail::sort_unique(sim.total_markers);
    return sim;
}

inline bool has_total_markers(const NafSimulation& sim, const Interpretation& m) {
    return std::all_of(sim.total_markers.begin(), sim.total_markers.end(),
                       [&](const SituatedLiteral& s) { return m.contains(s); });
}

/// Image of a source answer set in the simulation: Q':a for members,
/// Q':-b^ and N:-b^ for naf-mentioned non-members, N:b^ for naf-mentioned
/// members, plus the cover literals and total markers they entail.
inline Interpretation lift_answer_set(const Interpretation& m, const FreshLiteralMap& map) {
    std::vector<SituatedLiteral> out;
    for (const auto& s : m) out.push_back(SituatedLiteral{map.primed.at(s.component), s.literal});
    for (const auto& [s, hat] : map.fresh) {
        const auto& n = map.mirror.at(s.component);
        if (m.contains(s)) {
            out.push_back(detail::at(n, hat));
        } else {
            out.push_back(detail::at(map.primed.at(s.component), hat, false));
            out.push_back(detail::at(n, hat, false));
        }
    }
    for (const auto& [source, n] : map.mirror) {
        for (const auto& hat : map.fresh_atoms_of(source)) out.push_back(detail::at(n, detail::cover_name(hat)));
        out.push_back(detail::at(n, total_atom()));
    }
    return Interpretation(std::move(out));
}

/// Source answer set corresponding to a simulation answer set whose mirror
/// projections are total: Q:b for every b in the fixpoint of the reduct of
/// the rewritten rules of Q'. Throws not_total otherwise.
inline Interpretation project_back(const Interpretation& m, const FreshLiteralMap& map,
                                   const CommunicatingProgram& source) {
    std::string missing;
    for (const auto& [name, n] : map.mirror) {
        for (const auto& hat : map.fresh_atoms_of(name)) {
            if (!m.contains(detail::at(n, hat)) && !m.contains(detail::at(n, hat, false)))
                missing += " " + n.name() + ":" + hat.name();
        }
        if (!m.contains(detail::at(n, total_atom()))) missing += " " + n.name() + ":" + total_atom().name();
    }
    if (!missing.empty())
        throw not_total("mirror projections are not total; undecided or missing:" + missing);

    std::vector<SituatedLiteral> out;
    for (const auto& [name, comp] : source.components) {
        ComponentProgram positive{map.primed.at(name), detail::rewrite_positive(comp, map)};
        auto fix = classical_fixpoint(communicating_reduct(positive, m));
        if (!fix.consistent) throw inconsistent_fixpoint("rewritten component " + positive.name.name() + " is inconsistent");
        for (const auto& l : fix.literals) out.push_back(SituatedLiteral{name, l});
    }
    return Interpretation(std::move(out));
}

/// The rewritten (naf-free) rules of component q inside the simulation.
inline std::vector<Rule> rewritten_rules(const ComponentProgram& q, const FreshLiteralMap& map) {
    auto rules = detail::rewrite_positive(q, map);
    detail::sort_unique(rules);
    return rules;
}

} // namespace casp
