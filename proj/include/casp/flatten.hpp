#pragma once
// Flattening of a communicating normal program into one classical normal
// program. Situated literal Q:a becomes the atom __s_<Q>_x_<a>; underscores
// inside names are escaped as _u so the encoding is reversible.

#include "casp/classical.hpp"
#include "casp/error.hpp"
#include "casp/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace casp {

namespace detail {

inline std::string escape_name(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '_') out += "_u";
        else out += c;
    }
    return out;
}

inline std::optional<std::string> unescape_name(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '_') {
            out += s[i];
            continue;
        }
        if (i + 1 >= s.size() || s[i + 1] != 'u') return std::nullopt;
        out += '_';
        ++i;
    }
    return out;
}

inline std::string situated_key(const ComponentName& q, const Literal& l) {
    return escape_name(q.name()) + (l.positive ? "_x_" : "_y_") + escape_name(l.atom.name());
}

inline ClassicalRule fail_constraint(std::vector<Literal> pos, std::vector<Literal> neg) {
    static const Atom fail{"__fail"};
    neg.push_back(Literal{fail, true});
    return ClassicalRule{{Literal{fail, true}}, std::move(pos), std::move(neg)};
}

} // namespace detail

/// The classical literal standing for situated literal Q:l.
inline Literal situated_atom(const SituatedLiteral& s) {
    return Literal{Atom{"__s_" + detail::situated_key(s.component, Literal{s.literal.atom, true})}, s.literal.positive};
}

inline Atom guess_atom(const SituatedLiteral& s) { return Atom{"__g_" + detail::situated_key(s.component, s.literal)}; }
inline Atom not_guess_atom(const SituatedLiteral& s) { return Atom{"__ng_" + detail::situated_key(s.component, s.literal)}; }

/// Inverse of situated_atom on atoms; nullopt for atoms outside the encoding.
inline std::optional<SituatedLiteral> decode_situated(const Literal& l) {
    std::string_view name = l.atom.name();
    if (!name.starts_with("__s_")) return std::nullopt;
    name.remove_prefix(4);
    auto sep = name.find("_x_");
    if (sep == std::string_view::npos) return std::nullopt;
    auto comp = detail::unescape_name(name.substr(0, sep));
    auto atom = detail::unescape_name(name.substr(sep + 3));
    if (!comp || !atom) return std::nullopt;
    try {
        return SituatedLiteral{ComponentName{*comp}, Literal{Atom{*atom}, l.positive}};
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

/// Restricts a flattened answer set to the encoded situated literals.
inline Interpretation decode_flattened(const std::vector<Literal>& answer) {
    std::vector<SituatedLiteral> out;
    for (const auto& l : answer)
        if (auto s = decode_situated(l)) out.push_back(*s);
    return Interpretation(std::move(out));
}

/// One normal program whose answer sets, decoded, are the answer sets of `p`.
/// Each situated literal used as a non-local positive body literal gets a
/// guess / not-guess pair and two constraints tying the guess to the literal
/// of the component that establishes it.
inline ClassicalProgram to_normal(const CommunicatingProgram& p) {
    if (p.inferred_class() == ProgramClass::disjunctive || p.program_class == ProgramClass::disjunctive)
        throw class_mismatch("flattening needs a simple or normal program");

    ClassicalProgram out;
    std::vector<SituatedLiteral> guessed;
    for (const auto& [name, comp] : p.components) {
        for (const auto& r : comp.rules) {
            ClassicalRule nr;
            nr.head.push_back(situated_atom(r.head.front()));
            for (const auto& s : r.body_pos) {
                if (s.local_to(name)) {
                    nr.body_pos.push_back(situated_atom(s));
                } else {
                    nr.body_pos.push_back(Literal{guess_atom(s), true});
                    guessed.push_back(s);
                }
            }
            for (const auto& s : r.body_neg) nr.body_neg.push_back(situated_atom(s));
            out.rules.push_back(std::move(nr));
        }
    }
    detail::sort_unique(guessed);
    for (const auto& s : guessed) {
        Literal g{guess_atom(s), true};
        Literal ng{not_guess_atom(s), true};
        Literal sigma = situated_atom(s);
        out.rules.push_back(ClassicalRule{{g}, {}, {ng}});
        out.rules.push_back(ClassicalRule{{ng}, {}, {g}});
        out.rules.push_back(detail::fail_constraint({g}, {sigma}));
        out.rules.push_back(detail::fail_constraint({ng, sigma}, {}));
    }
    out.canonicalize();
    return out;
}

} // namespace casp
