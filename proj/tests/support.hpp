#pragma once

#include "casp/casp.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace casp::testing {

inline std::string fixture_text(const std::string& name) {
    std::ifstream in(std::string(CASP_FIXTURES) + "/" + name, std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline CommunicatingProgram fixture(const std::string& name) { return parse_program(fixture_text(name)); }

/// "Q:a, R:-b" -> interpretation.
inline Interpretation interp(const std::string& text) {
    std::vector<SituatedLiteral> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(' ');
        if (first == std::string::npos) continue;
        out.push_back(parse_situated_literal(item.substr(first), {true}));
    }
    return Interpretation(std::move(out));
}

inline std::vector<Interpretation> sets(std::initializer_list<const char*> items) {
    std::vector<Interpretation> out;
    for (const auto* s : items) out.push_back(interp(s));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Literal> lits(std::initializer_list<const char*> names) {
    std::vector<Literal> out;
    for (std::string n : names) {
        bool positive = n.front() != '-';
        out.push_back(Literal{Atom{positive ? n : n.substr(1)}, positive});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Single-component view of a classical program: every literal becomes Q:l.
inline std::vector<Interpretation> situate(const std::vector<std::vector<Literal>>& answers, const ComponentName& q) {
    std::vector<Interpretation> out;
    for (const auto& a : answers) {
        std::vector<SituatedLiteral> s;
        for (const auto& l : a) s.push_back(SituatedLiteral{q, l});
        out.emplace_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Answer sets of p computed through the flattened program and the oracle.
inline std::vector<Interpretation> via_oracle(const CommunicatingProgram& p, std::size_t max_atoms = 64) {
    std::vector<Interpretation> out;
    for (const auto& a : oracle::classical_answer_sets(to_normal(p), max_atoms)) out.push_back(decode_flattened(a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace casp::testing
