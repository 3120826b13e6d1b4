#pragma once
// Prenex quantified boolean formulas with a DNF matrix.

#include "casp/model.hpp"

#include <set>
#include <string>
#include <vector>

namespace casp {

enum class Quantifier { exists, forall };

inline const char* to_string(Quantifier q) { return q == Quantifier::exists ? "exists" : "forall"; }

struct QuantifierBlock {
    Quantifier quantifier;
    std::vector<Atom> variables;

    friend bool operator==(const QuantifierBlock&, const QuantifierBlock&) = default;
};

struct QbfLiteral {
    Atom variable;
    bool positive = true;

    friend bool operator==(const QbfLiteral&, const QbfLiteral&) = default;
    friend auto operator<=>(const QbfLiteral&, const QbfLiteral&) = default;
};

/// A conjunction of literals; the matrix is the disjunction of its clauses.
using QbfClause = std::vector<QbfLiteral>;

struct Qbf {
    std::vector<QuantifierBlock> blocks;
    std::vector<QbfClause> matrix;

    Quantifier first_quantifier() const { return blocks.front().quantifier; }

    /// Variables in prefix order.
    std::vector<Atom> variables() const {
        std::vector<Atom> out;
        for (const auto& b : blocks) out.insert(out.end(), b.variables.begin(), b.variables.end());
        return out;
    }

    std::size_t variable_count() const {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.variables.size();
        return n;
    }

    friend bool operator==(const Qbf&, const Qbf&) = default;
};

/// Structural problems of `q`; empty iff the prefix alternates, blocks are
/// nonempty, every variable is bound once and every clause is nonempty.
inline std::vector<std::string> qbf_problems(const Qbf& q) {
    std::vector<std::string> out;
    if (q.blocks.empty()) out.push_back("no quantifier block");
    std::set<Atom> bound;
    for (std::size_t i = 0; i < q.blocks.size(); ++i) {
        const auto& b = q.blocks[i];
        if (b.variables.empty()) out.push_back("empty quantifier block");
        if (i > 0 && q.blocks[i - 1].quantifier == b.quantifier) out.push_back("quantifiers do not alternate");
        for (const auto& v : b.variables)
            if (!bound.insert(v).second) out.push_back("variable '" + v.name() + "' is bound twice");
    }
    if (q.matrix.empty()) out.push_back("empty matrix");
    for (const auto& c : q.matrix) {
        if (c.empty()) out.push_back("empty clause");
        for (const auto& l : c)
            if (!bound.contains(l.variable)) out.push_back("variable '" + l.variable.name() + "' is unbound");
    }
    return out;
}

} // namespace casp
