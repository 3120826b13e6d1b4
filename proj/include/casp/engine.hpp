#pragma once
// Answer sets of communicating programs: the communicating reduct, the
// answer-set check, exhaustive enumeration, the least fixpoint of simple
// programs, and brave/cautious queries.

#include "casp/classical.hpp"
#include "casp/detail/positive.hpp"
#include "casp/error.hpp"
#include "casp/model.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace casp {

/// How the projection of an answer set must relate to the minimal models of a
/// disjunctive reduct.
enum class Minimality {
    any_minimal,    ///< is one of the minimal models
    unique_minimal, ///< is the only minimal model
};

/// Candidate space of enumerate_answer_sets.
enum class Search {
    /// Guess only the literals the reducts depend on (naf literals and
    /// non-local positive body literals); derive the rest.
    reduct_guess,
    /// Guess consistent subsets of the literals occurring in some head of
    /// their own component.
    head_supported,
    /// Guess consistent subsets of HB(P) and its negation.
    unpruned,
};

inline const char* to_string(Search s) {
    switch (s) {
    case Search::reduct_guess: return "reduct";
    case Search::head_supported: return "heads";
    case Search::unpruned: return "full";
    }
    return "?";
}

inline constexpr std::size_t default_bound = 24;

struct EnumerateOptions {
    /// Maximum number of guessed situated literals.
    std::size_t bound = default_bound;
    Search search = Search::reduct_guess;
    unsigned jobs = 1;
    Minimality minimality = Minimality::any_minimal;
};

/// Q^I: drops rules blocked by a naf literal in I or by a non-local literal
/// missing from I, then drops the remaining naf and non-local literals.
inline ClassicalProgram communicating_reduct(const ComponentProgram& q, const Interpretation& i) {
    ClassicalProgram out;
    for (const auto& r : q.rules) {
        if (std::any_of(r.body_neg.begin(), r.body_neg.end(), [&](const auto& s) { return i.contains(s); })) continue;
        if (std::any_of(r.body_pos.begin(), r.body_pos.end(),
                        [&](const auto& s) { return !s.local_to(q.name) && !i.contains(s); }))
            continue;
        ClassicalRule reduced;
        for (const auto& h : r.head) reduced.head.push_back(h.literal);
        for (const auto& s : r.body_pos)
            if (s.local_to(q.name)) reduced.body_pos.push_back(s.literal);
        out.rules.push_back(std::move(reduced.normalize()));
    }
    out.canonicalize();
    return out;
}

/// Definitional check: every component's projection is the answer set of its reduct.
inline bool is_answer_set(const CommunicatingProgram& p, const Interpretation& i,
                          Minimality minimality = Minimality::any_minimal) {
    for (const auto& s : i)
        if (!p.has(s.component)) return false;
    const bool disjunctive = p.program_class == ProgramClass::disjunctive;
    for (const auto& [name, comp] : p.components) {
        auto reduct = communicating_reduct(comp, i);
        auto own = project(i, name);
        if (!disjunctive) {
            auto fix = classical_fixpoint(reduct);
            if (!fix.consistent || fix.literals != own) return false;
        } else if (minimality == Minimality::any_minimal) {
            if (!is_minimal_model(reduct, own)) return false;
        } else {
            auto models = minimal_models(reduct);
            if (models.size() != 1 || models.front() != own) return false;
        }
    }
    return true;
}

/// One application of T_P for a simple program: i plus every head whose body holds in i.
inline std::vector<SituatedLiteral> immediate_consequence(const CommunicatingProgram& p,
                                                          std::vector<SituatedLiteral> i) {
    if (p.inferred_class() != ProgramClass::simple) throw class_mismatch("T_P is defined for simple programs");
    detail::sort_unique(i);
    std::vector<SituatedLiteral> out = i;
    for (const auto& [_, comp] : p.components)
        for (const auto& r : comp.rules)
            if (detail::includes_sorted(i, r.body_pos)) out.push_back(r.head.front());
    detail::sort_unique(out);
    return out;
}

/// Least fixpoint of T_P from the empty interpretation. Throws
/// inconsistent_fixpoint if it contains Q:a and Q:-a.
inline Interpretation communicating_fixpoint(const CommunicatingProgram& p) {
    std::vector<SituatedLiteral> current;
    for (;;) {
        auto next = immediate_consequence(p, current);
        if (next == current) break;
        current = std::move(next);
    }
    auto out = Interpretation::try_make(current);
    if (!out) throw inconsistent_fixpoint("least fixpoint of the simple program is inconsistent");
    return *out;
}

namespace detail {

/// Integer form of a communicating program. Situated literal ids are
/// 2 * (component * atoms + atom) + sign, so ids follow the canonical order.
class CompiledProgram {
public:
    struct CRule {
        std::vector<int> head;
        std::vector<int> local_pos;
        std::vector<int> remote_pos;
        std::vector<int> neg;
    };

    explicit CompiledProgram(const CommunicatingProgram& p) : components_(p.names()), atoms_(all_atoms(p)) {
        rules_.resize(components_.size());
        std::size_t c = 0;
        for (const auto& [name, comp] : p.components) {
            for (const auto& r : comp.rules) {
                CRule cr;
                for (const auto& h : r.head) cr.head.push_back(id(h));
                for (const auto& s : r.body_pos) (s.local_to(name) ? cr.local_pos : cr.remote_pos).push_back(id(s));
                for (const auto& s : r.body_neg) cr.neg.push_back(id(s));
                rules_[c].push_back(std::move(cr));
            }
            ++c;
        }
    }

    std::size_t components() const { return components_.size(); }
    std::size_t universe() const { return 2 * components_.size() * atoms_.size(); }
    const std::vector<CRule>& rules(std::size_t c) const { return rules_[c]; }
    std::size_t component_of(int id) const { return static_cast<std::size_t>(id / 2) / atoms_.size(); }

    int id(const SituatedLiteral& s) const {
        auto c = std::lower_bound(components_.begin(), components_.end(), s.component) - components_.begin();
        auto a = std::lower_bound(atoms_.begin(), atoms_.end(), s.literal.atom) - atoms_.begin();
        return 2 * static_cast<int>(c * atoms_.size() + a) + (s.literal.positive ? 0 : 1);
    }

    SituatedLiteral literal(int id) const {
        auto cell = static_cast<std::size_t>(id / 2);
        return SituatedLiteral{components_[cell / atoms_.size()], Literal{atoms_[cell % atoms_.size()], id % 2 == 0}};
    }

    Interpretation interpretation(const Membership& m) const {
        std::vector<SituatedLiteral> out;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) out.push_back(literal(static_cast<int>(i)));
        return Interpretation(std::move(out));
    }

private:
    std::vector<ComponentName> components_;
    std::vector<Atom> atoms_;
    std::vector<std::vector<CRule>> rules_;
};

/// Mixed-radix walk over consistent subsets of a set of literal ids: each
/// situated atom is absent, positive, or (when both signs are candidates) negative.
class GuessSpace {
public:
    explicit GuessSpace(std::vector<int> literals) : literals_(std::move(literals)) {
        sort_unique(literals_);
        for (std::size_t i = 0; i < literals_.size();) {
            Cell cell{literals_[i], -1};
            if (i + 1 < literals_.size() && literals_[i + 1] == (literals_[i] ^ 1)) {
                cell.second = literals_[i + 1];
                ++i;
            }
            cells_.push_back(cell);
            ++i;
        }
    }

    std::size_t dimension() const { return literals_.size(); }
    const std::vector<int>& literals() const { return literals_; }

    std::uint64_t size() const {
        std::uint64_t n = 1;
        for (const auto& c : cells_) n *= c.second < 0 ? 2 : 3;
        return n;
    }

    /// Writes guess number `index` into `m` (only the candidate literals are touched).
    void assign(std::uint64_t index, Membership& m) const {
        for (const auto& c : cells_) {
            std::uint64_t radix = c.second < 0 ? 2 : 3;
            auto digit = index % radix;
            index /= radix;
            m[c.first] = digit == 1;
            if (c.second >= 0) m[c.second] = digit == 2;
        }
    }

private:
    using Cell = std::pair<int, int>;
    std::vector<int> literals_;
    std::vector<Cell> cells_;
};

/// Literals whose membership in I decides every reduct Q^I.
inline std::vector<int> reduct_literals(const CompiledProgram& cp) {
    std::vector<int> out;
    for (std::size_t c = 0; c < cp.components(); ++c)
        for (const auto& r : cp.rules(c)) {
            out.insert(out.end(), r.neg.begin(), r.neg.end());
            out.insert(out.end(), r.remote_pos.begin(), r.remote_pos.end());
        }
    sort_unique(out);
    return out;
}

inline std::vector<int> head_literals(const CompiledProgram& cp) {
    std::vector<int> out;
    for (std::size_t c = 0; c < cp.components(); ++c)
        for (const auto& r : cp.rules(c)) out.insert(out.end(), r.head.begin(), r.head.end());
    sort_unique(out);
    return out;
}

inline std::vector<int> herbrand_ids(const CompiledProgram& cp, const CommunicatingProgram& p) {
    std::vector<int> out;
    for (const auto& s : herbrand_literals(p)) out.push_back(cp.id(s));
    sort_unique(out);
    return out;
}

/// Candidates for one reduct guess: the per-component fixpoints (or minimal
/// models) that agree with the guess, combined across components.
class ReductGuesser {
public:
    ReductGuesser(const CompiledProgram& cp, const GuessSpace& space, bool disjunctive)
        : cp_(cp), space_(space), disjunctive_(disjunctive) {}

    template <class Emit>
    void run(std::uint64_t index, Emit&& emit) const {
        Membership guess(cp_.universe(), 0);
        space_.assign(index, guess);
        std::vector<std::vector<Membership>> options(cp_.components());
        for (std::size_t c = 0; c < cp_.components(); ++c) {
            std::vector<IRule> reduct;
            for (const auto& r : cp_.rules(c)) {
                if (any_in(r.neg, guess)) continue;
                if (!all_in(r.remote_pos, guess)) continue;
                reduct.push_back(IRule{r.head, r.local_pos, {}});
            }
            if (!disjunctive_) {
                auto m = least_model(reduct, cp_.universe());
                if (consistent(m) && agrees(c, m, guess)) options[c].push_back(std::move(m));
            } else {
                for (auto& m : minimal_models(reduct, cp_.universe()))
                    if (agrees(c, m, guess)) options[c].push_back(std::move(m));
            }
            if (options[c].empty()) return;
        }
        Membership acc(cp_.universe(), 0);
        combine(options, 0, acc, emit);
    }

private:
    bool agrees(std::size_t c, const Membership& m, const Membership& guess) const {
        for (int l : space_.literals())
            if (cp_.component_of(l) == c && (m[l] != 0) != (guess[l] != 0)) return false;
        return true;
    }

    template <class Emit>
    void combine(const std::vector<std::vector<Membership>>& options, std::size_t c, Membership& acc,
                 Emit& emit) const {
        if (c == options.size()) {
            emit(acc);
            return;
        }
        for (const auto& m : options[c]) {
            Membership next = acc;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) next[i] = 1;
            combine(options, c + 1, next, emit);
        }
    }

    const CompiledProgram& cp_;
    const GuessSpace& space_;
    bool disjunctive_;
};

} // namespace detail

/// Number of situated literals the chosen search guesses for `p`; this is the
/// quantity compared against EnumerateOptions::bound.
inline std::size_t search_dimension(const CommunicatingProgram& p, Search search) {
    detail::CompiledProgram cp(p);
    switch (search) {
    case Search::reduct_guess: return detail::reduct_literals(cp).size();
    case Search::head_supported: return detail::head_literals(cp).size();
    case Search::unpruned: return detail::herbrand_ids(cp, p).size();
    }
    return 0;
}

/// All answer sets of `p`, canonically ordered. Every reported set passes is_answer_set.
inline std::vector<Interpretation> enumerate_answer_sets(const CommunicatingProgram& p,
                                                         const EnumerateOptions& opts = {}) {
    detail::CompiledProgram cp(p);
    std::vector<int> guessed;
    switch (opts.search) {
    case Search::reduct_guess: guessed = detail::reduct_literals(cp); break;
    case Search::head_supported: guessed = detail::head_literals(cp); break;
    case Search::unpruned: guessed = detail::herbrand_ids(cp, p); break;
    }
    if (guessed.size() > opts.bound) throw bound_exceeded(guessed.size(), opts.bound);

    const detail::GuessSpace space(std::move(guessed));
    const bool disjunctive = p.program_class == ProgramClass::disjunctive;
    const detail::ReductGuesser guesser(cp, space, disjunctive);

    auto work = [&](std::uint64_t begin, std::uint64_t end, std::vector<Interpretation>& out) {
        detail::Membership m(cp.universe(), 0);
        for (std::uint64_t index = begin; index < end; ++index) {
            if (opts.search == Search::reduct_guess) {
                guesser.run(index, [&](const detail::Membership& candidate) {
                    auto i = cp.interpretation(candidate);
                    if (is_answer_set(p, i, opts.minimality)) out.push_back(std::move(i));
                });
            } else {
                space.assign(index, m);
                auto i = cp.interpretation(m);
                if (is_answer_set(p, i, opts.minimality)) out.push_back(std::move(i));
            }
        }
    };

    const std::uint64_t total = space.size();
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
    std::vector<std::vector<Interpretation>> parts(jobs);
    if (jobs == 1) {
        work(0, total, parts[0]);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
            std::uint64_t begin = total * j / jobs;
            std::uint64_t end = total * (j + 1) / jobs;
            workers.emplace_back([&, begin, end, j] { work(begin, end, parts[j]); });
        }
    }
    std::vector<Interpretation> out;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
    detail::sort_unique(out);
    return out;
}

struct Query {
    enum class Kind { exists, brave, cautious };

    Kind kind = Kind::exists;
    std::optional<SituatedLiteral> literal;

    static Query exists() { return {Kind::exists, std::nullopt}; }
    static Query brave(SituatedLiteral s) { return {Kind::brave, std::move(s)}; }
    static Query cautious(SituatedLiteral s) { return {Kind::cautious, std::move(s)}; }

    friend bool operator==(const Query&, const Query&) = default;
};

inline const char* to_string(Query::Kind k) {
    switch (k) {
    case Query::Kind::exists: return "exists";
    case Query::Kind::brave: return "brave";
    case Query::Kind::cautious: return "cautious";
    }
    return "?";
}

inline std::string to_string(const Query& q) {
    std::string out = to_string(q.kind);
    if (q.literal) out += " " + to_string(*q.literal);
    return out;
}

/// Evaluates `q` over an already computed pool. Cautious over an empty pool is true.
inline bool evaluate(const Query& q, const std::vector<Interpretation>& pool) {
    switch (q.kind) {
    case Query::Kind::exists: return !pool.empty();
    case Query::Kind::brave:
        return std::any_of(pool.begin(), pool.end(), [&](const Interpretation& i) { return i.contains(*q.literal); });
    case Query::Kind::cautious:
        return std::all_of(pool.begin(), pool.end(), [&](const Interpretation& i) { return i.contains(*q.literal); });
    }
    return false;
}

inline void check_query(const CommunicatingProgram& p, const Query& q) {
    if (q.kind != Query::Kind::exists && !q.literal) throw std::invalid_argument("brave/cautious need a literal");
    if (q.literal && !p.has(q.literal->component))
        throw unknown_component("query names unknown component '" + q.literal->component.name() + "'");
}

inline bool query(const CommunicatingProgram& p, const Query& q, const EnumerateOptions& opts = {}) {
    check_query(p, q);
    return evaluate(q, enumerate_answer_sets(p, opts));
}

} // namespace casp
