#pragma once
// Text formats: communicating programs (.casp) and prenex-DNF QBFs (.qbf).
//
//   program   := component+
//   component := "program" NAME "{" stmt* "}"
//   stmt      := heads [":-" body] "." | ":-" body "."
//   heads     := slit (";" slit)*
//   body      := belem ("," belem)*
//   belem     := ["not"] slit
//   slit      := [NAME ":"] ["-"] IDENT
//
//   qbf       := (("exists" | "forall") VAR+)+ ":" clause ("|" clause)*
//   clause    := "(" lit ("&" lit)* ")"
//   lit       := ["-"] VAR
//
// NAME starts with an uppercase letter, IDENT and VAR with a lowercase one.
// '%' starts a comment running to the end of the line.

#include "casp/desugar.hpp"
#include "casp/error.hpp"
#include "casp/model.hpp"
#include "casp/qbf.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace casp {

struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t length = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class parse_error : public error {
public:
    parse_error(SourceSpan span, const std::string& message)
        : error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message)
        , span_(span) {}

    const SourceSpan& span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

struct ParseOptions {
    /// Accept identifiers with the reserved "__" prefix (needed to re-read
    /// the output of the transformations).
    bool allow_reserved = false;
};

namespace detail {

enum class Tok {
    ident, name, kw_program, kw_not, kw_exists, kw_forall,
    lbrace, rbrace, colon, neck, minus, semicolon, comma, dot, lparen, rparen, amp, bar, end
};

inline const char* describe(Tok t) {
    switch (t) {
    case Tok::ident: return "identifier";
    case Tok::name: return "component name";
    case Tok::kw_program: return "'program'";
    case Tok::kw_not: return "'not'";
    case Tok::kw_exists: return "'exists'";
    case Tok::kw_forall: return "'forall'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::colon: return "':'";
    case Tok::neck: return "':-'";
    case Tok::minus: return "'-'";
    case Tok::semicolon: return "';'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::end: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

enum class Grammar { program, qbf };

class Lexer {
public:
    Lexer(std::string_view text, Grammar grammar) : text_(text), grammar_(grammar) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            SourceSpan at{line_, col_, 1};
            if (pos_ >= text_.size()) {
                at.length = 0;
                out.push_back({Tok::end, "", at});
                return out;
            }
            char c = text_[pos_];
            if (is_ident_char(c) && !(c >= '0' && c <= '9')) {
                out.push_back(word(at));
                continue;
            }
            Tok kind;
            std::size_t len = 1;
            switch (c) {
            case '{': kind = Tok::lbrace; break;
            case '}': kind = Tok::rbrace; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case ';': kind = Tok::semicolon; break;
            case ',': kind = Tok::comma; break;
            case '.': kind = Tok::dot; break;
            case '-': kind = Tok::minus; break;
            case '&': kind = Tok::amp; break;
            case '|': kind = Tok::bar; break;
            case ':':
                kind = Tok::colon;
                // "Q:-a" is a negated situated literal, "a :- b" a rule neck.
                if (grammar_ == Grammar::program && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-' &&
                    (out.empty() || out.back().kind != Tok::name)) {
                    kind = Tok::neck;
                    len = 2;
                }
                break;
            default:
                throw parse_error(at, std::string("unexpected character '") + c + "'");
            }
            at.length = len;
            out.push_back({kind, std::string(text_.substr(pos_, len)), at});
            advance(len);
        }
    }

private:
    Token word(SourceSpan at) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) advance(1);
        std::string w(text_.substr(start, pos_ - start));
        at.length = w.size();
        if (grammar_ == Grammar::program) {
            if (w == "program") return {Tok::kw_program, w, at};
            if (w == "not") return {Tok::kw_not, w, at};
        } else {
            if (w == "exists") return {Tok::kw_exists, w, at};
            if (w == "forall") return {Tok::kw_forall, w, at};
        }
        if (valid_identifier(w, true)) return {Tok::name, w, at};
        if (valid_identifier(w, false)) return {Tok::ident, w, at};
        throw parse_error(at, "malformed identifier '" + w + "'");
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance(1);
            } else {
                break;
            }
        }
    }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
        }
    }

    std::string_view text_;
    Grammar grammar_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek() const { return tokens_[pos_]; }
    bool at(Tok t) const { return peek().kind == t; }
    Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok t) {
        if (!at(t)) return false;
        next();
        return true;
    }
    Token expect(Tok t, const char* context) {
        if (!at(t)) {
            throw parse_error(peek().span, std::string("expected ") + describe(t) + " " + context + ", found " +
                                               (at(Tok::end) ? "end of input" : "'" + peek().text + "'"));
        }
        return next();
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

template <class Id>
Id make_identifier(const Token& t, const ParseOptions& opts) {
    if (t.text.starts_with("__") && !opts.allow_reserved) {
        throw parse_error(t.span, "identifier '" + t.text + "' uses the reserved '__' prefix");
    }
    try {
        return Id{t.text};
    } catch (const std::invalid_argument& e) {
        throw parse_error(t.span, e.what());
    }
}

class ProgramParser {
public:
    ProgramParser(std::string_view text, ParseOptions opts)
        : in_(Lexer(text, Grammar::program).run()), opts_(opts) {}

    CommunicatingProgram run() {
        CommunicatingProgram p;
        std::map<ComponentName, std::vector<Rule>> raw;
        do {
            in_.expect(Tok::kw_program, "to start a component");
            auto tok = in_.expect(Tok::name, "after 'program'");
            auto name = make_identifier<ComponentName>(tok, opts_);
            if (raw.contains(name)) throw parse_error(tok.span, "duplicate component '" + name.name() + "'");
            auto& rules = raw[name];
            in_.expect(Tok::lbrace, "after the component name");
            while (!in_.at(Tok::rbrace)) {
                if (in_.at(Tok::end)) in_.expect(Tok::rbrace, "to close the component");
                rules.push_back(statement(name));
            }
            in_.next();
        } while (!in_.at(Tok::end));

        for (const auto& [name, span] : references_) {
            if (!raw.contains(name)) throw parse_error(span, "reference to undeclared component '" + name.name() + "'");
        }
        for (auto& [name, rules] : raw) {
            p.components.emplace(name, ComponentProgram{name, desugar_constraints(name, std::move(rules))});
        }
        p.canonicalize();
        return p;
    }

private:
    Rule statement(const ComponentName& self) {
        Rule r;
        if (!in_.at(Tok::neck)) {
            do {
                auto start = in_.peek().span;
                auto s = situated(self);
                if (s.component != self) {
                    throw parse_error(start, "head literal " + to_string(s) + " is not " + self.name() + "-local");
                }
                r.head.push_back(std::move(s));
            } while (in_.accept(Tok::semicolon));
        }
        if (in_.accept(Tok::neck)) {
            do {
                bool naf = in_.accept(Tok::kw_not);
                auto s = situated(self);
                (naf ? r.body_neg : r.body_pos).push_back(std::move(s));
            } while (in_.accept(Tok::comma));
        } else if (r.head.empty()) {
            in_.expect(Tok::neck, "to start a constraint");
        }
        in_.expect(Tok::dot, "to end the rule");
        r.normalize();
        return r;
    }

    SituatedLiteral situated(const ComponentName& self) {
        ComponentName component = self;
        if (in_.at(Tok::name)) {
            auto tok = in_.next();
            component = make_identifier<ComponentName>(tok, opts_);
            references_.emplace_back(component, tok.span);
            in_.expect(Tok::colon, "after a component qualifier");
        }
        bool positive = !in_.accept(Tok::minus);
        auto tok = in_.expect(Tok::ident, "for a literal");
        return SituatedLiteral{component, Literal{make_identifier<Atom>(tok, opts_), positive}};
    }

    TokenStream in_;
    ParseOptions opts_;
    std::vector<std::pair<ComponentName, SourceSpan>> references_;
};

} // namespace detail

/// Parses a communicating program. Constraints are desugared, rules are
/// deduplicated and sorted, and the class is the weakest that fits.
inline CommunicatingProgram parse_program(std::string_view text, ParseOptions opts = {}) {
    return detail::ProgramParser(text, opts).run();
}

/// Parses "Q:l" or "Q:-l".
inline SituatedLiteral parse_situated_literal(std::string_view text, ParseOptions opts = {}) {
    using detail::Tok;
    detail::TokenStream in(detail::Lexer(text, detail::Grammar::program).run());
    auto ctok = in.expect(Tok::name, "as the component of a situated literal");
    auto component = detail::make_identifier<ComponentName>(ctok, opts);
    in.expect(Tok::colon, "after the component");
    bool positive = !in.accept(Tok::minus);
    auto atom = detail::make_identifier<Atom>(in.expect(Tok::ident, "for the literal"), opts);
    in.expect(Tok::end, "after the situated literal");
    return SituatedLiteral{component, Literal{atom, positive}};
}

inline Qbf parse_qbf(std::string_view text) {
    using detail::Tok;
    detail::TokenStream in(detail::Lexer(text, detail::Grammar::qbf).run());
    const ParseOptions opts{};
    Qbf q;
    std::set<Atom> bound;
    while (in.at(Tok::kw_exists) || in.at(Tok::kw_forall)) {
        auto qtok = in.next();
        auto quant = qtok.kind == Tok::kw_exists ? Quantifier::exists : Quantifier::forall;
        if (!q.blocks.empty() && q.blocks.back().quantifier == quant) {
            throw parse_error(qtok.span, "quantifiers must alternate");
        }
        QuantifierBlock block{quant, {}};
        do {
            auto vtok = in.expect(Tok::ident, "as a quantified variable");
            auto v = detail::make_identifier<Atom>(vtok, opts);
            if (!bound.insert(v).second) throw parse_error(vtok.span, "variable '" + v.name() + "' is bound twice");
            block.variables.push_back(v);
        } while (in.at(Tok::ident));
        q.blocks.push_back(std::move(block));
    }
    if (q.blocks.empty()) in.expect(Tok::kw_exists, "to start the quantifier prefix");
    in.expect(Tok::colon, "between the prefix and the matrix");
    do {
        auto open = in.expect(Tok::lparen, "to open a clause");
        if (in.at(Tok::rparen)) throw parse_error(open.span, "empty clause");
        QbfClause clause;
        do {
            bool positive = !in.accept(Tok::minus);
            auto vtok = in.expect(Tok::ident, "as a clause literal");
            auto v = detail::make_identifier<Atom>(vtok, opts);
            if (!bound.contains(v)) throw parse_error(vtok.span, "variable '" + v.name() + "' is not bound");
            clause.push_back(QbfLiteral{v, positive});
        } while (in.accept(Tok::amp));
        in.expect(Tok::rparen, "to close the clause");
        detail::sort_unique(clause);
        q.matrix.push_back(std::move(clause));
    } while (in.accept(Tok::bar));
    in.expect(Tok::end, "after the matrix");
    return q;
}

namespace detail {

inline std::string render_literal(const ComponentName& self, const SituatedLiteral& s) {
    return s.component == self ? to_string(s.literal) : to_string(s);
}

inline std::string render_body(const ComponentName& self, const Rule& r) {
    std::string out;
    const char* sep = "";
    for (const auto& s : r.body_pos) out += std::exchange(sep, ", ") + render_literal(self, s);
    for (const auto& s : r.body_neg) out += std::exchange(sep, ", ") + std::string("not ") + render_literal(self, s);
    return out;
}

} // namespace detail

/// Canonical text of `p`; parse_program(render_program(p)) == p for valid
/// programs (with allow_reserved when p contains generated names).
inline std::string render_program(const CommunicatingProgram& p, std::span<const std::string> comments = {}) {
    std::string out;
    for (const auto& c : comments) out += "% " + c + "\n";
    for (const auto& [name, comp] : p.components) {
        out += "program " + name.name() + " {\n";
        for (const auto& r : comp.rules) {
            out += "  ";
            Rule rest;
            if (is_desugared_constraint(name, r, &rest)) {
                out += ":- " + detail::render_body(name, rest) + ".\n";
                continue;
            }
            const char* sep = "";
            for (const auto& h : r.head) out += std::exchange(sep, " ; ") + detail::render_literal(name, h);
            if (!r.is_fact()) out += " :- " + detail::render_body(name, r);
            out += ".\n";
        }
        out += "}\n";
    }
    return out;
}

inline std::string render_qbf(const Qbf& q) {
    std::string out;
    for (const auto& b : q.blocks) {
        out += to_string(b.quantifier);
        for (const auto& v : b.variables) out += " " + v.name();
        out += " ";
    }
    out += ":";
    const char* sep = " ";
    for (const auto& c : q.matrix) {
        out += std::exchange(sep, " | ");
        out += "(";
        const char* amp = "";
        for (const auto& l : c) out += std::string(std::exchange(amp, " & ")) + (l.positive ? "" : "-") + l.variable.name();
        out += ")";
    }
    return out;
}

} // namespace casp
