#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace casp;
using casp::testing::fixture;
using casp::testing::interp;
using casp::testing::lits;
using casp::testing::sets;

TEST_CASE("communicating reduct of the two-component example", "[engine]") {
    auto p = fixture("two_components.casp");
    auto i = interp("Q:a, Q:b, R:a, R:b");
    auto q = communicating_reduct(*p.find(ComponentName{"Q"}), i);
    std::vector<std::string> rules;
    for (const auto& r : q.rules) rules.push_back(render_rule(r));
    CHECK(rules == std::vector<std::string>{"a.", "b.", "c :- c."});
    auto r = communicating_reduct(*p.find(ComponentName{"R"}), i);
    rules.clear();
    for (const auto& rr : r.rules) rules.push_back(render_rule(rr));
    CHECK(rules == std::vector<std::string>{"a.", "b."});

    // Nothing to delete in a naf-free, fully local component.
    auto local = parse_program("program Q { a :- b. b. }");
    CHECK(communicating_reduct(*local.find(ComponentName{"Q"}), interp("Q:c")) ==
          as_classical(*local.find(ComponentName{"Q"})));
}

TEST_CASE("answer set check", "[engine]") {
    auto p = fixture("two_components.casp");
    CHECK(is_answer_set(p, interp("Q:b, R:b")));
    CHECK(is_answer_set(p, interp("Q:a, Q:b, R:a, R:b")));
    CHECK_FALSE(is_answer_set(p, Interpretation{}));
    CHECK_FALSE(is_answer_set(p, interp("Q:b, R:b, S:a")));
    CHECK_FALSE(is_answer_set(p, interp("Q:b, Q:c, R:b")));
}

TEST_CASE("enumeration of the two-component example", "[engine]") {
    auto p = fixture("two_components.casp");
    auto expected = sets({"Q:b, R:b", "Q:a, Q:b, R:a, R:b"});
    CHECK(enumerate_answer_sets(p) == expected);
    for (auto search : {Search::head_supported, Search::unpruned}) {
        EnumerateOptions opts;
        opts.search = search;
        CHECK(enumerate_answer_sets(p, opts) == expected);
    }
    EnumerateOptions parallel;
    parallel.jobs = 4;
    CHECK(enumerate_answer_sets(p, parallel) == expected);
}

TEST_CASE("simple program fixpoint and enumeration", "[engine]") {
    auto p = fixture("simple.casp");
    CHECK(communicating_fixpoint(p) == interp("Q:b"));
    CHECK(enumerate_answer_sets(p) == sets({"Q:b", "Q:a, Q:b, R:a"}));
    CHECK(communicating_fixpoint(parse_program("program Q { }")) == Interpretation{});
    CHECK(communicating_fixpoint(parse_program("program Q { a. } program R { b. }")) == interp("Q:a, R:b"));
    CHECK_THROWS_AS(communicating_fixpoint(parse_program("program Q { a. -a. }")), inconsistent_fixpoint);
    CHECK_THROWS_AS(communicating_fixpoint(fixture("two_components.casp")), class_mismatch);
}

TEST_CASE("inconsistent fixpoints are not answer sets", "[engine]") {
    CHECK(enumerate_answer_sets(parse_program("program Q { a. -a. }")).empty());
}

TEST_CASE("queries", "[engine]") {
    auto p = fixture("two_components.casp");
    auto lit = [](const char* s) { return parse_situated_literal(s); };
    CHECK(query(p, Query::brave(lit("Q:a"))));
    CHECK_FALSE(query(p, Query::cautious(lit("Q:a"))));
    CHECK(query(p, Query::cautious(lit("Q:b"))));
    CHECK(query(p, Query::exists()));

    auto none = fixture("self_naf.casp");
    CHECK_FALSE(query(none, Query::exists()));
    CHECK(query(none, Query::cautious(lit("R:a"))));
    CHECK_FALSE(query(none, Query::brave(lit("R:a"))));
    CHECK_THROWS_AS(query(p, Query::brave(lit("X:a"))), unknown_component);
}

TEST_CASE("search bound", "[engine]") {
    auto p = fixture("printer.casp");
    EnumerateOptions tight;
    tight.bound = 3;
    CHECK(search_dimension(p, Search::reduct_guess) == 4);
    CHECK_THROWS_AS(enumerate_answer_sets(p, tight), bound_exceeded);
    try {
        enumerate_answer_sets(p, tight);
    } catch (const bound_exceeded& e) {
        CHECK(e.required() == 4);
        CHECK(e.bound() == 3);
    }
}

TEST_CASE("disjunctive components use minimal models", "[engine]") {
    auto p = parse_program("program Q { a ; b. } program R { c :- Q:a. }");
    CHECK(enumerate_answer_sets(p) == sets({"Q:a, R:c", "Q:b"}));

    // Two minimal models of the reduct: "any" accepts each, "unique" rejects both.
    EnumerateOptions strict;
    strict.minimality = Minimality::unique_minimal;
    CHECK(enumerate_answer_sets(p, strict).empty());
    CHECK(is_answer_set(p, interp("Q:a, R:c")));
    CHECK_FALSE(is_answer_set(p, interp("Q:a, R:c"), Minimality::unique_minimal));
}

TEST_CASE("immediate consequence", "[engine]") {
    auto p = fixture("simple.casp");
    auto step = immediate_consequence(p, {});
    CHECK(Interpretation(step) == interp("Q:b"));
    auto closed = immediate_consequence(p, interp("Q:a").literals());
    CHECK(Interpretation(closed) == interp("Q:a, Q:b, R:a"));
}

TEST_CASE("single-component programs agree with the classical oracle", "[engine][random]") {
    gen::Rng rng(21);
    gen::ProgramShape shape;
    shape.max_components = 1;
    shape.max_rules = 6;
    for (int k = 0; k < 300; ++k) {
        auto p = gen::random_program(rng, shape);
        const auto& [name, comp] = *p.components.begin();
        auto expected = casp::testing::situate(oracle::classical_answer_sets(as_classical(comp)), name);
        INFO(render_program(p));
        CHECK(enumerate_answer_sets(p) == expected);
    }
}

TEST_CASE("single-component disjunctive programs agree with the classical oracle", "[engine][random]") {
    gen::Rng rng(22);
    gen::ProgramShape shape;
    shape.max_components = 1;
    shape.max_rules = 6;
    shape.disjunction_percent = 30;
    for (int k = 0; k < 300; ++k) {
        auto p = gen::random_program(rng, shape);
        const auto& [name, comp] = *p.components.begin();
        auto expected = casp::testing::situate(oracle::classical_answer_sets(as_classical(comp)), name);
        INFO(render_program(p));
        CHECK(enumerate_answer_sets(p) == expected);
    }
}

TEST_CASE("search strategies agree", "[engine][random]") {
    gen::Rng rng(23);
    gen::ProgramShape shape;
    shape.max_atoms = 3;
    shape.max_components = 2;
    shape.max_rules = 6;
    for (int k = 0; k < 200; ++k) {
        auto p = gen::random_program(rng, shape);
        INFO(render_program(p));
        auto reduct = enumerate_answer_sets(p);
        EnumerateOptions heads;
        heads.search = Search::head_supported;
        CHECK(enumerate_answer_sets(p, heads) == reduct);
        EnumerateOptions full;
        full.search = Search::unpruned;
        full.bound = 64;
        if (search_dimension(p, Search::unpruned) <= 14) CHECK(enumerate_answer_sets(p, full) == reduct);
    }
}

TEST_CASE("answer sets only contain head-supported literals", "[engine][random]") {
    gen::Rng rng(24);
    for (int k = 0; k < 200; ++k) {
        auto p = gen::random_program(rng);
        for (const auto& m : enumerate_answer_sets(p)) {
            for (const auto& s : m) {
                const auto& rules = p.find(s.component)->rules;
                bool supported = std::any_of(rules.begin(), rules.end(), [&](const Rule& r) {
                    return detail::contains_sorted(r.head, s);
                });
                CHECK(supported);
            }
        }
    }
}
