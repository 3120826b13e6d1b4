#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace casp;
using casp::testing::fixture;
using casp::testing::interp;
using casp::testing::sets;

namespace {

FocusSequence focus(std::initializer_list<const char*> names) {
    FocusSequence f;
    for (const auto* n : names) f.names.push_back(ComponentName{n});
    return f;
}

} // namespace

TEST_CASE("printer example: every answer set, then the boss first", "[focus]") {
    auto p = fixture("printer.casp");
    auto m1 = "P:stylish, P:silent, B:expensive";
    auto m2 = "P:stylish, P:loud, E:undesired, M:undesired";
    auto m3 = "P:dull, P:loud, E:undesired, M:undesired";
    auto m4 = "P:dull, P:silent, E:undesired";
    CHECK(enumerate_answer_sets(p) == sets({m1, m2, m3, m4}));
    CHECK(focused_answer_sets(p, focus({"B"})) == sets({m2, m3, m4}));
    CHECK(focused_answer_sets(p, focus({"E"})) == sets({m1}));
    CHECK(focused_answer_sets(p, focus({"B", "M", "E"})) == sets({m4}));
    CHECK(focused_answer_sets(p, focus({"B", "E", "M"})) == sets({m4}));
}

TEST_CASE("three-component example focused on R then S", "[focus]") {
    auto p = fixture("three_components.casp");
    auto m1 = interp("Q:a, Q:b, Q:c, R:c, S:a");
    CHECK(focused_answer_sets(p, focus({"R", "S"})) == std::vector<Interpretation>{m1});
    CHECK(focused_query(p, focus({"R", "S"}), Query::cautious(parse_situated_literal("S:a"))));
    CHECK_FALSE(focused_query(p, focus({"R", "S"}), Query::brave(parse_situated_literal("S:d"))));
}

TEST_CASE("empty focus is plain enumeration", "[focus]") {
    for (const char* name : {"two_components.casp", "printer.casp", "three_components.casp"}) {
        auto p = fixture(name);
        CHECK(focused_answer_sets(p, FocusSequence{}) == enumerate_answer_sets(p));
    }
}

TEST_CASE("diagnosis focused on the hypotheses", "[focus]") {
    auto p = fixture("diagnosis.casp");
    auto shared = std::string("Q:no_power_off, Q:no_broken_bulb, Q:hot_plateB, Q:hot_plateC, ");
    auto expected = sets({(shared + "Q:melted_A, Q:no_leak, Q:high, H:high").c_str(),
                          (shared + "Q:melted_A, Q:leak, Q:no_high, H:leak").c_str()});
    CHECK(focused_answer_sets(p, focus({"H"})) == expected);
    CHECK(enumerate_answer_sets(p).size() == 3);
}

TEST_CASE("minimisation uses strict inclusion", "[focus]") {
    auto a = interp("Q:a, R:x");
    auto b = interp("Q:a, R:y");
    auto c = interp("Q:a, Q:b");
    auto kept = minimize_on({a, b, c}, ComponentName{"Q"});
    CHECK(kept == std::vector<Interpretation>{a, b});
}

TEST_CASE("simple programs: the fixpoint is focused for every sequence", "[focus]") {
    auto p = fixture("simple.casp");
    for (auto f : {focus({}), focus({"Q"}), focus({"R", "Q"})}) {
        CHECK(focused_fixpoint_simple(p, f) == interp("Q:b"));
        auto pool = focused_answer_sets(p, f);
        CHECK(std::find(pool.begin(), pool.end(), interp("Q:b")) != pool.end());
    }
    CHECK(focused_fixpoint_simple(parse_program("program Q { }"), focus({"Q"})) == Interpretation{});
    CHECK(focused_fixpoint_simple(parse_program("program Q { a. b. }"), focus({"Q"})) == interp("Q:a, Q:b"));
    CHECK_THROWS_AS(focused_answer_sets(p, focus({"X"})), unknown_component);
}
