#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace casp;
using casp::testing::fixture;
using casp::testing::interp;
using casp::testing::sets;

namespace {

std::vector<Interpretation> total_answer_sets(const NafSimulation& sim, std::size_t bound = 40) {
    EnumerateOptions opts;
    opts.bound = bound;
    std::vector<Interpretation> out;
    for (auto& m : enumerate_answer_sets(sim.program, opts))
        if (has_total_markers(sim, m)) out.push_back(std::move(m));
    return out;
}

std::vector<std::string> rules_of(const CommunicatingProgram& p, const char* component) {
    std::vector<std::string> out;
    auto text = render_program(p);
    auto start = text.find(std::string("program ") + component + " {");
    auto end = text.find("}\n", start);
    std::istringstream in(text.substr(start, end - start));
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) out.push_back(line.substr(2));
    return out;
}

} // namespace

TEST_CASE("naf simulation of two mutually blocking components", "[transforms]") {
    auto sim = simulate_naf(fixture("mutual_naf.casp"));
    CHECK(sim.program.program_class == ProgramClass::simple);
    CHECK(sim.program.components.size() == 4);
    CHECK(sim.map.fresh.size() == 2);
    CHECK(rules_of(sim.program, "__P_Q1") == std::vector<std::string>{"-__f_a :- __N_Q1:-__f_a.", "a :- __N_Q2:-__f_b."});
    CHECK(rules_of(sim.program, "__P_Q2") == std::vector<std::string>{"-__f_b :- __N_Q2:-__f_b.", "b :- __N_Q1:-__f_a."});
    auto n1 = rules_of(sim.program, "__N_Q1");
    CHECK(std::count(n1.begin(), n1.end(), "__f_a :- __P_Q1:a.") == 1);
    CHECK(std::count(n1.begin(), n1.end(), "-__f_a :- __P_Q1:-__f_a.") == 1);
    CHECK(sim.core_rule_count == 8);
    CHECK(sim.total_markers.size() == 2);
}

TEST_CASE("lifting and projecting the two answer sets", "[transforms]") {
    auto source = fixture("mutual_naf.casp");
    auto sim = simulate_naf(source);
    auto first = lift_answer_set(interp("Q1:a"), sim.map);
    for (const char* s : {"__P_Q1:a", "__P_Q2:-__f_b", "__N_Q2:-__f_b", "__N_Q1:__f_a"})
        CHECK(first.contains(parse_situated_literal(s, {true})));
    auto second = lift_answer_set(interp("Q2:b"), sim.map);
    for (const char* s : {"__P_Q2:b", "__P_Q1:-__f_a", "__N_Q1:-__f_a", "__N_Q2:__f_b"})
        CHECK(second.contains(parse_situated_literal(s, {true})));

    CHECK(total_answer_sets(sim) == sets({to_string(first).substr(1, to_string(first).size() - 2).c_str(),
                                          to_string(second).substr(1, to_string(second).size() - 2).c_str()}));
    CHECK(project_back(first, sim.map, source) == interp("Q1:a"));
    CHECK(project_back(second, sim.map, source) == interp("Q2:b"));
    CHECK(lift_answer_set(Interpretation{}, simulate_naf(parse_program("program Q { }")).map).size() == 1);
}

TEST_CASE("totality is needed to project back", "[transforms]") {
    auto source = fixture("self_naf.casp");
    auto sim = simulate_naf(source);
    CHECK(sim.core_rule_count == 4);
    auto pool = enumerate_answer_sets(sim.program);
    CHECK(std::find(pool.begin(), pool.end(), Interpretation{}) != pool.end());
    CHECK_FALSE(has_total_markers(sim, Interpretation{}));
    CHECK_THROWS_AS(project_back(Interpretation{}, sim.map, source), not_total);
    CHECK(total_answer_sets(sim).empty());
    CHECK(enumerate_answer_sets(source).empty());
}

TEST_CASE("naf-free programs only gain renamed copies", "[transforms]") {
    auto source = fixture("simple.casp");
    auto sim = simulate_naf(source);
    CHECK(sim.map.fresh.empty());
    CHECK(sim.core_rule_count == source.rule_count());
    CHECK(rules_of(sim.program, "__N_Q") == std::vector<std::string>{"__total."});
}

TEST_CASE("simulation rejects disjunctive input", "[transforms]") {
    CHECK_THROWS_AS(simulate_naf(fixture("diagnosis.casp")), class_mismatch);
    CHECK_THROWS_AS(to_normal(fixture("diagnosis.casp")), class_mismatch);
}

TEST_CASE("simulation round trip on random normal programs", "[transforms][random]") {
    gen::Rng rng(31);
    gen::ProgramShape shape;
    shape.max_components = 2;
    shape.max_atoms = 3;
    shape.max_rules = 5;
    shape.max_body = 2;
    int checked = 0;
    for (int k = 0; k < 120; ++k) {
        auto source = gen::random_program(rng, shape);
        auto sim = simulate_naf(source);
        INFO(render_program(source));
        CHECK(sim.core_rule_count <= source.rule_count() + 3 * sim.map.fresh.size());
        if (search_dimension(sim.program, Search::reduct_guess) > 20) continue;
        ++checked;
        auto answers = enumerate_answer_sets(source);
        std::vector<Interpretation> lifted;
        for (const auto& m : answers) lifted.push_back(lift_answer_set(m, sim.map));
        std::sort(lifted.begin(), lifted.end());
        auto total = total_answer_sets(sim);
        CHECK(total == lifted);
        for (const auto& m : total) {
            auto back = project_back(m, sim.map, source);
            CHECK(std::find(answers.begin(), answers.end(), back) != answers.end());
            CHECK(lift_answer_set(back, sim.map) == m);
        }
    }
    CHECK(checked > 60);
}

TEST_CASE("rewritten reducts match the source reducts", "[transforms][random]") {
    gen::Rng rng(32);
    gen::ProgramShape shape;
    shape.max_components = 2;
    shape.max_atoms = 3;
    shape.max_rules = 5;
    for (int k = 0; k < 200; ++k) {
        auto source = gen::random_program(rng, shape);
        auto sim = simulate_naf(source);
        for (const auto& m : enumerate_answer_sets(source)) {
            auto lifted = lift_answer_set(m, sim.map);
            for (const auto& [name, comp] : source.components) {
                ComponentProgram primed{sim.map.primed.at(name), rewritten_rules(comp, sim.map)};
                CHECK(communicating_reduct(primed, lifted) == communicating_reduct(comp, m));
            }
        }
    }
}

TEST_CASE("flattening the two-component example", "[transforms]") {
    auto p = fixture("two_components.casp");
    auto flat = to_normal(p);
    CHECK(flat.program_class == ProgramClass::normal);
    CHECK(casp::testing::via_oracle(p) == sets({"Q:b, R:b", "Q:a, Q:b, R:a, R:b"}));
    CHECK(to_normal(parse_program("program Q { }")).rules.empty());
}

TEST_CASE("situated atom encoding is reversible", "[transforms]") {
    for (const char* s : {"Q:a", "Q:-a", "Q_1:a_b", "__P_Q:-__f_a", "Q:u", "A_u:x_u_"}) {
        auto lit = parse_situated_literal(s, {true});
        auto decoded = decode_situated(situated_atom(lit));
        REQUIRE(decoded);
        CHECK(*decoded == lit);
    }
    CHECK_FALSE(decode_situated(Literal{Atom{"__g_Q_x_a"}, true}));
    CHECK_FALSE(decode_situated(Literal{Atom{"plain"}, true}));
}

TEST_CASE("flattening a naf-free single component keeps its answer set", "[transforms][random]") {
    gen::Rng rng(33);
    gen::ProgramShape shape;
    shape.max_components = 1;
    shape.naf_percent = 0;
    shape.choice_percent = 0;
    for (int k = 0; k < 100; ++k) {
        auto p = gen::random_program(rng, shape);
        const auto& [name, comp] = *p.components.begin();
        auto expected = casp::testing::situate(oracle::classical_answer_sets(as_classical(comp)), name);
        CHECK(casp::testing::via_oracle(p) == expected);
    }
}

TEST_CASE("flattening agrees with enumeration", "[transforms][random]") {
    gen::Rng rng(34);
    gen::ProgramShape shape;
    shape.max_atoms = 5;
    shape.max_rules = 10;
    for (int k = 0; k < 200; ++k) {
        auto p = gen::random_program(rng, shape);
        INFO(render_program(p));
        CHECK(casp::testing::via_oracle(p, 200) == enumerate_answer_sets(p));
    }
}

TEST_CASE("QBF compilation of the three-block example", "[transforms][qbf]") {
    auto c = compile_qbf(parse_qbf(casp::testing::fixture_text("three_blocks.qbf")));
    CHECK(c.focus == FocusSequence{{ComponentName{"Q1"}, ComponentName{"Q2"}}});
    CHECK(c.query == Query::brave(parse_situated_literal("Q0:sat")));
    auto expected = parse_program(R"(
        program Q0 {
          x :- not -x.  -x :- not x.
          y :- not -y.  -y :- not y.
          z :- not -z.  -z :- not z.
          sat :- x, y.  sat :- -x, y, z.  sat :- -x, -y, -z.
          -sat :- not sat.
        }
        program Q1 {
          x :- Q0:x.  -x :- Q0:-x.
          y :- Q0:y.  -y :- Q0:-y.
          -sat :- Q0:-sat.
        }
        program Q2 {
          x :- Q0:x.  -x :- Q0:-x.
          sat :- Q0:sat.
        })");
    CHECK(c.program == expected);
    CHECK(focused_query(c.program, c.focus, c.query));
}

TEST_CASE("QBF compilation with a single block", "[transforms][qbf]") {
    auto exists = compile_qbf(parse_qbf("exists x : (x)"));
    CHECK(exists.focus.names.empty());
    CHECK(exists.program == parse_program("program Q0 { x :- not -x. -x :- not x. sat :- x. -sat :- not sat. }"));
    CHECK(exists.query.kind == Query::Kind::brave);
    CHECK(qbf_via_asp(parse_qbf("exists x : (x)")));

    auto forall = compile_qbf(parse_qbf(casp::testing::fixture_text("forall_x.qbf")));
    CHECK(forall.program == exists.program);
    CHECK(forall.query.kind == Query::Kind::cautious);
    CHECK_FALSE(focused_query(forall.program, forall.focus, forall.query));

    CHECK_THROWS_AS(compile_qbf(parse_qbf("exists sat : (sat)")), std::invalid_argument);
}
