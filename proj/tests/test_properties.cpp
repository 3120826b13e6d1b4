#include "properties.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace casp;

namespace {

void require_clean(const properties::Outcome& o) {
    INFO(o.first_failure);
    CHECK(o.instances >= 200);
    CHECK(o.failures == 0);
}

} // namespace

TEST_CASE("focus only removes answer sets", "[properties]") { require_clean(properties::focus_subset(101, 250)); }

TEST_CASE("focus keeps at least one answer set", "[properties]") { require_clean(properties::focus_nonempty(102, 250)); }

TEST_CASE("repeating the last focus component changes nothing", "[properties]") {
    require_clean(properties::focus_idempotent(103, 250));
}

TEST_CASE("immediate consequence is monotone", "[properties]") { require_clean(properties::tp_monotone(104, 250)); }

TEST_CASE("reducts keep only local, naf-free material", "[properties]") {
    require_clean(properties::reduct_structure(105, 250));
}

TEST_CASE("rendering round-trips through the parser", "[properties]") { require_clean(properties::round_trip(106, 250)); }

TEST_CASE("fixpoint of a simple program is its least answer set", "[properties]") {
    gen::Rng rng(107);
    gen::ProgramShape shape;
    shape.naf_percent = 0;
    shape.choice_percent = 0;
    int checked = 0;
    for (int k = 0; k < 250; ++k) {
        auto p = gen::random_program(rng, shape);
        INFO(render_program(p));
        Interpretation fix;
        try {
            fix = communicating_fixpoint(p);
        } catch (const inconsistent_fixpoint&) {
            CHECK(enumerate_answer_sets(p).empty());
            continue;
        }
        ++checked;
        CHECK(is_answer_set(p, fix));
        for (const auto& m : enumerate_answer_sets(p)) CHECK(m.includes(fix));
        auto f = properties::random_focus(rng, p);
        auto focused = focused_answer_sets(p, f);
        CHECK(std::find(focused.begin(), focused.end(), fix) != focused.end());
    }
    CHECK(checked >= 200);
}
