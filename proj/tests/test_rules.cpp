#include <doctest.h>

#include <stdexcept>

#include "support.hpp"
#include "zwdiag/pipeline.hpp"
#include "zwdiag/rules.hpp"

using namespace zwdiag;
using zwdiag::testing::M;
using zwdiag::testing::P;

namespace {

bool passes(RuleVerdict const &v)
{
  // A failing verdict always carries a witness and a passing one never does.
  CHECK(v.passed == !v.witness.has_value());
  return v.passed;
}

} // namespace

TEST_SUITE("rules")
{
  TEST_CASE("rule names round-trip")
  {
    for (RuleId id : kAllRules)
      CHECK(parse_rule_id(to_string(id)) == id);
    CHECK(to_string(RuleId::trace0_minors) == "trace0-minors");
    CHECK_THROWS_AS(parse_rule_id("no-such-rule"), std::invalid_argument);
  }

  TEST_CASE("column sums")
  {
    CHECK_FALSE(passes(rule_column_sums(M("M(n=4; d=0000; s={12})"))));
    CHECK_FALSE(passes(rule_column_sums(M("M(n=4; d=0000; s=∅)"))));
    CHECK(passes(rule_column_sums(M("M(n=4; d=0000; s=12,13,14,23,24,34)"))));
  }

  TEST_CASE("trace")
  {
    CHECK_FALSE(passes(rule_trace(M("M(n=4; d=0100; s=12)"))));
    CHECK(passes(rule_trace(M("M(n=4; d=0000; s=12)"))));
    CHECK(passes(rule_trace(M("M(n=4; d=0011; s=12)"))));
  }

  TEST_CASE("first triangle rule")
  {
    CHECK_FALSE(passes(rule_triangle1(M("M(n=3; d=000; s=12,13)"))));
    CHECK(passes(rule_triangle1(M("M(n=3; d=000; s=12,13,23)"))));
    CHECK(passes(rule_triangle1(M("M(n=3; d=000; s=12)"))));
  }

  TEST_CASE("circling")
  {
    CHECK_FALSE(passes(rule_circling(P("M(n=3; d=000; s=12)", "M(n=3; d=100; s=∅)"))));
    CHECK(passes(rule_circling(P("M(n=3; d=000; s=12)", "M(n=3; d=110; s=∅)"))));
    CHECK(passes(rule_circling(P("M(n=3; d=000; s=∅)", "M(n=3; d=100; s=23)"))));
  }

  TEST_CASE("trace-2")
  {
    auto const a = "M(n=4; d=0011; s=34)";
    CHECK_FALSE(passes(rule_trace2(P(a, "M(n=4; d=0000; s=34)"))));
    CHECK(passes(rule_trace2(P(a, "M(n=4; d=0000; s=12)"))));
    CHECK(passes(rule_trace2(P("M(n=4; d=0111; s=34)", "M(n=4; d=0000; s=34)"))));
  }

  TEST_CASE("components")
  {
    CHECK_FALSE(passes(rule_components(M("M(n=3; d=100; s=12,13,23)"))));
    CHECK(passes(rule_components(M("M(n=3; d=000; s=12,13,23)"))));
    CHECK(passes(rule_components(M("M(n=3; d=110; s=12,13,23)"))));
  }

  TEST_CASE("trace-0 minors")
  {
    CHECK_FALSE(passes(rule_trace0_minors(M("M(n=4; d=0000; s=12,23)"))));
    CHECK(passes(rule_trace0_minors(M("M(n=4; d=0000; s=12,13,23)"))));
    CHECK(passes(rule_trace0_minors(M("M(n=4; d=1111; s=12,23)"))));
  }

  TEST_CASE("fully edged")
  {
    auto const a = "M(n=4; d=0000; s=12,13,23)";
    CHECK_FALSE(passes(rule_fully_edged(P(a, "M(n=4; d=1110; s=12,23,34)"))));
    CHECK_FALSE(passes(rule_fully_edged(P(a, "M(n=4; d=0000; s=12,13,14,23,24,34)"))));
    CHECK(passes(rule_fully_edged(P(a, "M(n=4; d=1111; s=12,23,34)"))));
  }

  TEST_CASE("second triangle rule")
  {
    // The rule is mirrored, so B carries a fourth circle and only A's trace
    // decides the outcome.
    auto const k3 = "M(n=5; d=11100; s=12,13,23)";
    auto const w = "M(n=5; d=11101; s=12,13,23)";
    CHECK_FALSE(passes(rule_triangle2(P(k3, w))));
    CHECK(passes(rule_triangle2(P("M(n=5; d=11110; s=12,13,23)", w))));
    CHECK(passes(rule_triangle2(P(k3, "M(n=5; d=11101; s=12,13)"))));
    CHECK_FALSE(passes(rule_triangle2(P("M(n=5; d=11110; s=12,13,23)", k3))));
  }

  TEST_CASE("quadrilateral")
  {
    auto const w = "M(n=5; d=00000; s=12,13,14,23,24,34)";
    CHECK_FALSE(passes(rule_quadrilateral(P("M(n=5; d=11110; s=12,13,14,23,24,34)", w))));
    CHECK(passes(rule_quadrilateral(P("M(n=5; d=11111; s=12,13,14,23,24,34)", w))));
    CHECK(passes(rule_quadrilateral(P("M(n=5; d=11100; s=12,13,14,23,24,34)", w))));
  }

  TEST_CASE("dumbbells")
  {
    auto const a = "M(n=5; d=11110; s=12,34)";
    CHECK_FALSE(passes(rule_dumbbells(P(a, "M(n=5; d=11110; s=12,34)"))));
    CHECK(passes(rule_dumbbells(P(a, "M(n=5; d=11111; s=12,34)"))));
    CHECK(passes(rule_dumbbells(P(a, "M(n=5; d=11110; s=12)"))));
  }

  TEST_CASE("apply_all")
  {
    auto const p = P("M(n=5; d=10000; s=12)", "M(n=5; d=00000; s=∅)");
    CHECK(apply_all(p, {}).empty());

    auto const verdicts = apply_all(p, kAllRules);
    CHECK(verdicts.size() == kAllRules.size());
    bool trace_failed = false;
    for (auto const &v : verdicts)
      if (v.rule == RuleId::trace && !v.passed)
        trace_failed = true;
    CHECK(trace_failed);
    CHECK_FALSE(passes_all(p, kAllRules));
  }

  TEST_CASE("every enumerated diagram passes every rule")
  {
    auto const set = run_pipeline(5);
    REQUIRE(set.diagrams.size() == 31);
    for (auto const &d : set.diagrams)
      for (auto const &v : apply_all(d, kAllRules))
        CHECK_MESSAGE(v.passed, d.encode(), " fails ", to_string(v.rule));
  }

  TEST_CASE("single-matrix rules read both halves")
  {
    auto const bad_w = P("M(n=4; d=0000; s=12,13,14,23,24,34)", "M(n=4; d=0000; s=12)");
    auto const v = apply_rule(bad_w, RuleId::column_sums);
    CHECK_FALSE(v.passed);
    REQUIRE(v.witness);
    CHECK(v.witness->rfind("w: ", 0) == 0);
    CHECK_THROWS_AS(holds(M("M(n=4; d=0000; s=12)"), RuleId::circling), std::invalid_argument);
  }
}
