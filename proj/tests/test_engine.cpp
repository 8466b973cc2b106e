#include <gtest/gtest.h>

#include "ptri/engine.hpp"
#include "ptri/error.hpp"
#include "ptri/rule_lang.hpp"
#include "support.hpp"

namespace ptri {
namespace {

using test::iv;
using test::near_interval;
using test::pt;

Atom atom(std::string name, std::vector<std::string> args = {}) { return {std::move(name), std::move(args)}; }

Program load(const std::string& name) { return parse_program(test::read_text(test::program_path(name))); }

EngineConfig identity_config() {
  EngineConfig cfg;
  cfg.conjunctor = OperatorId::TMin;
  cfg.rule_application = OperatorId::TMin;
  cfg.head_combiner = HeadCombiner::KJoin;
  return cfg;
}

TEST(EvaluateBody, GuardIsCrisp) {
  Valuation v;
  v.set(atom("di1"), iv(0.4, 0.9));
  v.set(atom("di2"), iv(0.5, 0.6));
  const EngineConfig cfg;
  EXPECT_EQ(evaluate_body(v, BodyExpr::guard(Ordering::TruthPreorder, atom("di2"), atom("di1")), cfg), pt(1));
  EXPECT_EQ(evaluate_body(v, BodyExpr::guard(Ordering::TruthPreorder, atom("di1"), atom("di2")), cfg), pt(0));
  // Incomparable under the bilattice truth order.
  EXPECT_EQ(evaluate_body(v, BodyExpr::guard(Ordering::Truth, atom("di2"), atom("di1")), cfg), pt(0));
  EXPECT_EQ(evaluate_body(v, BodyExpr::guard(Ordering::Truth, atom("di1"), pt(0.5), true), cfg), pt(0));
}

TEST(EvaluateBody, ConjunctionNegationAndNaf) {
  Valuation v;
  v.set(atom("cold"), pt(0.6));
  v.set(atom("snow"), pt(0.4));
  const EngineConfig cfg;
  const auto conj = BodyExpr::conj({BodyExpr::atom(atom("cold")), BodyExpr::atom(atom("snow"))});
  EXPECT_TRUE(near_interval(evaluate_body(v, conj, cfg), pt(0.24)));
  EXPECT_EQ(evaluate_body(v, BodyExpr::truth(), cfg), pt(1));
  EXPECT_TRUE(near_interval(evaluate_body(v, BodyExpr::neg(BodyExpr::atom(atom("cold"))), cfg), pt(0.4)));
  EXPECT_EQ(evaluate_body(v, BodyExpr::atom(atom("fog")), cfg), iv(0, 1));
  EXPECT_EQ(evaluate_body(v, BodyExpr::naf(atom("fog")), cfg), pt(1));
  EXPECT_EQ(evaluate_body(v, BodyExpr::naf(atom("cold")), cfg), pt(0));
}

TEST(FireRule, Examples) {
  Valuation v;
  v.set(atom("cold"), pt(0.6));
  v.set(atom("wet"), pt(0.4));
  const EngineConfig cfg;
  EXPECT_TRUE(near_interval(fire_rule(v, {atom("cold"), false, BodyExpr::truth(), pt(0.6)}, cfg), pt(0.6)));
  EXPECT_TRUE(near_interval(
      fire_rule(v, {atom("risky"), false, BodyExpr::conj({BodyExpr::atom(atom("cold"))}), iv(0.3, 0.7)}, cfg),
      iv(0.18, 0.42)));
  EXPECT_TRUE(near_interval(
      fire_rule(v, {atom("risky"), false, BodyExpr::conj({BodyExpr::atom(atom("wet"))}), iv(0.6, 1)}, cfg),
      iv(0.24, 0.4)));
}

TEST(RuleApplicable, SkipsFalseAndUnknownBodies) {
  Valuation v;
  v.set(atom("a"), pt(0));
  v.set(atom("b"), pt(0.3));
  const EngineConfig cfg;
  auto rule = [](const char* body) {
    return WeightedRule{atom("h"), false, BodyExpr::conj({BodyExpr::atom(atom(body))}), pt(1)};
  };
  EXPECT_FALSE(rule_applicable(v, rule("a"), cfg));
  EXPECT_FALSE(rule_applicable(v, rule("missing"), cfg));
  EXPECT_TRUE(rule_applicable(v, rule("b"), cfg));
}

TEST(Closure, IdentityExample) {
  const Program p = load("identity.pre");
  const EngineConfig cfg = identity_config();
  const Valuation v = solve(p, cfg);
  const Atom q = atom("equal", {"a", "b"});
  EXPECT_TRUE(near_interval(cl_plus(p, v, q, cfg), iv(0.5, 0.8)));
  EXPECT_TRUE(near_interval(cl_minus(p, v, q, cfg), iv(0, 0.1)));
  EXPECT_EQ(cl_plus(p, v, atom("nobody"), cfg), iv(0, 1));
  EXPECT_TRUE(near_interval(v.state(q), iv(0, 0.1)));
}

TEST(Closure, AccumulatorNeverWidens) {
  const Interval steps[] = {iv(0.2, 0.9), iv(0.3, 0.95), iv(0.3, 0.6), pt(0.5)};
  Interval acc = iv(0, 1);
  for (const auto& s : steps) {
    const Interval next = k_join_bilattice(acc, s);
    EXPECT_LE(next.width(), acc.width());
    acc = next;
  }
}

TEST(CombineEvidence, Examples) {
  EXPECT_EQ(combine_evidence(iv(0.5, 0.8), iv(0, 0.1)), iv(0, 0.1));
  EXPECT_EQ(combine_evidence(iv(0.5, 1), pt(0)), pt(0));
  EXPECT_THROW(combine_evidence(iv(0.2, 0.5), iv(0.6, 0.9)), IndecisionError);
}

TEST(Solve, Tweety) {
  const Program p = load("tweety.pre");
  EXPECT_EQ(solve(p).state(atom("flies", {"tweety"})), pt(0));

  Program without_penguin;
  for (const auto& r : p.rules) {
    if (r.head.name != "penguin") without_penguin.rules.push_back(r);
  }
  EXPECT_EQ(solve(without_penguin).state(atom("flies", {"tweety"})), iv(0.5, 1));
}

TEST(Solve, Roads) {
  const Solution s = solve_detailed(load("roads.pre"));
  const Valuation& v = s.valuation;
  EXPECT_EQ(v.size(), 4u);
  EXPECT_TRUE(near_interval(v.state(atom("cold")), pt(0.6)));
  EXPECT_TRUE(near_interval(v.state(atom("wet")), pt(0.4)));
  EXPECT_TRUE(near_interval(v.state(atom("snow")), iv(0.32, 0.4)));
  EXPECT_TRUE(near_interval(v.state(atom("risky")), iv(0.24, 0.4)));
  EXPECT_EQ(s.strata.size(), 1u);
}

TEST(Solve, RoadsRuleThreeUsesDerivedSnow) {
  const Program p = load("roads.pre");
  const Valuation v = solve(p);
  const WeightedRule& r3 = p.rules[2];
  ASSERT_EQ(to_text(r3), "risky <- [[1,1]] cold, snow.");
  const Interval candidate = fire_rule(v, r3, {});
  EXPECT_TRUE(near_interval(candidate, iv(0.192, 0.24)));
  EXPECT_FALSE(approx_equal(candidate, pt(0.24)));
}

TEST(Solve, Triage) {
  const Solution s = solve_detailed(load("triage.pre"));
  EXPECT_EQ(s.valuation.state(atom("dr1")), pt(1));
  EXPECT_FALSE(s.valuation.derived(atom("dr2")));
  const Strata expected = {{atom("di1"), atom("di2")}, {atom("dr1")}, {atom("dr2")}};
  EXPECT_EQ(s.strata, expected);
}

TEST(Solve, TriageWithSwappedSeveritiesPicksDr2) {
  Program p = load("triage.pre");
  for (auto& r : p.rules) {
    if (r.head.name == "di1") r.weight = iv(0.5, 0.6);
    if (r.head.name == "di2") r.weight = iv(0.4, 0.9);
  }
  const Valuation v = solve(p);
  EXPECT_EQ(v.state(atom("dr2")), pt(1));
  EXPECT_FALSE(v.derived(atom("dr1")));
}

TEST(Stratify, NafCycleWithoutGuardsFails) {
  const Program p = parse_program(
      "dr1 <- [[1,1]] di1, not dr2.\n"
      "dr2 <- [[1,1]] di2, not dr1.\n"
      "di1 = [0.4,0.9].\n"
      "di2 = [0.5,0.6].\n");
  EXPECT_THROW(stratify(p), StratificationError);
  EXPECT_THROW(solve(p), StratificationError);
}

TEST(Stratify, TiedGuardsDoNotBreakTheCycle) {
  Program p = load("triage.pre");
  for (auto& r : p.rules) {
    if (r.head.name == "di2") r.weight = iv(0.4, 0.9);
  }
  EXPECT_THROW(stratify(p), StratificationError);
}

TEST(Stratify, NafOnLowerStratum) {
  const Program p = parse_program("a = 0.5.\nb <- [1] not c.\nc <- [1] a.\nd <- [1] b, not a.\n");
  const Strata s = stratify(p);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (std::vector<Atom>{atom("a"), atom("c")}));
  EXPECT_EQ(s[1], (std::vector<Atom>{atom("b"), atom("d")}));
  const Valuation v = solve(p);
  EXPECT_FALSE(v.derived(atom("b")));
  EXPECT_FALSE(v.derived(atom("d")));
}

TEST(Stratify, SelfNegationFails) {
  EXPECT_THROW(stratify(parse_program("p <- [1] not p.")), StratificationError);
}

TEST(Solve, EmptyProgram) {
  const Solution s = solve_detailed(Program{});
  EXPECT_TRUE(s.valuation.empty());
  EXPECT_TRUE(s.strata.empty());
}

TEST(Solve, NonConvergenceNamesTheAtom) {
  const Program p = parse_program("a = [0.2,0.2].\na <- [[1,1]] neg a.\n");
  try {
    solve(p);
    FAIL() << "expected NonConvergenceError";
  } catch (const NonConvergenceError& e) {
    EXPECT_EQ(e.atom(), "a");
    EXPECT_GT(e.residual(), kEpsilon);
  }
}

TEST(Solve, IndecisionNamesTheAtom) {
  const Program p = parse_program("b = [1,1].\np <- [[0.2,0.5]] b.\n~p <- [[0.1,0.4]] b.\n");
  try {
    solve(p);
    FAIL() << "expected IndecisionError";
  } catch (const IndecisionError& e) {
    EXPECT_EQ(e.atom(), "p");
  }
}

TEST(Solve, InconsistentKJoinNamesTheAtom) {
  EngineConfig cfg;
  cfg.head_combiner = HeadCombiner::KJoin;
  const Program p = parse_program("q = [0,0.3].\nq = [0.7,1].\n");
  try {
    solve(p, cfg);
    FAIL() << "expected InconsistentError";
  } catch (const InconsistentError& e) {
    EXPECT_EQ(e.atom(), "q");
  }
}

TEST(Solve, HeadCombiners) {
  const Program p = parse_program("q = [0.2,0.6].\nq = [0.3,0.5].\nr = [0.1,0.9].\nr = [0.6,0.7].\n");
  EngineConfig cfg;
  EXPECT_EQ(solve(p, cfg).state(atom("q")), iv(0.3, 0.5));
  EXPECT_EQ(solve(p, cfg).state(atom("r")), iv(0.6, 0.7));
  cfg.head_combiner = HeadCombiner::LubKp;
  EXPECT_EQ(solve(p, cfg).state(atom("r")), iv(0.6, 0.7));
  cfg.head_combiner = HeadCombiner::KJoin;
  EXPECT_EQ(solve(p, cfg).state(atom("q")), iv(0.3, 0.5));
}

TEST(Solve, IterationCapIsConfigurable) {
  const Program p = parse_program("a = 0.5.\nb <- [1] a.\nc <- [1] b.\nd <- [1] c.\n");
  EngineConfig cfg;
  cfg.max_iterations = 2;
  EXPECT_THROW(solve(p, cfg), NonConvergenceError);
  cfg.max_iterations = 5;
  EXPECT_TRUE(near_interval(solve(p, cfg).state(atom("d")), pt(0.5)));
}

TEST(Solve, DeterministicAndAFixpoint) {
  for (const char* name : {"tweety.pre", "identity.pre", "triage.pre", "roads.pre"}) {
    const Program p = load(name);
    const EngineConfig cfg;
    const Valuation v = solve(p, cfg);
    EXPECT_EQ(v, solve(p, cfg)) << name;
    const Valuation again = consequence_step(p, v, cfg);
    for (const auto& [a, x] : v.entries()) {
      EXPECT_TRUE(near_interval(again.state(a), x)) << name << " " << a.text();
    }
  }
}

TEST(Config, SetOptions) {
  EngineConfig cfg;
  set_config_option(cfg, "conjunctor", "tmin");
  set_config_option(cfg, "rule_application", "tminp");
  set_config_option(cfg, "head_combiner", "lub_kp");
  set_config_option(cfg, "max_iterations", "7");
  set_config_option(cfg, "epsilon", "1e-6");
  EXPECT_EQ(cfg.conjunctor, OperatorId::TMin);
  EXPECT_EQ(cfg.rule_application, OperatorId::TMinP);
  EXPECT_EQ(cfg.head_combiner, HeadCombiner::LubKp);
  EXPECT_EQ(cfg.max_iterations, 7);
  EXPECT_DOUBLE_EQ(cfg.epsilon, 1e-6);
  EXPECT_THROW(set_config_option(cfg, "conjunctor", "neg"), std::invalid_argument);
  EXPECT_THROW(set_config_option(cfg, "max_iterations", "0"), std::invalid_argument);
  EXPECT_THROW(set_config_option(cfg, "max_iterations", "3x"), std::invalid_argument);
  EXPECT_THROW(set_config_option(cfg, "colour", "blue"), std::invalid_argument);
  EXPECT_EQ(to_string(HeadCombiner::KJoin), "kjoin");
}

}  // namespace
}  // namespace ptri
