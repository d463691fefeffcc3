#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "nucube/erasure.hpp"
#include "nucube/rewrite.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace nucube;
using namespace support;

namespace {

Term omega_half() {
  return make_lambda(decl(obj("x"), y_var()), make_app(v(obj("x")), v(obj("x"))));
}

Term random_object(gen::Rng& rng, gen::ObjectGen& g, int max_size) {
  std::vector<Name> scope;
  return g.object(2 + static_cast<int>(rng.below(static_cast<std::size_t>(max_size - 1))), scope);
}

}  // namespace

TEST_CASE("single steps") {
  Term y = y_var();
  CHECK_FALSE(beta_step(make_lambda(decl(obj("u"), bar(y, 0)), v(obj("u")))).has_value());

  Term r = make_apps(P(1, 2), {bar(y), bar(y, 2)});
  CHECK(normalize(r, Fuel{}).result == bar(y));
  CHECK(normalize(make_apps(P(2, 2), {bar(y), bar(y, 2)}), Fuel{}).result == bar(y, 2));

  Term d = v(obj("d"));
  Term fsd = make_app(make_lambda({obj("x"), Restriction{{d}}, y}, v(obj("x"))), d);
  auto s = beta_step(fsd);
  REQUIRE(s.has_value());
  CHECK(*s == d);
  CHECK(*s == substitute(v(obj("x")), obj("x"), d));
}

TEST_CASE("leftmost outermost") {
  // (λx:y. x) ((λx:y. x) a): the outer redex fires first
  Term id = make_lambda(decl(obj("x"), y_var()), v(obj("x")));
  Term inner = make_app(id, v(obj("a")));
  auto s = beta_step_traced(make_app(id, inner));
  REQUIRE(s.has_value());
  CHECK(s->path.empty());
  CHECK(s->result == inner);

  // a redex inside a declared type is found when the body is normal
  Term ty = make_app(make_lambda(decl(typ("t"), star()), v(typ("t"))), y_var());
  Term lam = make_lambda(decl(obj("u"), ty), v(obj("u")));
  auto st = beta_step_traced(lam);
  REQUIRE(st.has_value());
  CHECK(st->path == RedexPath{0});
  CHECK(st->result == make_lambda(decl(obj("u"), y_var()), v(obj("u"))));

  // and inside a restriction element, which precedes the type
  Term lam2 = make_lambda({obj("u"), Restriction{{ty}}, ty}, v(obj("u")));
  auto st2 = beta_step_traced(lam2);
  REQUIRE(st2.has_value());
  CHECK(st2->path == RedexPath{0});
  auto both = all_beta_steps(lam2);
  REQUIRE(both.size() == 2);
  CHECK(both[1].path == RedexPath{1});
}

TEST_CASE("pure steps") {
  PureTerm id = make_plam(obj("x"), make_pvar(obj("x")));
  auto s = ube_step(make_papp(id, make_pvar(obj("y"))));
  REQUIRE(s.has_value());
  CHECK(*s == make_pvar(obj("y")));

  PureTerm half = make_plam(obj("x"), make_papp(make_pvar(obj("x")), make_pvar(obj("x"))));
  PureTerm omega = make_papp(half, half);
  auto o = ube_step(omega);
  REQUIRE(o.has_value());
  CHECK(*o == omega);
  CHECK(error_kind([&] { normalize(omega, Fuel{500, 100000}); }) == ErrorKind::FuelExhausted);

  PureTerm u = erase(urzyczyn().U).pure;
  PureReductionOutcome out = normalize(u, Fuel{});
  CHECK(out.normal);
  CHECK(is_normal(out.result));
  CHECK(out.steps_used > 0);
}

TEST_CASE("normal forms of the encoded types") {
  UrzyczynTerms u = urzyczyn();
  Term y = y_var();
  CHECK(normalize(substitute(u.B, z_name({3, 0}), P(1, 3)), Fuel{}).result == bar(y, 4));
  CHECK(normalize(substitute(u.A, z_name({3, 0}), P(2, 3)), Fuel{}).result == underline(y));
}

TEST_CASE("divergence is reported, not looped") {
  Term bb = make_app(omega_half(), omega_half());
  try {
    normalize(bb, Fuel{1000, 100000});
    FAIL("expected fuel exhaustion");
  } catch (const FuelExhausted& e) {
    CHECK(e.partial().steps_used == 1000);
    CHECK_FALSE(e.partial().normal);
    CHECK(e.partial().result == bb);
  }
  ReductionOutcome t = try_normalize(bb, Fuel{50, 100000});
  CHECK_FALSE(t.normal);
  CHECK(t.steps_used == 50);
  CHECK(error_kind([&] { beta_equal(bb, y_var(), Fuel{100, 100000}); }) == ErrorKind::FuelExhausted);

  // size budget: a growing term stops on max_size
  Term x = v(obj("x"));
  Term grow = make_lambda(decl(obj("x"), y_var()), make_apps(x, {x, x}));
  CHECK(error_kind([&] { normalize(make_app(grow, grow), Fuel{1000000, 5000}); }) == ErrorKind::FuelExhausted);
}

TEST_CASE("beta equality") {
  Term y = y_var();
  Term inst = make_apps(P(2, 2), {y, bar(y)});
  CHECK(beta_equal(bar(y, 2), arrow(inst, inst), Fuel{}));
  CHECK_FALSE(beta_equal(y, bar(y), Fuel{}));
  CHECK(beta_equal(urzyczyn().R, urzyczyn().R, Fuel{}));
}

TEST_CASE("trace sink") {
  Term y = y_var();
  Term t = make_apps(P(3, 3), {y, bar(y), make_apps(P(1, 2), {y, y})});
  std::vector<TraceStep> steps;
  ReductionOutcome out = normalize(t, Fuel{}, [&](const TraceStep& s) { steps.push_back(s); });
  CHECK(out.result == y);
  CHECK(steps.size() == out.steps_used);
  for (std::size_t k = 0; k < steps.size(); ++k) CHECK(steps[k].index == k);
  CHECK(steps.front().size_before == t->size());
  CHECK(steps.back().size_after == 1);
}

TEST_CASE("whnf") {
  Term y = y_var();
  Term t = make_apps(P(2, 2), {y, bar(y)});
  CHECK(whnf(t, Fuel{}) == bar(y));
  Term lam = make_lambda(decl(obj("x"), y), make_app(make_lambda(decl(obj("z"), y), v(obj("z"))), v(obj("x"))));
  CHECK(whnf(lam, Fuel{}) == lam);
}

TEST_CASE("determinism and idempotence") {
  gen::Rng rng(31);
  gen::ObjectGen g(rng);
  for (int n = 0; n < 500; ++n) {
    Term t = random_object(rng, g, 30);
    auto a = beta_step(t);
    auto b = beta_step(t);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(*a == *b);
      auto all = all_beta_steps(t);
      REQUIRE_FALSE(all.empty());
      CHECK(all.front().result == *a);
    } else {
      CHECK(is_normal(t));
      CHECK(all_beta_steps(t).empty());
    }
    ReductionOutcome r = try_normalize(t, Fuel{5000, 100000});
    if (r.normal) {
      CHECK(is_normal(r.result));
      ReductionOutcome again = normalize(r.result, Fuel{});
      CHECK(again.steps_used == 0);
      CHECK(again.result == r.result);
    }
  }
}

TEST_CASE("substitutivity") {
  gen::Rng rng(32);
  gen::ObjectGen g(rng);
  int checked = 0;
  for (int n = 0; n < 600; ++n) {
    Term t = random_object(rng, g, 25);
    Term s = random_object(rng, g, 8);
    for (const StepResult& step : all_beta_steps(t)) {
      Term lhs = substitute(t, obj("a"), s);
      Term want = substitute(step.result, obj("a"), s);
      auto reducts = all_beta_steps(lhs);
      bool found = std::any_of(reducts.begin(), reducts.end(), [&](const StepResult& r) { return r.result == want; });
      REQUIRE_MESSAGE(found, print_term(t) << " [a := " << print_term(s) << "]");
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("local confluence on small terms") {
  gen::Rng rng(33);
  gen::ObjectGen g(rng);
  int pairs = 0;
  for (int n = 0; n < 300; ++n) {
    Term t = random_object(rng, g, 20);
    auto steps = all_beta_steps(t);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      for (std::size_t j = i + 1; j < steps.size(); ++j) {
        if (steps[i].result == steps[j].result) continue;
        oracle::JoinResult r = oracle::joinable(steps[i].result, steps[j].result);
        REQUIRE_MESSAGE(r.joined, print_term(t));
        ++pairs;
      }
    }
  }
  CHECK(pairs > 50);
}

TEST_CASE("erasure simulates reduction") {
  gen::Rng rng(34);
  gen::ObjectGen g(rng);
  int kept = 0, dropped = 0;
  for (int n = 0; n < 600; ++n) {
    Term t = random_object(rng, g, 30);
    PureTerm before = erase(t).pure;
    for (const StepResult& step : all_beta_steps(t)) {
      PureTerm after = erase(step.result).pure;
      if (after == before) {
        ++dropped;
        continue;
      }
      auto reducts = oracle::pure_reducts(before);
      bool found = std::find(reducts.begin(), reducts.end(), after) != reducts.end();
      REQUIRE_MESSAGE(found, print_term(t) << " -> " << print_term(step.result));
      ++kept;
    }
  }
  CHECK(kept > 100);
  CHECK(dropped > 10);
}
