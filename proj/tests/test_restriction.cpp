#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "nucube/restriction.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace nucube;
using namespace support;

namespace {

RestrictedContext gamma_z(std::size_t q) { return rdec_extract(with({z_declaration({q, 0})})); }

}  // namespace

TEST_CASE("projections satisfy their own restriction") {
  for (std::size_t i = 1; i <= 2; ++i) {
    SatisfactionReport r = satisfies({}, P(i, 2), proj_restriction(2));
    CHECK(r.holds);
    CHECK(r.branch_count == 1);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == i - 1);
    // the same under rdec(δy), which is empty
    CHECK(satisfies(rdec_extract(dy()), P(i, 2), proj_restriction(2)).holds);
  }
}

TEST_CASE("the identity type converts to V under the z2 restriction") {
  ExampleTerms e = example_terms();
  SatisfactionReport r = satisfies(gamma_z(2), make_pi(e.u, e.U), Restriction{{e.V}});
  CHECK(r.holds);
  CHECK(r.branch_count == 2);
  // without the restriction the two are different types
  CHECK_FALSE(beta_equal(make_pi(e.u, e.U), e.V, Fuel{}));
}

TEST_CASE("component-wise conversions of the encoded types") {
  UrzyczynTerms u = urzyczyn();
  CHECK(satisfies(gamma_z(3), u.F, Restriction{{arrow(u.S, u.S)}}).holds);
  CHECK(satisfies(gamma_z(3), u.G, Restriction{{arrow(u.Q, u.M)}}).holds);
  Term body = make_pi(z_declaration({3, 0}), make_apps(z_var({2, 0}), {u.B, u.A}));
  CHECK(convertible_under(gamma_z(2), u.O, body).holds);
  // the swapped pairing fails
  CHECK_FALSE(satisfies(gamma_z(3), u.F, Restriction{{arrow(u.Q, u.M)}}).holds);
}

TEST_CASE("plain conversion") {
  Term y = y_var();
  CHECK_FALSE(satisfies({}, y, Restriction{{bar(y)}}).holds);
  CHECK(convertible_under({}, y, y).holds);
  Term redex = make_apps(P(1, 2), {y, bar(y)});
  CHECK(convertible_under({}, redex, y).holds);
  CHECK(convertible_under({}, redex, y) == SatisfactionReport{true, 1, {0}});
}

TEST_CASE("null restriction is rejected") {
  CHECK(error_kind([] { satisfies({}, y_var(), Restriction{}); }) == ErrorKind::InvalidArgument);
  RestrictedContext bad{{{typ("z"), Restriction{}}}};
  CHECK(error_kind([&] { satisfies(bad, y_var(), Restriction{{y_var()}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("fuel exhaustion is not a verdict") {
  Term half = make_lambda(decl(obj("x"), y_var()), make_app(v(obj("x")), v(obj("x"))));
  Term omega = make_app(half, half);
  CHECK(error_kind([&] { satisfies({}, omega, Restriction{{y_var()}}, Fuel{200, 10000}); }) ==
        ErrorKind::FuelExhausted);
}

TEST_CASE("audit explores every branch") {
  Term y = y_var();
  // z3 (z2 y ȳ) y y fails only for z3 = P13, z2 = P22, which is the second leaf
  RestrictedContext g = rdec_extract(with({z_declaration({3, 0}), z_declaration({2, 0})}));
  Term subject = make_apps(z_var({3, 0}), {make_apps(z_var({2, 0}), {y, bar(y)}), y, y});
  SatisfactionReport quick = satisfies(g, subject, Restriction{{y}});
  SatisfactionReport full = satisfies(g, subject, Restriction{{y}}, Fuel{}, true);
  CHECK_FALSE(quick.holds);
  CHECK_FALSE(full.holds);
  CHECK(full.branch_count == 6);
  CHECK(quick.branch_count < full.branch_count);
  std::size_t misses = 0;
  for (const auto& w : full.witnesses) misses += w.has_value() ? 0 : 1;
  CHECK(misses == 1);
  CHECK(quick.branch_count == 2);

  gen::Rng rng(41);
  gen::QueryGen queries(rng);
  for (int n = 0; n < 300; ++n) {
    gen::Query q = queries.next();
    std::size_t product = 1;
    for (const auto& e : q.gamma.entries) product *= e.restriction.size();
    SatisfactionReport r = satisfies(q.gamma, q.subject, q.restriction, Fuel{}, true);
    CHECK(r.branch_count == product);
    CHECK(r.witnesses.size() == product);
    bool all = std::all_of(r.witnesses.begin(), r.witnesses.end(), [](const auto& w) { return w.has_value(); });
    CHECK(r.holds == all);
  }
}

TEST_CASE("agrees with the brute-force oracle") {
  gen::Rng rng(42);
  gen::QueryGen queries(rng);
  int yes = 0, no = 0;
  RestrictionChecker session;
  for (int n = 0; n < 600; ++n) {
    gen::Query q = queries.next();
    bool expect = oracle::brute_satisfies(q.gamma, q.subject, q.restriction, Fuel{});
    bool got = satisfies(q.gamma, q.subject, q.restriction).holds;
    REQUIRE_MESSAGE(got == expect, print_restricted_context(q.gamma) << " |= " << print_term(q.subject));
    CHECK(session.satisfies(q.gamma, q.subject, q.restriction).holds == expect);
    (expect ? yes : no) += 1;
  }
  CHECK(yes > 50);
  CHECK(no > 50);
  CHECK(session.memo_size() > 0);
}

TEST_CASE("reflexivity") {
  gen::Rng rng(43);
  gen::QueryGen queries(rng);
  for (int n = 0; n < 300; ++n) {
    gen::Query q = queries.next();
    bool mentions = false;
    for (const auto& e : q.gamma.entries) {
      mentions |= occurs_free(e.subject, make_app(q.subject, q.subject));
      for (const Term& a : q.restriction.elements) mentions |= occurs_free(e.subject, a);
    }
    if (mentions) continue;
    for (const Term& a : q.restriction.elements) CHECK(satisfies(q.gamma, a, q.restriction).holds);
  }
}

TEST_CASE("weakening") {
  gen::Rng rng(44);
  gen::QueryGen queries(rng);
  RestrictedDeclaration extra{typ("unused"), proj_restriction(3)};
  for (int n = 0; n < 300; ++n) {
    gen::Query q = queries.next();
    bool base = satisfies(q.gamma, q.subject, q.restriction).holds;
    RestrictedContext front = q.gamma, back = q.gamma;
    front.entries.insert(front.entries.begin(), extra);
    back.entries.push_back(extra);
    CHECK(satisfies(front, q.subject, q.restriction).holds == base);
    CHECK(satisfies(back, q.subject, q.restriction).holds == base);
  }
}

TEST_CASE("independent entries commute") {
  gen::Rng rng(45);
  gen::QueryGen queries(rng);
  int swapped = 0;
  for (int n = 0; n < 600; ++n) {
    gen::Query q = queries.next();
    if (q.gamma.size() < 2) continue;
    auto& es = q.gamma.entries;
    std::size_t i = rng.below(es.size() - 1);
    if (free_vars(es[i + 1].restriction).count(es[i].subject)) continue;
    if (free_vars(es[i].restriction).count(es[i + 1].subject)) continue;
    bool base = satisfies(q.gamma, q.subject, q.restriction).holds;
    RestrictedContext perm = q.gamma;
    std::swap(perm.entries[i], perm.entries[i + 1]);
    CHECK(satisfies(perm, q.subject, q.restriction).holds == base);
    CHECK(oracle::brute_satisfies(perm, q.subject, q.restriction, Fuel{}) == base);
    ++swapped;
  }
  CHECK(swapped > 50);
}

TEST_CASE("memo hits") {
  RestrictionChecker session;
  ExampleTerms e = example_terms();
  session.satisfies(gamma_z(2), make_pi(e.u, e.U), Restriction{{e.V}});
  session.satisfies(gamma_z(2), make_pi(e.u, e.U), Restriction{{e.V}});
  CHECK(session.memo_hits() == 1);
}
