#pragma once

// Judgement-by-judgement reproductions of the worked derivations, shared by
// the unit tests and the acceptance binary. Each check records a labelled
// failure instead of aborting, so one run reports everything that broke.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nucube/encoding.hpp"
#include "nucube/replay.hpp"
#include "nucube/restriction.hpp"
#include "nucube/rewrite.hpp"
#include "nucube/syntax.hpp"
#include "nucube/typing.hpp"

namespace walk {

using namespace nucube;

struct Tally {
  std::size_t passed = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }

  void expect(bool cond, const std::string& label) {
    if (cond) {
      ++passed;
    } else {
      failures.push_back(label);
    }
  }

  // Runs f, turning any exception into a failure of `label`.
  void guard(const std::string& label, const std::function<bool()>& f) {
    try {
      expect(f(), label);
    } catch (const std::exception& e) {
      failures.push_back(label + ": " + e.what());
    }
  }

  std::string summary() const {
    std::ostringstream o;
    o << passed << " checks passed";
    if (!failures.empty()) o << ", " << failures.size() << " failed (first: " << failures.front() << ")";
    return o.str();
  }
};

inline const CheckConfig& nu_c() {
  static const CheckConfig c{{SystemName::C, Mode::NuCube}, Fuel{}, false};
  return c;
}

inline Name y_name(std::size_t k) { return Name{k == 0 ? "y" : "y" + std::to_string(k), Sort::Box, 0}; }
inline Declaration y_decl(std::size_t k) { return {y_name(k), {}, star()}; }
inline Term P(std::size_t i, std::size_t q) { return projection(i, q); }
inline Context ctx(std::vector<Declaration> ds) { return Context{std::move(ds)}; }

// Δ ⊢ a : b, replayed, and optionally Δ ⊢ b : sort.
inline void judge(Tally& t, const std::string& label, const Context& c, const Term& a, const Term& b,
                  std::optional<Sort> sort = std::nullopt, const CheckConfig& cfg = nu_c()) {
  t.guard(label, [&] {
    Checker checker(cfg);
    DerivationPtr d = checker.check_judgement(c, a, b);
    ReplayResult r = validate_derivation(d, cfg.system, cfg.fuel);
    if (!r.ok) throw std::runtime_error("replay: " + r.failure);
    if (sort && checker.sort_of(c, a) != sort) return false;
    return d->conclusion.type == b;
  });
}

inline void sat(Tally& t, const std::string& label, const RestrictedContext& g, const Term& b, const Restriction& rho) {
  t.guard(label, [&] { return satisfies(g, b, rho).holds; });
}

// ---------------------------------------------------------------------------

inline void toolkit(Tally& t) {
  const std::size_t N = 4;
  // sorts, projections and z-variables
  for (std::size_t i = 0; i <= N + 1; ++i) judge(t, "*_" + std::to_string(i) + " : @", {}, star_k(i), box());
  for (std::size_t q = 1; q <= N; ++q) {
    for (std::size_t i = 1; i <= q; ++i) {
      judge(t, "P" + std::to_string(i) + "," + std::to_string(q) + " : *_q", {}, P(i, q), star_k(q));
    }
    for (std::size_t j = 0; j <= N; ++j) {
      EncodingHandle h{q, j};
      judge(t, z_name(h).display() + " : *_q", ctx({z_declaration(h)}), z_var(h), star_k(q));
    }
  }

  // declared variables have their declared type, at their class
  for (const auto& [name, entry] : corpus()) {
    for (const Declaration& d : entry.context.entries) {
      judge(t, name + " declares " + d.subject.display(), entry.context, make_var(d.subject), d.type,
            d.subject.cls);
    }
  }

  // z applied to n of its i arguments, each a y_k or its bar
  for (std::size_t i = 1; i <= N; ++i) {
    for (std::size_t j = 0; j <= 2; ++j) {
      EncodingHandle h{i, j};
      Context c = ctx({y_decl(0), y_decl(1), z_declaration(h)});
      for (std::size_t n = 1; n <= i; ++n) {
        std::size_t combos = 1;
        for (std::size_t l = 0; l < n; ++l) combos *= 4;
        for (std::size_t code = 0; code < combos; ++code) {
          std::vector<Term> args;
          std::size_t k = code;
          for (std::size_t l = 0; l < n; ++l, k /= 4) {
            Term u = make_var(y_name(k % 2));
            args.push_back((k / 2) % 2 ? bar(u) : u);
          }
          Term app = make_apps(z_var(h), args);
          judge(t, "partial z application " + print_term(app), c, app, star_k(i - n), Sort::Box);
        }
      }
    }
  }

  // A : *_q applied to types B_0 .. B_j
  Term y = make_var(y_name(0));
  const std::vector<Term> types{y, bar(y), underline(y), tilde(y)};
  for (std::size_t q = 1; q <= N; ++q) {
    Context c = ctx({y_decl(0), z_declaration({q, 0})});
    std::vector<Term> heads{z_var({q, 0})};
    for (std::size_t i = 1; i <= q; ++i) heads.push_back(P(i, q));
    for (const Term& head : heads) {
      for (std::size_t j = 0; j < q; ++j) {
        std::vector<Term> args;
        for (std::size_t l = 0; l <= j; ++l) args.push_back(types[(l + j) % types.size()]);
        Term app = make_apps(head, args);
        judge(t, "applied " + print_term(app), c, app, star_k(q - (j + 1)));
      }
    }
  }

  // arrows and the three abbreviations preserve : *
  Context cz = ctx({y_decl(0), z_declaration({2, 0})});
  std::vector<Term> bases{y, bar(y), make_apps(z_var({2, 0}), {y, bar(y)}), example_terms().W};
  for (const Term& a : bases) {
    for (const Term& b : bases) judge(t, "arrow " + print_term(arrow(a, b)), cz, arrow(a, b), star());
    judge(t, "tilde of " + print_term(a), cz, tilde(a), star());
    for (std::size_t i = 0; i <= N; ++i) {
      judge(t, "bar^" + std::to_string(i) + " of " + print_term(a), cz, bar(a, i), star());
      judge(t, "underline_" + std::to_string(i) + " of " + print_term(a), cz, underline(a, i), star());
    }
  }
}

// ---------------------------------------------------------------------------

inline void polymorphic_identity(Tally& t) {
  ExampleTerms e = example_terms();
  Term y = y_var();
  Context dy = ctx({y_declaration()});
  Context dyz = ctx({y_declaration(), z_declaration({2, 0})});
  Context dyzu = ctx({y_declaration(), z_declaration({2, 0}), e.u});
  Name z2 = z_name({2, 0});
  Term u = make_var(e.u.subject);
  Term id = make_lambda(e.u, u);
  Term pu = make_pi(e.u, e.U);

  judge(t, "U is a type under z2", dyz, e.U, star());
  judge(t, "u : U", dyzu, u, e.U);
  judge(t, "identity body : Pi u. U", dyz, id, pu, Sort::Star);
  judge(t, "W' : W", dy, e.W_prime, e.W, Sort::Star);

  for (std::size_t i = 1; i <= 2; ++i) {
    std::string at = " at P" + std::to_string(i) + ",2";
    Term inst = make_apps(P(i, 2), {y, bar(y)});
    Term pu_i = substitute(pu, z2, P(i, 2));
    Term v_i = substitute(e.V, z2, P(i, 2));
    t.expect(pu_i == arrow(inst, inst), "instantiated product" + at);
    t.guard("instantiated product is a power of the bar" + at, [&] { return beta_equal(pu_i, bar(y, i), Fuel{}); });
    t.guard("instantiated V agrees" + at, [&] { return beta_equal(bar(y, i), v_i, Fuel{}); });
    t.expect(v_i == make_apps(P(i, 2), {bar(y), bar(y, 2)}), "instantiated V" + at);
    sat(t, "empty context satisfaction" + at, {}, pu_i, Restriction{{v_i}});
  }
  sat(t, "z2 context: Pi u. U satisfies {V}", rdec_extract(dyz), pu, Restriction{{e.V}});
  judge(t, "identity body : V", dyz, id, e.V, Sort::Star);
  judge(t, "W' : Pi z2. V", dy, e.W_prime, e.W_inter, Sort::Star);

  for (std::size_t i = 1; i <= 2; ++i) {
    std::string at = " at P" + std::to_string(i) + ",2";
    judge(t, "projection is typed" + at, dy, P(i, 2), star_k(2), Sort::Box);
    sat(t, "projection satisfies the projections" + at, {}, P(i, 2), proj_restriction(2));
    sat(t, "projection satisfies the projections under rdec" + at, rdec_extract(dy), P(i, 2), proj_restriction(2));
    Term id_i = substitute(id, z2, P(i, 2));
    Term v_i = substitute(e.V, z2, P(i, 2));
    judge(t, "instantiated identity : instantiated V" + at, dy, id_i, v_i, Sort::Star);
    Term reduced = make_lambda({e.u.subject, {}, bar(y, i - 1)}, u);
    t.expect(id_i == make_lambda({e.u.subject, {}, make_apps(P(i, 2), {y, bar(y)})}, u), "instantiated identity" + at);
    t.guard("instantiated identity contracts" + at, [&] { return nf(id_i, Fuel{}) == reduced; });
    t.guard("instantiated V contracts" + at, [&] { return nf(v_i, Fuel{}) == bar(y, i); });
    judge(t, "contracted identity : bar^i" + at, dy, reduced, bar(y, i), Sort::Star);
  }
}

inline void self_application(Tally& t) {
  ExampleTerms e = example_terms();
  Term y = y_var();
  Context dy = ctx({y_declaration()});
  Context dyw = ctx({y_declaration(), e.w});
  Term w = make_var(e.w.subject);
  Name z2 = z_name({2, 0});

  judge(t, "W : *", dy, e.W, star(), Sort::Box);
  judge(t, "w : W", dyw, w, e.W, Sort::Star);
  t.guard("context with w is legal", [&] { return check_context(dyw, nu_c()).size() == 2; });
  for (std::size_t i = 1; i <= 2; ++i) {
    std::string at = " at P" + std::to_string(i) + ",2";
    judge(t, "projection under w" + at, dyw, P(i, 2), star_k(2), Sort::Box);
    sat(t, "projection satisfies under rdec with w" + at, rdec_extract(dyw), P(i, 2), proj_restriction(2));
    Term pu_i = substitute(make_pi(e.u, e.U), z2, P(i, 2));
    Term inst = make_apps(P(i, 2), {y, bar(y)});
    judge(t, "w applied" + at, dyw, make_app(w, P(i, 2)), pu_i, Sort::Star);
    Term spelled = make_pi({e.u.subject, {}, inst}, inst);
    t.expect(spelled == pu_i, "spelled-out type" + at);
    judge(t, "w applied, spelled out" + at, dyw, make_app(w, P(i, 2)), spelled, Sort::Star);
  }
  judge(t, "w P12 : bar y", dyw, make_app(w, P(1, 2)), bar(y), Sort::Star);
  judge(t, "w P22 : bar y -> bar y", dyw, make_app(w, P(2, 2)), arrow(bar(y), bar(y)), Sort::Star);
  judge(t, "self application body", dyw, e.self_app_body, bar(y), Sort::Star);
  judge(t, "abstracted over w", dy, e.self_app_fn, arrow(e.W, bar(y)), Sort::Star);
  judge(t, "applied to W'", dy, e.self_app, bar(y), Sort::Star);
}

inline void normal_form_table(Tally& t) {
  UrzyczynTerms u = urzyczyn();
  Term y = y_var();
  Name z3 = z_name({3, 0}), z2 = z_name({2, 0});
  Declaration dz3 = z_declaration({3, 0}), dz2 = z_declaration({2, 0});
  auto nf_at = [](const Term& a, const Name& z, std::size_t i, std::size_t q) {
    return nf(substitute(a, z, P(i, q)), Fuel{});
  };

  t.expect(u.E == make_pi(dz3, arrows({u.F, u.S, u.S})), "E header");
  t.expect(u.D == make_pi(dz3, arrows({u.Q, u.G, u.M})), "D header");
  t.expect(u.R == make_pi(dz2, arrow(u.O, u.C)), "R header");

  const Term Es[] = {u.E1, u.E2, u.E3};
  const Term Ds[] = {u.D1, u.D2, u.D3};
  const Term F_cols[] = {bar(y, 3), bar(y, 2), bar(y)};
  const Term S_cols[] = {bar(y, 2), bar(y, 1), y};
  const Term Q_cols[] = {underline(y), y, underline(y)};
  const Term G_cols[] = {underline(y, 2), bar(y), bar(underline(y))};
  const Term M_cols[] = {tilde(underline(y)), y, underline(y)};
  const Term E_expect[] = {bar(y, 4), bar(y, 3), bar(y, 2)};
  const Term D_expect[] = {arrows({underline(y), underline(y, 2), tilde(underline(y))}), underline(y), underline(y, 2)};
  for (std::size_t i = 1; i <= 3; ++i) {
    std::string at = " at P" + std::to_string(i) + ",3";
    t.guard("nf B" + at, [&] { return nf_at(u.B, z3, i, 3) == Es[i - 1] && Es[i - 1] == E_expect[i - 1]; });
    t.guard("nf A" + at, [&] { return nf_at(u.A, z3, i, 3) == Ds[i - 1] && Ds[i - 1] == D_expect[i - 1]; });
    t.guard("B columns" + at, [&] {
      return nf_at(u.F, z3, i, 3) == F_cols[i - 1] && nf_at(u.S, z3, i, 3) == S_cols[i - 1] &&
             arrows({F_cols[i - 1], S_cols[i - 1], S_cols[i - 1]}) == Es[i - 1];
    });
    t.guard("A columns" + at, [&] {
      return nf_at(u.Q, z3, i, 3) == Q_cols[i - 1] && nf_at(u.G, z3, i, 3) == G_cols[i - 1] &&
             nf_at(u.M, z3, i, 3) == M_cols[i - 1] &&
             arrows({Q_cols[i - 1], G_cols[i - 1], M_cols[i - 1]}) == Ds[i - 1];
    });
  }
  t.guard("nf R' at P1,2", [&] { return nf_at(u.R_prime, z2, 1, 2) == u.R1 && u.R1 == arrow(u.E, u.C1); });
  t.guard("nf R' at P2,2", [&] { return nf_at(u.R_prime, z2, 2, 2) == u.R2 && u.R2 == arrow(u.D, u.C2); });
}

inline void urzyczyn_types(Tally& t) {
  UrzyczynTerms u = urzyczyn();
  Context dyz3 = ctx({y_declaration(), z_declaration({3, 0})});
  Context dyz2 = ctx({y_declaration(), z_declaration({2, 0})});
  Context dy = ctx({y_declaration()});
  for (auto [name, h] : {std::pair{"F", u.F}, {"S", u.S}, {"B", u.B}, {"Q", u.Q}, {"G", u.G}, {"M", u.M}, {"A", u.A}}) {
    judge(t, std::string(name) + " : * under z3", dyz3, h, star(), Sort::Box);
  }
  for (auto [name, j] : {std::pair{"E", u.E}, {"D", u.D}, {"R", u.R}}) {
    judge(t, std::string(name) + " : *", dy, j, star(), Sort::Box);
  }
  judge(t, "C : * under z2", dyz2, u.C, star(), Sort::Box);
  judge(t, "R' : * under z2", dyz2, u.R_prime, star(), Sort::Box);
}

inline void urzyczyn_terms(Tally& t) {
  UrzyczynTerms u = urzyczyn();
  Term y = y_var();
  Context dy = ctx({y_declaration()});
  RestrictedContext g3 = rdec_extract(ctx({z_declaration({3, 0})}));
  RestrictedContext g2 = rdec_extract(ctx({z_declaration({2, 0})}));
  sat(t, "F converts to S -> S under z3", g3, u.F, Restriction{{arrow(u.S, u.S)}});
  sat(t, "G converts to Q -> M under z3", g3, u.G, Restriction{{arrow(u.Q, u.M)}});
  sat(t, "O converts to Pi z3. z2 B A under z2", g2, u.O,
      Restriction{{make_pi(z_declaration({3, 0}), make_apps(z_var({2, 0}), {u.B, u.A}))}});

  judge(t, "T : E", dy, u.T, u.E, Sort::Star);
  judge(t, "J : D", dy, u.J, u.D, Sort::Star);

  Context dyzo = ctx({y_declaration(), z_declaration({2, 0}), u.o});
  Term o = make_var(u.o.subject);
  const Term Es[] = {u.E1, u.E2, u.E3};
  const Term Ds[] = {u.D1, u.D2, u.D3};
  for (std::size_t i = 1; i <= 3; ++i) {
    judge(t, "o P" + std::to_string(i) + ",3 : z2 E_i D_i", dyzo, make_app(o, P(i, 3)),
          make_apps(z_var({2, 0}), {Es[i - 1], Ds[i - 1]}), Sort::Star);
  }
  Term ooo = make_apps(o, {P(1, 3), make_app(o, P(2, 3)), make_app(o, P(3, 3))});
  judge(t, "o P13 (o P23) (o P33) : C", dyzo, ooo, u.C, Sort::Star);
  judge(t, "V : R", dy, u.V, u.R, Sort::Star);

  Context dyhr = ctx({y_declaration(), u.h, u.r});
  Term r = make_var(u.r.subject);
  judge(t, "r P12 : R1", dyhr, make_app(r, P(1, 2)), u.R1, Sort::Star);
  judge(t, "r P22 : R2", dyhr, make_app(r, P(2, 2)), u.R2, Sort::Star);
  judge(t, "r P12 T : C1", dyhr, make_apps(r, {P(1, 2), u.T}), u.C1, Sort::Star);
  judge(t, "r P22 J : C2", dyhr, make_apps(r, {P(2, 2), u.J}), u.C2, Sort::Star);
  judge(t, "L : y", dyhr, u.L, y, Sort::Star);
  Context dyh = ctx({y_declaration(), u.h});
  judge(t, "fn r. L : Pi r. y", dyh, make_lambda(u.r, u.L), make_pi(u.r, y), Sort::Star);
  judge(t, "U : y", dyh, u.U, y, Sort::Star);
}

}  // namespace walk
