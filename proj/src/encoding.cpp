#include "nucube/encoding.hpp"

namespace nucube {

namespace {

Declaration plain(const std::string& name, Sort cls, Term type) { return {Name{name, cls, 0}, {}, std::move(type)}; }

Term var(const Declaration& d) { return make_var(d.subject); }

Context ctx(std::vector<Declaration> entries) { return Context{std::move(entries)}; }

}  // namespace

Term star_k(std::size_t k) {
  Term t = star();
  for (std::size_t i = 0; i < k; ++i) t = arrow(star(), t);
  return t;
}

Term projection(std::size_t i, std::size_t q) {
  if (q == 0 || i == 0 || i > q) {
    throw Error(ErrorKind::IndexOutOfRange,
                "projection P" + std::to_string(i) + "," + std::to_string(q) + " needs 1 <= i <= q");
  }
  Term body = make_bound(static_cast<std::uint32_t>(q - i), Sort::Box);
  for (std::size_t k = q; k >= 1; --k) {
    body = make_bind_raw(Binder::Lambda, Name{"x" + std::to_string(k), Sort::Box, 0}, {}, star(), body);
  }
  return body;
}

Restriction proj_restriction(std::size_t q) {
  Restriction r;
  for (std::size_t i = 1; i <= q; ++i) r.elements.push_back(projection(i, q));
  return r;
}

Name z_name(const EncodingHandle& h) {
  std::string base = "z" + std::to_string(h.q);
  if (h.j > 0) base += "_" + std::to_string(h.j);
  return Name{base, Sort::Box, 0};
}

Term z_var(const EncodingHandle& h) { return make_var(z_name(h)); }

Declaration z_declaration(const EncodingHandle& h) {
  if (h.q == 0) throw Error(ErrorKind::InvalidArgument, "z-declarations need arity q >= 1");
  return {z_name(h), proj_restriction(h.q), star_k(h.q)};
}

Term intersect(const std::vector<Term>& types, std::size_t j) { return intersect(types, {types.size(), j}); }

Term intersect(const std::vector<Term>& types, const EncodingHandle& h) {
  if (types.empty() || h.q != types.size()) {
    throw Error(ErrorKind::InvalidArgument, "intersection arity does not match the number of components");
  }
  Name z = z_name(h);
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (degree(types[i]) != 1) {
      throw Error(ErrorKind::DegreeMismatch, "component " + std::to_string(i + 1) + " does not have degree 1");
    }
    if (occurs_free(z, types[i])) {
      throw Error(ErrorKind::FreshnessViolation, z.display() + " occurs free in component " + std::to_string(i + 1));
    }
  }
  return make_pi(z_declaration(h), make_apps(make_var(z), types));
}

Term arrow(const Term& a, const Term& b) {
  return make_bind_raw(Binder::Pi, Name{"%w", type_as_sort(a), 0}, {}, a, b);
}

Term arrows(const std::vector<Term>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "empty arrow chain");
  Term t = parts.back();
  for (std::size_t k = parts.size() - 1; k-- > 0;) t = arrow(parts[k], t);
  return t;
}

Term bar(const Term& a, std::size_t i) {
  Term t = a;
  for (std::size_t k = 0; k < i; ++k) t = arrow(t, t);
  return t;
}

Term tilde(const Term& a) { return arrow(bar(a), a); }

Term underline(const Term& a, std::size_t i) {
  Term t = a;
  for (std::size_t k = 0; k < i; ++k) t = arrow(t, tilde(t));
  return t;
}

Term y_var() { return make_var(Name{"y", Sort::Box, 0}); }
Declaration y_declaration() { return plain("y", Sort::Box, star()); }

ExampleTerms example_terms() {
  ExampleTerms e;
  Term y = y_var();
  Declaration dz2 = z_declaration({2, 0});
  Term z2 = var(dz2);
  e.U = make_apps(z2, {y, bar(y)});
  e.V = make_apps(z2, {bar(y), bar(y, 2)});
  e.u = plain("u", Sort::Star, e.U);
  e.W_prime = make_lambda(dz2, make_lambda(e.u, var(e.u)));
  e.W = make_pi(dz2, make_pi(e.u, e.U));
  e.W_inter = make_pi(dz2, e.V);
  e.w = plain("w", Sort::Star, e.W);
  Term w = var(e.w);
  e.self_app_body = make_app(make_app(w, projection(2, 2)), make_app(w, projection(1, 2)));
  e.self_app_fn = make_lambda(e.w, e.self_app_body);
  e.self_app = make_app(e.self_app_fn, e.W_prime);
  return e;
}

UrzyczynTerms urzyczyn() {
  UrzyczynTerms u;
  Term y = y_var();
  Declaration dz3 = z_declaration({3, 0});
  Declaration dz2 = z_declaration({2, 0});
  Term z3 = var(dz3);
  Term z2 = var(dz2);
  Term yu = underline(y);

  u.F = make_apps(z3, {bar(y, 3), bar(y, 2), bar(y)});
  u.S = make_apps(z3, {bar(y, 2), bar(y, 1), y});
  u.Q = make_apps(z3, {yu, y, yu});
  u.G = make_apps(z3, {underline(y, 2), bar(y), bar(yu)});
  u.M = make_apps(z3, {tilde(yu), y, yu});
  u.B = arrows({u.F, u.S, u.S});
  u.A = arrows({u.Q, u.G, u.M});
  u.E = make_pi(dz3, u.B);
  u.D = make_pi(dz3, u.A);
  u.E1 = bar(y, 4);
  u.E2 = bar(y, 3);
  u.E3 = bar(y, 2);
  u.D1 = arrows({yu, underline(y, 2), tilde(yu)});
  u.D2 = yu;
  u.D3 = underline(y, 2);
  u.C1 = bar(y, 2);
  u.C2 = tilde(yu);
  u.C = make_apps(z2, {u.C1, u.C2});
  u.O = make_apps(z2, {u.E, u.D});
  u.R_prime = arrow(u.O, u.C);
  u.R = make_pi(dz2, u.R_prime);
  u.R1 = arrow(u.E, u.C1);
  u.R2 = arrow(u.D, u.C2);

  u.h = plain("h", Sort::Star, arrows({u.C1, u.C2, y}));
  u.r = plain("r", Sort::Star, u.R);
  u.o = plain("o", Sort::Star, u.O);
  u.f = plain("f", Sort::Star, u.F);
  u.s = plain("s", Sort::Star, u.S);
  u.q = plain("q", Sort::Star, u.Q);
  u.g = plain("g", Sort::Star, u.G);

  u.T = make_lambda(dz3, make_lambda(u.f, make_lambda(u.s, make_app(var(u.f), var(u.s)))));
  u.J = make_lambda(dz3, make_lambda(u.q, make_lambda(u.g, make_app(var(u.g), var(u.q)))));
  Term r = var(u.r);
  u.L = make_apps(var(u.h), {make_apps(r, {projection(1, 2), u.T}), make_apps(r, {projection(2, 2), u.J})});
  Term o = var(u.o);
  u.V = make_lambda(dz2, make_lambda(u.o, make_apps(o, {projection(1, 3), make_app(o, projection(2, 3)),
                                                      make_app(o, projection(3, 3))})));
  u.U = make_app(make_lambda(u.r, u.L), u.V);
  return u;
}

const std::map<std::string, CorpusEntry>& corpus() {
  static const std::map<std::string, CorpusEntry> table = [] {
    std::map<std::string, CorpusEntry> m;
    ExampleTerms e = example_terms();
    UrzyczynTerms u = urzyczyn();
    Declaration dy = y_declaration();
    Declaration dz2 = z_declaration({2, 0});
    Declaration dz3 = z_declaration({3, 0});
    Term y = y_var();

    m["poly-id"] = {ctx({dy}), e.W_prime, e.W, "polymorphic identity"};
    m["poly-id-inter"] = {ctx({dy}), e.W_prime, e.W_inter, "polymorphic identity at an intersection type"};
    m["poly-id-body"] = {ctx({dy, dz2}), make_lambda(e.u, var(e.u)), e.V, "identity body converted to V"};
    m["poly-id-U"] = {ctx({dy, dz2}), e.U, star(), "U is a type"};
    m["poly-id-V"] = {ctx({dy, dz2}), e.V, star(), "V is a type"};
    m["self-app-body"] = {ctx({dy, e.w}), e.self_app_body, bar(y), "w P22 (w P12)"};
    m["self-app-fn"] = {ctx({dy}), e.self_app_fn, arrow(e.W, bar(y)), "self application abstracted over w"};
    m["self-app"] = {ctx({dy}), e.self_app, bar(y), "self application applied to the identity"};

    for (auto [name, t] : {std::pair{"F", u.F}, {"S", u.S}, {"B", u.B}, {"Q", u.Q}, {"G", u.G}, {"M", u.M},
                           {"A", u.A}}) {
      m[std::string("urzyczyn-") + name] = {ctx({dy, dz3}), t, star(), std::string(name) + " is a type"};
    }
    for (auto [name, t] : {std::pair{"E", u.E}, {"D", u.D}, {"R", u.R}}) {
      m[std::string("urzyczyn-") + name] = {ctx({dy}), t, star(), std::string(name) + " is a type"};
    }
    m["urzyczyn-C"] = {ctx({dy, dz2}), u.C, star(), "C is a type"};
    m["urzyczyn-Rprime"] = {ctx({dy, dz2}), u.R_prime, star(), "R' is a type"};
    m["urzyczyn-T"] = {ctx({dy}), u.T, u.E, "T : E"};
    m["urzyczyn-J"] = {ctx({dy}), u.J, u.D, "J : D"};
    m["urzyczyn-V"] = {ctx({dy}), u.V, u.R, "V : R"};
    m["urzyczyn-ooo"] = {ctx({dy, dz2, u.o}),
                         make_apps(var(u.o), {projection(1, 3), make_app(var(u.o), projection(2, 3)),
                                              make_app(var(u.o), projection(3, 3))}),
                         u.C, "o P13 (o P23) (o P33) : C"};
    m["urzyczyn-L"] = {ctx({dy, u.h, u.r}), u.L, y, "L : y"};
    m["urzyczyn-lambda-L"] = {ctx({dy, u.h}), make_lambda(u.r, u.L), make_pi(u.r, y), "fn r. L : R -> y"};
    m["urzyczyn-U"] = {ctx({dy, u.h}), u.U, y, "Urzyczyn's term"};
    return m;
  }();
  return table;
}

}  // namespace nucube
