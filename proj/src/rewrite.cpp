#include "nucube/rewrite.hpp"

#include <algorithm>

namespace nucube {

namespace {

bool is_redex(const Term& t) { return t->is_app() && t->as_app().fun->is_bind(Binder::Lambda); }

Term contract(const Term& redex) {
  const AppNode& a = redex->as_app();
  return instantiate(a.fun->as_bind().body, a.arg);
}

Term rebuild_bind(const BindNode& b, std::size_t child, Term replacement) {
  Restriction r = b.restriction;
  Term type = b.type;
  Term body = b.body;
  std::size_t n = r.elements.size();
  if (child < n) {
    r.elements[child] = std::move(replacement);
  } else if (child == n) {
    type = std::move(replacement);
  } else {
    body = std::move(replacement);
  }
  return make_bind_raw(b.binder, b.subject, std::move(r), std::move(type), std::move(body));
}

// Leftmost-outermost: the node itself, then children left to right.
std::optional<Term> step(const Term& t, RedexPath* path) {
  if (is_redex(t)) return contract(t);
  switch (t->kind()) {
    case TermKind::App: {
      const AppNode& a = t->as_app();
      if (path) path->push_back(0);
      if (auto f = step(a.fun, path)) return make_app(*f, a.arg);
      if (path) path->back() = 1;
      if (auto x = step(a.arg, path)) return make_app(a.fun, *x);
      if (path) path->pop_back();
      return std::nullopt;
    }
    case TermKind::Bind: {
      const BindNode& b = t->as_bind();
      std::size_t n = b.restriction.elements.size();
      for (std::size_t i = 0; i < n + 2; ++i) {
        const Term& child = i < n ? b.restriction.elements[i] : i == n ? b.type : b.body;
        if (path) path->push_back(i);
        if (auto c = step(child, path)) return rebuild_bind(b, i, *c);
        if (path) path->pop_back();
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

void all_steps(const Term& t, RedexPath& path, const std::function<Term(Term)>& wrap, std::vector<StepResult>& out) {
  if (is_redex(t)) out.push_back({wrap(contract(t)), path});
  switch (t->kind()) {
    case TermKind::App: {
      const AppNode& a = t->as_app();
      path.push_back(0);
      all_steps(a.fun, path, [&](Term f) { return wrap(make_app(std::move(f), a.arg)); }, out);
      path.back() = 1;
      all_steps(a.arg, path, [&](Term x) { return wrap(make_app(a.fun, std::move(x))); }, out);
      path.pop_back();
      break;
    }
    case TermKind::Bind: {
      const BindNode& b = t->as_bind();
      std::size_t n = b.restriction.elements.size();
      for (std::size_t i = 0; i < n + 2; ++i) {
        const Term& child = i < n ? b.restriction.elements[i] : i == n ? b.type : b.body;
        path.push_back(i);
        all_steps(child, path, [&, i](Term c) { return wrap(rebuild_bind(b, i, std::move(c))); }, out);
        path.pop_back();
      }
      break;
    }
    default:
      break;
  }
}

bool pure_is_redex(const PureTerm& m) { return m->kind == PureKind::App && m->left->kind == PureKind::Lam; }

std::optional<PureTerm> pure_step(const PureTerm& m) {
  if (pure_is_redex(m)) return instantiate(m->left->left, m->right);
  switch (m->kind) {
    case PureKind::App:
      if (auto f = pure_step(m->left)) return make_papp(*f, m->right);
      if (auto a = pure_step(m->right)) return make_papp(m->left, *a);
      return std::nullopt;
    case PureKind::Lam:
      if (auto b = pure_step(m->left)) return make_plam_raw(m->name, *b);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<Term> beta_step(const Term& t) { return step(t, nullptr); }

std::optional<StepResult> beta_step_traced(const Term& t) {
  RedexPath path;
  if (auto r = step(t, &path)) return StepResult{*r, std::move(path)};
  return std::nullopt;
}

std::vector<StepResult> all_beta_steps(const Term& t) {
  std::vector<StepResult> out;
  RedexPath path;
  all_steps(t, path, [](Term x) { return x; }, out);
  return out;
}

bool is_normal(const Term& t) {
  if (is_redex(t)) return false;
  switch (t->kind()) {
    case TermKind::App:
      return is_normal(t->as_app().fun) && is_normal(t->as_app().arg);
    case TermKind::Bind: {
      const BindNode& b = t->as_bind();
      for (const Term& e : b.restriction.elements) {
        if (!is_normal(e)) return false;
      }
      return is_normal(b.type) && is_normal(b.body);
    }
    default:
      return true;
  }
}

std::optional<PureTerm> ube_step(const PureTerm& m) { return pure_step(m); }

bool is_normal(const PureTerm& m) { return !pure_step(m).has_value(); }

ReductionOutcome try_normalize(const Term& t, const Fuel& fuel, const TraceSink& trace) {
  ReductionOutcome out{t, 0, false};
  for (;;) {
    if (out.result->size() > fuel.max_size) return out;
    std::optional<StepResult> s;
    if (trace) {
      s = beta_step_traced(out.result);
    } else if (auto r = beta_step(out.result)) {
      s = StepResult{*r, {}};
    }
    if (!s) {
      out.normal = true;
      return out;
    }
    if (out.steps_used >= fuel.max_steps) return out;
    if (trace) trace(TraceStep{out.steps_used, s->path, out.result->size(), s->result->size()});
    out.result = std::move(s->result);
    ++out.steps_used;
  }
}

ReductionOutcome normalize(const Term& t, const Fuel& fuel, const TraceSink& trace) {
  ReductionOutcome out = try_normalize(t, fuel, trace);
  if (!out.normal) {
    throw FuelExhausted("no normal form within " + std::to_string(fuel.max_steps) + " steps / " +
                            std::to_string(fuel.max_size) + " nodes",
                        out);
  }
  return out;
}

Term nf(const Term& t, const Fuel& fuel) { return normalize(t, fuel).result; }

PureReductionOutcome try_normalize(const PureTerm& m, const Fuel& fuel) {
  PureReductionOutcome out{m, 0, false};
  for (;;) {
    if (out.result->size > fuel.max_size) return out;
    auto s = pure_step(out.result);
    if (!s) {
      out.normal = true;
      return out;
    }
    if (out.steps_used >= fuel.max_steps) return out;
    out.result = std::move(*s);
    ++out.steps_used;
  }
}

PureReductionOutcome normalize(const PureTerm& m, const Fuel& fuel) {
  PureReductionOutcome out = try_normalize(m, fuel);
  if (!out.normal) {
    throw FuelExhausted("pure term has no normal form within " + std::to_string(fuel.max_steps) + " steps",
                        ReductionOutcome{});
  }
  return out;
}

Term whnf(const Term& t, const Fuel& fuel) {
  Term cur = t;
  std::size_t steps = 0;
  for (;;) {
    Term head = cur;
    std::vector<Term> args;
    while (head->is_app()) {
      args.push_back(head->as_app().arg);
      head = head->as_app().fun;
    }
    if (args.empty() || !head->is_bind(Binder::Lambda)) return cur;
    if (steps++ >= fuel.max_steps || cur->size() > fuel.max_size) {
      throw FuelExhausted("weak head normalization ran out of fuel", ReductionOutcome{cur, steps, false});
    }
    std::reverse(args.begin(), args.end());
    Term reduced = instantiate(head->as_bind().body, args.front());
    for (std::size_t i = 1; i < args.size(); ++i) reduced = make_app(reduced, args[i]);
    cur = std::move(reduced);
  }
}

bool beta_equal(const Term& a, const Term& b, const Fuel& fuel) {
  return normalize(a, fuel).result == normalize(b, fuel).result;
}

}  // namespace nucube
