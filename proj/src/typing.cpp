#include "nucube/typing.hpp"

#include <cctype>
#include <unordered_set>

#include "nucube/syntax.hpp"

namespace nucube {

const char* to_string(RuleName r) {
  switch (r) {
    case RuleName::Axiom: return "axiom";
    case RuleName::Weak: return "weak";
    case RuleName::Start: return "start";
    case RuleName::Pi: return "pi";
    case RuleName::Lambda: return "lambda";
    case RuleName::App: return "app";
    case RuleName::Conv: return "conv";
  }
  return "?";
}

std::optional<RuleName> parse_rule_name(const std::string& s) {
  for (RuleName r : {RuleName::Axiom, RuleName::Weak, RuleName::Start, RuleName::Pi, RuleName::Lambda, RuleName::App,
                     RuleName::Conv}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

std::string print_judgement(const Judgement& j) {
  std::string ctx = print_context(j.context);
  return (ctx.empty() ? std::string() : ctx + " ") + "|- " + print_term(j.subject) + " : " + print_term(j.type);
}

std::size_t derivation_node_count(const DerivationPtr& d) {
  std::unordered_set<const Derivation*> seen;
  std::vector<const Derivation*> stack{d.get()};
  while (!stack.empty()) {
    const Derivation* n = stack.back();
    stack.pop_back();
    if (!n || !seen.insert(n).second) continue;
    for (const DerivationPtr& p : n->premises) stack.push_back(p.get());
  }
  return seen.size();
}

std::optional<std::pair<std::size_t, std::size_t>> projection_shape(const Term& t) {
  std::size_t n = 0;
  Term cur = t;
  while (cur->is_bind(Binder::Lambda)) {
    const BindNode& b = cur->as_bind();
    if (!b.restriction.is_null() || !b.type->is_sort(Sort::Star) || b.subject.cls != Sort::Box) return std::nullopt;
    ++n;
    cur = b.body;
  }
  if (n == 0 || cur->kind() != TermKind::Bound) return std::nullopt;
  std::size_t idx = cur->as_bound().index;
  if (idx >= n) return std::nullopt;
  return std::pair{n - idx, n};
}

namespace {

DerivationPtr node(RuleName rule, Context ctx, Term subject, Term type, std::vector<DerivationPtr> premises,
                   std::optional<SatisfactionReport> sat = std::nullopt) {
  return std::make_shared<const Derivation>(
      Derivation{rule, Judgement{std::move(ctx), std::move(subject), std::move(type)}, std::move(premises),
                 std::move(sat)});
}

std::size_t context_hash(const Context& c) {
  std::size_t h = c.size();
  for (const Declaration& d : c.entries) {
    h ^= hash_value(d.subject) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= d.type->hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  }
  return s != "Pi" && s != "fn" && s != "in";
}

std::string show(const Term& t) { return print_term(t); }

}  // namespace

struct Checker::Frame {
  FramePtr parent;
  Context context;
  std::optional<Declaration> decl;
  DerivationPtr start;  // Δ', δ ⊢ x : A for the last entry
  DerivationPtr type_derivation;  // Δ' ⊢ A : ς
  DerivationPtr star;  // Δ ⊢ ∗ : □
  RestrictedContext rdec;
  std::set<std::string> shown;  // display names in dom(Δ)
  mutable std::unordered_map<Name, DerivationPtr> lookups;
  mutable std::vector<std::pair<Declaration, FramePtr>> children;
  mutable std::unordered_map<Term, Typed> synthesized;
};

Checker::Checker(CheckConfig cfg) : cfg_(cfg), rules_(rule_set_of(cfg.system)), sat_(cfg.fuel, cfg.audit) {
  auto root = std::make_shared<Frame>();
  root->star = node(RuleName::Axiom, {}, star(), box(), {});
  root_ = root;
}

Checker::~Checker() = default;

Checker::FramePtr Checker::frame_for(const Context& delta) {
  std::size_t h = context_hash(delta);
  auto& bucket = frames_[h];
  for (const auto& [ctx, frame] : bucket) {
    if (ctx == delta) return frame;
  }
  FramePtr f = root_;
  for (const Declaration& d : delta.entries) f = extend(f, d);
  bucket.emplace_back(delta, f);
  return f;
}

Checker::FramePtr Checker::extend(const FramePtr& frame, const Declaration& d) {
  for (const auto& [decl, child] : frame->children) {
    if (decl == d) return child;
  }
  const std::string who = d.subject.display();
  if (frame->context.contains(d.subject) || frame->shown.contains(who)) {
    throw TypeError(ErrorKind::DuplicateSubject, "'" + who + "' is already declared in the context");
  }
  if (cfg_.system.mode == Mode::LambdaCube && !d.restriction.is_null()) {
    throw TypeError(ErrorKind::FsdInLambdaMode, "declaration of '" + who + "' has a restriction (lambda-cube mode)");
  }
  auto [sort, type_d] = sorted(frame, d.type, ErrorKind::TypeNotASort, ("declared type of '" + who + "'").c_str());
  if (sort != d.subject.cls) {
    throw TypeError(ErrorKind::ClassMismatch, "'" + who + "' has class " + to_string(d.subject.cls) +
                                                  " but its declared type " + show(d.type) + " has sort " +
                                                  to_string(sort));
  }
  std::vector<DerivationPtr> premises{type_d};
  for (std::size_t j = 0; j < d.restriction.elements.size(); ++j) {
    try {
      premises.push_back(check(frame, d.restriction.elements[j], d.type));
    } catch (const FuelExhausted&) {
      throw;
    } catch (const Error& e) {
      throw TypeError(ErrorKind::FsdElementIllTyped,
                      "element " + std::to_string(j + 1) + " of the restriction on '" + who + "' does not have type " +
                          show(d.type) + ": " + e.what(),
                      std::nullopt, j);
    }
  }
  auto f = std::make_shared<Frame>();
  f->parent = frame;
  f->context = frame->context.extended(d);
  f->decl = d;
  f->start = node(RuleName::Start, f->context, make_var(d.subject), d.type, std::move(premises));
  f->type_derivation = type_d;
  f->star = node(RuleName::Weak, f->context, star(), box(), {f->start, frame->star});
  f->rdec = frame->rdec;
  if (!d.restriction.is_null()) f->rdec.entries.push_back({d.subject, d.restriction});
  f->shown = frame->shown;
  f->shown.insert(who);
  frame->children.emplace_back(d, f);
  return f;
}

DerivationPtr Checker::lookup(const FramePtr& frame, const Name& x) {
  if (auto it = frame->lookups.find(x); it != frame->lookups.end()) return it->second;
  if (!frame->decl) throw TypeError(ErrorKind::UnboundVariable, "unbound variable '" + x.display() + "'");
  DerivationPtr d;
  if (frame->decl->subject == x) {
    d = frame->start;
  } else {
    DerivationPtr inner = lookup(frame->parent, x);
    d = node(RuleName::Weak, frame->context, inner->conclusion.subject, inner->conclusion.type,
             {frame->start, inner});
  }
  frame->lookups.emplace(x, d);
  return d;
}

Name Checker::fresh_for(const FramePtr& frame, const Name& hint, const Term& t) const {
  std::set<std::string> avoid = frame->shown;
  for (const Name& n : free_vars(t)) avoid.insert(n.display());
  Name n{is_identifier(hint.base) ? hint.base : std::string("w"), hint.cls, 0};
  while (avoid.contains(n.display())) ++n.fresh;
  return n;
}

Typed Checker::synth(const FramePtr& frame, const Term& a) {
  if (auto it = frame->synthesized.find(a); it != frame->synthesized.end()) return it->second;
  Typed out = synth_uncached(frame, a);
  frame->synthesized.emplace(a, out);
  return out;
}

Typed Checker::synth_uncached(const FramePtr& frame, const Term& a) {
  switch (a->kind()) {
    case TermKind::Sort:
      if (a->as_sort().sort == Sort::Box) throw TypeError(ErrorKind::SortHasNoType, "@ has no type");
      return {box(), frame->star};
    case TermKind::Var: {
      const Name& x = a->as_var().name;
      const Declaration* d = frame->context.find(x);
      if (!d) throw TypeError(ErrorKind::UnboundVariable, "unbound variable '" + x.display() + "'");
      return {d->type, lookup(frame, x)};
    }
    case TermKind::Bound:
      throw Error(ErrorKind::InvalidArgument, "term has a loose bound variable");
    case TermKind::Bind: {
      const BindNode& b = a->as_bind();
      Declaration d{fresh_for(frame, b.subject, a), b.restriction, b.type};
      FramePtr child = extend(frame, d);
      Term body = open_bind(a, d.subject);
      if (b.binder == Binder::Pi) {
        Sort dom_sort = child->start->premises.front()->conclusion.type->as_sort().sort;
        auto [body_sort, body_d] = sorted(child, body, ErrorKind::TypeNotASort, "body of a product");
        if (!rules_.contains(dom_sort, body_sort)) {
          throw TypeError(ErrorKind::RuleNotInSystem, std::string("rule (") + to_string(dom_sort) + "," +
                                                          to_string(body_sort) + ") is not in " +
                                                          system_spelling(cfg_.system.name) + " for " + show(a));
        }
        return {make_sort(body_sort),
                node(RuleName::Pi, frame->context, a, make_sort(body_sort), {body_d, child->type_derivation})};
      }
      Typed body_t = synth(child, body);
      Term pi = make_pi(d, body_t.type);
      auto [pi_sort, pi_d] = sorted(frame, pi, ErrorKind::TypeNotASort, "type of an abstraction");
      (void)pi_sort;
      return {pi, node(RuleName::Lambda, frame->context, a, pi, {body_t.derivation, pi_d})};
    }
    case TermKind::App: {
      const AppNode& app = a->as_app();
      Typed fun = expose_pi(frame, app.fun, synth(frame, app.fun));
      const BindNode& pi = fun.type->as_bind();
      Typed arg = synth(frame, app.arg);
      DerivationPtr arg_d = arg.derivation;
      if (!(arg.type == pi.type)) {
        SatisfactionReport r = sat_.convertible_under(frame->rdec, arg.type, pi.type);
        if (!r.holds) {
          throw TypeError(ErrorKind::DomainMismatch, "argument " + show(app.arg) + " has type " + show(arg.type) +
                                                         " but the function expects " + show(pi.type),
                          r);
        }
        arg_d = conv(frame, arg_d, pi.type, std::move(r));
      }
      std::optional<SatisfactionReport> restriction_report;
      if (!pi.restriction.is_null()) {
        SatisfactionReport r = sat_.satisfies(frame->rdec, app.arg, pi.restriction);
        if (!r.holds) {
          throw TypeError(ErrorKind::RestrictionViolated,
                          "argument " + show(app.arg) + " does not satisfy the restriction of " + show(fun.type), r);
        }
        restriction_report = std::move(r);
      }
      Term result = instantiate(pi.body, app.arg);
      return {result, node(RuleName::App, frame->context, a, result, {fun.derivation, arg_d},
                           std::move(restriction_report))};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown term kind");
}

std::optional<std::pair<Sort, DerivationPtr>> Checker::as_sort(const FramePtr& frame, const Typed& typed) {
  if (typed.type->is_sort()) return std::pair{typed.type->as_sort().sort, typed.derivation};
  Term w = whnf(typed.type, cfg_.fuel);
  if (!w->is_sort(Sort::Star)) return std::nullopt;
  // only ∗ can be a conversion target: □ has no type
  SatisfactionReport r = sat_.convertible_under(frame->rdec, typed.type, w);
  if (!r.holds) return std::nullopt;
  return std::pair{Sort::Star, conv(frame, typed.derivation, w, std::move(r))};
}

std::pair<Sort, DerivationPtr> Checker::sorted(const FramePtr& frame, const Term& t, ErrorKind on_fail,
                                               const char* what) {
  Typed typed = synth(frame, t);
  if (auto s = as_sort(frame, typed)) return *s;
  throw TypeError(on_fail, std::string(what) + " " + show(t) + " has type " + show(typed.type) + ", not a sort");
}

DerivationPtr Checker::conv(const FramePtr& frame, const DerivationPtr& d, const Term& target,
                            SatisfactionReport report) {
  auto [s, target_d] = sorted(frame, target, ErrorKind::AscriptionNotSorted, "conversion target");
  (void)s;
  return node(RuleName::Conv, frame->context, d->conclusion.subject, target, {d, target_d}, std::move(report));
}

Typed Checker::expose_pi(const FramePtr& frame, const Term& fun, const Typed& typed) {
  if (typed.type->is_bind(Binder::Pi)) return typed;
  Term w = whnf(typed.type, cfg_.fuel);
  std::optional<Term> candidate;
  if (w->is_bind(Binder::Pi)) {
    candidate = w;
  } else {
    candidate = generalize(frame->rdec, w);
  }
  auto fail = [&](std::optional<SatisfactionReport> r = std::nullopt) {
    return TypeError(ErrorKind::NotAFunction, show(fun) + " has type " + show(typed.type) + ", not a product",
                     std::move(r));
  };
  if (!candidate) throw fail();
  SatisfactionReport r = sat_.convertible_under(frame->rdec, typed.type, *candidate);
  if (!r.holds) throw fail(std::move(r));
  DerivationPtr d;
  try {
    d = conv(frame, typed.derivation, *candidate, std::move(r));
  } catch (const FuelExhausted&) {
    throw;
  } catch (const Error&) {
    throw fail();
  }
  return {*candidate, d};
}

// Rebuilds a single Π from the instances of `type` under every choice for the
// restricted head variable. Instances that disagree are recombined by applying
// the head variable to them, which needs its elements to be P1,n .. Pn,n in
// order.
std::optional<Term> Checker::generalize(const RestrictedContext& gamma, const Term& type) {
  Term w = whnf(type, cfg_.fuel);
  if (w->is_bind(Binder::Pi)) return w;
  Term head = spine_head(w);
  if (!head->is_var()) return std::nullopt;
  const Name& z = head->as_var().name;
  std::size_t at = gamma.entries.size();
  for (std::size_t k = 0; k < gamma.entries.size(); ++k) {
    if (gamma.entries[k].subject == z) at = k;
  }
  if (at == gamma.entries.size()) return std::nullopt;
  const Restriction& choices = gamma.entries[at].restriction;

  std::vector<Term> instances;
  for (const Term& c : choices.elements) {
    RestrictedContext rest;
    for (std::size_t k = 0; k < gamma.entries.size(); ++k) {
      if (k == at) continue;
      rest.entries.push_back({gamma.entries[k].subject, substitute(gamma.entries[k].restriction, z, c)});
    }
    auto inst = generalize(rest, nf(substitute(w, z, c), cfg_.fuel));
    if (!inst) return std::nullopt;
    instances.push_back(*inst);
  }
  if (instances.size() == 1) return instances.front();

  const BindNode& first = instances.front()->as_bind();
  for (const Term& inst : instances) {
    const BindNode& b = inst->as_bind();
    if (b.subject.cls != first.subject.cls || !(b.restriction == first.restriction)) return std::nullopt;
  }
  bool projections = true;
  for (std::size_t i = 0; i < choices.elements.size(); ++i) {
    auto shape = projection_shape(choices.elements[i]);
    if (!shape || shape->first != i + 1 || shape->second != choices.elements.size()) projections = false;
  }
  auto combine = [&](auto&& part) -> std::optional<Term> {
    std::vector<Term> parts;
    for (const Term& inst : instances) parts.push_back(part(inst->as_bind()));
    bool same = true;
    for (const Term& p : parts) same = same && p == parts.front();
    if (same) return parts.front();
    if (!projections) return std::nullopt;
    return make_apps(make_var(z), parts);
  };
  auto domain = combine([](const BindNode& b) { return b.type; });
  auto body = combine([](const BindNode& b) { return b.body; });
  if (!domain || !body) return std::nullopt;
  return make_bind_raw(Binder::Pi, first.subject, first.restriction, *domain, *body);
}

DerivationPtr Checker::check(const FramePtr& frame, const Term& a, const Term& b) {
  if (a->is_bind(Binder::Lambda)) {
    Term expected = b->is_bind(Binder::Pi) ? b : whnf(b, cfg_.fuel);
    const BindNode& lam = a->as_bind();
    if (expected->is_bind(Binder::Pi)) {
      const BindNode& pi = expected->as_bind();
      if (pi.subject.cls == lam.subject.cls && pi.restriction == lam.restriction && pi.type == lam.type) {
        Declaration d{fresh_for(frame, lam.subject, make_app(a, expected)), lam.restriction, lam.type};
        FramePtr child = extend(frame, d);
        DerivationPtr body_d = check(child, open_bind(a, d.subject), open_bind(expected, d.subject));
        auto [s, pi_d] = sorted(frame, expected, ErrorKind::AscriptionNotSorted, "ascribed type");
        (void)s;
        DerivationPtr lam_d = node(RuleName::Lambda, frame->context, a, expected, {body_d, pi_d});
        if (expected == b) return lam_d;
        return conv(frame, lam_d, b, sat_.convertible_under(frame->rdec, expected, b));
      }
    }
  }
  Typed t = synth(frame, a);
  if (t.type == b) return t.derivation;
  auto target = [&] {
    try {
      return sorted(frame, b, ErrorKind::AscriptionNotSorted, "ascribed type");
    } catch (const FuelExhausted&) {
      throw;
    } catch (const TypeError& e) {
      if (e.kind() == ErrorKind::AscriptionNotSorted) throw;
      throw TypeError(ErrorKind::AscriptionNotSorted, std::string("ascribed type is not well-sorted: ") + e.what());
    }
  }();
  SatisfactionReport r = sat_.convertible_under(frame->rdec, t.type, b);
  if (!r.holds) {
    throw TypeError(ErrorKind::AscriptionNotConvertible,
                    show(a) + " has type " + show(t.type) + ", which is not convertible to " + show(b), r);
  }
  return node(RuleName::Conv, frame->context, a, b, {t.derivation, target.second}, std::move(r));
}

std::vector<DerivationPtr> Checker::check_context(const Context& delta) {
  FramePtr f = frame_for(delta);
  std::vector<DerivationPtr> out(delta.size());
  for (std::size_t k = delta.size(); k-- > 0;) {
    out[k] = f->start;
    f = f->parent;
  }
  return out;
}

Typed Checker::synth_type(const Context& delta, const Term& a) { return synth(frame_for(delta), a); }

DerivationPtr Checker::check_judgement(const Context& delta, const Term& a, const Term& b) {
  return check(frame_for(delta), a, b);
}

std::optional<Sort> Checker::sort_of(const Context& delta, const Term& a) {
  FramePtr f = frame_for(delta);
  if (a->is_sort(Sort::Box)) return std::nullopt;
  Typed t = synth(f, a);
  if (t.type->is_sort(Sort::Box)) return std::nullopt;
  if (auto s = as_sort(f, synth(f, t.type))) return s->first;
  return std::nullopt;
}

std::vector<DerivationPtr> check_context(const Context& delta, const CheckConfig& cfg) {
  return Checker(cfg).check_context(delta);
}

Typed synth_type(const Context& delta, const Term& a, const CheckConfig& cfg) {
  return Checker(cfg).synth_type(delta, a);
}

DerivationPtr check_judgement(const Context& delta, const Term& a, const Term& b, const CheckConfig& cfg) {
  return Checker(cfg).check_judgement(delta, a, b);
}

std::optional<Sort> sort_of(const Context& delta, const Term& a, const CheckConfig& cfg) {
  return Checker(cfg).sort_of(delta, a);
}

}  // namespace nucube
