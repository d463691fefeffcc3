#include "nucube/term.hpp"

#include <algorithm>
#include <functional>

namespace nucube {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

const char* to_string(Sort s) { return s == Sort::Star ? "*" : "@"; }

std::string Name::display() const {
  if (fresh == 0) return base;
  return base + "_" + std::to_string(fresh);
}

std::size_t hash_value(const Name& n) {
  std::size_t h = std::hash<std::string>{}(n.base);
  h = mix(h, static_cast<std::size_t>(n.cls));
  return mix(h, n.fresh);
}

std::uint64_t name_bit(const Name& n) { return std::uint64_t{1} << (hash_value(n) % 64); }

// ---------------------------------------------------------------------------

TermNode::TermNode(Data data) : data_(std::move(data)) {
  std::size_t h = data_.index();
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, SortNode>) {
          h = mix(h, static_cast<std::size_t>(node.sort));
        } else if constexpr (std::is_same_v<T, VarNode>) {
          h = mix(h, hash_value(node.name));
          mask_ = name_bit(node.name);
        } else if constexpr (std::is_same_v<T, BoundNode>) {
          h = mix(h, node.index);
          h = mix(h, static_cast<std::size_t>(node.cls));
          loose_ = node.index + 1;
        } else if constexpr (std::is_same_v<T, BindNode>) {
          h = mix(h, static_cast<std::size_t>(node.binder));
          h = mix(h, static_cast<std::size_t>(node.subject.cls));
          h = mix(h, node.restriction.elements.size());
          for (const Term& e : node.restriction.elements) {
            h = mix(h, e->hash());
            size_ += e->size();
            loose_ = std::max(loose_, e->loose());
            mask_ |= e->name_mask();
          }
          h = mix(h, node.type->hash());
          h = mix(h, node.body->hash());
          size_ += node.type->size() + node.body->size();
          loose_ = std::max({loose_, node.type->loose(), node.body->loose() ? node.body->loose() - 1 : 0u});
          mask_ |= node.type->name_mask() | node.body->name_mask();
        } else {
          h = mix(h, node.fun->hash());
          h = mix(h, node.arg->hash());
          size_ += node.fun->size() + node.arg->size();
          loose_ = std::max(node.fun->loose(), node.arg->loose());
          mask_ = node.fun->name_mask() | node.arg->name_mask();
        }
      },
      data_);
  hash_ = h;
}

namespace {

bool restriction_eq(const Restriction& a, const Restriction& b) {
  if (a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    if (!(a.elements[i] == b.elements[i])) return false;
  }
  return true;
}

}  // namespace

bool operator==(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash() || a->size() != b->size() || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Sort:
      return a->as_sort().sort == b->as_sort().sort;
    case TermKind::Var:
      return a->as_var().name == b->as_var().name;
    case TermKind::Bound:
      return a->as_bound().index == b->as_bound().index && a->as_bound().cls == b->as_bound().cls;
    case TermKind::Bind: {
      const BindNode& x = a->as_bind();
      const BindNode& y = b->as_bind();
      return x.binder == y.binder && x.subject.cls == y.subject.cls &&
             restriction_eq(x.restriction, y.restriction) && x.type == y.type && x.body == y.body;
    }
    case TermKind::App:
      return a->as_app().fun == b->as_app().fun && a->as_app().arg == b->as_app().arg;
  }
  return false;
}

bool alpha_eq(const Term& a, const Term& b) { return a == b; }

// ---------------------------------------------------------------------------
// Constructors

Term make_sort(Sort s) { return Term(std::make_shared<const TermNode>(SortNode{s})); }

Term star() {
  static const Term t = make_sort(Sort::Star);
  return t;
}

Term box() {
  static const Term t = make_sort(Sort::Box);
  return t;
}

Term make_var(Name n) { return Term(std::make_shared<const TermNode>(VarNode{std::move(n)})); }

Term make_bound(std::uint32_t index, Sort cls) {
  return Term(std::make_shared<const TermNode>(BoundNode{index, cls}));
}

Term make_app(Term fun, Term arg) {
  return Term(std::make_shared<const TermNode>(AppNode{std::move(fun), std::move(arg)}));
}

Term make_apps(Term head, const std::vector<Term>& args) {
  for (const Term& a : args) head = make_app(std::move(head), a);
  return head;
}

Term make_bind_raw(Binder b, Name subject, Restriction restriction, Term type, Term body) {
  return Term(std::make_shared<const TermNode>(
      BindNode{b, std::move(subject), std::move(restriction), std::move(type), std::move(body)}));
}

Term make_bind(Binder b, const Declaration& decl, const Term& body) {
  return make_bind_raw(b, decl.subject, decl.restriction, decl.type, abstract(body, decl.subject));
}

Term make_lambda(const Declaration& decl, const Term& body) { return make_bind(Binder::Lambda, decl, body); }
Term make_pi(const Declaration& decl, const Term& body) { return make_bind(Binder::Pi, decl, body); }

// ---------------------------------------------------------------------------
// Locally nameless plumbing

namespace {

Restriction map_restriction(const Restriction& r, const std::function<Term(const Term&)>& f, bool& changed) {
  Restriction out;
  out.elements.reserve(r.elements.size());
  for (const Term& e : r.elements) {
    Term n = f(e);
    if (n.get() != e.get()) changed = true;
    out.elements.push_back(std::move(n));
  }
  return out;
}

// Adds `by` to every loose index at or above `cutoff`.
Term shift_at(const Term& t, std::uint32_t by, std::uint32_t cutoff) {
  if (by == 0 || t->loose() <= cutoff) return t;
  switch (t->kind()) {
    case TermKind::Bound: {
      const BoundNode& b = t->as_bound();
      return make_bound(b.index + by, b.cls);
    }
    case TermKind::Bind: {
      const BindNode& b = t->as_bind();
      bool changed = false;
      Restriction r = map_restriction(
          b.restriction, [&](const Term& e) { return shift_at(e, by, cutoff); }, changed);
      return make_bind_raw(b.binder, b.subject, std::move(r), shift_at(b.type, by, cutoff),
                           shift_at(b.body, by, cutoff + 1));
    }
    case TermKind::App: {
      const AppNode& a = t->as_app();
      return make_app(shift_at(a.fun, by, cutoff), shift_at(a.arg, by, cutoff));
    }
    default:
      return t;
  }
}

Term instantiate_at(const Term& t, std::uint32_t depth, const Term& value) {
  if (t->loose() <= depth) return t;
  switch (t->kind()) {
    case TermKind::Bound: {
      const BoundNode& b = t->as_bound();
      if (b.index == depth) return shift_at(value, depth, 0);
      return make_bound(b.index - 1, b.cls);  // b.index > depth
    }
    case TermKind::Bind: {
      const BindNode& b = t->as_bind();
      bool changed = false;
      Restriction r = map_restriction(
          b.restriction, [&](const Term& e) { return instantiate_at(e, depth, value); }, changed);
      return make_bind_raw(b.binder, b.subject, std::move(r), instantiate_at(b.type, depth, value),
                           instantiate_at(b.body, depth + 1, value));
    }
    case TermKind::App: {
      const AppNode& a = t->as_app();
      return make_app(instantiate_at(a.fun, depth, value), instantiate_at(a.arg, depth, value));
    }
    default:
      return t;
  }
}

Term abstract_at(const Term& t, std::uint32_t depth, const Name& x, std::uint64_t bit) {
  if ((t->name_mask() & bit) == 0) return t;
  switch (t->kind()) {
    case TermKind::Var:
      if (t->as_var().name == x) return make_bound(depth, x.cls);
      return t;
    case TermKind::Bind: {
      const BindNode& b = t->as_bind();
      bool changed = false;
      Restriction r = map_restriction(
          b.restriction, [&](const Term& e) { return abstract_at(e, depth, x, bit); }, changed);
      return make_bind_raw(b.binder, b.subject, std::move(r), abstract_at(b.type, depth, x, bit),
                           abstract_at(b.body, depth + 1, x, bit));
    }
    case TermKind::App: {
      const AppNode& a = t->as_app();
      return make_app(abstract_at(a.fun, depth, x, bit), abstract_at(a.arg, depth, x, bit));
    }
    default:
      return t;
  }
}

bool has_bound_at(const Term& t, std::uint32_t index) {
  if (t->loose() <= index) return false;
  switch (t->kind()) {
    case TermKind::Bound:
      return t->as_bound().index == index;
    case TermKind::Bind: {
      const BindNode& b = t->as_bind();
      for (const Term& e : b.restriction.elements) {
        if (has_bound_at(e, index)) return true;
      }
      return has_bound_at(b.type, index) || has_bound_at(b.body, index + 1);
    }
    case TermKind::App:
      return has_bound_at(t->as_app().fun, index) || has_bound_at(t->as_app().arg, index);
    default:
      return false;
  }
}

}  // namespace

Term instantiate(const Term& body, const Term& value) { return instantiate_at(body, 0, value); }

Term abstract(const Term& t, const Name& x) { return abstract_at(shift_at(t, 1, 0), 0, x, name_bit(x)); }

Term open_bind(const Term& bind, const Name& fresh) {
  return instantiate(bind->as_bind().body, make_var(fresh));
}

bool has_loose_bound(const Term& t, std::uint32_t index) { return has_bound_at(t, index); }

// ---------------------------------------------------------------------------
// Degrees

int degree(Sort s) { return s == Sort::Box ? 3 : 2; }

int degree(const Term& t) {
  const TermNode* n = t.get();
  for (;;) {
    switch (n->kind()) {
      case TermKind::Sort:
        return degree(n->as_sort().sort);
      case TermKind::Var:
        return degree(n->as_var().name.cls) - 2;
      case TermKind::Bound:
        return degree(n->as_bound().cls) - 2;
      case TermKind::Bind:
        n = n->as_bind().body.get();
        break;
      case TermKind::App:
        n = n->as_app().fun.get();
        break;
    }
  }
}

Sort req_sort(const Term& t) {
  int d = degree(t);
  if (d == 0) return Sort::Star;
  if (d == 1) return Sort::Box;
  throw Error(ErrorKind::DegreeOutOfRange, "reqSort is defined only for degree 0 or 1, got " + std::to_string(d));
}

Sort type_as_sort(const Term& t) {
  int d = degree(t);
  if (d == 1) return Sort::Star;
  if (d == 2) return Sort::Box;
  throw Error(ErrorKind::DegreeOutOfRange,
              "typeAsSort is defined only for degree 1 or 2, got " + std::to_string(d));
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void collect_fv(const Term& t, std::set<Name>& out) {
  if (t->name_mask() == 0) return;
  switch (t->kind()) {
    case TermKind::Var:
      out.insert(t->as_var().name);
      break;
    case TermKind::Bind: {
      const BindNode& b = t->as_bind();
      for (const Term& e : b.restriction.elements) collect_fv(e, out);
      collect_fv(b.type, out);
      collect_fv(b.body, out);
      break;
    }
    case TermKind::App:
      collect_fv(t->as_app().fun, out);
      collect_fv(t->as_app().arg, out);
      break;
    default:
      break;
  }
}

bool occurs(const Name& x, std::uint64_t bit, const Term& t) {
  if ((t->name_mask() & bit) == 0) return false;
  switch (t->kind()) {
    case TermKind::Var:
      return t->as_var().name == x;
    case TermKind::Bind: {
      const BindNode& b = t->as_bind();
      for (const Term& e : b.restriction.elements) {
        if (occurs(x, bit, e)) return true;
      }
      return occurs(x, bit, b.type) || occurs(x, bit, b.body);
    }
    case TermKind::App:
      return occurs(x, bit, t->as_app().fun) || occurs(x, bit, t->as_app().arg);
    default:
      return false;
  }
}

}  // namespace

std::set<Name> free_vars(const Term& t) {
  std::set<Name> out;
  collect_fv(t, out);
  return out;
}

std::set<Name> free_vars(const Restriction& r) {
  std::set<Name> out;
  for (const Term& e : r.elements) collect_fv(e, out);
  return out;
}

std::set<Name> free_vars(const Declaration& d) {
  std::set<Name> out = free_vars(d.restriction);
  collect_fv(d.type, out);
  return out;
}

std::set<Name> free_vars(const Context& c) {
  // Each subject binds in the entries after it.
  std::set<Name> out;
  std::set<Name> bound;
  for (const Declaration& d : c.entries) {
    for (const Name& n : free_vars(d)) {
      if (!bound.contains(n)) out.insert(n);
    }
    bound.insert(d.subject);
  }
  return out;
}

bool occurs_free(const Name& x, const Term& t) { return occurs(x, name_bit(x), t); }

// ---------------------------------------------------------------------------
// Substitution

namespace {

Term subst(const Term& t, const Name& x, std::uint64_t bit, const Term& s, std::uint32_t depth) {
  if ((t->name_mask() & bit) == 0) return t;
  switch (t->kind()) {
    case TermKind::Var:
      return t->as_var().name == x ? shift_at(s, depth, 0) : t;
    case TermKind::Bind: {
      const BindNode& b = t->as_bind();
      bool changed = false;
      Restriction r = map_restriction(
          b.restriction, [&](const Term& e) { return subst(e, x, bit, s, depth); }, changed);
      return make_bind_raw(b.binder, b.subject, std::move(r), subst(b.type, x, bit, s, depth),
                           subst(b.body, x, bit, s, depth + 1));
    }
    case TermKind::App:
      return make_app(subst(t->as_app().fun, x, bit, s, depth), subst(t->as_app().arg, x, bit, s, depth));
    default:
      return t;
  }
}

}  // namespace

Term substitute(const Term& t, const Name& x, const Term& s) { return subst(t, x, name_bit(x), s, 0); }

Restriction substitute(const Restriction& r, const Name& x, const Term& s) {
  Restriction out;
  out.elements.reserve(r.elements.size());
  for (const Term& e : r.elements) out.elements.push_back(substitute(e, x, s));
  return out;
}

Declaration substitute(const Declaration& d, const Name& x, const Term& s) {
  return Declaration{d.subject, substitute(d.restriction, x, s), substitute(d.type, x, s)};
}

Context substitute(const Context& c, const Name& x, const Term& s) {
  Context out;
  bool shadowed = false;
  for (const Declaration& d : c.entries) {
    out.entries.push_back(shadowed ? d : substitute(d, x, s));
    if (d.subject == x) shadowed = true;
  }
  return out;
}

RestrictedContext substitute(const RestrictedContext& c, const Name& x, const Term& s) {
  RestrictedContext out;
  bool shadowed = false;
  for (const RestrictedDeclaration& d : c.entries) {
    out.entries.push_back(shadowed ? d : RestrictedDeclaration{d.subject, substitute(d.restriction, x, s)});
    if (d.subject == x) shadowed = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Contexts

const Declaration* Context::find(const Name& x) const {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->subject == x) return &*it;
  }
  return nullptr;
}

Context Context::extended(Declaration d) const {
  Context out = *this;
  out.entries.push_back(std::move(d));
  return out;
}

RestrictedContext rdec_extract(const Context& d) {
  RestrictedContext out;
  for (const Declaration& decl : d.entries) {
    if (!decl.restriction.is_null()) out.entries.push_back({decl.subject, decl.restriction});
  }
  return out;
}

std::set<Name> dom(const Context& d) {
  std::set<Name> out;
  for (const Declaration& decl : d.entries) out.insert(decl.subject);
  return out;
}

Term spine_head(const Term& t) {
  Term h = t;
  while (h->is_app()) h = h->as_app().fun;
  return h;
}

std::vector<Term> spine_args(const Term& t) {
  std::vector<Term> args;
  Term h = t;
  while (h->is_app()) {
    args.push_back(h->as_app().arg);
    h = h->as_app().fun;
  }
  std::reverse(args.begin(), args.end());
  return args;
}

Name fresh_name(const Name& hint, const std::set<Name>& avoid) {
  Name n{hint.base, hint.cls, 0};
  while (avoid.contains(n)) ++n.fresh;
  return n;
}

// ---------------------------------------------------------------------------
// Pure terms

namespace {

PureTerm make_pure(PureNode node) { return PureTerm(std::make_shared<const PureNode>(std::move(node))); }

PureTerm pure_shift_at(const PureTerm& t, std::uint32_t by, std::uint32_t cutoff) {
  if (by == 0 || t->loose <= cutoff) return t;
  switch (t->kind) {
    case PureKind::Bound:
      return make_pbound(t->index + by);
    case PureKind::Lam:
      return make_plam_raw(t->name, pure_shift_at(t->left, by, cutoff + 1));
    case PureKind::App:
      return make_papp(pure_shift_at(t->left, by, cutoff), pure_shift_at(t->right, by, cutoff));
    default:
      return t;
  }
}

PureTerm pure_instantiate_at(const PureTerm& t, std::uint32_t depth, const PureTerm& value) {
  if (t->loose <= depth) return t;
  switch (t->kind) {
    case PureKind::Bound:
      if (t->index == depth) return pure_shift_at(value, depth, 0);
      return make_pbound(t->index - 1);
    case PureKind::Lam:
      return make_plam_raw(t->name, pure_instantiate_at(t->left, depth + 1, value));
    case PureKind::App:
      return make_papp(pure_instantiate_at(t->left, depth, value), pure_instantiate_at(t->right, depth, value));
    default:
      return t;
  }
}

PureTerm pure_abstract_at(const PureTerm& t, std::uint32_t depth, const Name& x) {
  switch (t->kind) {
    case PureKind::Var:
      return t->name == x ? make_pbound(depth) : t;
    case PureKind::Lam:
      return make_plam_raw(t->name, pure_abstract_at(t->left, depth + 1, x));
    case PureKind::App:
      return make_papp(pure_abstract_at(t->left, depth, x), pure_abstract_at(t->right, depth, x));
    default:
      return t;
  }
}

void pure_fv(const PureTerm& t, std::set<Name>& out) {
  switch (t->kind) {
    case PureKind::Var:
      out.insert(t->name);
      break;
    case PureKind::Lam:
      pure_fv(t->left, out);
      break;
    case PureKind::App:
      pure_fv(t->left, out);
      pure_fv(t->right, out);
      break;
    default:
      break;
  }
}

PureTerm pure_subst(const PureTerm& t, const Name& x, const PureTerm& s, std::uint32_t depth) {
  switch (t->kind) {
    case PureKind::Var:
      return t->name == x ? pure_shift_at(s, depth, 0) : t;
    case PureKind::Lam:
      return make_plam_raw(t->name, pure_subst(t->left, x, s, depth + 1));
    case PureKind::App:
      return make_papp(pure_subst(t->left, x, s, depth), pure_subst(t->right, x, s, depth));
    default:
      return t;
  }
}

}  // namespace

bool operator==(const PureTerm& a, const PureTerm& b) {
  if (a.operator->() == b.operator->()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case PureKind::Var:
      return a->name == b->name;
    case PureKind::Bound:
      return a->index == b->index;
    case PureKind::Lam:
      return a->left == b->left;
    case PureKind::App:
      return a->left == b->left && a->right == b->right;
  }
  return false;
}

PureTerm make_pvar(Name n) {
  PureNode node;
  node.kind = PureKind::Var;
  node.name = std::move(n);
  return make_pure(std::move(node));
}

PureTerm make_pbound(std::uint32_t index) {
  PureNode node;
  node.kind = PureKind::Bound;
  node.index = index;
  node.loose = index + 1;
  return make_pure(std::move(node));
}

PureTerm make_plam_raw(Name hint, PureTerm body) {
  PureNode node;
  node.kind = PureKind::Lam;
  node.name = std::move(hint);
  node.size = 1 + body->size;
  node.loose = body->loose ? body->loose - 1 : 0;
  node.left = std::move(body);
  return make_pure(std::move(node));
}

PureTerm make_plam(const Name& x, const PureTerm& body) {
  return make_plam_raw(x, pure_abstract_at(pure_shift_at(body, 1, 0), 0, x));
}

PureTerm make_papp(PureTerm f, PureTerm a) {
  PureNode node;
  node.kind = PureKind::App;
  node.size = 1 + f->size + a->size;
  node.loose = std::max(f->loose, a->loose);
  node.left = std::move(f);
  node.right = std::move(a);
  return make_pure(std::move(node));
}

PureTerm instantiate(const PureTerm& body, const PureTerm& value) { return pure_instantiate_at(body, 0, value); }

std::set<Name> free_vars(const PureTerm& m) {
  std::set<Name> out;
  pure_fv(m, out);
  return out;
}

PureTerm substitute(const PureTerm& m, const Name& x, const PureTerm& s) { return pure_subst(m, x, s, 0); }

// ---------------------------------------------------------------------------
// Systems

RuleSet rule_set_of(SystemName name) {
  const Rule ss{Sort::Star, Sort::Star};
  const Rule bs{Sort::Box, Sort::Star};
  const Rule sb{Sort::Star, Sort::Box};
  const Rule bb{Sort::Box, Sort::Box};
  switch (name) {
    case SystemName::Arrow:
      return {{ss}};
    case SystemName::Two:
      return {{ss, bs}};
    case SystemName::P:
      return {{ss, sb}};
    case SystemName::P2:
      return {{ss, bs, sb}};
    case SystemName::OmegaWeak:
      return {{ss, bb}};
    case SystemName::Omega:
      return {{ss, bs, bb}};
    case SystemName::POmegaWeak:
      return {{ss, sb, bb}};
    case SystemName::C:
      return {{ss, bs, sb, bb}};
  }
  return {{ss}};
}

std::string system_spelling(SystemName name) {
  switch (name) {
    case SystemName::Arrow: return "arrow";
    case SystemName::Two: return "2";
    case SystemName::P: return "P";
    case SystemName::P2: return "P2";
    case SystemName::OmegaWeak: return "w_";
    case SystemName::Omega: return "w";
    case SystemName::POmegaWeak: return "Pw_";
    case SystemName::C: return "C";
  }
  return "C";
}

const std::vector<SystemName>& all_systems() {
  static const std::vector<SystemName> systems{SystemName::Arrow, SystemName::Two,   SystemName::P,
                                               SystemName::P2,    SystemName::OmegaWeak, SystemName::Omega,
                                               SystemName::POmegaWeak, SystemName::C};
  return systems;
}

std::optional<SystemName> parse_system_name(const std::string& s) {
  for (SystemName n : all_systems()) {
    if (system_spelling(n) == s) return n;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::RuleNotInSystem: return "RuleNotInSystem";
    case ErrorKind::NotAFunction: return "NotAFunction";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::RestrictionViolated: return "RestrictionViolated";
    case ErrorKind::DuplicateSubject: return "DuplicateSubject";
    case ErrorKind::TypeNotASort: return "TypeNotASort";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::FsdElementIllTyped: return "FsdElementIllTyped";
    case ErrorKind::AscriptionNotConvertible: return "AscriptionNotConvertible";
    case ErrorKind::AscriptionNotSorted: return "AscriptionNotSorted";
    case ErrorKind::FsdInLambdaMode: return "FsdInLambdaMode";
    case ErrorKind::SortHasNoType: return "SortHasNoType";
    case ErrorKind::NotErasable: return "NotErasable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FreshnessViolation: return "FreshnessViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column,
                       std::vector<std::string> expected)
    : Error(ErrorKind::Parse, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace nucube
