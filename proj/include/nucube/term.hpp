#pragma once

// Term kernel: sorts, classed names, locally nameless terms with
// finite-set declarations, contexts, and type-free lambda terms.
//
// Bound variables are de Bruijn indices; free variables are Names. Binders
// keep their subject Name only as a printing hint plus the variable class,
// so alpha-equivalent terms are structurally equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nucube/error.hpp"

namespace nucube {

enum class Sort : std::uint8_t { Star, Box };

const char* to_string(Sort s);

struct Name {
  std::string base;
  Sort cls = Sort::Star;
  std::uint32_t fresh = 0;

  friend bool operator==(const Name&, const Name&) = default;
  friend auto operator<=>(const Name&, const Name&) = default;

  // Display form; fresh names get a numeric suffix.
  std::string display() const;
};

std::size_t hash_value(const Name& n);

enum class Binder : std::uint8_t { Lambda, Pi };

class TermNode;

class Term {
 public:
  Term() = default;
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}

  const TermNode& operator*() const { return *node_; }
  const TermNode* operator->() const { return node_.get(); }
  const TermNode* get() const { return node_.get(); }
  explicit operator bool() const { return node_ != nullptr; }

  // Alpha-equivalence (structural equality of the nameless form).
  friend bool operator==(const Term& a, const Term& b);

 private:
  std::shared_ptr<const TermNode> node_;
};

// ∈̄{A1..An}; an empty element list is the null restriction ◇.
struct Restriction {
  std::vector<Term> elements;

  bool is_null() const { return elements.empty(); }
  std::size_t size() const { return elements.size(); }
  friend bool operator==(const Restriction&, const Restriction&) = default;
};

// x ρ : A
struct Declaration {
  Name subject;
  Restriction restriction;
  Term type;

  friend bool operator==(const Declaration&, const Declaration&) = default;
};

// x ρ with ρ ≠ ◇
struct RestrictedDeclaration {
  Name subject;
  Restriction restriction;

  friend bool operator==(const RestrictedDeclaration&, const RestrictedDeclaration&) = default;
};

struct Context {
  std::vector<Declaration> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  const Declaration* find(const Name& x) const;
  bool contains(const Name& x) const { return find(x) != nullptr; }
  Context extended(Declaration d) const;
  friend bool operator==(const Context&, const Context&) = default;
};

struct RestrictedContext {
  std::vector<RestrictedDeclaration> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  friend bool operator==(const RestrictedContext&, const RestrictedContext&) = default;
};

enum class TermKind : std::uint8_t { Sort, Var, Bound, Bind, App };

struct SortNode {
  Sort sort;
};
struct VarNode {
  Name name;
};
struct BoundNode {
  std::uint32_t index;
  Sort cls;
};
struct BindNode {
  Binder binder;
  Name subject;  // hint; only subject.cls participates in equality
  Restriction restriction;
  Term type;
  Term body;  // index 0 refers to the subject
};
struct AppNode {
  Term fun;
  Term arg;
};

class TermNode {
 public:
  using Data = std::variant<SortNode, VarNode, BoundNode, BindNode, AppNode>;

  explicit TermNode(Data data);

  TermKind kind() const { return static_cast<TermKind>(data_.index()); }
  const Data& data() const { return data_; }

  const SortNode& as_sort() const { return std::get<SortNode>(data_); }
  const VarNode& as_var() const { return std::get<VarNode>(data_); }
  const BoundNode& as_bound() const { return std::get<BoundNode>(data_); }
  const BindNode& as_bind() const { return std::get<BindNode>(data_); }
  const AppNode& as_app() const { return std::get<AppNode>(data_); }

  bool is_sort() const { return kind() == TermKind::Sort; }
  bool is_sort(Sort s) const { return is_sort() && as_sort().sort == s; }
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_bind() const { return kind() == TermKind::Bind; }
  bool is_bind(Binder b) const { return is_bind() && as_bind().binder == b; }
  bool is_app() const { return kind() == TermKind::App; }

  std::size_t hash() const { return hash_; }
  std::uint32_t size() const { return size_; }
  // One past the largest loose de Bruijn index; 0 means locally closed.
  std::uint32_t loose() const { return loose_; }
  // Bloom filter over the free Names; a clear bit proves absence.
  std::uint64_t name_mask() const { return mask_; }

 private:
  Data data_;
  std::size_t hash_ = 0;
  std::uint32_t size_ = 1;
  std::uint32_t loose_ = 0;
  std::uint64_t mask_ = 0;
};

std::uint64_t name_bit(const Name& n);

// Constructors.
Term make_sort(Sort s);
Term star();
Term box();
Term make_var(Name n);
Term make_bound(std::uint32_t index, Sort cls);
Term make_app(Term fun, Term arg);
Term make_apps(Term head, const std::vector<Term>& args);
// Builds π x ρ:A. body, abstracting the free name x in body.
Term make_bind(Binder b, const Declaration& decl, const Term& body);
Term make_lambda(const Declaration& decl, const Term& body);
Term make_pi(const Declaration& decl, const Term& body);
// Raw constructor: body is already in nameless form.
Term make_bind_raw(Binder b, Name subject, Restriction restriction, Term type, Term body);

// Locally nameless plumbing.
Term instantiate(const Term& body, const Term& value);
Term abstract(const Term& t, const Name& x);
Term open_bind(const Term& bind, const Name& fresh);
bool has_loose_bound(const Term& t, std::uint32_t index);

// degree, reqSort, typeAsSort.
int degree(const Term& t);
int degree(Sort s);
Sort req_sort(const Term& t);
Sort type_as_sort(const Term& t);

// fv
std::set<Name> free_vars(const Term& t);
std::set<Name> free_vars(const Restriction& r);
std::set<Name> free_vars(const Declaration& d);
std::set<Name> free_vars(const Context& c);
bool occurs_free(const Name& x, const Term& t);

// Capture-avoiding substitution t[x:=s].
Term substitute(const Term& t, const Name& x, const Term& s);
Restriction substitute(const Restriction& r, const Name& x, const Term& s);
Declaration substitute(const Declaration& d, const Name& x, const Term& s);
Context substitute(const Context& c, const Name& x, const Term& s);
RestrictedContext substitute(const RestrictedContext& c, const Name& x, const Term& s);

bool alpha_eq(const Term& a, const Term& b);

RestrictedContext rdec_extract(const Context& d);
std::set<Name> dom(const Context& d);

// Head and spine of an application chain.
Term spine_head(const Term& t);
std::vector<Term> spine_args(const Term& t);

// A name based on hint that is not in `avoid`.
Name fresh_name(const Name& hint, const std::set<Name>& avoid);

// ---------------------------------------------------------------------------
// Type-free lambda terms.

enum class PureKind : std::uint8_t { Var, Bound, Lam, App };

class PureNode;

class PureTerm {
 public:
  PureTerm() = default;
  explicit PureTerm(std::shared_ptr<const PureNode> node) : node_(std::move(node)) {}

  const PureNode& operator*() const { return *node_; }
  const PureNode* operator->() const { return node_.get(); }
  explicit operator bool() const { return node_ != nullptr; }

  friend bool operator==(const PureTerm& a, const PureTerm& b);

 private:
  std::shared_ptr<const PureNode> node_;
};

class PureNode {
 public:
  PureKind kind;
  Name name;                // Var: the free name; Lam: the binder hint
  std::uint32_t index = 0;  // Bound
  PureTerm left;            // Lam: body; App: function
  PureTerm right;           // App: argument
  std::uint32_t size = 1;
  std::uint32_t loose = 0;
};

PureTerm make_pvar(Name n);
PureTerm make_pbound(std::uint32_t index);
PureTerm make_plam(const Name& x, const PureTerm& body);  // abstracts x
PureTerm make_plam_raw(Name hint, PureTerm body);
PureTerm make_papp(PureTerm f, PureTerm a);

PureTerm instantiate(const PureTerm& body, const PureTerm& value);
std::set<Name> free_vars(const PureTerm& m);
PureTerm substitute(const PureTerm& m, const Name& x, const PureTerm& s);

// ---------------------------------------------------------------------------
// Rule sets and the eight systems.

using Rule = std::pair<Sort, Sort>;

struct RuleSet {
  std::set<Rule> pairs;

  bool contains(Sort from, Sort to) const { return pairs.contains({from, to}); }
  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

enum class SystemName : std::uint8_t { Arrow, Two, P, P2, OmegaWeak, Omega, POmegaWeak, C };
enum class Mode : std::uint8_t { LambdaCube, NuCube };

struct SystemId {
  SystemName name = SystemName::C;
  Mode mode = Mode::NuCube;
  friend bool operator==(const SystemId&, const SystemId&) = default;
};

RuleSet rule_set_of(SystemName name);
inline RuleSet rule_set_of(const SystemId& id) { return rule_set_of(id.name); }

// CLI spellings: arrow 2 P P2 w_ w Pw_ C.
std::string system_spelling(SystemName name);
std::optional<SystemName> parse_system_name(const std::string& s);
const std::vector<SystemName>& all_systems();

}  // namespace nucube

template <>
struct std::hash<nucube::Term> {
  std::size_t operator()(const nucube::Term& t) const noexcept { return t ? t->hash() : 0; }
};

template <>
struct std::hash<nucube::Name> {
  std::size_t operator()(const nucube::Name& n) const noexcept { return nucube::hash_value(n); }
};
