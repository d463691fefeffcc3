#pragma once

// Syntax-directed checker for the λ- and ν-cube rule sets.
//
// Every successful check returns a Derivation built only from the seven
// declarative rules (axiom, weak, start, Π, λ, app, conv), so the result can
// be replayed by validate_derivation() without trusting this algorithm.
//
// Algorithm outline:
//  - variables: (start) for the declaring entry, then (weak) through the rest
//    of the context;
//  - Π and λ: open the binder with a fresh name, check the declaration as a
//    (start) premise, recurse;
//  - application: the function type is brought to Π form by weak-head
//    reduction, or, when its head is a variable restricted to projections, by
//    case-splitting on that variable and re-assembling the instances into one
//    Π type; both are justified by a (conv) node;
//  - argument and ascription mismatches are closed by (conv) under rdec(Δ);
//  - checking λδ.b against Πδ.B pushes the expected type into the body.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nucube/restriction.hpp"
#include "nucube/rewrite.hpp"
#include "nucube/term.hpp"

namespace nucube {

enum class RuleName { Axiom, Weak, Start, Pi, Lambda, App, Conv };

const char* to_string(RuleName r);
std::optional<RuleName> parse_rule_name(const std::string& s);

// Δ ⊢ A : B
struct Judgement {
  Context context;
  Term subject;
  Term type;
};

std::string print_judgement(const Judgement& j);

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  RuleName rule;
  Judgement conclusion;
  std::vector<DerivationPtr> premises;
  std::optional<SatisfactionReport> satisfaction;
};

std::size_t derivation_node_count(const DerivationPtr& d);  // distinct nodes

struct CheckConfig {
  SystemId system;
  Fuel fuel;
  bool audit = false;
};

class TypeError : public Error {
 public:
  TypeError(ErrorKind kind, const std::string& message, std::optional<SatisfactionReport> report = std::nullopt,
            std::optional<std::size_t> element = std::nullopt)
      : Error(kind, message), report_(std::move(report)), element_(element) {}

  const std::optional<SatisfactionReport>& report() const { return report_; }
  // FsdElementIllTyped: 0-based index of the offending element.
  std::optional<std::size_t> element() const { return element_; }

 private:
  std::optional<SatisfactionReport> report_;
  std::optional<std::size_t> element_;
};

struct Typed {
  Term type;
  DerivationPtr derivation;
};

class Checker {
 public:
  explicit Checker(CheckConfig cfg);
  ~Checker();
  Checker(const Checker&) = delete;
  Checker& operator=(const Checker&) = delete;

  // One (start) derivation per entry, in order.
  std::vector<DerivationPtr> check_context(const Context& delta);
  Typed synth_type(const Context& delta, const Term& a);
  DerivationPtr check_judgement(const Context& delta, const Term& a, const Term& b);
  // ς with Δ ⊢ B : ς where Δ ⊢ A : B; nullopt when B = □ or A = □.
  std::optional<Sort> sort_of(const Context& delta, const Term& a);

  const CheckConfig& config() const { return cfg_; }
  const RuleSet& rules() const { return rules_; }
  RestrictionChecker& restrictions() { return sat_; }

 private:
  struct Frame;
  using FramePtr = std::shared_ptr<const Frame>;

  FramePtr frame_for(const Context& delta);
  FramePtr extend(const FramePtr& frame, const Declaration& d);
  DerivationPtr lookup(const FramePtr& frame, const Name& x);
  Typed synth(const FramePtr& frame, const Term& a);
  Typed synth_uncached(const FramePtr& frame, const Term& a);
  DerivationPtr check(const FramePtr& frame, const Term& a, const Term& b);
  std::pair<Sort, DerivationPtr> sorted(const FramePtr& frame, const Term& t, ErrorKind on_fail, const char* what);
  std::optional<std::pair<Sort, DerivationPtr>> as_sort(const FramePtr& frame, const Typed& typed);
  Typed expose_pi(const FramePtr& frame, const Term& fun, const Typed& typed);
  std::optional<Term> generalize(const RestrictedContext& gamma, const Term& type);
  DerivationPtr conv(const FramePtr& frame, const DerivationPtr& d, const Term& target, SatisfactionReport report);
  Name fresh_for(const FramePtr& frame, const Name& hint, const Term& t) const;

  CheckConfig cfg_;
  RuleSet rules_;
  RestrictionChecker sat_;
  FramePtr root_;
  std::unordered_map<std::size_t, std::vector<std::pair<Context, FramePtr>>> frames_;
};

// Convenience wrappers; each uses a fresh checking session.
std::vector<DerivationPtr> check_context(const Context& delta, const CheckConfig& cfg);
Typed synth_type(const Context& delta, const Term& a, const CheckConfig& cfg);
DerivationPtr check_judgement(const Context& delta, const Term& a, const Term& b, const CheckConfig& cfg);
std::optional<Sort> sort_of(const Context& delta, const Term& a, const CheckConfig& cfg);

// Recognizes λx1:*...λxn:*. xi and returns (i, n), 1-based.
std::optional<std::pair<std::size_t, std::size_t>> projection_shape(const Term& t);

}  // namespace nucube
