#include "nucube/replay.hpp"

#include <unordered_set>

#include "nucube/syntax.hpp"

namespace nucube {

namespace {

struct Rejected {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Rejected{why};
}

Context without_last(const Context& c) {
  Context out = c;
  out.entries.pop_back();
  return out;
}

std::optional<Sort> sort_term(const Term& t) {
  if (t->is_sort()) return t->as_sort().sort;
  return std::nullopt;
}

class Replayer {
 public:
  Replayer(const RuleSet& rules, Mode mode, const Fuel& fuel) : rules_(rules), mode_(mode), fuel_(fuel) {}

  void visit(const DerivationPtr& d) {
    require(d != nullptr, "missing derivation node");
    if (!done_.insert(d.get()).second) return;
    for (const DerivationPtr& p : d->premises) visit(p);
    try {
      check_node(*d);
    } catch (const Rejected& r) {
      throw Rejected{std::string("(") + to_string(d->rule) + ") " + print_judgement(d->conclusion) + ": " + r.why};
    }
  }

  std::size_t count() const { return done_.size(); }

 private:
  bool satisfied(const Context& ctx, const Term& b, const Restriction& rho) {
    RestrictionChecker sat(fuel_, false);
    return sat.satisfies(rdec_extract(ctx), b, rho).holds;
  }

  void check_node(const Derivation& d) {
    const Judgement& j = d.conclusion;
    const auto& ps = d.premises;
    auto premise = [&](std::size_t i) -> const Judgement& { return ps[i]->conclusion; };
    switch (d.rule) {
      case RuleName::Axiom:
        require(ps.empty(), "axiom has premises");
        require(j.context.empty() && j.subject->is_sort(Sort::Star) && j.type->is_sort(Sort::Box),
                "axiom must conclude |- * : @ in the empty context");
        return;

      case RuleName::Start: {
        require(!j.context.empty(), "empty context");
        const Declaration& dec = j.context.entries.back();
        Context delta = without_last(j.context);
        require(!delta.contains(dec.subject), "subject already in dom");
        require(j.subject->is_var() && j.subject->as_var().name == dec.subject, "subject is not the new variable");
        require(j.type == dec.type, "type is not the declared type");
        require(mode_ == Mode::NuCube || dec.restriction.is_null(), "restriction in lambda-cube mode");
        require(ps.size() == 1 + dec.restriction.size(), "wrong number of premises");
        require(premise(0).context == delta && premise(0).subject == dec.type, "first premise must type A");
        auto s = sort_term(premise(0).type);
        require(s && *s == dec.subject.cls, "declared type's sort differs from the variable's class");
        for (std::size_t k = 0; k < dec.restriction.size(); ++k) {
          const Judgement& e = premise(k + 1);
          require(e.context == delta && e.subject == dec.restriction.elements[k] && e.type == dec.type,
                  "element premise " + std::to_string(k + 1) + " does not type the element by A");
        }
        return;
      }

      case RuleName::Weak: {
        require(ps.size() == 2 && !j.context.empty(), "weak needs two premises and a non-empty context");
        Context delta = without_last(j.context);
        require(premise(0).context == j.context, "first premise must be in the extended context");
        require(premise(1).context == delta, "second premise must be in the shorter context");
        require(premise(1).subject == j.subject && premise(1).type == j.type, "second premise differs");
        return;
      }

      case RuleName::Pi: {
        require(ps.size() == 2 && j.subject->is_bind(Binder::Pi), "pi needs two premises and a product");
        const BindNode& b = j.subject->as_bind();
        const Judgement& body = premise(0);
        const Judgement& dom = premise(1);
        require(dom.context == j.context && dom.subject == b.type, "domain premise mismatch");
        auto s1 = sort_term(dom.type);
        require(s1.has_value(), "domain is not sorted");
        require(body.context.size() == j.context.size() + 1 && without_last(body.context) == j.context,
                "body premise must extend the context by one entry");
        const Declaration& dec = body.context.entries.back();
        require(dec.subject.cls == b.subject.cls && dec.restriction == b.restriction && dec.type == b.type,
                "body premise declares a different binder");
        require(!occurs_free(dec.subject, j.subject), "opening variable is not fresh");
        require(body.subject == open_bind(j.subject, dec.subject), "body premise subject mismatch");
        auto s2 = sort_term(body.type);
        require(s2.has_value() && j.type == make_sort(*s2), "conclusion sort must be the body's sort");
        require(rules_.contains(*s1, *s2), std::string("rule (") + to_string(*s1) + "," + to_string(*s2) +
                                               ") not in the system");
        return;
      }

      case RuleName::Lambda: {
        require(ps.size() == 2 && j.subject->is_bind(Binder::Lambda) && j.type->is_bind(Binder::Pi),
                "lambda needs two premises, an abstraction and a product");
        const BindNode& lam = j.subject->as_bind();
        const BindNode& pi = j.type->as_bind();
        require(lam.subject.cls == pi.subject.cls && lam.restriction == pi.restriction && lam.type == pi.type,
                "abstraction and product declare different binders");
        const Judgement& body = premise(0);
        require(body.context.size() == j.context.size() + 1 && without_last(body.context) == j.context,
                "body premise must extend the context by one entry");
        const Declaration& dec = body.context.entries.back();
        require(dec.subject.cls == lam.subject.cls && dec.restriction == lam.restriction && dec.type == lam.type,
                "body premise declares a different binder");
        require(!occurs_free(dec.subject, j.subject) && !occurs_free(dec.subject, j.type),
                "opening variable is not fresh");
        require(body.subject == open_bind(j.subject, dec.subject), "body subject mismatch");
        require(body.type == open_bind(j.type, dec.subject), "body type mismatch");
        const Judgement& form = premise(1);
        require(form.context == j.context && form.subject == j.type && sort_term(form.type).has_value(),
                "product premise mismatch");
        return;
      }

      case RuleName::App: {
        require(ps.size() == 2 && j.subject->is_app(), "app needs two premises and an application");
        const AppNode& a = j.subject->as_app();
        const Judgement& f = premise(0);
        const Judgement& x = premise(1);
        require(f.context == j.context && x.context == j.context, "context mismatch");
        require(f.subject == a.fun && f.type->is_bind(Binder::Pi), "function premise mismatch");
        const BindNode& pi = f.type->as_bind();
        require(x.subject == a.arg && x.type == pi.type, "argument premise mismatch");
        if (!pi.restriction.is_null()) {
          require(mode_ == Mode::NuCube, "restricted product in lambda-cube mode");
          require(satisfied(j.context, a.arg, pi.restriction), "argument does not satisfy the restriction");
        }
        require(j.type == instantiate(pi.body, a.arg), "result type is not the instantiated body");
        return;
      }

      case RuleName::Conv: {
        require(ps.size() == 2, "conv needs two premises");
        const Judgement& from = premise(0);
        const Judgement& target = premise(1);
        require(from.context == j.context && from.subject == j.subject, "first premise mismatch");
        require(target.context == j.context && target.subject == j.type && sort_term(target.type).has_value(),
                "target premise mismatch");
        if (mode_ == Mode::LambdaCube) {
          require(beta_equal(from.type, j.type, fuel_), "types are not beta-equal");
        } else {
          require(satisfied(j.context, from.type, Restriction{{j.type}}), "types are not convertible");
        }
        return;
      }
    }
    throw Rejected{"unknown rule"};
  }

  const RuleSet& rules_;
  Mode mode_;
  Fuel fuel_;
  std::unordered_set<const Derivation*> done_;
};

}  // namespace

ReplayResult validate_derivation(const DerivationPtr& root, const RuleSet& rules, Mode mode, const Fuel& fuel) {
  Replayer r(rules, mode, fuel);
  try {
    r.visit(root);
  } catch (const Rejected& e) {
    return {false, r.count(), e.why};
  }
  return {true, r.count(), {}};
}

}  // namespace nucube
