#pragma once

// Restriction satisfaction Γ ⊩ B ρ.
//
//   (ref)  ε ⊩ B ∈̄{A1..An}          when B =β Ai for some i
//   (ctR)  x ∈̄{A1..An}, Γ ⊩ B ρ      when Γ[x:=Ai] ⊩ B[x:=Ai] ρ[x:=Ai] for every i
//
// Entries of Γ are peeled from the front. Fuel exhaustion inside β-equality
// propagates as FuelExhausted: the judgement is then undecided, not false.

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nucube/rewrite.hpp"
#include "nucube/term.hpp"

namespace nucube {

struct SatisfactionQuery {
  RestrictedContext gamma;
  Term subject;
  Restriction restriction;
};

struct SatisfactionReport {
  bool holds = false;
  std::size_t branch_count = 0;
  // One entry per explored (ref) leaf: the 0-based index i of the matching
  // element, or nullopt when no element matched.
  std::vector<std::optional<std::size_t>> witnesses;

  friend bool operator==(const SatisfactionReport&, const SatisfactionReport&) = default;
};

// Session-scoped checker with a verdict memo. Not thread-safe; use one per
// checking session.
class RestrictionChecker {
 public:
  explicit RestrictionChecker(Fuel fuel = {}, bool audit = false) : fuel_(fuel), audit_(audit) {}

  SatisfactionReport satisfies(const RestrictedContext& gamma, const Term& b, const Restriction& rho);
  SatisfactionReport convertible_under(const RestrictedContext& gamma, const Term& b, const Term& c);

  const Fuel& fuel() const { return fuel_; }
  bool audit() const { return audit_; }
  std::size_t memo_hits() const { return hits_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Key {
    RestrictedContext gamma;
    Term subject;
    Restriction restriction;
    bool operator==(const Key& o) const {
      return gamma == o.gamma && subject == o.subject && restriction == o.restriction;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  void run(const RestrictedContext& gamma, std::size_t from, const Term& b, const Restriction& rho,
           SatisfactionReport& report);

  Fuel fuel_;
  bool audit_;
  std::size_t hits_ = 0;
  std::unordered_map<Key, SatisfactionReport, KeyHash> memo_;
};

SatisfactionReport satisfies(const RestrictedContext& gamma, const Term& b, const Restriction& rho,
                             const Fuel& fuel = {}, bool audit = false);
SatisfactionReport convertible_under(const RestrictedContext& gamma, const Term& b, const Term& c,
                                     const Fuel& fuel = {}, bool audit = false);

}  // namespace nucube
