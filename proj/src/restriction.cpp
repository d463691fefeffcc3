#include "nucube/restriction.hpp"

namespace nucube {

std::size_t RestrictionChecker::KeyHash::operator()(const Key& k) const {
  std::size_t h = k.subject->hash();
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const Term& e : k.restriction.elements) mix(e->hash());
  for (const RestrictedDeclaration& d : k.gamma.entries) {
    mix(hash_value(d.subject));
    for (const Term& e : d.restriction.elements) mix(e->hash());
  }
  return h;
}

SatisfactionReport RestrictionChecker::satisfies(const RestrictedContext& gamma, const Term& b,
                                                 const Restriction& rho) {
  if (rho.is_null()) {
    throw Error(ErrorKind::InvalidArgument, "restriction satisfaction needs a non-null restriction");
  }
  Key key{gamma, b, rho};
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++hits_;
    return it->second;
  }
  SatisfactionReport report;
  report.holds = true;
  run(gamma, 0, b, rho, report);
  memo_.emplace(std::move(key), report);
  return report;
}

SatisfactionReport RestrictionChecker::convertible_under(const RestrictedContext& gamma, const Term& b,
                                                         const Term& c) {
  return satisfies(gamma, b, Restriction{{c}});
}

void RestrictionChecker::run(const RestrictedContext& gamma, std::size_t from, const Term& b, const Restriction& rho,
                             SatisfactionReport& report) {
  if (from == gamma.entries.size()) {
    // (ref)
    ++report.branch_count;
    for (std::size_t i = 0; i < rho.elements.size(); ++i) {
      if (beta_equal(b, rho.elements[i], fuel_)) {
        report.witnesses.emplace_back(i);
        return;
      }
    }
    report.witnesses.emplace_back(std::nullopt);
    report.holds = false;
    return;
  }
  // (ctR) on the first remaining entry.
  const RestrictedDeclaration& head = gamma.entries[from];
  if (head.restriction.is_null()) {
    throw Error(ErrorKind::InvalidArgument, "restricted context entry " + head.subject.display() + " has no elements");
  }
  for (const Term& choice : head.restriction.elements) {
    RestrictedContext rest;
    rest.entries.reserve(gamma.entries.size() - from - 1);
    for (std::size_t k = from + 1; k < gamma.entries.size(); ++k) {
      const RestrictedDeclaration& d = gamma.entries[k];
      rest.entries.push_back({d.subject, substitute(d.restriction, head.subject, choice)});
    }
    run(rest, 0, substitute(b, head.subject, choice), substitute(rho, head.subject, choice), report);
    if (!report.holds && !audit_) return;
  }
}

SatisfactionReport satisfies(const RestrictedContext& gamma, const Term& b, const Restriction& rho, const Fuel& fuel,
                             bool audit) {
  RestrictionChecker checker(fuel, audit);
  return checker.satisfies(gamma, b, rho);
}

SatisfactionReport convertible_under(const RestrictedContext& gamma, const Term& b, const Term& c, const Fuel& fuel,
                                     bool audit) {
  RestrictionChecker checker(fuel, audit);
  return checker.convertible_under(gamma, b, c);
}

}  // namespace nucube
