#pragma once

// β on terms and ūβ on pure terms: leftmost-outermost single steps over the
// compatible closure (declaration types and restriction elements included),
// fuel-bounded normalization, and β-equality.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "nucube/term.hpp"

namespace nucube {

struct Fuel {
  std::size_t max_steps = 100000;
  std::size_t max_size = 1000000;

  static Fuel defaults() { return Fuel{}; }
};

// Child positions: App → 0 fun, 1 arg; Bind → restriction elements 0..n-1,
// then n for the declared type and n+1 for the body.
using RedexPath = std::vector<std::size_t>;

struct StepResult {
  Term result;
  RedexPath path;
};

struct ReductionOutcome {
  Term result;
  std::size_t steps_used = 0;
  bool normal = false;
};

struct PureReductionOutcome {
  PureTerm result;
  std::size_t steps_used = 0;
  bool normal = false;
};

class FuelExhausted : public Error {
 public:
  FuelExhausted(const std::string& what, ReductionOutcome partial)
      : Error(ErrorKind::FuelExhausted, what), partial_(std::move(partial)) {}

  const ReductionOutcome& partial() const { return partial_; }

 private:
  ReductionOutcome partial_;
};

std::optional<Term> beta_step(const Term& t);
std::optional<StepResult> beta_step_traced(const Term& t);
// Every one-step reduct, one per redex position.
std::vector<StepResult> all_beta_steps(const Term& t);
bool is_normal(const Term& t);

std::optional<PureTerm> ube_step(const PureTerm& m);
bool is_normal(const PureTerm& m);

struct TraceStep {
  std::size_t index;
  RedexPath path;
  std::size_t size_before;
  std::size_t size_after;
};
using TraceSink = std::function<void(const TraceStep&)>;

// Never throws; `normal` is false when fuel ran out.
ReductionOutcome try_normalize(const Term& t, const Fuel& fuel, const TraceSink& trace = {});
// Throws FuelExhausted (with the partial outcome) when fuel runs out.
ReductionOutcome normalize(const Term& t, const Fuel& fuel, const TraceSink& trace = {});
Term nf(const Term& t, const Fuel& fuel);

PureReductionOutcome try_normalize(const PureTerm& m, const Fuel& fuel);
PureReductionOutcome normalize(const PureTerm& m, const Fuel& fuel);

// Head reduction until the term is not a β-redex spine.
Term whnf(const Term& t, const Fuel& fuel);

// Throws FuelExhausted when either side fails to normalize.
bool beta_equal(const Term& a, const Term& b, const Fuel& fuel);

}  // namespace nucube
