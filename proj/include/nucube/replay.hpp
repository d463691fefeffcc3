#pragma once

// Declarative re-check of a Derivation, node by node, against the seven typing
// rules as stated. Shares no code with the checker beyond the term kernel,
// reduction and restriction satisfaction (which is recomputed, never read from
// the stored report).

#include <cstddef>
#include <string>

#include "nucube/rewrite.hpp"
#include "nucube/typing.hpp"

namespace nucube {

struct ReplayResult {
  bool ok = true;
  std::size_t nodes_checked = 0;
  std::string failure;  // first offending node, empty when ok
};

ReplayResult validate_derivation(const DerivationPtr& root, const RuleSet& rules, Mode mode, const Fuel& fuel = {});
inline ReplayResult validate_derivation(const DerivationPtr& root, const SystemId& system, const Fuel& fuel = {}) {
  return validate_derivation(root, rule_set_of(system), system.mode, fuel);
}

}  // namespace nucube
