#pragma once

// Type erasure from terms to type-free lambda terms.
//
//   x        ↦ x
//   A B      ↦ TE(A) TE(B)   when B has degree 0
//   A B      ↦ TE(A)         when B has degree 1
//   λx^∗.B   ↦ λx.TE(B)
//   λx^□.B   ↦ TE(B)
//
// Anything else (products, sorts, arguments of degree ≥ 2, a □-class variable
// left in the output) raises NotErasable.

#include <cstddef>

#include "nucube/term.hpp"
#include "nucube/typing.hpp"

namespace nucube {

struct ErasureResult {
  PureTerm pure;
  std::size_t dropped_nodes = 0;  // removed degree-1 arguments and □-binders
};

ErasureResult erase(const Term& a);

// Δ ⊢ A : B : ∗ and TE(A) = target. Judgement failures give false; fuel
// exhaustion propagates.
bool verify_typability(const Context& delta, const Term& a, const Term& b, const PureTerm& target,
                       const CheckConfig& cfg);

}  // namespace nucube
