#pragma once

// Intersection types as restricted products, the abbreviations used to build
// them, and the named example corpus.

#include <map>
#include <string>
#include <vector>

#include "nucube/term.hpp"

namespace nucube {

// Picks the variable z^j_q. Requires q ≥ 1.
struct EncodingHandle {
  std::size_t q = 1;
  std::size_t j = 0;
};

// ∗_0 = ∗, ∗_{k+1} = ∗ → ∗_k
Term star_k(std::size_t k);
// λx1:∗ … λxq:∗. xi  (1 ≤ i ≤ q)
Term projection(std::size_t i, std::size_t q);
Restriction proj_restriction(std::size_t q);

Name z_name(const EncodingHandle& h);
Term z_var(const EncodingHandle& h);
// z^j_q ∈̄{P1,q … Pq,q} : ∗_q
Declaration z_declaration(const EncodingHandle& h);

// Π z^j_q. z^j_q A1 … Aq over degree-1 components; q is taken from the list.
Term intersect(const std::vector<Term>& types, std::size_t j = 0);
Term intersect(const std::vector<Term>& types, const EncodingHandle& h);

// A → B, right associative; the bound subject never clashes with user names.
Term arrow(const Term& a, const Term& b);
Term arrows(const std::vector<Term>& parts);  // a1 → a2 → … → an
Term bar(const Term& a, std::size_t i = 1);  // A → A, iterated
Term tilde(const Term& a);  // (A → A) → A
Term underline(const Term& a, std::size_t i = 1);  // A → ((A → A) → A), iterated

// The type variable y (class □) and its declaration y : ∗.
Term y_var();
Declaration y_declaration();

struct ExampleTerms {
  Term U, V, W_prime, W, W_inter;  // W_inter = Π z2. V
  Declaration u, w;
  Term self_app_body, self_app_fn, self_app;
};
ExampleTerms example_terms();

struct UrzyczynTerms {
  Term F, S, Q, G, M, B, A, E, D;
  Term E1, E2, E3, D1, D2, D3;
  Term C1, C2, C, O, R_prime, R, R1, R2;
  Declaration h, r, o, f, s, q, g;
  Term T, J, L, V, U;
};
UrzyczynTerms urzyczyn();

struct CorpusEntry {
  Context context;
  Term subject;
  Term type;
  std::string note;
};

// Every named judgement of the examples, keyed by a stable name.
const std::map<std::string, CorpusEntry>& corpus();

}  // namespace nucube
