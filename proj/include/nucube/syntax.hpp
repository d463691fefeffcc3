#pragma once

// Concrete text format.
//
//   term    := "Pi" decl "." term | "fn" decl "." term | arrow
//   arrow   := appchain ("->" arrow)?
//   appchain:= atom+
//   atom    := "*" | "@" | ident | "(" term ")"
//   decl    := ident ("in" "{" term ("," term)* "}")? ":" term
//   context := decl ("," decl)* | ""
//
// "--" starts a comment that runs to the end of the line. Pure terms use
// `x | \x. M | M N`.
//
// Variable classes are not written. A binder's class follows from the degree
// of its declared type (1 gives *, 2 gives @). A free identifier takes its
// class from the scope context when declared there; otherwise it is @ when it
// heads some declared type and * everywhere else.

#include <string>
#include <string_view>

#include "nucube/term.hpp"

namespace nucube {

Term parse_term(std::string_view src, const Context& scope = {});
Context parse_context(std::string_view src);
PureTerm parse_pure_term(std::string_view src);

std::string print_term(const Term& t);
std::string print_declaration(const Declaration& d);
std::string print_context(const Context& c);
std::string print_restricted_context(const RestrictedContext& c);
std::string print_pure(const PureTerm& m);

}  // namespace nucube
