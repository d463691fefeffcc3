#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nucube/encoding.hpp"
#include "nucube/error.hpp"
#include "nucube/syntax.hpp"
#include "nucube/term.hpp"
#include "nucube/typing.hpp"

namespace support {

using namespace nucube;

inline Name obj(const std::string& s) { return Name{s, Sort::Star, 0}; }
inline Name typ(const std::string& s) { return Name{s, Sort::Box, 0}; }
inline Term v(const Name& n) { return make_var(n); }
inline Declaration decl(const Name& n, Term type) { return {n, {}, std::move(type)}; }

inline CheckConfig config(SystemName s = SystemName::C, Mode m = Mode::NuCube) { return {{s, m}, Fuel{}, false}; }

inline Context with(std::vector<Declaration> ds) { return Context{std::move(ds)}; }
inline Context dy() { return with({y_declaration()}); }
inline Context dy_z(std::size_t q) { return with({y_declaration(), z_declaration({q, 0})}); }

// Kind of the Error raised by f, or nullopt when f returns normally.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline Term P(std::size_t i, std::size_t q) { return projection(i, q); }

}  // namespace support
