#include "nucube/syntax.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>

namespace nucube {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Pi, Fn, In, Star, Box, LParen, RParen, LBrace, RBrace, Comma, Colon, Dot, Arrow, Backslash, End };

const char* tok_text(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Pi: return "'Pi'";
    case Tok::Fn: return "'fn'";
    case Tok::In: return "'in'";
    case Tok::Star: return "'*'";
    case Tok::Box: return "'@'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::Backslash: return "'\\'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::End, "", line, col};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      t.text = std::string(src.substr(i, j - i));
      t.kind = t.text == "Pi" ? Tok::Pi : t.text == "fn" ? Tok::Fn : t.text == "in" ? Tok::In : Tok::Ident;
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      t.kind = Tok::Arrow;
      t.text = "->";
      advance(2);
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '*': t.kind = Tok::Star; break;
      case '@': t.kind = Tok::Box; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '{': t.kind = Tok::LBrace; break;
      case '}': t.kind = Tok::RBrace; break;
      case ',': t.kind = Tok::Comma; break;
      case ':': t.kind = Tok::Colon; break;
      case '.': t.kind = Tok::Dot; break;
      case '\\': t.kind = Tok::Backslash; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    t.text = std::string(1, c);
    advance(1);
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Raw syntax tree, before names are resolved.

struct Raw;
using RawPtr = std::shared_ptr<const Raw>;

struct RawDecl {
  std::string subject;
  std::size_t line = 0;
  std::size_t column = 0;
  std::vector<RawPtr> restriction;
  RawPtr type;
};

struct Raw {
  enum class Kind { Sort, Ident, Bind, Arrow, App } kind;
  std::size_t line = 0;
  std::size_t column = 0;
  Sort sort = Sort::Star;
  std::string ident;
  Binder binder = Binder::Lambda;
  RawDecl decl;
  RawPtr left;
  RawPtr right;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  RawPtr term() {
    if (peek().kind == Tok::Pi || peek().kind == Tok::Fn) {
      Token t = next();
      auto r = std::make_shared<Raw>();
      r->kind = Raw::Kind::Bind;
      r->line = t.line;
      r->column = t.column;
      r->binder = t.kind == Tok::Pi ? Binder::Pi : Binder::Lambda;
      r->decl = decl();
      expect(Tok::Dot);
      r->left = term();
      return r;
    }
    return arrow();
  }

  RawDecl decl() {
    const Token& id = expect(Tok::Ident);
    RawDecl d;
    d.subject = id.text;
    d.line = id.line;
    d.column = id.column;
    if (peek().kind == Tok::In) {
      next();
      expect(Tok::LBrace);
      d.restriction.push_back(term());
      while (peek().kind == Tok::Comma) {
        next();
        d.restriction.push_back(term());
      }
      expect(Tok::RBrace);
    }
    expect(Tok::Colon);
    d.type = term();
    return d;
  }

  std::vector<RawDecl> context() {
    std::vector<RawDecl> out;
    if (peek().kind == Tok::End) return out;
    out.push_back(decl());
    while (peek().kind == Tok::Comma) {
      next();
      out.push_back(decl());
    }
    return out;
  }

  RawPtr arrow() {
    RawPtr lhs = appchain();
    if (peek().kind == Tok::Arrow) {
      Token t = next();
      auto r = std::make_shared<Raw>();
      r->kind = Raw::Kind::Arrow;
      r->line = t.line;
      r->column = t.column;
      r->left = lhs;
      r->right = arrow();
      return r;
    }
    return lhs;
  }

  RawPtr appchain() {
    RawPtr head = atom();
    while (starts_atom(peek().kind)) {
      RawPtr arg = atom();
      auto r = std::make_shared<Raw>();
      r->kind = Raw::Kind::App;
      r->line = head->line;
      r->column = head->column;
      r->left = head;
      r->right = arg;
      head = r;
    }
    return head;
  }

  RawPtr atom() {
    const Token& t = peek();
    auto r = std::make_shared<Raw>();
    r->line = t.line;
    r->column = t.column;
    switch (t.kind) {
      case Tok::Star:
      case Tok::Box:
        r->kind = Raw::Kind::Sort;
        r->sort = t.kind == Tok::Star ? Sort::Star : Sort::Box;
        next();
        return r;
      case Tok::Ident:
        r->kind = Raw::Kind::Ident;
        r->ident = t.text;
        next();
        return r;
      case Tok::LParen: {
        next();
        RawPtr inner = term();
        expect(Tok::RParen);
        return inner;
      }
      default:
        fail({"'*'", "'@'", "identifier", "'('"});
    }
  }

  // Pure terms: x | \x. M | M N
  PureTerm pure_term(std::vector<Name>& bound) {
    if (peek().kind == Tok::Backslash) {
      next();
      const Token& id = expect(Tok::Ident);
      Name x{id.text, Sort::Star, 0};
      expect(Tok::Dot);
      bound.push_back(x);
      PureTerm body = pure_term(bound);
      bound.pop_back();
      return make_plam_raw(x, body);
    }
    PureTerm head = pure_atom(bound);
    while (peek().kind == Tok::Ident || peek().kind == Tok::LParen || peek().kind == Tok::Backslash) {
      if (peek().kind == Tok::Backslash) {
        head = make_papp(head, pure_term(bound));
        break;
      }
      head = make_papp(head, pure_atom(bound));
    }
    return head;
  }

  PureTerm pure_atom(std::vector<Name>& bound) {
    if (peek().kind == Tok::LParen) {
      next();
      PureTerm inner = pure_term(bound);
      expect(Tok::RParen);
      return inner;
    }
    const Token& id = expect(Tok::Ident);
    for (std::size_t k = bound.size(); k-- > 0;) {
      if (bound[k].base == id.text) return make_pbound(static_cast<std::uint32_t>(bound.size() - 1 - k));
    }
    return make_pvar(Name{id.text, Sort::Star, 0});
  }

  void finish() { expect(Tok::End); }

 private:
  static bool starts_atom(Tok k) {
    return k == Tok::Star || k == Tok::Box || k == Tok::Ident || k == Tok::LParen;
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  const Token& expect(Tok k) {
    if (peek().kind != k) fail({tok_text(k)});
    return toks_[pos_++];
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found ";
    msg += t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
    throw ParseError(msg, t.line, t.column, std::move(expected));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Name resolution

class Resolver {
 public:
  explicit Resolver(const Context& scope) {
    for (const Declaration& d : scope.entries) free_[d.subject.display()] = d.subject;
  }

  // Marks free identifiers that head a declared type somewhere in `r`.
  void infer_heads(const RawPtr& r, std::vector<std::string>& bound) {
    switch (r->kind) {
      case Raw::Kind::Bind:
        infer_decl(r->decl, bound);
        bound.push_back(r->decl.subject);
        infer_heads(r->left, bound);
        bound.pop_back();
        break;
      case Raw::Kind::Arrow:
        infer_heads(r->left, bound);
        note_head(r->left, bound);
        bound.push_back("");
        infer_heads(r->right, bound);
        bound.pop_back();
        break;
      case Raw::Kind::App:
        infer_heads(r->left, bound);
        infer_heads(r->right, bound);
        break;
      default:
        break;
    }
  }

  void infer_decl(const RawDecl& d, std::vector<std::string>& bound) {
    for (const RawPtr& e : d.restriction) infer_heads(e, bound);
    infer_heads(d.type, bound);
    note_head(d.type, bound);
  }

  void declare_free(const Name& n) { free_[n.display()] = n; }

  Term resolve(const RawPtr& r, std::vector<std::pair<std::string, Sort>>& bound) {
    switch (r->kind) {
      case Raw::Kind::Sort:
        return make_sort(r->sort);
      case Raw::Kind::Ident: {
        for (std::size_t k = bound.size(); k-- > 0;) {
          if (bound[k].first == r->ident) {
            return make_bound(static_cast<std::uint32_t>(bound.size() - 1 - k), bound[k].second);
          }
        }
        return make_var(free_name(r->ident));
      }
      case Raw::Kind::App:
        return make_app(resolve(r->left, bound), resolve(r->right, bound));
      case Raw::Kind::Arrow: {
        Term dom = resolve(r->left, bound);
        Sort cls = class_of(dom, "arrow domain", r->line, r->column);
        bound.emplace_back("", cls);
        Term body = resolve(r->right, bound);
        bound.pop_back();
        return make_bind_raw(Binder::Pi, Name{"%w", cls, 0}, Restriction{}, dom, body);
      }
      case Raw::Kind::Bind: {
        Restriction rho;
        for (const RawPtr& e : r->decl.restriction) rho.elements.push_back(resolve(e, bound));
        Term type = resolve(r->decl.type, bound);
        Sort cls = class_of(type, r->decl.subject, r->decl.line, r->decl.column);
        bound.emplace_back(r->decl.subject, cls);
        Term body = resolve(r->left, bound);
        bound.pop_back();
        return make_bind_raw(r->binder, Name{r->decl.subject, cls, 0}, std::move(rho), type, body);
      }
    }
    return star();
  }

  static Sort class_of(const Term& type, const std::string& what, std::size_t line, std::size_t col) {
    int d = degree(type);
    if (d == 1) return Sort::Star;
    if (d == 2) return Sort::Box;
    throw ParseError("cannot resolve the class of binder " + what + ": its declared type has degree " +
                         std::to_string(d) + " (need 1 or 2)",
                     line, col);
  }

 private:
  void note_head(const RawPtr& type, const std::vector<std::string>& bound) {
    std::vector<std::string> local = bound;
    const Raw* cur = type.get();
    for (;;) {
      if (cur->kind == Raw::Kind::App) {
        cur = cur->left.get();
      } else if (cur->kind == Raw::Kind::Bind) {
        local.push_back(cur->decl.subject);
        cur = cur->left.get();
      } else if (cur->kind == Raw::Kind::Arrow) {
        cur = cur->right.get();
      } else {
        break;
      }
    }
    if (cur->kind != Raw::Kind::Ident) return;
    for (const std::string& b : local) {
      if (b == cur->ident) return;
    }
    heads_.insert(cur->ident);
  }

  Name free_name(const std::string& ident) const {
    auto it = free_.find(ident);
    if (it != free_.end()) return it->second;
    return Name{ident, heads_.contains(ident) ? Sort::Box : Sort::Star, 0};
  }

  std::map<std::string, Name> free_;
  std::set<std::string> heads_;
};

// ---------------------------------------------------------------------------
// Printer

class Printer {
 public:
  enum Level { kTerm = 0, kArrow = 1, kApp = 2, kAtom = 3 };

  explicit Printer(const std::set<Name>& free) {
    for (const Name& n : free) taken_.insert(n.display());
  }

  std::string print(const Term& t, Level level) {
    switch (t->kind()) {
      case TermKind::Sort:
        return to_string(t->as_sort().sort);
      case TermKind::Var:
        return t->as_var().name.display();
      case TermKind::Bound: {
        std::uint32_t i = t->as_bound().index;
        if (i >= stack_.size()) return "#" + std::to_string(i);
        return stack_[stack_.size() - 1 - i];
      }
      case TermKind::App: {
        std::string s = print(t->as_app().fun, kApp) + " " + print(t->as_app().arg, kAtom);
        return level > kApp ? "(" + s + ")" : s;
      }
      case TermKind::Bind: {
        const BindNode& b = t->as_bind();
        if (b.binder == Binder::Pi && b.restriction.is_null() && !has_loose_bound(b.body, 0)) {
          std::string s = print(b.type, kApp) + " -> ";
          stack_.push_back("");
          s += print(b.body, kArrow);
          stack_.pop_back();
          return level > kArrow ? "(" + s + ")" : s;
        }
        std::string s = b.binder == Binder::Pi ? "Pi " : "fn ";
        std::string name = choose(b.subject.base);
        s += name;
        if (!b.restriction.is_null()) {
          s += " in {";
          for (std::size_t i = 0; i < b.restriction.elements.size(); ++i) {
            if (i) s += ", ";
            s += print(b.restriction.elements[i], kTerm);
          }
          s += "}";
        }
        s += " : " + print(b.type, kTerm) + ". ";
        stack_.push_back(name);
        s += print(b.body, kTerm);
        stack_.pop_back();
        return level > kTerm ? "(" + s + ")" : s;
      }
    }
    return "?";
  }

 private:
  std::string choose(const std::string& hint) {
    std::string base = hint;
    if (base.empty() || !ident_start(base[0]) || base == "Pi" || base == "fn" || base == "in") base = "w";
    for (char& c : base) {
      if (!ident_char(c)) c = '_';
    }
    std::string candidate = base;
    while (taken_.contains(candidate) || in_stack(candidate)) candidate += "'";
    return candidate;
  }

  bool in_stack(const std::string& s) const {
    for (const std::string& x : stack_) {
      if (x == s) return true;
    }
    return false;
  }

  std::set<std::string> taken_;
  std::vector<std::string> stack_;
};

void print_pure_rec(const PureTerm& m, int level, std::vector<std::string>& stack, const std::set<std::string>& taken,
                    std::string& out) {
  switch (m->kind) {
    case PureKind::Var:
      out += m->name.display();
      return;
    case PureKind::Bound:
      out += m->index < stack.size() ? stack[stack.size() - 1 - m->index] : "#" + std::to_string(m->index);
      return;
    case PureKind::Lam: {
      if (level > 0) out += "(";
      std::string name = m->name.base.empty() || !ident_start(m->name.base[0]) ? "x" : m->name.base;
      auto clash = [&](const std::string& n) {
        if (taken.contains(n)) return true;
        for (const std::string& s : stack) {
          if (s == n) return true;
        }
        return false;
      };
      while (clash(name)) name += "'";
      out += "\\" + name + ". ";
      stack.push_back(name);
      print_pure_rec(m->left, 0, stack, taken, out);
      stack.pop_back();
      if (level > 0) out += ")";
      return;
    }
    case PureKind::App:
      if (level > 1) out += "(";
      print_pure_rec(m->left, 1, stack, taken, out);
      out += " ";
      print_pure_rec(m->right, 2, stack, taken, out);
      if (level > 1) out += ")";
      return;
  }
}

}  // namespace

Term parse_term(std::string_view src, const Context& scope) {
  Parser p(src);
  RawPtr raw = p.term();
  p.finish();
  Resolver res(scope);
  std::vector<std::string> names;
  res.infer_heads(raw, names);
  std::vector<std::pair<std::string, Sort>> bound;
  return res.resolve(raw, bound);
}

Context parse_context(std::string_view src) {
  Parser p(src);
  std::vector<RawDecl> decls = p.context();
  p.finish();
  Resolver res(Context{});
  std::vector<std::string> names;
  for (const RawDecl& d : decls) res.infer_decl(d, names);
  Context out;
  for (const RawDecl& d : decls) {
    std::vector<std::pair<std::string, Sort>> bound;
    Restriction rho;
    for (const RawPtr& e : d.restriction) rho.elements.push_back(res.resolve(e, bound));
    Term type = res.resolve(d.type, bound);
    Sort cls = Resolver::class_of(type, d.subject, d.line, d.column);
    Name subject{d.subject, cls, 0};
    res.declare_free(subject);
    out.entries.push_back(Declaration{subject, std::move(rho), type});
  }
  return out;
}

PureTerm parse_pure_term(std::string_view src) {
  Parser p(src);
  std::vector<Name> bound;
  PureTerm m = p.pure_term(bound);
  p.finish();
  return m;
}

std::string print_term(const Term& t) {
  Printer p(free_vars(t));
  return p.print(t, Printer::kTerm);
}

std::string print_declaration(const Declaration& d) {
  std::set<Name> free = free_vars(d);
  Printer p(free);
  std::string s = d.subject.display();
  if (!d.restriction.is_null()) {
    s += " in {";
    for (std::size_t i = 0; i < d.restriction.elements.size(); ++i) {
      if (i) s += ", ";
      s += p.print(d.restriction.elements[i], Printer::kTerm);
    }
    s += "}";
  }
  return s + " : " + p.print(d.type, Printer::kTerm);
}

std::string print_context(const Context& c) {
  std::string s;
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    if (i) s += ", ";
    s += print_declaration(c.entries[i]);
  }
  return s;
}

std::string print_restricted_context(const RestrictedContext& c) {
  std::string s;
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    if (i) s += ", ";
    const RestrictedDeclaration& d = c.entries[i];
    s += d.subject.display() + " in {";
    for (std::size_t j = 0; j < d.restriction.elements.size(); ++j) {
      if (j) s += ", ";
      s += print_term(d.restriction.elements[j]);
    }
    s += "}";
  }
  return s;
}

std::string print_pure(const PureTerm& m) {
  std::set<std::string> taken;
  for (const Name& n : free_vars(m)) taken.insert(n.display());
  std::vector<std::string> stack;
  std::string out;
  print_pure_rec(m, 0, stack, taken, out);
  return out;
}

}  // namespace nucube
