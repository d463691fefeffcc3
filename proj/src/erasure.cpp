#include "nucube/erasure.hpp"

#include <cctype>

#include "nucube/rewrite.hpp"
#include "nucube/syntax.hpp"

namespace nucube {

namespace {

class Eraser {
 public:
  PureTerm run(const Term& t) {
    switch (t->kind()) {
      case TermKind::Sort:
        throw Error(ErrorKind::NotErasable, "a sort has no erasure");
      case TermKind::Var: {
        const Name& x = t->as_var().name;
        if (x.cls != Sort::Star) throw Error(ErrorKind::NotErasable, "type variable '" + x.display() + "' survives erasure");
        return make_pvar(x);
      }
      case TermKind::Bound: {
        std::uint32_t i = t->as_bound().index;
        if (i >= kept_.size()) throw Error(ErrorKind::NotErasable, "loose bound variable");
        std::size_t at = kept_.size() - 1 - i;
        if (!kept_[at]) throw Error(ErrorKind::NotErasable, "bound type variable survives erasure");
        std::uint32_t j = 0;
        for (std::size_t k = at + 1; k < kept_.size(); ++k) j += kept_[k] ? 1 : 0;
        return make_pbound(j);
      }
      case TermKind::Bind: {
        const BindNode& b = t->as_bind();
        if (b.binder == Binder::Pi) throw Error(ErrorKind::NotErasable, "a product has no erasure");
        bool keep = b.subject.cls == Sort::Star;
        kept_.push_back(keep);
        PureTerm body = run(b.body);
        kept_.pop_back();
        if (!keep) {
          ++dropped_;
          return body;
        }
        return make_plam_raw(Name{hint(b.subject), Sort::Star, 0}, body);
      }
      case TermKind::App: {
        const AppNode& a = t->as_app();
        int d = degree(a.arg);
        if (d == 0) return make_papp(run(a.fun), run(a.arg));
        if (d == 1) {
          ++dropped_;
          return run(a.fun);
        }
        throw Error(ErrorKind::NotErasable, "argument of degree " + std::to_string(d) + " has no erasure");
      }
    }
    throw Error(ErrorKind::NotErasable, "unknown term kind");
  }

  std::size_t dropped() const { return dropped_; }

 private:
  static std::string hint(const Name& n) {
    if (n.base.empty() || !(std::isalpha(static_cast<unsigned char>(n.base[0])) || n.base[0] == '_')) return "w";
    return n.base;
  }

  std::vector<bool> kept_;
  std::size_t dropped_ = 0;
};

}  // namespace

ErasureResult erase(const Term& a) {
  Eraser e;
  PureTerm p = e.run(a);
  return {p, e.dropped()};
}

bool verify_typability(const Context& delta, const Term& a, const Term& b, const PureTerm& target,
                       const CheckConfig& cfg) {
  Checker checker(cfg);
  try {
    checker.check_judgement(delta, a, b);
    if (checker.sort_of(delta, a) != Sort::Star) return false;
    return erase(a).pure == target;
  } catch (const FuelExhausted&) {
    throw;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace nucube
