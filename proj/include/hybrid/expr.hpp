#ifndef HYBRID_EXPR_HPP
#define HYBRID_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include "hybrid/debruijn.hpp"

namespace hybrid {

class Expr;

namespace detail {
struct ExprAccess;
}  // namespace detail

// A proper de Bruijn term: level(0, ·) holds for the representation of
// every Expr. Bound variables are only reachable through LAM.
class Expr {
 public:
  // Structural equality; see expr_equal.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(DbTerm repr) : repr_(std::move(repr)) {}
  friend struct detail::ExprAccess;

  DbTerm repr_;
};

using Binder1 = std::function<Expr(const Expr&)>;
using Binder2 = std::function<Expr(const Expr&, const Expr&)>;

Expr CON(ConId c);
Expr VAR(std::uint64_t n);
Expr APP(const Expr& s, const Expr& t);
Expr ERR();

// Throws ExoticUse if `e` still carries a binding-session placeholder.
DbTerm to_db(const Expr& e);
// Throws NotProper on dangling indices.
Expr from_db(const DbTerm& t);

struct VCon {
  ConId con;
};
struct VVar {
  std::uint64_t index;
};
struct VApp {
  Expr fun;
  Expr arg;
};
struct VErr {};
// Body of an Abs-headed term, reopened as a host function.
struct VLam {
  Binder1 body;
};

using ExprView = std::variant<VCon, VVar, VApp, VErr, VLam>;

// Head-constructor view. Looking at a placeholder throws ExoticUse.
ExprView cases(const Expr& e);

// Equality of representations. Throws ExoticUse when the answer would
// depend on a binding-session placeholder.
bool expr_equal(const Expr& e, const Expr& f);
std::size_t expr_size(const Expr& e);

// `CON c`, `VAR n`, `s $$ t`, `ERR`, `LAM x1. body`; bound names are x<depth>.
std::string to_hoas(const Expr& e);

namespace detail {

// Unchecked access used by the binder and the view; bypasses the
// placeholder guard.
struct ExprAccess {
  static const DbTerm& repr(const Expr& e) noexcept { return e.repr_; }
  static Expr wrap(DbTerm t) { return Expr(std::move(t)); }
};

}  // namespace detail

}  // namespace hybrid

#endif  // HYBRID_EXPR_HPP
