#ifndef HYBRID_BINDER_HPP
#define HYBRID_BINDER_HPP

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "hybrid/expr.hpp"

namespace hybrid {

// Host closures passed to the functions below are run on an opaque
// placeholder term. A closure that builds its result from the constructors
// and its argument (a syntactic function) runs to completion. A closure
// that looks at its argument through cases, expr_equal, to_db, expr_size
// or to_hoas trips ExoticUse, and is treated as exotic.
//
// Closures must be pure. Purity is a caller contract; set_purity_check(true)
// makes every evaluation run twice and compares the results.

// Recognizes syntactic functions. Never throws for the closure's own
// argument; inspection of an enclosing binder's argument propagates.
bool abstr(const Binder1& body);

// The HOAS binder. ERR() unless abstr(body); otherwise an Abs-headed term
// whose index 0 stands for the argument. Evaluates `body` once.
Expr LAM(const Binder1& body);

// The argument becomes Bnd(i + k) under k Abs nodes. Throws ExoticUse if
// `body` is not syntactic.
DbTerm lbind(std::uint64_t i, const Binder1& body);

// False for the identity-like case and for exotic closures.
bool ordinary(const Binder1& body);

// abstr for functions of two arguments; both are placeholders at once.
bool abstr_2(const Binder2& body);

namespace shape {
struct Identity {};
struct ConstCon {
  ConId con;
};
struct ConstVar {
  std::uint64_t index;
};
// body(x) = APP(fun(x), arg(x)); both parts are syntactic.
struct App {
  Binder1 fun;
  Binder1 arg;
};
// body(x) = LAM(y. inner(x, y)); both slice families are syntactic.
struct Lam {
  Binder2 inner;
};
struct ConstErr {};
struct Exotic {};
}  // namespace shape

using AbstrClassification =
    std::variant<shape::Identity, shape::ConstCon, shape::ConstVar, shape::App,
                 shape::Lam, shape::ConstErr, shape::Exotic>;

// Which disjunct of the characterization of abstr a closure falls under.
AbstrClassification classify(const Binder1& body);

// "identity", "const-con", "const-var", "app", "lam", "const-err", "exotic".
std::string_view classification_name(const AbstrClassification& c);

// abstr(x. LAM(y. inner(x, y))), after checking the premise that every
// y-slice is syntactic at a placeholder x and at each ground sample.
// Throws PremiseViolated otherwise.
bool abstr_lam_check(const Binder2& inner);

// Inverse of cases.
Expr rebuild(const ExprView& view);

// Concrete values used to instantiate universally quantified slice
// conditions: VAR 0, VAR 1, CON c1, ERR, LAM x. x.
const std::vector<Expr>& ground_sample();

void set_purity_check(bool enabled);
bool purity_check_enabled();

}  // namespace hybrid

#endif  // HYBRID_BINDER_HPP
