#ifndef HYBRID_LAMBDA_OL_HPP
#define HYBRID_LAMBDA_OL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/binder.hpp"

// Untyped λ-calculus as an object language over Expr: application is
// `c_app $$ l $$ r`, abstraction `c_lam $$ LAM(x. body)`, free variables
// VAR n.
namespace hybrid::ol {

enum class NamedKind : std::uint8_t { Var, Free, Lam, App };

struct NamedTerm {
  NamedKind kind = NamedKind::Free;
  std::string name;         // Var, Lam
  std::uint64_t index = 0;  // Free
  std::vector<NamedTerm> kids;

  friend bool operator==(const NamedTerm&, const NamedTerm&) = default;
};

NamedTerm nvar(std::string name);
NamedTerm nfree(std::uint64_t n);
NamedTerm nlam(std::string name, NamedTerm body);
NamedTerm napp(NamedTerm l, NamedTerm r);

// Every Var is bound by an enclosing Lam of the same name.
bool well_scoped(const NamedTerm& t);
std::size_t named_size(const NamedTerm& t);

class OlSig {
 public:
  // Throws PreconditionViolated if the names coincide or start with '%',
  // which is reserved for decode's placeholders.
  OlSig(ConId c_app, ConId c_lam);
  static OlSig standard();  // c_app / c_lam

  const ConId& c_app() const noexcept { return c_app_; }
  const ConId& c_lam() const noexcept { return c_lam_; }

 private:
  ConId c_app_;
  ConId c_lam_;
};

// term    := 'fn' ident+ '.' term | appterm
// appterm := atom+                       (left-assoc)
// atom    := ident | '#' nat | '(' term ')'
NamedTerm parse(std::string_view text);
std::string pretty(const NamedTerm& t);

Expr encode(const NamedTerm& t, const OlSig& sig);
// Inverse of encode; binders are named x1, x2, ... by depth. Throws
// NotInImage outside the image of encode.
NamedTerm decode(const Expr& e, const OlSig& sig);

bool alpha_eq(const NamedTerm& t, const NamedTerm& u);

// For e = c_lam $$ LAM(S), returns S(arg). Throws NotAnAbstraction.
Expr apply_binder(const Expr& e, const Expr& arg, const OlSig& sig);

// Generators for sweeps. Terms are well scoped, use binder names x, y, z
// and free indices 0..2.
std::vector<NamedTerm> enumerate_named_terms(std::size_t max_size);
NamedTerm gen_named_term(std::size_t max_size, std::uint64_t seed);

}  // namespace hybrid::ol

#endif  // HYBRID_LAMBDA_OL_HPP
