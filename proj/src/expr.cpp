#include "hybrid/expr.hpp"

#include <algorithm>
#include <optional>

namespace hybrid {

using detail::ExprAccess;

namespace {

[[noreturn]] void blame(const DbTerm& t) { throw ExoticUse(*min_probe(t)); }

void guard(const Expr& e) {
  const DbTerm& r = ExprAccess::repr(e);
  if (r.has_probe()) blame(r);
}

void keep_min(std::optional<ProbeId>& acc, const DbTerm& t) {
  auto p = min_probe(t);
  if (p && (!acc || *p < *acc)) acc = p;
}

// Compares two representations position by position. A position where one
// side is a placeholder and the other is not the same placeholder makes the
// answer depend on that placeholder, unless some other position differs in
// a way no instantiation can repair.
struct Comparison {
  bool definitely_different = false;
  std::optional<ProbeId> depends_on;

  void walk(const DbTerm& a, const DbTerm& b) {
    if (definitely_different) return;
    if (!a.has_probe() && !b.has_probe()) {
      if (!(a == b)) definitely_different = true;
      return;
    }
    if (a.kind() == DbKind::Probe || b.kind() == DbKind::Probe) {
      if (a.kind() == b.kind() && a.probe_id() == b.probe_id()) return;
      keep_min(depends_on, a);
      keep_min(depends_on, b);
      return;
    }
    if (a.kind() != b.kind()) {
      definitely_different = true;
      return;
    }
    switch (a.kind()) {
      case DbKind::App:
        walk(a.left(), b.left());
        walk(a.right(), b.right());
        return;
      case DbKind::Abs:
        walk(a.body(), b.body());
        return;
      default:
        // Leaves never carry placeholders, so the fast path handled them.
        return;
    }
  }
};

void print_hoas(const DbTerm& t, std::uint64_t depth, std::string& out);

void print_operand(const DbTerm& t, std::uint64_t depth, std::string& out,
                   bool is_right) {
  bool wrap = t.kind() == DbKind::Abs || (is_right && t.kind() == DbKind::App);
  if (wrap) out += '(';
  print_hoas(t, depth, out);
  if (wrap) out += ')';
}

void print_hoas(const DbTerm& t, std::uint64_t depth, std::string& out) {
  switch (t.kind()) {
    case DbKind::Con:
      out += "CON " + t.con_id().name();
      return;
    case DbKind::Var:
      out += "VAR " + std::to_string(t.index());
      return;
    case DbKind::Err:
      out += "ERR";
      return;
    case DbKind::Bnd:
      out += "x" + std::to_string(depth - t.index());
      return;
    case DbKind::App:
      print_operand(t.left(), depth, out, false);
      out += " $$ ";
      print_operand(t.right(), depth, out, true);
      return;
    case DbKind::Abs:
      out += "LAM x" + std::to_string(depth + 1) + ". ";
      print_hoas(t.body(), depth + 1, out);
      return;
    case DbKind::Probe:
      throw ExoticUse(t.probe_id());
  }
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) { return expr_equal(a, b); }

Expr CON(ConId c) { return ExprAccess::wrap(DbTerm::con(std::move(c))); }
Expr VAR(std::uint64_t n) { return ExprAccess::wrap(DbTerm::var(n)); }
Expr ERR() { return ExprAccess::wrap(DbTerm::err()); }

Expr APP(const Expr& s, const Expr& t) {
  return ExprAccess::wrap(DbTerm::app(ExprAccess::repr(s), ExprAccess::repr(t)));
}

DbTerm to_db(const Expr& e) {
  guard(e);
  return ExprAccess::repr(e);
}

Expr from_db(const DbTerm& t) {
  if (t.has_probe()) {
    throw PreconditionViolated("from_db: term contains a placeholder node");
  }
  if (!proper(t)) {
    throw NotProper("from_db: term has dangling indices: " + to_sexpr(t));
  }
  return ExprAccess::wrap(t);
}

ExprView cases(const Expr& e) {
  const DbTerm& r = ExprAccess::repr(e);
  switch (r.kind()) {
    case DbKind::Con:
      return VCon{r.con_id()};
    case DbKind::Var:
      return VVar{r.index()};
    case DbKind::App:
      return VApp{ExprAccess::wrap(r.left()), ExprAccess::wrap(r.right())};
    case DbKind::Err:
      return VErr{};
    case DbKind::Abs: {
      DbTerm body = r.body();
      return VLam{[body](const Expr& x) {
        return ExprAccess::wrap(instantiate(body, 0, ExprAccess::repr(x)));
      }};
    }
    case DbKind::Probe:
      throw ExoticUse(r.probe_id());
    case DbKind::Bnd:
      break;
  }
  throw PreconditionViolated("cases: Expr with a dangling index");
}

bool expr_equal(const Expr& e, const Expr& f) {
  Comparison c;
  c.walk(ExprAccess::repr(e), ExprAccess::repr(f));
  if (c.definitely_different) return false;
  if (c.depends_on) throw ExoticUse(*c.depends_on);
  return true;
}

std::size_t expr_size(const Expr& e) {
  guard(e);
  return ExprAccess::repr(e).size();
}

std::string to_hoas(const Expr& e) {
  guard(e);
  std::string out;
  print_hoas(ExprAccess::repr(e), 0, out);
  return out;
}

}  // namespace hybrid
