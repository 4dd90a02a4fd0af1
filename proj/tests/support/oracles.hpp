#ifndef HYBRID_TESTS_SUPPORT_ORACLES_HPP
#define HYBRID_TESTS_SUPPORT_ORACLES_HPP

// Reference implementations used only by tests. Each one works on a
// different representation than the code it checks.

#include <algorithm>
#include <string>
#include <vector>

#include "hybrid/lambda_ol.hpp"
#include "hybrid/oracle.hpp"

namespace hybrid::testing {

inline ConId c(const char* name) { return ConId(name); }

// Plain node substitution of a probe, no index bookkeeping at all.
inline DbTerm replace_probe(const DbTerm& t, ProbeId p, const DbTerm& u) {
  switch (t.kind()) {
    case DbKind::Probe:
      return t.probe_id() == p ? u : t;
    case DbKind::App:
      return DbTerm::app(replace_probe(t.left(), p, u), replace_probe(t.right(), p, u));
    case DbKind::Abs:
      return DbTerm::abs(replace_probe(t.body(), p, u));
    default:
      return t;
  }
}

inline std::size_t count_probe(const DbTerm& t, ProbeId p) {
  switch (t.kind()) {
    case DbKind::Probe:
      return t.probe_id() == p ? 1 : 0;
    case DbKind::App:
      return count_probe(t.left(), p) + count_probe(t.right(), p);
    case DbKind::Abs:
      return count_probe(t.body(), p);
    default:
      return 0;
  }
}

// Node count read off the canonical text: every node prints either one
// '(' or the bare atom ERR.
inline std::size_t textual_size(const DbTerm& t) {
  std::string s = to_sexpr(t);
  std::size_t n = static_cast<std::size_t>(std::count(s.begin(), s.end(), '('));
  for (std::size_t at = s.find("ERR"); at != std::string::npos; at = s.find("ERR", at + 3)) ++n;
  return n;
}

// Closedness computed from the largest escape of any index: an index j
// under k binders escapes by j - k + 1.
inline std::uint64_t escape(const DbTerm& t, std::uint64_t depth = 0) {
  switch (t.kind()) {
    case DbKind::Bnd:
      return t.index() >= depth ? t.index() - depth + 1 : 0;
    case DbKind::App:
      return std::max(escape(t.left(), depth), escape(t.right(), depth));
    case DbKind::Abs:
      return escape(t.body(), depth + 1);
    default:
      return 0;
  }
}

// A tiny named λ-syntax over the DbTerm constructors, converted to de
// Bruijn form the textbook way.
struct Named {
  enum Kind { Con, Var, Free, App, Lam } kind;
  std::string name;
  std::uint64_t n = 0;
  std::vector<Named> kids;
};

inline Named ncon(const char* name) { return {Named::Con, name, 0, {}}; }
inline Named nv(const char* name) { return {Named::Var, name, 0, {}}; }
inline Named nfr(std::uint64_t n) { return {Named::Free, "", n, {}}; }
inline Named nap(Named l, Named r) { return {Named::App, "", 0, {std::move(l), std::move(r)}}; }
inline Named nla(const char* name, Named b) { return {Named::Lam, name, 0, {std::move(b)}}; }

inline DbTerm named_to_db(const Named& t, std::vector<std::string>& scope) {
  switch (t.kind) {
    case Named::Con:
      return DbTerm::con(ConId(t.name));
    case Named::Free:
      return DbTerm::var(t.n);
    case Named::Var: {
      auto it = std::find(scope.rbegin(), scope.rend(), t.name);
      return DbTerm::bnd(static_cast<std::uint64_t>(it - scope.rbegin()));
    }
    case Named::App:
      return DbTerm::app(named_to_db(t.kids[0], scope), named_to_db(t.kids[1], scope));
    case Named::Lam: {
      scope.push_back(t.name);
      DbTerm body = named_to_db(t.kids[0], scope);
      scope.pop_back();
      return DbTerm::abs(body);
    }
  }
  return DbTerm::err();
}

inline DbTerm named_to_db(const Named& t) {
  std::vector<std::string> scope;
  return named_to_db(t, scope);
}

// Object-language term to its expected representation, first-order.
inline DbTerm ol_to_db(const ol::NamedTerm& t, const ol::OlSig& sig,
                       std::vector<std::string>& scope) {
  switch (t.kind) {
    case ol::NamedKind::Free:
      return DbTerm::var(t.index);
    case ol::NamedKind::Var: {
      auto it = std::find(scope.rbegin(), scope.rend(), t.name);
      return DbTerm::bnd(static_cast<std::uint64_t>(it - scope.rbegin()));
    }
    case ol::NamedKind::App:
      return DbTerm::app(DbTerm::app(DbTerm::con(sig.c_app()), ol_to_db(t.kids[0], sig, scope)),
                         ol_to_db(t.kids[1], sig, scope));
    case ol::NamedKind::Lam: {
      scope.push_back(t.name);
      DbTerm body = ol_to_db(t.kids[0], sig, scope);
      scope.pop_back();
      return DbTerm::app(DbTerm::con(sig.c_lam()), DbTerm::abs(body));
    }
  }
  return DbTerm::err();
}

inline DbTerm ol_to_db(const ol::NamedTerm& t, const ol::OlSig& sig) {
  std::vector<std::string> scope;
  return ol_to_db(t, sig, scope);
}

inline void collect_names(const ol::NamedTerm& t, std::vector<std::string>& out) {
  if (!t.name.empty()) out.push_back(t.name);
  for (const auto& k : t.kids) collect_names(k, out);
}

inline bool free_in(const std::string& x, const ol::NamedTerm& t) {
  switch (t.kind) {
    case ol::NamedKind::Var:
      return t.name == x;
    case ol::NamedKind::Free:
      return false;
    case ol::NamedKind::Lam:
      return t.name != x && free_in(x, t.kids[0]);
    case ol::NamedKind::App:
      return free_in(x, t.kids[0]) || free_in(x, t.kids[1]);
  }
  return false;
}

// Textbook capture-avoiding substitution t[x := s] with renaming.
inline ol::NamedTerm subst(const ol::NamedTerm& t, const std::string& x,
                           const ol::NamedTerm& s) {
  switch (t.kind) {
    case ol::NamedKind::Var:
      return t.name == x ? s : t;
    case ol::NamedKind::Free:
      return t;
    case ol::NamedKind::App:
      return ol::napp(subst(t.kids[0], x, s), subst(t.kids[1], x, s));
    case ol::NamedKind::Lam: {
      if (t.name == x) return t;
      if (!free_in(t.name, s)) return ol::nlam(t.name, subst(t.kids[0], x, s));
      std::vector<std::string> used;
      collect_names(t, used);
      collect_names(s, used);
      used.push_back(x);
      std::string fresh = t.name;
      while (std::find(used.begin(), used.end(), fresh) != used.end()) fresh += "_";
      ol::NamedTerm renamed = subst(t.kids[0], t.name, ol::nvar(fresh));
      return ol::nlam(fresh, subst(renamed, x, s));
    }
  }
  return t;
}

}  // namespace hybrid::testing

#endif  // HYBRID_TESTS_SUPPORT_ORACLES_HPP
