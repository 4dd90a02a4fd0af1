#ifndef HYBRID_ORACLE_HPP
#define HYBRID_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/binder.hpp"

namespace hybrid {

enum class OpenKind : std::uint8_t { Hole, Con, Var, App, Err, Bnd, Abs };

// Body of a syntactic function, written first-order: a de Bruijn tree in
// which Hole(k) marks where the k-th argument goes.
struct OpenBody {
  OpenKind kind = OpenKind::Err;
  std::optional<ConId> con;
  std::uint64_t num = 0;  // hole, Var or Bnd index
  std::vector<OpenBody> kids;

  friend bool operator==(const OpenBody&, const OpenBody&) = default;
};

struct OpenTerm {
  std::size_t arity = 1;
  OpenBody body;

  friend bool operator==(const OpenTerm&, const OpenTerm&) = default;
};

namespace open {
OpenBody hole(std::uint64_t k);
OpenBody con(ConId c);
OpenBody var(std::uint64_t n);
OpenBody app(OpenBody l, OpenBody r);
OpenBody err();
OpenBody bnd(std::uint64_t i);
OpenBody abs(OpenBody body);
}  // namespace open

// Hole indices below arity, and no dangling Bnd (holes count as closed).
bool well_formed(const OpenTerm& ot);
std::size_t open_size(const OpenBody& b);
std::size_t open_depth(const OpenBody& b);

// The closure x ↦ body[Hole 0 := x]. Abs nodes are rebuilt with LAM, so the
// closure only ever uses the public constructors.
Binder1 reflect1(const OpenTerm& ot);
Binder2 reflect2(const OpenTerm& ot);

// Reads a syntactic closure back into first-order form. Throws
// ExoticFunction when !abstr(body).
OpenTerm reify1(const Binder1& body);

// Expected representation of LAM(reflect1(ot)), computed first-order:
// Hole 0 at Abs-depth k becomes Bnd(k), under one extra Abs.
DbTerm expected_lam_db(const OpenTerm& ot);

// Expected classification name of reflect1(ot), read off the head of ot.
std::string_view expected_shape(const OpenTerm& ot);

// Fills hole `k` with a closed OpenBody and renumbers the remaining holes.
OpenTerm fill_hole(const OpenTerm& ot, std::uint64_t k, const OpenBody& value);

// First-order ground values matching ground_sample().
const std::vector<OpenBody>& open_ground_sample();

// Componentwise criterion for two-argument functions, decided on the
// first-order form: each slice obtained by fixing one hole to a ground
// value must be a well-formed one-hole term.
bool abstr_oracle2_componentwise(const OpenTerm& ot);

// The same criterion checked on a closure: every slice at a ground value
// or at a placeholder must satisfy abstr.
bool componentwise_abstr_2(const Binder2& body);

// Deterministic random term of depth at most max_depth.
OpenTerm gen_open_term(std::size_t arity, std::size_t max_depth,
                       std::uint64_t seed);

// Every well-formed term of depth ≤ max_depth over {c1, c2}, Var/Bnd 0..1,
// each exactly once. Leaves have depth 1.
std::vector<OpenTerm> enumerate_open_terms(std::size_t arity,
                                           std::size_t max_depth);

// Every DbTerm (proper or not, probe-free) of node count ≤ max_size over
// {c1, c2}, Var/Bnd 0..1.
std::vector<DbTerm> enumerate_db_terms(std::size_t max_size);

struct ExoticUnary {
  std::string name;
  Binder1 fn;
};
struct ExoticBinary {
  std::string name;
  Binder2 fn;
};

// Closures that look at their argument and so denote no syntax.
const std::vector<ExoticUnary>& exotic_unary();
const std::vector<ExoticBinary>& exotic_binary();

// Canonical form plus (HOLE k).
std::string to_sexpr(const OpenTerm& ot);
OpenTerm parse_open_term(std::string_view text, std::size_t arity);

}  // namespace hybrid

#endif  // HYBRID_ORACLE_HPP
