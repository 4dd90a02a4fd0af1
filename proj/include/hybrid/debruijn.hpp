#ifndef HYBRID_DEBRUIJN_HPP
#define HYBRID_DEBRUIJN_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "hybrid/errors.hpp"
#include "hybrid/ids.hpp"

namespace hybrid {

class DbTerm;

namespace detail {
// Internal: the only way to build a Probe node.
DbTerm make_probe(ProbeId p);
}  // namespace detail

enum class DbKind : std::uint8_t { Con, Var, App, Err, Bnd, Abs, Probe };

// First-order de Bruijn syntax. Immutable, shared, cheap to copy.
//
// Var(n) is a free variable of the represented language, Bnd(i) a bound
// index counted from the innermost enclosing Abs. The Probe variant is the
// placeholder the binder module feeds to host closures; it can only be
// built through `detail::make_probe` and never survives a public call.
class DbTerm {
 public:
  static DbTerm con(ConId c);
  static DbTerm var(std::uint64_t n);
  static DbTerm app(DbTerm left, DbTerm right);
  static DbTerm err();
  static DbTerm bnd(std::uint64_t i);
  static DbTerm abs(DbTerm body);

  DbKind kind() const noexcept;

  // Accessors below require the matching kind; they throw
  // PreconditionViolated otherwise.
  const ConId& con_id() const;
  std::uint64_t index() const;  // Var or Bnd
  ProbeId probe_id() const;
  const DbTerm& left() const;
  const DbTerm& right() const;
  const DbTerm& body() const;

  // Node count, cached at construction.
  std::size_t size() const noexcept;
  bool has_probe() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const DbTerm& a, const DbTerm& b) noexcept;
  friend std::strong_ordering operator<=>(const DbTerm& a,
                                          const DbTerm& b) noexcept;

 private:
  struct Node;
  explicit DbTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend DbTerm detail::make_probe(ProbeId p);

  std::shared_ptr<const Node> node_;
};

// True iff wrapping `t` in `i` Abs nodes leaves no dangling index.
bool level(std::uint64_t i, const DbTerm& t);
inline bool proper(const DbTerm& t) { return level(0, t); }
inline std::size_t size(const DbTerm& t) { return t.size(); }

// Replaces Bnd(j+k) at Abs-depth k by `u`. Requires level(j+1, t) and a
// proper `u`, so `u` never needs shifting.
DbTerm instantiate(const DbTerm& t, std::uint64_t j, const DbTerm& u);

// Thread-safe, process-unique.
ProbeId fresh_probe();

// Probe(p) at Abs-depth k becomes Bnd(i+k); everything else is kept.
DbTerm bind_probe(const DbTerm& t, ProbeId p, std::uint64_t i);

bool contains_any_probe(const DbTerm& t) noexcept;
bool contains_probe(const DbTerm& t, ProbeId p);
// Smallest probe id occurring in `t`, if any.
std::optional<ProbeId> min_probe(const DbTerm& t);

// Canonical s-expression form: (CON c) (VAR n) (APP t u) ERR (BND i) (ABS t).
// Probe nodes have no textual form; printing one throws PreconditionViolated.
std::string to_sexpr(const DbTerm& t);
DbTerm parse_sexpr(std::string_view text);

}  // namespace hybrid

template <>
struct std::hash<hybrid::DbTerm> {
  std::size_t operator()(const hybrid::DbTerm& t) const noexcept {
    return t.hash();
  }
};

#endif  // HYBRID_DEBRUIJN_HPP
