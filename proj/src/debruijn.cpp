#include "hybrid/debruijn.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

#include "sexpr.hpp"

namespace hybrid {

ConId::ConId(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw PreconditionViolated("constant name must be nonempty");
  for (unsigned char ch : name_) {
    if (std::isspace(ch) || ch == '(' || ch == ')') {
      throw PreconditionViolated("constant name '" + name_ +
                                 "' contains whitespace or parentheses");
    }
  }
}

struct DbTerm::Node {
  DbKind kind;
  std::optional<ConId> con;
  std::uint64_t num = 0;
  std::optional<DbTerm> a;
  std::optional<DbTerm> b;
  std::size_t size = 1;
  bool has_probe = false;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const char* kind_name(DbKind k) {
  switch (k) {
    case DbKind::Con: return "Con";
    case DbKind::Var: return "Var";
    case DbKind::App: return "App";
    case DbKind::Err: return "Err";
    case DbKind::Bnd: return "Bnd";
    case DbKind::Abs: return "Abs";
    case DbKind::Probe: return "Probe";
  }
  return "?";
}

[[noreturn]] void wrong_kind(DbKind have, const char* want) {
  throw PreconditionViolated(std::string("DbTerm accessor for ") + want +
                             " applied to " + kind_name(have));
}

}  // namespace

DbTerm DbTerm::con(ConId c) {
  auto n = std::make_shared<Node>();
  n->kind = DbKind::Con;
  n->hash = mix(1, std::hash<ConId>{}(c));
  n->con = std::move(c);
  return DbTerm(std::move(n));
}

DbTerm DbTerm::var(std::uint64_t v) {
  auto n = std::make_shared<Node>();
  n->kind = DbKind::Var;
  n->num = v;
  n->hash = mix(2, v);
  return DbTerm(std::move(n));
}

DbTerm DbTerm::app(DbTerm left, DbTerm right) {
  auto n = std::make_shared<Node>();
  n->kind = DbKind::App;
  n->size = 1 + left.size() + right.size();
  n->has_probe = left.has_probe() || right.has_probe();
  n->hash = mix(mix(3, left.hash()), right.hash());
  n->a = std::move(left);
  n->b = std::move(right);
  return DbTerm(std::move(n));
}

DbTerm DbTerm::err() {
  static const auto shared = [] {
    auto n = std::make_shared<Node>();
    n->kind = DbKind::Err;
    n->hash = mix(4, 0);
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return DbTerm(shared);
}

DbTerm DbTerm::bnd(std::uint64_t i) {
  auto n = std::make_shared<Node>();
  n->kind = DbKind::Bnd;
  n->num = i;
  n->hash = mix(5, i);
  return DbTerm(std::move(n));
}

DbTerm DbTerm::abs(DbTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = DbKind::Abs;
  n->size = 1 + body.size();
  n->has_probe = body.has_probe();
  n->hash = mix(6, body.hash());
  n->a = std::move(body);
  return DbTerm(std::move(n));
}

DbTerm detail::make_probe(ProbeId p) {
  auto n = std::make_shared<DbTerm::Node>();
  n->kind = DbKind::Probe;
  n->num = p.value;
  n->has_probe = true;
  n->hash = mix(7, p.value);
  return DbTerm(std::move(n));
}

DbKind DbTerm::kind() const noexcept { return node_->kind; }

const ConId& DbTerm::con_id() const {
  if (node_->kind != DbKind::Con) wrong_kind(node_->kind, "Con");
  return *node_->con;
}

std::uint64_t DbTerm::index() const {
  if (node_->kind != DbKind::Var && node_->kind != DbKind::Bnd) {
    wrong_kind(node_->kind, "Var/Bnd");
  }
  return node_->num;
}

ProbeId DbTerm::probe_id() const {
  if (node_->kind != DbKind::Probe) wrong_kind(node_->kind, "Probe");
  return ProbeId{node_->num};
}

const DbTerm& DbTerm::left() const {
  if (node_->kind != DbKind::App) wrong_kind(node_->kind, "App");
  return *node_->a;
}

const DbTerm& DbTerm::right() const {
  if (node_->kind != DbKind::App) wrong_kind(node_->kind, "App");
  return *node_->b;
}

const DbTerm& DbTerm::body() const {
  if (node_->kind != DbKind::Abs) wrong_kind(node_->kind, "Abs");
  return *node_->a;
}

std::size_t DbTerm::size() const noexcept { return node_->size; }
bool DbTerm::has_probe() const noexcept { return node_->has_probe; }
std::size_t DbTerm::hash() const noexcept { return node_->hash; }

bool operator==(const DbTerm& a, const DbTerm& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) {
    return false;
  }
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const DbTerm& a, const DbTerm& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case DbKind::Con:
      return *x.con <=> *y.con;
    case DbKind::Var:
    case DbKind::Bnd:
    case DbKind::Probe:
      return x.num <=> y.num;
    case DbKind::Err:
      return std::strong_ordering::equal;
    case DbKind::Abs:
      return *x.a <=> *y.a;
    case DbKind::App:
      if (auto c = *x.a <=> *y.a; c != 0) return c;
      return *x.b <=> *y.b;
  }
  return std::strong_ordering::equal;
}

bool level(std::uint64_t i, const DbTerm& t) {
  switch (t.kind()) {
    case DbKind::Bnd:
      return t.index() < i;
    case DbKind::Abs:
      return level(i + 1, t.body());
    case DbKind::App:
      return level(i, t.left()) && level(i, t.right());
    case DbKind::Con:
    case DbKind::Var:
    case DbKind::Err:
    case DbKind::Probe:
      return true;
  }
  return true;
}

namespace {

DbTerm instantiate_at(const DbTerm& t, std::uint64_t target, const DbTerm& u) {
  switch (t.kind()) {
    case DbKind::Bnd:
      return t.index() == target ? u : t;
    case DbKind::Abs:
      return DbTerm::abs(instantiate_at(t.body(), target + 1, u));
    case DbKind::App:
      return DbTerm::app(instantiate_at(t.left(), target, u),
                         instantiate_at(t.right(), target, u));
    default:
      return t;
  }
}

DbTerm bind_at(const DbTerm& t, ProbeId p, std::uint64_t i) {
  if (!t.has_probe()) return t;
  switch (t.kind()) {
    case DbKind::Probe:
      return t.probe_id() == p ? DbTerm::bnd(i) : t;
    case DbKind::Abs:
      return DbTerm::abs(bind_at(t.body(), p, i + 1));
    case DbKind::App:
      return DbTerm::app(bind_at(t.left(), p, i), bind_at(t.right(), p, i));
    default:
      return t;
  }
}

}  // namespace

DbTerm instantiate(const DbTerm& t, std::uint64_t j, const DbTerm& u) {
  if (!level(j + 1, t)) {
    throw PreconditionViolated("instantiate: term has indices beyond " +
                               std::to_string(j));
  }
  if (!proper(u)) {
    throw PreconditionViolated("instantiate: replacement term is not proper");
  }
  return instantiate_at(t, j, u);
}

ProbeId fresh_probe() {
  static std::atomic<std::uint64_t> next{0};
  return ProbeId{next.fetch_add(1, std::memory_order_relaxed)};
}

DbTerm bind_probe(const DbTerm& t, ProbeId p, std::uint64_t i) {
  return bind_at(t, p, i);
}

bool contains_any_probe(const DbTerm& t) noexcept { return t.has_probe(); }

bool contains_probe(const DbTerm& t, ProbeId p) {
  if (!t.has_probe()) return false;
  switch (t.kind()) {
    case DbKind::Probe:
      return t.probe_id() == p;
    case DbKind::Abs:
      return contains_probe(t.body(), p);
    case DbKind::App:
      return contains_probe(t.left(), p) || contains_probe(t.right(), p);
    default:
      return false;
  }
}

std::optional<ProbeId> min_probe(const DbTerm& t) {
  if (!t.has_probe()) return std::nullopt;
  switch (t.kind()) {
    case DbKind::Probe:
      return t.probe_id();
    case DbKind::Abs:
      return min_probe(t.body());
    case DbKind::App: {
      auto l = min_probe(t.left());
      auto r = min_probe(t.right());
      if (!l) return r;
      if (!r) return l;
      return std::min(*l, *r);
    }
    default:
      return std::nullopt;
  }
}

namespace {

void print(const DbTerm& t, std::string& out) {
  switch (t.kind()) {
    case DbKind::Con:
      out += "(CON " + t.con_id().name() + ")";
      return;
    case DbKind::Var:
      out += "(VAR " + std::to_string(t.index()) + ")";
      return;
    case DbKind::Bnd:
      out += "(BND " + std::to_string(t.index()) + ")";
      return;
    case DbKind::Err:
      out += "ERR";
      return;
    case DbKind::App:
      out += "(APP ";
      print(t.left(), out);
      out += ' ';
      print(t.right(), out);
      out += ')';
      return;
    case DbKind::Abs:
      out += "(ABS ";
      print(t.body(), out);
      out += ')';
      return;
    case DbKind::Probe:
      throw PreconditionViolated("probe nodes have no textual form");
  }
}

DbTerm convert(const sexpr::Node& n) {
  if (!n.is_list) {
    if (n.atom == "ERR") return DbTerm::err();
    throw ParseError(n.position, "unknown atom '" + n.atom + "'");
  }
  const std::string& h = sexpr::head(n);
  if (h == "CON") {
    sexpr::expect_arity(n, 1);
    const auto& name = sexpr::symbol(n.items[1]);
    try {
      return DbTerm::con(ConId(name));
    } catch (const PreconditionViolated& e) {
      throw ParseError(n.items[1].position, e.what());
    }
  }
  if (h == "VAR") {
    sexpr::expect_arity(n, 1);
    return DbTerm::var(sexpr::natural(n.items[1]));
  }
  if (h == "BND") {
    sexpr::expect_arity(n, 1);
    return DbTerm::bnd(sexpr::natural(n.items[1]));
  }
  if (h == "APP") {
    sexpr::expect_arity(n, 2);
    return DbTerm::app(convert(n.items[1]), convert(n.items[2]));
  }
  if (h == "ABS") {
    sexpr::expect_arity(n, 1);
    return DbTerm::abs(convert(n.items[1]));
  }
  throw ParseError(n.position, "unknown constructor '" + h + "'");
}

}  // namespace

std::string to_sexpr(const DbTerm& t) {
  std::string out;
  print(t, out);
  return out;
}

DbTerm parse_sexpr(std::string_view text) { return convert(sexpr::read(text)); }

}  // namespace hybrid
