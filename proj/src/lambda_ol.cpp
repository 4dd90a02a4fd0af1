#include "hybrid/lambda_ol.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <random>

namespace hybrid::ol {

NamedTerm nvar(std::string name) {
  NamedTerm t;
  t.kind = NamedKind::Var;
  t.name = std::move(name);
  return t;
}

NamedTerm nfree(std::uint64_t n) {
  NamedTerm t;
  t.kind = NamedKind::Free;
  t.index = n;
  return t;
}

NamedTerm nlam(std::string name, NamedTerm body) {
  NamedTerm t;
  t.kind = NamedKind::Lam;
  t.name = std::move(name);
  t.kids.push_back(std::move(body));
  return t;
}

NamedTerm napp(NamedTerm l, NamedTerm r) {
  NamedTerm t;
  t.kind = NamedKind::App;
  t.kids.push_back(std::move(l));
  t.kids.push_back(std::move(r));
  return t;
}

namespace {

bool scoped_in(const NamedTerm& t, std::vector<std::string>& bound) {
  switch (t.kind) {
    case NamedKind::Var:
      return std::find(bound.begin(), bound.end(), t.name) != bound.end();
    case NamedKind::Free:
      return true;
    case NamedKind::Lam: {
      bound.push_back(t.name);
      bool ok = scoped_in(t.kids[0], bound);
      bound.pop_back();
      return ok;
    }
    case NamedKind::App:
      return scoped_in(t.kids[0], bound) && scoped_in(t.kids[1], bound);
  }
  return false;
}

constexpr char kPlaceholderPrefix = '%';

}  // namespace

bool well_scoped(const NamedTerm& t) {
  std::vector<std::string> bound;
  return scoped_in(t, bound);
}

std::size_t named_size(const NamedTerm& t) {
  std::size_t n = 1;
  for (const auto& k : t.kids) n += named_size(k);
  return n;
}

OlSig::OlSig(ConId c_app, ConId c_lam) : c_app_(std::move(c_app)), c_lam_(std::move(c_lam)) {
  if (c_app_ == c_lam_) {
    throw PreconditionViolated("c_app and c_lam must be distinct constants");
  }
  if (c_app_.name().front() == kPlaceholderPrefix ||
      c_lam_.name().front() == kPlaceholderPrefix) {
    throw PreconditionViolated("constant names starting with '%' are reserved");
  }
}

OlSig OlSig::standard() { return OlSig(ConId("c_app"), ConId("c_lam")); }

// ---- surface syntax ----

namespace {

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NamedTerm top() {
    NamedTerm t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  // Peeks an identifier without consuming it.
  std::string_view peek_ident() {
    skip_ws();
    std::size_t end = pos_;
    if (end < text_.size() && ident_start(text_[end])) {
      while (end < text_.size() && ident_char(text_[end])) ++end;
    }
    return text_.substr(pos_, end - pos_);
  }

  std::string ident() {
    std::string_view id = peek_ident();
    if (id.empty()) fail("expected an identifier");
    if (id == "fn") fail("'fn' is a keyword");
    pos_ += id.size();
    return std::string(id);
  }

  NamedTerm term() {
    if (peek_ident() == "fn") {
      pos_ += 2;
      std::vector<std::string> names;
      names.push_back(ident());
      for (;;) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '.') break;
        if (at_end()) fail("expected '.' after binder names");
        names.push_back(ident());
      }
      ++pos_;  // '.'
      for (const auto& n : names) scope_.push_back(n);
      NamedTerm body = term();
      scope_.resize(scope_.size() - names.size());
      for (auto it = names.rbegin(); it != names.rend(); ++it) {
        body = nlam(*it, std::move(body));
      }
      return body;
    }
    NamedTerm t = atom();
    while (!at_end() && text_[pos_] != ')') {
      t = napp(std::move(t), atom());
    }
    return t;
  }

  NamedTerm atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NamedTerm t = term();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    if (c == '#') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
      if (start == pos_) fail("expected a number after '#'");
      std::uint64_t n = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, n);
      if (ec != std::errc{}) {
        pos_ = start;
        fail("free variable index out of range");
      }
      return nfree(n);
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      std::string name = ident();
      if (std::find(scope_.begin(), scope_.end(), name) == scope_.end()) {
        pos_ = start;
        fail("unbound variable '" + name + "' (free variables are written #n)");
      }
      return nvar(std::move(name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

void print(const NamedTerm& t, std::string& out);

void print_operand(const NamedTerm& t, std::string& out) {
  bool wrap = t.kind == NamedKind::App || t.kind == NamedKind::Lam;
  if (wrap) out += '(';
  print(t, out);
  if (wrap) out += ')';
}

void print(const NamedTerm& t, std::string& out) {
  switch (t.kind) {
    case NamedKind::Var:
      out += t.name;
      return;
    case NamedKind::Free:
      out += '#';
      out += std::to_string(t.index);
      return;
    case NamedKind::Lam:
      out += "fn " + t.name + ". ";
      print(t.kids[0], out);
      return;
    case NamedKind::App:
      print_operand(t.kids[0], out);
      out += ' ';
      print_operand(t.kids[1], out);
      return;
  }
}

}  // namespace

NamedTerm parse(std::string_view text) { return Parser(text).top(); }

std::string pretty(const NamedTerm& t) {
  std::string out;
  print(t, out);
  return out;
}

// ---- encoding ----

namespace {

using Env = std::map<std::string, Expr, std::less<>>;

Expr encode_in(const NamedTerm& t, const OlSig& sig, const Env& env) {
  switch (t.kind) {
    case NamedKind::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) {
        throw PreconditionViolated("encode: unbound variable '" + t.name + "'");
      }
      return it->second;
    }
    case NamedKind::Free:
      return VAR(t.index);
    case NamedKind::App:
      return APP(APP(CON(sig.c_app()), encode_in(t.kids[0], sig, env)),
                 encode_in(t.kids[1], sig, env));
    case NamedKind::Lam:
      return APP(CON(sig.c_lam()), LAM([&](const Expr& x) {
                   Env inner = env;
                   inner.insert_or_assign(t.name, x);
                   return encode_in(t.kids[0], sig, inner);
                 }));
  }
  throw PreconditionViolated("encode: malformed term");
}

std::string display_name(std::uint64_t depth) { return "x" + std::to_string(depth); }

ConId placeholder(std::uint64_t depth) {
  return ConId(std::string(1, kPlaceholderPrefix) + display_name(depth));
}

bool is_con(const Expr& e, const ConId& c) {
  auto v = cases(e);
  auto* con = std::get_if<VCon>(&v);
  return con != nullptr && con->con == c;
}

bool mentions_reserved(const DbTerm& t) {
  switch (t.kind()) {
    case DbKind::Con:
      return t.con_id().name().front() == kPlaceholderPrefix;
    case DbKind::App:
      return mentions_reserved(t.left()) || mentions_reserved(t.right());
    case DbKind::Abs:
      return mentions_reserved(t.body());
    default:
      return false;
  }
}

NamedTerm decode_in(const Expr& e, const OlSig& sig, std::uint64_t depth) {
  ExprView v = cases(e);
  if (auto* var = std::get_if<VVar>(&v)) return nfree(var->index);
  if (auto* con = std::get_if<VCon>(&v)) {
    for (std::uint64_t d = 1; d <= depth; ++d) {
      if (con->con == placeholder(d)) return nvar(display_name(d));
    }
    throw NotInImage("decode: stray constant " + con->con.name());
  }
  if (auto* app = std::get_if<VApp>(&v)) {
    if (is_con(app->fun, sig.c_lam())) {
      auto inner = cases(app->arg);
      auto* lam = std::get_if<VLam>(&inner);
      if (lam == nullptr) throw NotInImage("decode: c_lam applied to a non-binder");
      return nlam(display_name(depth + 1),
                  decode_in(lam->body(CON(placeholder(depth + 1))), sig, depth + 1));
    }
    auto head = cases(app->fun);
    if (auto* fun = std::get_if<VApp>(&head); fun != nullptr && is_con(fun->fun, sig.c_app())) {
      return napp(decode_in(fun->arg, sig, depth), decode_in(app->arg, sig, depth));
    }
    throw NotInImage("decode: application outside the c_app/c_lam discipline");
  }
  if (std::holds_alternative<VErr>(v)) throw NotInImage("decode: ERR is not an object term");
  throw NotInImage("decode: bare LAM without c_lam");
}

bool alpha_in(const NamedTerm& t, const NamedTerm& u, std::vector<std::string>& tb,
              std::vector<std::string>& ub) {
  if (t.kind != u.kind) return false;
  switch (t.kind) {
    case NamedKind::Free:
      return t.index == u.index;
    case NamedKind::Var: {
      // Distance to the innermost binder of that name.
      auto ti = std::find(tb.rbegin(), tb.rend(), t.name);
      auto ui = std::find(ub.rbegin(), ub.rend(), u.name);
      if (ti == tb.rend() || ui == ub.rend()) return ti == tb.rend() && ui == ub.rend() && t.name == u.name;
      return std::distance(tb.rbegin(), ti) == std::distance(ub.rbegin(), ui);
    }
    case NamedKind::Lam: {
      tb.push_back(t.name);
      ub.push_back(u.name);
      bool ok = alpha_in(t.kids[0], u.kids[0], tb, ub);
      tb.pop_back();
      ub.pop_back();
      return ok;
    }
    case NamedKind::App:
      return alpha_in(t.kids[0], u.kids[0], tb, ub) && alpha_in(t.kids[1], u.kids[1], tb, ub);
  }
  return false;
}

}  // namespace

Expr encode(const NamedTerm& t, const OlSig& sig) { return encode_in(t, sig, Env{}); }

NamedTerm decode(const Expr& e, const OlSig& sig) {
  if (mentions_reserved(to_db(e))) {
    throw NotInImage("decode: term uses a reserved constant name");
  }
  return decode_in(e, sig, 0);
}

bool alpha_eq(const NamedTerm& t, const NamedTerm& u) {
  std::vector<std::string> tb;
  std::vector<std::string> ub;
  return alpha_in(t, u, tb, ub);
}

Expr apply_binder(const Expr& e, const Expr& arg, const OlSig& sig) {
  auto v = cases(e);
  if (auto* app = std::get_if<VApp>(&v); app != nullptr && is_con(app->fun, sig.c_lam())) {
    auto inner = cases(app->arg);
    if (auto* lam = std::get_if<VLam>(&inner)) return lam->body(arg);
  }
  throw NotAnAbstraction("apply_binder: expected c_lam $$ LAM(...)");
}

namespace {

const std::vector<std::string>& binder_names() {
  static const std::vector<std::string> names{"x", "y", "z"};
  return names;
}

constexpr std::uint64_t kMaxFree = 2;

// Terms of exactly `size` nodes whose variables come from `scope`.
void terms_of_size(std::size_t size, std::vector<std::string>& scope,
                   std::vector<NamedTerm>& out) {
  if (size == 1) {
    for (std::uint64_t n = 0; n <= kMaxFree; ++n) out.push_back(nfree(n));
    for (const auto& name : binder_names()) {
      if (std::find(scope.begin(), scope.end(), name) != scope.end()) {
        out.push_back(nvar(name));
      }
    }
    return;
  }
  for (const auto& name : binder_names()) {
    std::vector<NamedTerm> bodies;
    scope.push_back(name);
    terms_of_size(size - 1, scope, bodies);
    scope.pop_back();
    for (auto& b : bodies) out.push_back(nlam(name, std::move(b)));
  }
  for (std::size_t ls = 1; ls + 1 < size; ++ls) {
    std::vector<NamedTerm> lefts;
    std::vector<NamedTerm> rights;
    terms_of_size(ls, scope, lefts);
    terms_of_size(size - 1 - ls, scope, rights);
    for (const auto& l : lefts) {
      for (const auto& r : rights) out.push_back(napp(l, r));
    }
  }
}

NamedTerm random_named(std::mt19937_64& rng, std::size_t budget,
                       std::vector<std::string>& scope) {
  std::uniform_int_distribution<int> roll(0, 9);
  int r = budget < 3 ? (budget == 2 ? 6 + roll(rng) % 4 : 0) : roll(rng);
  if (r < 3) {
    std::uniform_int_distribution<std::size_t> pick(0, scope.size() + kMaxFree);
    std::size_t k = pick(rng);
    if (k <= kMaxFree) return nfree(k);
    return nvar(scope[k - kMaxFree - 1]);
  }
  if (r < 6) {
    std::uniform_int_distribution<std::size_t> split(1, budget - 2);
    std::size_t ls = split(rng);
    NamedTerm l = random_named(rng, ls, scope);
    NamedTerm rt = random_named(rng, budget - 1 - ls, scope);
    return napp(std::move(l), std::move(rt));
  }
  std::uniform_int_distribution<std::size_t> pick(0, binder_names().size() - 1);
  const std::string& name = binder_names()[pick(rng)];
  scope.push_back(name);
  NamedTerm body = random_named(rng, budget - 1, scope);
  scope.pop_back();
  return nlam(name, std::move(body));
}

}  // namespace

std::vector<NamedTerm> enumerate_named_terms(std::size_t max_size) {
  std::vector<NamedTerm> out;
  std::vector<std::string> scope;
  for (std::size_t s = 1; s <= max_size; ++s) terms_of_size(s, scope, out);
  return out;
}

NamedTerm gen_named_term(std::size_t max_size, std::uint64_t seed) {
  if (max_size < 1) throw PreconditionViolated("gen_named_term: max_size must be ≥ 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::vector<std::string> scope;
  return random_named(rng, size(rng), scope);
}

}  // namespace hybrid::ol
