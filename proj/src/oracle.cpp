#include "hybrid/oracle.hpp"

#include <random>
#include <variant>

#include "sexpr.hpp"

namespace hybrid {

namespace open {

OpenBody hole(std::uint64_t k) {
  OpenBody b;
  b.kind = OpenKind::Hole;
  b.num = k;
  return b;
}

OpenBody con(ConId c) {
  OpenBody b;
  b.kind = OpenKind::Con;
  b.con = std::move(c);
  return b;
}

OpenBody var(std::uint64_t n) {
  OpenBody b;
  b.kind = OpenKind::Var;
  b.num = n;
  return b;
}

OpenBody app(OpenBody l, OpenBody r) {
  OpenBody b;
  b.kind = OpenKind::App;
  b.kids.push_back(std::move(l));
  b.kids.push_back(std::move(r));
  return b;
}

OpenBody err() { return OpenBody{}; }

OpenBody bnd(std::uint64_t i) {
  OpenBody b;
  b.kind = OpenKind::Bnd;
  b.num = i;
  return b;
}

OpenBody abs(OpenBody body) {
  OpenBody b;
  b.kind = OpenKind::Abs;
  b.kids.push_back(std::move(body));
  return b;
}

}  // namespace open

namespace {

const ConId& c1() {
  static const ConId c{"c1"};
  return c;
}

const ConId& c2() {
  static const ConId c{"c2"};
  return c;
}

bool well_formed_at(const OpenBody& b, std::size_t arity, std::uint64_t depth) {
  switch (b.kind) {
    case OpenKind::Hole:
      return b.num < arity;
    case OpenKind::Bnd:
      return b.num < depth;
    case OpenKind::App:
      return well_formed_at(b.kids[0], arity, depth) &&
             well_formed_at(b.kids[1], arity, depth);
    case OpenKind::Abs:
      return well_formed_at(b.kids[0], arity, depth + 1);
    default:
      return true;
  }
}

Expr build(const OpenBody& b, const std::vector<Expr>& binders,
           const std::vector<Expr>& args) {
  switch (b.kind) {
    case OpenKind::Hole:
      return args[b.num];
    case OpenKind::Con:
      return CON(*b.con);
    case OpenKind::Var:
      return VAR(b.num);
    case OpenKind::Err:
      return ERR();
    case OpenKind::Bnd:
      return binders[binders.size() - 1 - b.num];
    case OpenKind::App:
      return APP(build(b.kids[0], binders, args), build(b.kids[1], binders, args));
    case OpenKind::Abs:
      return LAM([&](const Expr& y) {
        std::vector<Expr> inner = binders;
        inner.push_back(y);
        return build(b.kids[0], inner, args);
      });
  }
  return ERR();
}

void require(const OpenTerm& ot, std::size_t arity) {
  if (ot.arity != arity) {
    throw ArityMismatch("expected an open term of arity " + std::to_string(arity) +
                        ", got " + std::to_string(ot.arity));
  }
  if (!well_formed(ot)) {
    throw PreconditionViolated("open term is not well formed: " + to_sexpr(ot));
  }
}

OpenBody from_bound(const DbTerm& t, std::uint64_t depth) {
  switch (t.kind()) {
    case DbKind::Con:
      return open::con(t.con_id());
    case DbKind::Var:
      return open::var(t.index());
    case DbKind::Err:
      return open::err();
    case DbKind::Bnd:
      return t.index() == depth ? open::hole(0) : open::bnd(t.index());
    case DbKind::App:
      return open::app(from_bound(t.left(), depth), from_bound(t.right(), depth));
    case DbKind::Abs:
      return open::abs(from_bound(t.body(), depth + 1));
    case DbKind::Probe:
      break;
  }
  throw PreconditionViolated("reify1: unexpected placeholder");
}

DbTerm lam_db(const OpenBody& b, std::uint64_t depth) {
  switch (b.kind) {
    case OpenKind::Hole:
      return DbTerm::bnd(depth);
    case OpenKind::Con:
      return DbTerm::con(*b.con);
    case OpenKind::Var:
      return DbTerm::var(b.num);
    case OpenKind::Err:
      return DbTerm::err();
    case OpenKind::Bnd:
      return DbTerm::bnd(b.num);
    case OpenKind::App:
      return DbTerm::app(lam_db(b.kids[0], depth), lam_db(b.kids[1], depth));
    case OpenKind::Abs:
      return DbTerm::abs(lam_db(b.kids[0], depth + 1));
  }
  return DbTerm::err();
}

OpenBody fill(const OpenBody& b, std::uint64_t k, const OpenBody& value) {
  if (b.kind == OpenKind::Hole) {
    if (b.num == k) return value;
    return b.num > k ? open::hole(b.num - 1) : b;
  }
  OpenBody out = b;
  for (auto& kid : out.kids) kid = fill(kid, k, value);
  return out;
}

// Leaves available at a given binder depth, in a fixed order.
std::vector<OpenBody> leaves(std::size_t arity, std::uint64_t depth) {
  std::vector<OpenBody> out;
  for (std::uint64_t k = 0; k < arity; ++k) out.push_back(open::hole(k));
  out.push_back(open::con(c1()));
  out.push_back(open::con(c2()));
  out.push_back(open::var(0));
  out.push_back(open::var(1));
  out.push_back(open::err());
  for (std::uint64_t i = 0; i < std::min<std::uint64_t>(depth, 2); ++i) {
    out.push_back(open::bnd(i));
  }
  return out;
}

std::vector<OpenBody> bodies(std::size_t arity, std::size_t budget,
                             std::uint64_t depth) {
  std::vector<OpenBody> out = leaves(arity, depth);
  if (budget <= 1) return out;
  std::vector<OpenBody> sub = bodies(arity, budget - 1, depth);
  for (const auto& l : sub) {
    for (const auto& r : sub) out.push_back(open::app(l, r));
  }
  for (auto& b : bodies(arity, budget - 1, depth + 1)) {
    out.push_back(open::abs(std::move(b)));
  }
  return out;
}

OpenBody random_body(std::mt19937_64& rng, std::size_t arity,
                     std::size_t budget, std::uint64_t depth) {
  std::vector<OpenBody> ls = leaves(arity, depth);
  std::uniform_int_distribution<int> pick(0, 9);
  int roll = budget <= 1 ? 0 : pick(rng);
  if (roll < 4) {
    std::uniform_int_distribution<std::size_t> leaf(0, ls.size() - 1);
    return ls[leaf(rng)];
  }
  if (roll < 8) {
    OpenBody l = random_body(rng, arity, budget - 1, depth);
    OpenBody r = random_body(rng, arity, budget - 1, depth);
    return open::app(std::move(l), std::move(r));
  }
  return open::abs(random_body(rng, arity, budget - 1, depth + 1));
}

void print(const OpenBody& b, std::string& out) {
  switch (b.kind) {
    case OpenKind::Hole:
      out += "(HOLE " + std::to_string(b.num) + ")";
      return;
    case OpenKind::Con:
      out += "(CON " + b.con->name() + ")";
      return;
    case OpenKind::Var:
      out += "(VAR " + std::to_string(b.num) + ")";
      return;
    case OpenKind::Err:
      out += "ERR";
      return;
    case OpenKind::Bnd:
      out += "(BND " + std::to_string(b.num) + ")";
      return;
    case OpenKind::App:
      out += "(APP ";
      print(b.kids[0], out);
      out += ' ';
      print(b.kids[1], out);
      out += ')';
      return;
    case OpenKind::Abs:
      out += "(ABS ";
      print(b.kids[0], out);
      out += ')';
      return;
  }
}

OpenBody convert(const sexpr::Node& n) {
  if (!n.is_list) {
    if (n.atom == "ERR") return open::err();
    throw ParseError(n.position, "unknown atom '" + n.atom + "'");
  }
  const std::string& h = sexpr::head(n);
  if (h == "HOLE") {
    sexpr::expect_arity(n, 1);
    return open::hole(sexpr::natural(n.items[1]));
  }
  if (h == "CON") {
    sexpr::expect_arity(n, 1);
    try {
      return open::con(ConId(sexpr::symbol(n.items[1])));
    } catch (const PreconditionViolated& e) {
      throw ParseError(n.items[1].position, e.what());
    }
  }
  if (h == "VAR") {
    sexpr::expect_arity(n, 1);
    return open::var(sexpr::natural(n.items[1]));
  }
  if (h == "BND") {
    sexpr::expect_arity(n, 1);
    return open::bnd(sexpr::natural(n.items[1]));
  }
  if (h == "APP") {
    sexpr::expect_arity(n, 2);
    return open::app(convert(n.items[1]), convert(n.items[2]));
  }
  if (h == "ABS") {
    sexpr::expect_arity(n, 1);
    return open::abs(convert(n.items[1]));
  }
  throw ParseError(n.position, "unknown constructor '" + h + "'");
}

}  // namespace

bool well_formed(const OpenTerm& ot) { return well_formed_at(ot.body, ot.arity, 0); }

std::size_t open_size(const OpenBody& b) {
  std::size_t n = 1;
  for (const auto& k : b.kids) n += open_size(k);
  return n;
}

std::size_t open_depth(const OpenBody& b) {
  std::size_t d = 0;
  for (const auto& k : b.kids) d = std::max(d, open_depth(k));
  return d + 1;
}

Binder1 reflect1(const OpenTerm& ot) {
  require(ot, 1);
  OpenBody body = ot.body;
  return [body](const Expr& x) { return build(body, {}, {x}); };
}

Binder2 reflect2(const OpenTerm& ot) {
  require(ot, 2);
  OpenBody body = ot.body;
  return [body](const Expr& x, const Expr& y) { return build(body, {}, {x, y}); };
}

OpenTerm reify1(const Binder1& body) {
  if (!abstr(body)) throw ExoticFunction("reify1: closure is not syntactic");
  return OpenTerm{1, from_bound(lbind(0, body), 0)};
}

DbTerm expected_lam_db(const OpenTerm& ot) {
  require(ot, 1);
  return DbTerm::abs(lam_db(ot.body, 0));
}

std::string_view expected_shape(const OpenTerm& ot) {
  require(ot, 1);
  switch (ot.body.kind) {
    case OpenKind::Hole: return "identity";
    case OpenKind::Con: return "const-con";
    case OpenKind::Var: return "const-var";
    case OpenKind::App: return "app";
    case OpenKind::Abs: return "lam";
    case OpenKind::Err: return "const-err";
    case OpenKind::Bnd: break;
  }
  throw PreconditionViolated("expected_shape: dangling index at the head");
}

OpenTerm fill_hole(const OpenTerm& ot, std::uint64_t k, const OpenBody& value) {
  if (k >= ot.arity) throw ArityMismatch("fill_hole: no hole " + std::to_string(k));
  return OpenTerm{ot.arity - 1, fill(ot.body, k, value)};
}

const std::vector<OpenBody>& open_ground_sample() {
  static const std::vector<OpenBody> sample{open::var(0), open::var(1),
                                            open::con(c1()), open::err(),
                                            open::abs(open::bnd(0))};
  return sample;
}

bool abstr_oracle2_componentwise(const OpenTerm& ot) {
  require(ot, 2);
  for (const auto& g : open_ground_sample()) {
    if (!well_formed(fill_hole(ot, 1, g))) return false;
    if (!well_formed(fill_hole(ot, 0, g))) return false;
  }
  return true;
}

bool componentwise_abstr_2(const Binder2& body) {
  for (const Expr& g : ground_sample()) {
    if (!abstr([&](const Expr& x) { return body(x, g); })) return false;
    if (!abstr([&](const Expr& y) { return body(g, y); })) return false;
  }
  return true;
}

OpenTerm gen_open_term(std::size_t arity, std::size_t max_depth,
                       std::uint64_t seed) {
  if (max_depth < 1) throw PreconditionViolated("gen_open_term: max_depth must be ≥ 1");
  std::mt19937_64 rng(seed);
  return OpenTerm{arity, random_body(rng, arity, max_depth, 0)};
}

std::vector<OpenTerm> enumerate_open_terms(std::size_t arity,
                                           std::size_t max_depth) {
  if (max_depth < 1) {
    throw PreconditionViolated("enumerate_open_terms: max_depth must be ≥ 1");
  }
  std::vector<OpenTerm> out;
  for (auto& b : bodies(arity, max_depth, 0)) out.push_back(OpenTerm{arity, std::move(b)});
  return out;
}

std::vector<DbTerm> enumerate_db_terms(std::size_t max_size) {
  // by_size[s] holds every term of exactly s nodes.
  std::vector<std::vector<DbTerm>> by_size(max_size + 1);
  if (max_size >= 1) {
    by_size[1] = {DbTerm::con(c1()), DbTerm::con(c2()), DbTerm::var(0),
                  DbTerm::var(1),    DbTerm::err(),     DbTerm::bnd(0),
                  DbTerm::bnd(1)};
  }
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const auto& b : by_size[s - 1]) by_size[s].push_back(DbTerm::abs(b));
    for (std::size_t ls = 1; ls + 1 < s; ++ls) {
      std::size_t rs = s - 1 - ls;
      for (const auto& l : by_size[ls]) {
        for (const auto& r : by_size[rs]) by_size[s].push_back(DbTerm::app(l, r));
      }
    }
  }
  std::vector<DbTerm> out;
  for (auto& bucket : by_size) {
    for (auto& t : bucket) out.push_back(std::move(t));
  }
  return out;
}

const std::vector<ExoticUnary>& exotic_unary() {
  static const std::vector<ExoticUnary> lib = [] {
    std::vector<ExoticUnary> v;
    // The classic: duplicate constants, leave everything else alone.
    v.push_back({"con-duplicator", [](const Expr& x) {
                   return std::holds_alternative<VCon>(cases(x)) ? APP(x, x) : x;
                 }});
    v.push_back({"err-test", [](const Expr& x) {
                   return expr_equal(x, ERR()) ? CON(c1()) : x;
                 }});
    v.push_back({"app-head", [](const Expr& x) {
                   return std::holds_alternative<VApp>(cases(x)) ? VAR(0) : VAR(1);
                 }});
    v.push_back({"size-probe", [](const Expr& x) {
                   return expr_size(x) > 1 ? ERR() : x;
                 }});
    v.push_back({"db-peek", [](const Expr& x) {
                   return to_db(x) == DbTerm::var(0) ? CON(c2()) : APP(x, VAR(0));
                 }});
    v.push_back({"lam-test-in-arg", [](const Expr& x) {
                   bool lam = std::holds_alternative<VLam>(cases(x));
                   return APP(x, lam ? CON(c1()) : CON(c2()));
                 }});
    v.push_back({"printer-peek", [](const Expr& x) {
                   return to_hoas(x).size() > 5 ? VAR(1) : x;
                 }});
    v.push_back({"inspect-under-binder", [](const Expr& x) {
                   return LAM([x](const Expr& y) {
                     return expr_equal(x, ERR()) ? y : x;
                   });
                 }});
    return v;
  }();
  return lib;
}

const std::vector<ExoticBinary>& exotic_binary() {
  static const std::vector<ExoticBinary> lib = [] {
    std::vector<ExoticBinary> v;
    v.push_back({"equal-pair", [](const Expr& x, const Expr& y) {
                   return expr_equal(x, y) ? x : y;
                 }});
    v.push_back({"var-first", [](const Expr& x, const Expr& y) {
                   return std::holds_alternative<VVar>(cases(x)) ? y : x;
                 }});
    v.push_back({"err-second", [](const Expr& x, const Expr& y) {
                   return APP(x, std::holds_alternative<VErr>(cases(y)) ? ERR() : y);
                 }});
    v.push_back({"swap-on-con", [](const Expr& x, const Expr& y) {
                   return std::holds_alternative<VCon>(cases(y)) ? APP(y, x)
                                                                 : APP(x, y);
                 }});
    return v;
  }();
  return lib;
}

std::string to_sexpr(const OpenTerm& ot) {
  std::string out;
  print(ot.body, out);
  return out;
}

OpenTerm parse_open_term(std::string_view text, std::size_t arity) {
  return OpenTerm{arity, convert(sexpr::read(text))};
}

}  // namespace hybrid
