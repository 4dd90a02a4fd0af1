#include "hybrid/binder.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <optional>

namespace hybrid {

using detail::ExprAccess;

namespace {

std::atomic<bool> g_purity_check{false};

// Probes of the binding sessions currently open on this thread, outermost
// first.
thread_local std::vector<ProbeId> t_active;

class Session {
 public:
  Session() : id_(fresh_probe()) { t_active.push_back(id_); }
  ~Session() { t_active.pop_back(); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  ProbeId id() const noexcept { return id_; }
  Expr placeholder() const { return ExprAccess::wrap(detail::make_probe(id_)); }

 private:
  ProbeId id_;
};

bool is_active(ProbeId p) {
  return std::find(t_active.begin(), t_active.end(), p) != t_active.end();
}

// Every placeholder left in a result must belong to an open session.
bool only_live_probes(const DbTerm& t) {
  if (!t.has_probe()) return true;
  switch (t.kind()) {
    case DbKind::Probe:
      return is_active(t.probe_id());
    case DbKind::App:
      return only_live_probes(t.left()) && only_live_probes(t.right());
    case DbKind::Abs:
      return only_live_probes(t.body());
    default:
      return true;
  }
}

// Runs `body` on the session's placeholder. nullopt means exotic.
std::optional<DbTerm> evaluate(const Binder1& body, const Session& s) {
  std::optional<DbTerm> result;
  try {
    result = ExprAccess::repr(body(s.placeholder()));
  } catch (const ExoticUse& e) {
    if (e.probe() != s.id()) throw;
    return std::nullopt;
  }
  if (!only_live_probes(*result)) return std::nullopt;
  if (g_purity_check.load(std::memory_order_relaxed)) {
    Session again;
    std::optional<DbTerm> second;
    try {
      second = ExprAccess::repr(body(again.placeholder()));
    } catch (const ExoticUse& e) {
      if (e.probe() != again.id()) throw;
      return std::nullopt;
    }
    if (!(bind_probe(*result, s.id(), 0) == bind_probe(*second, again.id(), 0))) {
      return std::nullopt;
    }
  }
  return result;
}

const ConId& c1() {
  static const ConId c{"c1"};
  return c;
}

}  // namespace

bool abstr(const Binder1& body) {
  Session s;
  return evaluate(body, s).has_value();
}

Expr LAM(const Binder1& body) {
  Session s;
  auto t = evaluate(body, s);
  if (!t) return ERR();
  return ExprAccess::wrap(DbTerm::abs(bind_probe(*t, s.id(), 0)));
}

DbTerm lbind(std::uint64_t i, const Binder1& body) {
  Session s;
  auto t = evaluate(body, s);
  if (!t) throw ExoticUse(s.id());
  DbTerm bound = bind_probe(*t, s.id(), i);
  assert(level(i + 1, bound));
  return bound;
}

bool ordinary(const Binder1& body) {
  Session s;
  auto t = evaluate(body, s);
  if (!t) return false;
  return !(t->kind() == DbKind::Probe && t->probe_id() == s.id());
}

bool abstr_2(const Binder2& body) {
  Session first;
  Session second;
  std::optional<DbTerm> result;
  try {
    result = ExprAccess::repr(body(first.placeholder(), second.placeholder()));
  } catch (const ExoticUse& e) {
    if (e.probe() != first.id() && e.probe() != second.id()) throw;
    return false;
  }
  if (!only_live_probes(*result)) return false;
  if (g_purity_check.load(std::memory_order_relaxed)) {
    Session a;
    Session b;
    std::optional<DbTerm> again;
    try {
      again = ExprAccess::repr(body(a.placeholder(), b.placeholder()));
    } catch (const ExoticUse& e) {
      if (e.probe() != a.id() && e.probe() != b.id()) throw;
      return false;
    }
    auto normal = [](const DbTerm& t, ProbeId x, ProbeId y) {
      return bind_probe(bind_probe(t, y, 0), x, 1);
    };
    if (!(normal(*result, first.id(), second.id()) ==
          normal(*again, a.id(), b.id()))) {
      return false;
    }
  }
  return true;
}

namespace {

// Closure that puts its argument where `s` has its placeholder.
Binder1 reopen(const DbTerm& t, ProbeId p) {
  DbTerm bound = bind_probe(t, p, 0);
  return [bound](const Expr& x) {
    return ExprAccess::wrap(instantiate(bound, 0, ExprAccess::repr(x)));
  };
}

bool slices_syntactic(const Binder2& inner) {
  for (const Expr& g : ground_sample()) {
    if (!abstr([&](const Expr& y) { return inner(g, y); })) return false;
    if (!abstr([&](const Expr& x) { return inner(x, g); })) return false;
  }
  return true;
}

}  // namespace

AbstrClassification classify(const Binder1& body) {
  Session s;
  auto t = evaluate(body, s);
  if (!t) return shape::Exotic{};
  switch (t->kind()) {
    case DbKind::Probe:
      if (t->probe_id() == s.id()) return shape::Identity{};
      // An enclosing binder's argument: its shape is unknown here.
      throw ExoticUse(t->probe_id());
    case DbKind::Con:
      return shape::ConstCon{t->con_id()};
    case DbKind::Var:
      return shape::ConstVar{t->index()};
    case DbKind::Err:
      return shape::ConstErr{};
    case DbKind::App:
      return shape::App{reopen(t->left(), s.id()), reopen(t->right(), s.id())};
    case DbKind::Abs: {
      // Inside the body, Bnd 0 is the inner argument; the outer one moves to
      // Bnd 1 so both can be filled by instantiation.
      DbTerm two = bind_probe(t->body(), s.id(), 1);
      Binder2 inner = [two](const Expr& x, const Expr& y) {
        DbTerm with_x = instantiate(two, 1, ExprAccess::repr(x));
        return ExprAccess::wrap(instantiate(with_x, 0, ExprAccess::repr(y)));
      };
      if (!slices_syntactic(inner)) return shape::Exotic{};
      return shape::Lam{std::move(inner)};
    }
    case DbKind::Bnd:
      break;
  }
  throw PreconditionViolated("classify: closure produced a dangling index");
}

std::string_view classification_name(const AbstrClassification& c) {
  static constexpr std::string_view names[] = {
      "identity", "const-con", "const-var", "app", "lam", "const-err", "exotic"};
  return names[c.index()];
}

bool abstr_lam_check(const Binder2& inner) {
  for (const Expr& x : ground_sample()) {
    if (!abstr([&](const Expr& y) { return inner(x, y); })) {
      throw PremiseViolated("abstr_lam_check: y-slice at x = " + to_hoas(x) +
                            " is not syntactic");
    }
  }
  {
    Session sx;
    bool ok = true;
    try {
      ok = abstr([&](const Expr& y) { return inner(sx.placeholder(), y); });
    } catch (const ExoticUse& e) {
      // Looking at x says nothing about the y-slices.
      if (e.probe() != sx.id()) throw;
    }
    if (!ok) {
      throw PremiseViolated(
          "abstr_lam_check: y-slice at a generic x is not syntactic");
    }
  }
  return abstr([&](const Expr& x) {
    return LAM([&](const Expr& y) { return inner(x, y); });
  });
}

Expr rebuild(const ExprView& view) {
  return std::visit(
      [](const auto& v) -> Expr {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, VCon>) {
          return CON(v.con);
        } else if constexpr (std::is_same_v<V, VVar>) {
          return VAR(v.index);
        } else if constexpr (std::is_same_v<V, VApp>) {
          return APP(v.fun, v.arg);
        } else if constexpr (std::is_same_v<V, VErr>) {
          return ERR();
        } else {
          return LAM(v.body);
        }
      },
      view);
}

const std::vector<Expr>& ground_sample() {
  static const std::vector<Expr> sample = [] {
    return std::vector<Expr>{VAR(0), VAR(1), CON(c1()), ERR(),
                             LAM([](const Expr& x) { return x; })};
  }();
  return sample;
}

void set_purity_check(bool enabled) {
  g_purity_check.store(enabled, std::memory_order_relaxed);
}

bool purity_check_enabled() {
  return g_purity_check.load(std::memory_order_relaxed);
}

}  // namespace hybrid
