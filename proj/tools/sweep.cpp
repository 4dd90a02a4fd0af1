#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "cli.hpp"
#include "hybrid/oracle.hpp"

namespace hybrid::cli {

namespace {

using ExprEq = std::function<bool(const Expr&, const Expr&)>;

// Mutation-test equality: treats every Var as equal to every other Var.
bool var_blind(const DbTerm& a, const DbTerm& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case DbKind::Var:
      return true;
    case DbKind::App:
      return var_blind(a.left(), b.left()) && var_blind(a.right(), b.right());
    case DbKind::Abs:
      return var_blind(a.body(), b.body());
    default:
      return a == b;
  }
}

struct Law {
  explicit Law(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::optional<std::string> counterexample;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++violations;
    if (!counterexample) counterexample = describe();
  }
};

std::vector<OpenTerm> random_terms(std::size_t arity, std::size_t depth,
                                   std::uint64_t seed, std::size_t count) {
  std::vector<OpenTerm> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(gen_open_term(arity, depth, seed * 1000003 + k));
  }
  return out;
}

Law injectivity(const std::vector<OpenTerm>& exhaustive,
                const std::vector<OpenTerm>& random, const ExprEq& eq) {
  Law law("injectivity");
  std::vector<Expr> lams;
  lams.reserve(exhaustive.size());
  for (const auto& ot : exhaustive) lams.push_back(LAM(reflect1(ot)));
  for (std::size_t i = 0; i < lams.size(); ++i) {
    for (std::size_t j = i + 1; j < lams.size(); ++j) {
      law.check(!eq(lams[i], lams[j]), [&] {
        return "LAM of " + to_sexpr(exhaustive[i]) + " equals LAM of " +
               to_sexpr(exhaustive[j]);
      });
    }
  }
  for (std::size_t k = 0; k + 1 < random.size(); k += 2) {
    const auto& a = random[k];
    const auto& b = random[k + 1];
    bool same_lam = eq(LAM(reflect1(a)), LAM(reflect1(b)));
    law.check(same_lam == (a == b), [&] {
      return "LAM of " + to_sexpr(a) + (same_lam ? " equals" : " differs from") +
             " LAM of " + to_sexpr(b);
    });
  }
  return law;
}

Law characterization(const std::vector<OpenTerm>& terms) {
  Law law("characterization");
  for (const auto& ot : terms) {
    Binder1 s = reflect1(ot);
    auto name = classification_name(classify(s));
    law.check(name == expected_shape(ot) && abstr(s), [&] {
      return to_sexpr(ot) + " classified as " + std::string(name);
    });
  }
  for (const auto& ex : exotic_unary()) {
    auto name = classification_name(classify(ex.fn));
    law.check(name == "exotic" && !abstr(ex.fn), [&] {
      return "exotic closure " + ex.name + " classified as " + std::string(name);
    });
  }
  return law;
}

Law abstr2_componentwise(const std::vector<OpenTerm>& terms) {
  Law law("abstr_2 componentwise");
  for (const auto& ot : terms) {
    bool closure = abstr_2(reflect2(ot));
    law.check(closure == abstr_oracle2_componentwise(ot) && closure,
              [&] { return "abstr_2 disagrees on " + to_sexpr(ot); });
  }
  for (const auto& ex : exotic_binary()) {
    law.check(!abstr_2(ex.fn) && !componentwise_abstr_2(ex.fn),
              [&] { return "exotic pair closure " + ex.name + " accepted"; });
  }
  return law;
}

Law round_trips(const std::vector<OpenTerm>& terms, std::size_t db_size,
                const ExprEq& eq) {
  Law law("round trips");
  for (const auto& ot : terms) {
    law.check(reify1(reflect1(ot)) == ot,
              [&] { return "reify1 . reflect1 changes " + to_sexpr(ot); });
  }
  std::vector<Expr> exprs;
  for (const auto& t : enumerate_db_terms(db_size)) {
    if (!proper(t)) continue;
    Expr e = from_db(t);
    law.check(to_db(e) == t && eq(from_db(to_db(e)), e),
              [&] { return "to_db/from_db round trip fails on " + to_sexpr(t); });
    exprs.push_back(e);
  }
  // Distinct proper terms must stay distinct under the equality in use.
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    for (std::size_t j = i + 1; j < exprs.size(); ++j) {
      law.check(!eq(exprs[i], exprs[j]), [&] {
        return to_sexpr(to_db(exprs[i])) + " and " + to_sexpr(to_db(exprs[j])) +
               " compare equal";
      });
    }
  }
  return law;
}

Law adequacy(std::uint64_t seed, std::size_t count, const ExprEq& eq) {
  Law law("adequacy");
  const ol::OlSig sig = ol::OlSig::standard();
  std::vector<ol::NamedTerm> terms;
  for (std::size_t k = 0; k < count; ++k) {
    terms.push_back(ol::gen_named_term(12, seed * 7919 + k));
  }
  for (const auto& t : terms) {
    law.check(ol::alpha_eq(ol::decode(ol::encode(t, sig), sig), t),
              [&] { return "decode . encode changes " + ol::pretty(t); });
  }
  for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
    const auto& a = terms[k];
    const auto& b = terms[k + 1];
    bool same = eq(ol::encode(a, sig), ol::encode(b, sig));
    law.check(same == ol::alpha_eq(a, b), [&] {
      return "encodings of " + ol::pretty(a) + " and " + ol::pretty(b) +
             (same ? " coincide" : " differ");
    });
  }
  return law;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
  ExprEq eq = expr_equal;
  if (config.mutant == Mutant::VarBlindEquality) {
    eq = [](const Expr& a, const Expr& b) { return var_blind(to_db(a), to_db(b)); };
  }
  std::size_t exhaustive_depth = std::min<std::size_t>(config.depth, 3);
  std::size_t random_depth = config.depth + 3;

  auto unary = enumerate_open_terms(1, exhaustive_depth);
  auto unary_random = random_terms(1, random_depth, config.seed, 2 * config.count);
  auto binary = enumerate_open_terms(2, exhaustive_depth);
  auto binary_random = random_terms(2, random_depth, config.seed + 1, config.count);
  binary.insert(binary.end(), binary_random.begin(), binary_random.end());
  std::vector<OpenTerm> unary_all = unary;
  unary_all.insert(unary_all.end(), unary_random.begin(), unary_random.end());

  std::vector<Law> laws;
  laws.push_back(injectivity(unary, unary_random, eq));
  laws.push_back(characterization(unary_all));
  laws.push_back(abstr2_componentwise(binary));
  laws.push_back(round_trips(unary_all, std::min<std::size_t>(config.depth + 2, 5), eq));
  laws.push_back(adequacy(config.seed, config.count, eq));

  SweepReport report;
  std::ostringstream out;
  for (const auto& law : laws) {
    if (law.violations == 0) {
      out << "law " << law.name << ": pass " << law.checks << "/" << law.checks << "\n";
    } else {
      report.ok = false;
      out << "law " << law.name << ": FAIL " << law.violations << " violation(s) in "
          << law.checks << " checks\n";
      out << "  counterexample: " << *law.counterexample << "\n";
    }
  }
  out << (report.ok ? "all laws hold\n" : "law violations found\n");
  report.text = out.str();
  return report;
}

}  // namespace hybrid::cli
