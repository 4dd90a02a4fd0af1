#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "support/oracles.hpp"

namespace hybrid {
namespace {

using testing::c;
using D = DbTerm;

D dangling() {
  return D::abs(D::app(D::abs(D::app(D::app(D::bnd(2), D::bnd(1)), D::bnd(0))), D::bnd(0)));
}

// Every way of replacing exactly one leaf of t by the probe.
std::vector<D> with_one_probe(const D& t, const D& probe) {
  switch (t.kind()) {
    case DbKind::App: {
      std::vector<D> out;
      for (const auto& l : with_one_probe(t.left(), probe)) out.push_back(D::app(l, t.right()));
      for (const auto& r : with_one_probe(t.right(), probe)) out.push_back(D::app(t.left(), r));
      return out;
    }
    case DbKind::Abs: {
      std::vector<D> out;
      for (const auto& b : with_one_probe(t.body(), probe)) out.push_back(D::abs(b));
      return out;
    }
    default:
      return {probe};
  }
}

TEST(Level, DanglingIndexExample) {
  EXPECT_FALSE(level(0, dangling()));
  EXPECT_TRUE(level(1, dangling()));
  EXPECT_EQ(testing::escape(dangling()), 1u);
}

TEST(Level, SmallCases) {
  EXPECT_TRUE(level(0, D::con(c("c1"))));
  EXPECT_FALSE(level(0, D::bnd(0)));
  EXPECT_TRUE(level(1, D::bnd(0)));
  EXPECT_TRUE(proper(D::abs(D::bnd(0))));
  EXPECT_FALSE(proper(D::bnd(0)));
  EXPECT_TRUE(proper(D::app(D::con(c("c_app")), D::var(3))));
}

TEST(Level, AgreesWithEscapeOracleAndIsMonotone) {
  for (const auto& t : enumerate_db_terms(5)) {
    for (std::uint64_t i = 0; i < 4; ++i) {
      ASSERT_EQ(level(i, t), testing::escape(t) <= i) << to_sexpr(t);
      if (level(i, t)) {
        ASSERT_TRUE(level(i + 1, t)) << to_sexpr(t);
      }
    }
  }
}

TEST(Size, Examples) {
  EXPECT_EQ(size(D::err()), 1u);
  EXPECT_EQ(size(D::app(D::var(0), D::var(1))), 3u);
  EXPECT_EQ(size(D::abs(D::app(D::bnd(0), D::var(3)))), 4u);
}

TEST(Size, MatchesTextualCount) {
  for (const auto& t : enumerate_db_terms(5)) {
    ASSERT_EQ(size(t), testing::textual_size(t)) << to_sexpr(t);
  }
}

TEST(Instantiate, Examples) {
  EXPECT_EQ(instantiate(D::bnd(0), 0, D::var(7)), D::var(7));
  EXPECT_EQ(instantiate(D::abs(D::app(D::bnd(1), D::bnd(0))), 0, D::var(7)),
            D::abs(D::app(D::var(7), D::bnd(0))));
  EXPECT_EQ(instantiate(D::con(c("c1")), 0, D::var(7)), D::con(c("c1")));
}

TEST(Instantiate, RejectsBadArguments) {
  EXPECT_THROW(instantiate(D::bnd(1), 0, D::var(7)), PreconditionViolated);
  EXPECT_THROW(instantiate(D::bnd(0), 0, D::bnd(0)), PreconditionViolated);
}

TEST(Instantiate, InvertsBindProbeAgainstReplaceOracle) {
  ProbeId p = fresh_probe();
  D probe = detail::make_probe(p);
  const std::vector<D> replacements{D::var(7), D::err(), D::abs(D::bnd(0)),
                                    D::app(D::con(c("c1")), D::var(0))};
  std::size_t checked = 0;
  for (const auto& t : enumerate_db_terms(5)) {
    for (const auto& tp : with_one_probe(t, probe)) {
      if (!proper(tp)) continue;
      D bound = bind_probe(tp, p, 0);
      for (const auto& u : replacements) {
        D got = instantiate(bound, 0, u);
        ASSERT_EQ(got, testing::replace_probe(tp, p, u)) << to_sexpr(t);
        ASSERT_EQ(size(got), size(bound) + testing::count_probe(tp, p) * (size(u) - 1));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(BindProbe, Examples) {
  ProbeId p = fresh_probe();
  D probe = detail::make_probe(p);
  EXPECT_EQ(bind_probe(D::app(probe, D::var(3)), p, 0), D::app(D::bnd(0), D::var(3)));
  EXPECT_EQ(bind_probe(D::abs(probe), p, 0), D::abs(D::bnd(1)));
  EXPECT_EQ(bind_probe(D::con(c("c1")), p, 0), D::con(c("c1")));
}

TEST(BindProbe, IdentityOnProperTerms) {
  ProbeId p = fresh_probe();
  for (const auto& t : enumerate_db_terms(5)) {
    if (!proper(t)) continue;
    for (std::uint64_t i = 0; i < 3; ++i) ASSERT_EQ(bind_probe(t, p, i), t);
  }
}

TEST(BindProbe, LeavesOtherProbes) {
  ProbeId p = fresh_probe();
  ProbeId q = fresh_probe();
  D t = D::app(detail::make_probe(q), detail::make_probe(p));
  D bound = bind_probe(t, p, 0);
  EXPECT_TRUE(contains_probe(bound, q));
  EXPECT_FALSE(contains_probe(bound, p));
  EXPECT_EQ(min_probe(t)->value, std::min(p.value, q.value));
}

TEST(Probe, Containment) {
  ProbeId p = fresh_probe();
  ProbeId q = fresh_probe();
  EXPECT_FALSE(contains_any_probe(D::var(0)));
  EXPECT_TRUE(contains_probe(D::app(detail::make_probe(p), D::err()), p));
  EXPECT_FALSE(contains_probe(D::app(detail::make_probe(q), D::err()), p));
  EXPECT_FALSE(min_probe(D::err()).has_value());
}

TEST(FreshProbe, Unique) {
  std::set<std::uint64_t> seen;
  for (int k = 0; k < 1000; ++k) seen.insert(fresh_probe().value);
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(FreshProbe, DisjointAcrossThreads) {
  std::vector<std::uint64_t> a, b;
  std::thread ta([&] { for (int k = 0; k < 5000; ++k) a.push_back(fresh_probe().value); });
  std::thread tb([&] { for (int k = 0; k < 5000; ++k) b.push_back(fresh_probe().value); });
  ta.join();
  tb.join();
  std::set<std::uint64_t> all(a.begin(), a.end());
  all.insert(b.begin(), b.end());
  EXPECT_EQ(all.size(), 10000u);
}

TEST(Accessors, WrongKindThrows) {
  EXPECT_THROW(D::err().left(), PreconditionViolated);
  EXPECT_THROW(D::var(1).con_id(), PreconditionViolated);
  EXPECT_THROW(ConId(""), PreconditionViolated);
  EXPECT_THROW(ConId("a b"), PreconditionViolated);
}

TEST(Sexpr, Form) {
  EXPECT_EQ(to_sexpr(D::abs(D::app(D::bnd(0), D::var(3)))), "(ABS (APP (BND 0) (VAR 3)))");
  EXPECT_EQ(to_sexpr(D::err()), "ERR");
  EXPECT_THROW(to_sexpr(detail::make_probe(fresh_probe())), PreconditionViolated);
}

TEST(Sexpr, RoundTrip) {
  for (const auto& t : enumerate_db_terms(5)) {
    ASSERT_EQ(parse_sexpr(to_sexpr(t)), t);
  }
}

TEST(Sexpr, Malformed) {
  EXPECT_THROW(parse_sexpr("(APP (VAR 0)"), ParseError);
  EXPECT_THROW(parse_sexpr("(FOO 1)"), ParseError);
  EXPECT_THROW(parse_sexpr("(VAR x)"), ParseError);
  EXPECT_THROW(parse_sexpr("ERR ERR"), ParseError);
}

TEST(Equality, HashAndOrderConsistent) {
  auto terms = enumerate_db_terms(4);
  for (std::size_t i = 0; i < terms.size(); i += 7) {
    D copy = parse_sexpr(to_sexpr(terms[i]));
    EXPECT_EQ(copy.hash(), terms[i].hash());
    EXPECT_EQ(copy <=> terms[i], std::strong_ordering::equal);
  }
  std::set<D> distinct(terms.begin(), terms.end());
  EXPECT_EQ(distinct.size(), terms.size());
}

}  // namespace
}  // namespace hybrid
