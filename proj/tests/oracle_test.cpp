#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"

namespace hybrid {
namespace {

using testing::c;
using D = DbTerm;

OpenTerm one(OpenBody b) { return OpenTerm{1, std::move(b)}; }
OpenTerm two(OpenBody b) { return OpenTerm{2, std::move(b)}; }

TEST(Reflect, Examples) {
  auto s = reflect1(one(open::app(open::hole(0), open::var(3))));
  EXPECT_TRUE(s(VAR(9)) == APP(VAR(9), VAR(3)));
  auto p = reflect2(two(open::app(open::hole(0), open::hole(1))));
  EXPECT_TRUE(p(VAR(1), VAR(2)) == APP(VAR(1), VAR(2)));
}

TEST(Reflect, ArityChecked) {
  EXPECT_THROW(reflect1(two(open::hole(1))), ArityMismatch);
  EXPECT_THROW(reflect2(one(open::hole(0))), ArityMismatch);
  EXPECT_THROW(reflect1(one(open::bnd(0))), PreconditionViolated);
}

TEST(Reify, Examples) {
  EXPECT_EQ(reify1([](const Expr& x) { return x; }), one(open::hole(0)));
  EXPECT_EQ(reify1([](const Expr& x) { return APP(x, VAR(3)); }),
            one(open::app(open::hole(0), open::var(3))));
  EXPECT_THROW(reify1(exotic_unary().front().fn), ExoticFunction);
}

TEST(Componentwise, Examples) {
  EXPECT_TRUE(abstr_oracle2_componentwise(two(open::app(open::hole(0), open::hole(1)))));
  EXPECT_TRUE(abstr_oracle2_componentwise(
      two(open::abs(open::app(open::bnd(0), open::hole(1))))));
  EXPECT_TRUE(abstr_oracle2_componentwise(two(open::con(c("c1")))));
}

TEST(Enumerate, DepthOne) {
  auto got = enumerate_open_terms(1, 1);
  std::vector<OpenTerm> want{one(open::hole(0)), one(open::con(c("c1"))),
                             one(open::con(c("c2"))), one(open::var(0)),
                             one(open::var(1)), one(open::err())};
  ASSERT_EQ(got.size(), want.size());
  for (const auto& w : want) {
    EXPECT_NE(std::find(got.begin(), got.end(), w), got.end()) << to_sexpr(w);
  }
}

TEST(Enumerate, DistinctWellFormedAndWithinDepth) {
  auto terms = enumerate_open_terms(1, 3);
  std::set<std::string> seen;
  for (const auto& t : terms) {
    ASSERT_TRUE(well_formed(t));
    ASSERT_LE(open_depth(t.body), 3u);
    seen.insert(to_sexpr(t));
  }
  EXPECT_EQ(seen.size(), terms.size());
}

TEST(Enumerate, ReflectedAreSyntactic) {
  for (const auto& t : enumerate_open_terms(1, 3)) {
    ASSERT_TRUE(abstr(reflect1(t))) << to_sexpr(t);
  }
}

TEST(Enumerate, DbTermsCoverSmallSizes) {
  auto terms = enumerate_db_terms(3);
  // 7 leaves, 7 Abs of a leaf, 7 * 7 applications, 7 double Abs.
  EXPECT_EQ(terms.size(), 7u + 7u + 49u + 7u);
}

TEST(Generate, Deterministic) {
  EXPECT_EQ(gen_open_term(1, 4, 7), gen_open_term(1, 4, 7));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto t = gen_open_term(2, 6, seed);
    ASSERT_TRUE(well_formed(t));
    ASSERT_LE(open_depth(t.body), 6u);
  }
}

TEST(Exotic, LibraryIsRejected) {
  for (const auto& ex : exotic_unary()) {
    EXPECT_FALSE(abstr(ex.fn)) << ex.name;
    EXPECT_TRUE(LAM(ex.fn) == ERR()) << ex.name;
  }
  for (const auto& ex : exotic_binary()) {
    EXPECT_FALSE(abstr_2(ex.fn)) << ex.name;
  }
}

TEST(RoundTrip, ExhaustiveAndRandom) {
  for (const auto& t : enumerate_open_terms(1, 3)) {
    ASSERT_EQ(reify1(reflect1(t)), t) << to_sexpr(t);
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto t = gen_open_term(1, 7, seed);
    ASSERT_EQ(reify1(reflect1(t)), t) << to_sexpr(t);
  }
}

TEST(ExpectedLamDb, AgreesWithLam) {
  for (const auto& t : enumerate_open_terms(1, 3)) {
    ASSERT_EQ(to_db(LAM(reflect1(t))), expected_lam_db(t)) << to_sexpr(t);
  }
}

TEST(FillHole, Renumbers) {
  auto t = two(open::app(open::hole(1), open::hole(0)));
  EXPECT_EQ(fill_hole(t, 0, open::err()), one(open::app(open::hole(0), open::err())));
  EXPECT_THROW(fill_hole(t, 2, open::err()), ArityMismatch);
}

TEST(Text, RoundTrip) {
  for (const auto& t : enumerate_open_terms(2, 2)) {
    ASSERT_EQ(parse_open_term(to_sexpr(t), 2), t);
  }
  EXPECT_EQ(to_sexpr(one(open::abs(open::app(open::bnd(0), open::hole(0))))),
            "(ABS (APP (BND 0) (HOLE 0)))");
  EXPECT_THROW(parse_open_term("(HOLE)", 1), ParseError);
}

}  // namespace
}  // namespace hybrid
