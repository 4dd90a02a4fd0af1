#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace hybrid {
namespace {

using testing::c;
using D = DbTerm;

std::vector<Expr> proper_exprs(std::size_t max_size) {
  std::vector<Expr> out;
  for (const auto& t : enumerate_db_terms(max_size)) {
    if (proper(t)) out.push_back(from_db(t));
  }
  return out;
}

TEST(Operators, ToDb) {
  EXPECT_EQ(to_db(APP(VAR(0), VAR(1))), D::app(D::var(0), D::var(1)));
  EXPECT_EQ(to_db(CON(c("c1"))), D::con(c("c1")));
  EXPECT_EQ(to_db(ERR()), D::err());
}

TEST(Operators, FromDb) {
  EXPECT_TRUE(from_db(D::app(D::con(c("c1")), D::var(2))) == APP(CON(c("c1")), VAR(2)));
  EXPECT_THROW(from_db(D::bnd(0)), NotProper);
  EXPECT_EQ(to_db(from_db(D::abs(D::bnd(0)))), D::abs(D::bnd(0)));
  EXPECT_TRUE(from_db(D::abs(D::bnd(0))) == LAM([](const Expr& x) { return x; }));
}

TEST(Operators, FromDbRejectsEveryImproperTerm) {
  for (const auto& t : enumerate_db_terms(5)) {
    if (proper(t)) {
      ASSERT_EQ(to_db(from_db(t)), t);
    } else {
      ASSERT_THROW(from_db(t), NotProper) << to_sexpr(t);
    }
  }
}

TEST(Operators, Injective) {
  auto es = proper_exprs(3);
  for (const auto& s : es) {
    for (const auto& t : es) {
      EXPECT_EQ(APP(s, t) == APP(s, t), true);
      for (const auto& s2 : es) {
        if (APP(s, t) == APP(s2, t)) {
          ASSERT_TRUE(s == s2);
        }
      }
    }
  }
  EXPECT_FALSE(CON(c("c1")) == CON(c("c2")));
  EXPECT_FALSE(VAR(0) == VAR(1));
}

TEST(Cases, Examples) {
  auto v = cases(APP(VAR(0), ERR()));
  ASSERT_TRUE(std::holds_alternative<VApp>(v));
  EXPECT_TRUE(std::get<VApp>(v).fun == VAR(0));
  EXPECT_TRUE(std::get<VApp>(v).arg == ERR());

  auto lam = cases(LAM([](const Expr& x) { return APP(x, VAR(3)); }));
  ASSERT_TRUE(std::holds_alternative<VLam>(lam));
  EXPECT_EQ(to_db(std::get<VLam>(lam).body(VAR(9))),
            instantiate(D::app(D::bnd(0), D::var(3)), 0, D::var(9)));
  EXPECT_TRUE(std::holds_alternative<VErr>(cases(ERR())));
  EXPECT_EQ(std::get<VVar>(cases(VAR(4))).index, 4u);
  EXPECT_EQ(std::get<VCon>(cases(CON(c("k")))).con, c("k"));
}

TEST(Cases, RebuildIsInverse) {
  for (const auto& e : proper_exprs(6)) {
    ASSERT_TRUE(rebuild(cases(e)) == e) << to_hoas(e);
  }
}

TEST(Equality, Examples) {
  EXPECT_TRUE(CON(c("c1")) == CON(c("c1")));
  EXPECT_FALSE(CON(c("c1")) == LAM([](const Expr& x) { return x; }));
  EXPECT_EQ(expr_size(LAM([](const Expr& x) { return APP(x, x); })), 4u);
}

TEST(Equality, AgreesWithRepresentation) {
  auto es = proper_exprs(4);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      ASSERT_EQ(expr_equal(es[i], es[j]), i == j);
    }
  }
}

TEST(Placeholder, InspectionIsExotic) {
  auto peek = [](const Expr& x) {
    (void)to_db(x);
    return x;
  };
  EXPECT_FALSE(abstr(peek));
  EXPECT_FALSE(abstr([](const Expr& x) { return expr_size(x) > 1 ? x : ERR(); }));
  EXPECT_FALSE(abstr([](const Expr& x) { return to_hoas(x).empty() ? x : ERR(); }));
  EXPECT_FALSE(abstr([](const Expr& x) { return x == ERR() ? CON(c("c1")) : x; }));
  // A concrete mismatch decides equality without looking at the placeholder.
  EXPECT_TRUE(abstr([](const Expr& x) { return APP(x, VAR(0)) == APP(x, VAR(1)) ? ERR() : x; }));
}

TEST(Placeholder, NeverEscapes) {
  for (const auto& ex : exotic_unary()) {
    Expr r = LAM(ex.fn);
    EXPECT_FALSE(contains_any_probe(detail::ExprAccess::repr(r))) << ex.name;
    EXPECT_TRUE(proper(to_db(r)));
  }
  Expr leaked = ERR();
  Expr r = LAM([&](const Expr& x) {
    leaked = x;
    return x;
  });
  EXPECT_TRUE(proper(to_db(r)));
  EXPECT_THROW(to_db(leaked), ExoticUse);
}

TEST(Printer, Hoas) {
  EXPECT_EQ(to_hoas(APP(APP(CON(c("f")), VAR(1)), ERR())), "CON f $$ VAR 1 $$ ERR");
  EXPECT_EQ(to_hoas(APP(CON(c("f")), APP(VAR(1), ERR()))), "CON f $$ (VAR 1 $$ ERR)");
  EXPECT_EQ(to_hoas(LAM([](const Expr& x) {
              return LAM([&](const Expr& y) { return APP(x, y); });
            })),
            "LAM x1. LAM x2. x1 $$ x2");
}

}  // namespace
}  // namespace hybrid
