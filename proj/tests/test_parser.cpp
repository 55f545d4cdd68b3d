#include "doctest.h"
#include "lumbral/parser.hpp"

using namespace lumbral;

TEST_CASE("ast shapes") {
    ExprPtr e = expr_parse("exp(t)-1");
    REQUIRE(e->kind == Expr::Kind::Sub);
    CHECK(e->lhs->kind == Expr::Kind::Exp);
    CHECK(e->lhs->lhs->kind == Expr::Kind::Var);
    CHECK(e->rhs->kind == Expr::Kind::Number);
    CHECK(e->rhs->value == 1);

    e = expr_parse("t/(1-t)");
    REQUIRE(e->kind == Expr::Kind::Div);
    CHECK(e->lhs->kind == Expr::Kind::Var);
    CHECK(e->rhs->kind == Expr::Kind::Sub);
}

TEST_CASE("precedence and associativity") {
    // ^ binds tighter than unary minus and than *
    CHECK(series_parse("-t^2", 't', 4)[2] == -1);
    CHECK(series_parse("2^2*3", 't', 4)[0] == 12);
    CHECK(series_parse("2*3^2", 't', 4)[0] == 18);
    // left associativity
    CHECK(series_parse("8/4/2", 't', 4)[0] == 1);
    CHECK(series_parse("1-2-3", 't', 4)[0] == -4);
    // / is always division, so 1/2 folds to the constant one half
    CHECK(series_parse("1/2", 't', 4)[0] == Rational(1, 2));
    CHECK(series_parse("t^2/2 - t/2", 't', 4) ==
          series_sub(series_monomial('t', 4, 2, Rational(1, 2)),
                     series_monomial('t', 4, 1, Rational(1, 2))));
    CHECK(series_parse("--t", 't', 4) == series_monomial('t', 4, 1));
}

TEST_CASE("evaluation examples") {
    Series t4 = series_parse("t", 't', 4);
    CHECK(t4 == series_monomial('t', 4, 1));

    Series em1 = series_parse("exp(t)-1", 't', 4);
    CHECK(em1[0] == 0);
    CHECK(em1[1] == 1);
    CHECK(em1[2] == Rational(1, 2));
    CHECK(em1[3] == Rational(1, 6));

    Series geo = series_parse("t/(1-t)", 't', 5);
    CHECK(geo[0] == 0);
    for (int k = 1; k < 5; ++k) CHECK(geo[k] == 1);

    Series l = series_parse("log(1+t)", 't', 5);
    CHECK(l[1] == 1);
    CHECK(l[2] == Rational(-1, 2));
}

TEST_CASE("composition roundtrip") {
    const int N = 16;
    Series em1 = series_parse("exp(t)-1", 't', N);
    Series l1p = series_parse("log(1+t)", 't', N);
    CHECK(series_compose(l1p, em1) == series_monomial('t', N, 1));
}

TEST_CASE("errors carry byte offsets") {
    try {
        expr_parse("1 +");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
    CHECK_THROWS_AS(expr_parse("(t"), ParseError);
    CHECK_THROWS_AS(expr_parse("t^t"), ParseError);
    CHECK_THROWS_AS(expr_parse("t^-1"), ParseError);
    CHECK_THROWS_AS(expr_parse("sin(t)"), ParseError);
    CHECK_THROWS_AS(expr_parse("x", 't'), ParseError);  // wrong variable
    CHECK_THROWS_AS(expr_parse("t x"), ParseError);
    CHECK_THROWS_AS(expr_parse(""), ParseError);
    CHECK_NOTHROW(expr_parse("x", 'x'));
}

TEST_CASE("evaluation preconditions") {
    CHECK_THROWS_AS(series_parse("1/t", 't', 4), std::invalid_argument);
    CHECK_THROWS_AS(series_parse("exp(1+t)", 't', 4), std::invalid_argument);
    CHECK_THROWS_AS(series_parse("log(t)", 't', 4), std::invalid_argument);
}

TEST_CASE("render roundtrip") {
    for (const char* text : {"exp(t)-1", "t/(1-t)", "log(1+t)", "-t^2 + 3*t/4", "1/2*t",
                             "exp(log(1+t))-1", "t^0", "2^3 - t"}) {
        ExprPtr a = expr_parse(text);
        ExprPtr b = expr_parse(expr_str(*a));
        CHECK(expr_str(*a) == expr_str(*b));
        CHECK(expr_eval(*a, 't', 10) == expr_eval(*b, 't', 10));
    }
}
