#include <doctest.h>

#include "dgal/expr.hpp"
#include "dgal/ore.hpp"
#include "test_util.hpp"

using namespace dgal;

TEST_CASE("grammar: basic parses reach the expected canonical values") {
    RatXT x = x_var();
    RatXT t = xt_const(t_var());

    CHECK(parse_ratxt("1/(x-t)") == RatXT(1) / (x - t));
    CHECK(parse_ratxt("(t-1-x)/x") == (t - RatXT(1) - x) / x);
    CHECK(parse_ratxt("x^-2") == RatXT(1) / (x * x));
    CHECK(parse_ratxt("x^2 - 2*x + 1") == (x - RatXT(1)) * (x - RatXT(1)));
    CHECK(parse_ratxt("  1 /\t( x - t )") == parse_ratxt("1/(x-t)"));
}

TEST_CASE("canonicalization: cancellation and like-term arithmetic") {
    CHECK(parse_ratxt("(x-t)/(x-t)") == RatXT(1));
    CHECK(parse_ratxt("1/(x-t) + 1/(x-t)") == parse_ratxt("2/(x-t)"));
    CHECK(serialize(parse_ratxt("1/(x-t) + 1/(x-t)")) == "2/(x - t)");
}

TEST_CASE("canonicalization: common-denominator arithmetic, evaluation oracle") {
    RatXT v = parse_ratxt("t/(x-t) - t/x");
    CHECK(serialize(v) == "t^2/(x^2 - t*x)");

    // independent check at 5 random non-pole rational points
    std::mt19937 rng(101);
    int done = 0;
    while (done < 5) {
        Rat x0 = testutil::small_rat(rng, 20, 7);
        Rat t0 = testutil::small_rat(rng, 20, 7);
        if (x0 == 0 || t0 == 0 || x0 == t0) continue;
        Rat lhs = eval_at(v, x0, t0);
        Rat rhs = t0 / (x0 - t0) - t0 / x0;
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("serialization: fixed formats") {
    CHECK(serialize(parse_ratxt("2/(x-t)")) == "2/(x - t)");
    OreOperator op({RatT(0) - RatT(2) / t_var(), RatT(1)});
    CHECK(serialize(op) == "Dt^1 - (2/t)*Dt^0");
    CHECK(serialize(OreOperator::zero()) == "0");
    CHECK(serialize(OreOperator::one()) == "Dt^0");
}

TEST_CASE("round-trip: parse after serialize is the identity on canonical values") {
    std::mt19937 rng(202);
    for (int i = 0; i < 50; ++i) {
        RatXT f = testutil::random_split(rng);
        CHECK(parse_ratxt(serialize(f)) == f);
    }
    for (int i = 0; i < 50; ++i) {
        RatT r = testutil::random_rt(rng, 4);
        CHECK(parse_rt(serialize(r)) == r);
    }
    for (int i = 0; i < 50; ++i) {
        OreOperator op = testutil::random_operator(rng);
        CHECK(parse_operator(serialize(op)) == op);
    }
    CHECK(parse_operator(serialize(OreOperator::zero())) == OreOperator::zero());
}

TEST_CASE("errors: position-bearing rejection and zero denominators") {
    CHECK_THROWS_AS(parse_ratxt("1+*2"), ParseError);
    CHECK_THROWS_AS(parse_ratxt(""), ParseError);
    CHECK_THROWS_AS(parse_ratxt("x^y"), ParseError);
    CHECK_THROWS_AS(parse_ratxt("(x"), ParseError);
    CHECK_THROWS_AS(parse_ratxt("x + "), ParseError);
    CHECK_THROWS_AS(parse_ratxt("y"), ParseError);

    try {
        parse_ratxt("1+*2");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }

    CHECK_THROWS_AS(parse_ratxt("1/0"), DivisionByZeroLiteral);
    CHECK_THROWS_AS(parse_ratxt("1/(2-2)"), ZeroDenominator);
    CHECK_THROWS_AS(parse_ratxt("1/(x-x)"), ZeroDenominator);
}

TEST_CASE("scalar parsers reject out-of-field variables") {
    CHECK(parse_rt("t^2/(t+1)") == t_var() * t_var() / (t_var() + RatT(1)));
    CHECK_THROWS_AS(parse_rt("x"), Error);
    CHECK(parse_rat("-7/3") == Rat(-7, 3));
    CHECK_THROWS_AS(parse_rat("t"), Error);
}

TEST_CASE("precedence and negation") {
    CHECK(parse_ratxt("-x^2") == RatXT(0) - x_var() * x_var());
    CHECK(parse_ratxt("2+3*4") == RatXT(14));
    CHECK(parse_ratxt("(2+3)*4") == RatXT(20));
    CHECK(parse_ratxt("2-3-4") == RatXT(-5));
    CHECK(parse_ratxt("12/3/2") == RatXT(2));
    CHECK(parse_ratxt("--x") == x_var());
}
