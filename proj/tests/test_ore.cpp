#include <doctest.h>

#include "dgal/expr.hpp"
#include "dgal/linalg.hpp"
#include "dgal/ore.hpp"
#include "test_util.hpp"

using namespace dgal;

TEST_CASE("apply") {
    CHECK(apply(OreOperator::dt(), parse_ratxt("1/(x-t)")) == parse_ratxt("1/(x-t)^2"));
    RatXT f = parse_ratxt("(t^2+1)/(x^3-t)");
    CHECK(apply(OreOperator::one(), f) == f);
    // (Dt - 2/t)(t^2) = 2t - 2t = 0
    OreOperator l = parse_operator("Dt^1 - (2/t)*Dt^0");
    CHECK(apply(l, RatT(t_var() * t_var())).is_zero());
}

TEST_CASE("ore_multiply: defining relation and units") {
    OreOperator dt = OreOperator::dt();
    OreOperator t_op({t_var()});
    // Dt * t = t*Dt + 1
    CHECK(ore_multiply(dt, t_op) == OreOperator({RatT(1), t_var()}));
    std::mt19937 rng(606);
    OreOperator l = testutil::random_operator(rng);
    CHECK(ore_multiply(l, OreOperator::one()) == l);
    CHECK(ore_multiply(OreOperator::one(), l) == l);
    // associativity: (Dt*t)*Dt == Dt*(t*Dt)
    CHECK(ore_multiply(ore_multiply(dt, t_op), dt) ==
          ore_multiply(dt, ore_multiply(t_op, dt)));
}

TEST_CASE("right_divide: pinned examples") {
    OreOperator dt = OreOperator::dt();
    {
        auto [q, r] = right_divide(ore_multiply(dt, dt), dt);
        CHECK(q == dt);
        CHECK(r.is_zero());
    }
    {
        OreOperator l2 = parse_operator("Dt^1 - (2/t)*Dt^0");
        auto [q, r] = right_divide(dt, l2);
        CHECK(q == OreOperator::one());
        CHECK(r == OreOperator({RatT(2) / t_var()}));
        CHECK(ore_multiply(q, l2) + r == dt);
    }
    {
        OreOperator l1({t_var()});
        auto [q, r] = right_divide(l1, dt);
        CHECK(q.is_zero());
        CHECK(r == l1);
    }
    CHECK_THROWS_AS(right_divide(dt, OreOperator::zero()), DivisorZero);
}

TEST_CASE("q_linear_basis") {
    RatT t = t_var();
    auto b1 = q_linear_basis({RatT(1), t, RatT(1) + t});
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == RatT(1));
    CHECK(b1[1] == t);
    CHECK(q_linear_basis({RatT(0)}).empty());
    auto b2 = q_linear_basis({t * t, RatT(2) * t * t, t});
    REQUIRE(b2.size() == 2);
    CHECK(b2[0] == t * t);
    CHECK(b2[1] == t);
}

TEST_CASE("wronskian_annihilator: pinned examples") {
    RatT t = t_var();
    {
        auto c = wronskian_annihilator({RatT(1)});
        CHECK(c.op == OreOperator::dt());
        CHECK(apply(c.op, RatT(1)).is_zero());
    }
    {
        auto c = wronskian_annihilator({RatT(1), t});
        CHECK(c.op == ore_multiply(OreOperator::dt(), OreOperator::dt()));
    }
    {
        auto c = wronskian_annihilator({t * t});
        CHECK(c.op == parse_operator("Dt^1 - (2/t)*Dt^0"));
    }
    {
        auto c = wronskian_annihilator({});
        CHECK(c.op == OreOperator::one());
        CHECK(c.basis.empty());
    }
    {
        auto c = wronskian_annihilator({RatT(0), RatT(0)});
        CHECK(c.op == OreOperator::one());
    }
}

TEST_CASE("wronskian_annihilator: order, monicity, minimality, Q-linearity") {
    std::mt19937 rng(707);
    for (int iter = 0; iter < 20; ++iter) {
        std::uniform_int_distribution<int> cnt(1, 3);
        std::vector<RatT> alphas;
        int m = cnt(rng);
        for (int i = 0; i < m; ++i) alphas.push_back(testutil::random_rt(rng, 2, 3));
        auto c = wronskian_annihilator(alphas);
        int s = static_cast<int>(c.basis.size());
        CHECK(c.op.order() == s);
        if (!c.op.is_zero()) CHECK(c.op.coeff_at(c.op.order()) == RatT(1));
        for (const auto& a : alphas) CHECK(apply(c.op, a).is_zero());

        // minimality: no nonzero operator of order < s annihilates all inputs;
        // columns j = 0..s-1 carry dt^j(alpha_i)
        if (s > 0) {
            QtMatrix mat(static_cast<int>(alphas.size()), s);
            for (std::size_t i = 0; i < alphas.size(); ++i) {
                RatT v = alphas[i];
                for (int j = 0; j < s; ++j) {
                    mat.at(static_cast<int>(i), j) = v;
                    v = d_t(v);
                }
            }
            CHECK(nullspace(mat).empty());
        }

        // Q-linearity of the annihilated span
        RatT combo(0);
        for (const auto& a : alphas) combo = combo + RatT(Rat(testutil::small_rat(rng))) * a;
        CHECK(apply(c.op, combo).is_zero());
    }
}

TEST_CASE("ring laws on random operator pairs") {
    std::mt19937 rng(808);
    for (int iter = 0; iter < 25; ++iter) {
        OreOperator l1 = testutil::random_operator(rng, 3, 2);
        OreOperator l2 = testutil::random_operator(rng, 3, 2);
        CHECK(ore_multiply(l1, l2).order() == l1.order() + l2.order());
        RatT f = testutil::random_rt(rng, 2, 3);
        CHECK(apply(ore_multiply(l1, l2), f) == apply(l1, apply(l2, f)));
        auto [q, r] = right_divide(l1, l2);
        CHECK(ore_multiply(q, l2) + r == l1);
        CHECK(r.order() < l2.order());
    }
}
