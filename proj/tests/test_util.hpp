#pragma once

// Deterministic random inputs shared by the unit and property suites.  All
// generators take an explicit engine so each test controls its own seed.

#include <random>
#include <vector>

#include "dgal/expr.hpp"
#include "dgal/ore.hpp"
#include "dgal/types.hpp"

namespace dgal::testutil {

inline Rat small_rat(std::mt19937& rng, int max_abs = 5, int max_den = 3) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_den);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Rat nonzero_small_rat(std::mt19937& rng, int max_abs = 5, int max_den = 3) {
    for (;;) {
        Rat r = small_rat(rng, max_abs, max_den);
        if (r != 0) return r;
    }
}

// Random element of Q[t] of degree <= max_deg.
inline PolyT random_polyt(std::mt19937& rng, int max_deg, int max_abs = 5) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    PolyT p;
    p.c.resize(static_cast<std::size_t>(d) + 1);
    for (auto& c : p.c) c = small_rat(rng, max_abs, 2);
    p.trim();
    return p;
}

inline PolyT nonzero_random_polyt(std::mt19937& rng, int max_deg, int max_abs = 5) {
    for (;;) {
        PolyT p = random_polyt(rng, max_deg, max_abs);
        if (!p.is_zero()) return p;
    }
}

// Random element of Q(t) with numerator and denominator degrees <= max_deg.
inline RatT random_rt(std::mt19937& rng, int max_deg, int max_abs = 5) {
    return RatT(random_polyt(rng, max_deg, max_abs),
                nonzero_random_polyt(rng, max_deg, max_abs));
}

inline RatT nonzero_random_rt(std::mt19937& rng, int max_deg, int max_abs = 5) {
    for (;;) {
        RatT r = random_rt(rng, max_deg, max_abs);
        if (!r.is_zero()) return r;
    }
}

// Pole locations of the shapes q, q + r*t, t^2 with small rationals q, r.
inline std::vector<RatT> pole_candidates() {
    RatT t = t_var();
    return {
        RatT(0),          RatT(1),           RatT(-1),
        RatT(2),          RatT(Rat(1, 2)),   t,
        t + RatT(1),      RatT(1) - t,       RatT(2) * t,
        RatT(2) * t - RatT(3),               t * t,
    };
}

// Random split rational function: numerator of x-degree <= num_deg with
// Q[t]-coefficients, denominator a product of (x - x_i)^{e_i} over <= max_poles
// distinct candidate poles with orders <= max_order.
inline RatXT random_split(std::mt19937& rng, int max_poles = 4, int max_order = 3,
                          int num_deg = 3) {
    static const std::vector<RatT> cands = pole_candidates();
    std::uniform_int_distribution<int> npoles(1, max_poles);
    std::uniform_int_distribution<int> order(1, max_order);
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);

    std::vector<std::size_t> chosen;
    int want = npoles(rng);
    while (static_cast<int>(chosen.size()) < want) {
        std::size_t i = pick(rng);
        bool dup = false;
        for (std::size_t j : chosen) dup = dup || j == i;
        if (!dup) chosen.push_back(i);
    }

    PolyX den(RatT(1));
    for (std::size_t i : chosen) {
        PolyX factor = PolyX::variable() - PolyX(cands[i]);
        den = den * poly_pow(factor, order(rng));
    }

    PolyX num;
    for (;;) {
        num.c.clear();
        num.c.resize(static_cast<std::size_t>(num_deg) + 1);
        for (auto& c : num.c) c = RatT(random_polyt(rng, 1, 3));
        num.trim();
        if (!num.is_zero()) break;
    }
    return RatXT(num, den);
}

// Random nonzero operator in Q(t)[Dt] of order <= max_order with coefficient
// degrees <= coeff_deg.
inline OreOperator random_operator(std::mt19937& rng, int max_order = 4,
                                   int coeff_deg = 3) {
    std::uniform_int_distribution<int> order(0, max_order);
    int m = order(rng);
    std::vector<RatT> coeff(static_cast<std::size_t>(m) + 1);
    for (auto& c : coeff) c = random_rt(rng, coeff_deg, 3);
    coeff.back() = nonzero_random_rt(rng, coeff_deg, 3);
    return OreOperator(std::move(coeff));
}

}  // namespace dgal::testutil
