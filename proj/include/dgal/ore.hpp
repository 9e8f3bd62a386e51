#pragma once

#include <vector>

#include "dgal/types.hpp"

namespace dgal {

// Element of the Ore ring Q(t)[Dt] with commutation Dt*a = a*Dt + dt(a).
// coeff[i] multiplies Dt^i; nonzero operators carry a nonzero leading
// coefficient, the zero operator has an empty sequence.
struct OreOperator {
    std::vector<RatT> coeff;

    OreOperator() = default;
    explicit OreOperator(std::vector<RatT> c) : coeff(std::move(c)) { trim(); }

    static OreOperator zero() { return OreOperator(); }
    static OreOperator one() { return OreOperator({RatT(1)}); }
    static OreOperator dt() { return OreOperator({RatT(0), RatT(1)}); }
    static OreOperator monomial(const RatT& c, int k);

    bool is_zero() const { return coeff.empty(); }
    // order of the zero operator is -1 by convention
    int order() const { return static_cast<int>(coeff.size()) - 1; }
    RatT coeff_at(int i) const {
        if (i < 0 || i >= static_cast<int>(coeff.size())) return RatT(0);
        return coeff[static_cast<std::size_t>(i)];
    }
    void trim() {
        while (!coeff.empty() && coeff.back().is_zero()) coeff.pop_back();
    }
    OreOperator monic() const;

    friend bool operator==(const OreOperator& a, const OreOperator& b) {
        return a.coeff == b.coeff;
    }
    friend bool operator!=(const OreOperator& a, const OreOperator& b) { return !(a == b); }

    friend OreOperator operator+(const OreOperator& a, const OreOperator& b);
    friend OreOperator operator-(const OreOperator& a, const OreOperator& b);
    friend OreOperator operator-(const OreOperator& a);
};

// L acting on Q(t): sum a_i dt^i(f).
RatT apply(const OreOperator& L, const RatT& f);
// L acting on Q(t)(x), with dt extended by dt(x) = 0.
RatXT apply(const OreOperator& L, const RatXT& f);

OreOperator ore_multiply(const OreOperator& l1, const OreOperator& l2);

// L1 = Q*L2 + R with order(R) < order(L2).
struct OreDivision {
    OreOperator quotient;
    OreOperator remainder;
};
OreDivision right_divide(const OreOperator& l1, const OreOperator& l2);

// Greedy selection (in input order) of a Q-basis of the Q-span of the inputs.
std::vector<RatT> q_linear_basis(const std::vector<RatT>& values);

// Monic operator R of order s = dim_Q span{alpha_i} with R(alpha_i) = 0,
// obtained from the wronskian wr(Y, beta_1..beta_s).
struct AnnihilatorCertificate {
    std::vector<RatT> inputs;
    std::vector<RatT> basis;
    OreOperator op;
};

AnnihilatorCertificate wronskian_annihilator(const std::vector<RatT>& alphas);

}  // namespace dgal
