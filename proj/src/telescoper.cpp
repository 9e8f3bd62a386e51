#include "dgal/telescoper.hpp"

namespace dgal {

namespace {

// sum_k coeff_k(L) * dt^k(f), computed entirely in partial-fraction space
PartialFractionForm pf_apply(const OreOperator& op, const PartialFractionForm& f) {
    PartialFractionForm acc;
    PartialFractionForm cur = f;
    for (int k = 0; k <= op.order(); ++k) {
        pf_accumulate(acc, op.coeff_at(k), cur);
        if (k < op.order()) cur = pf_derivative_t(cur);
    }
    return acc;
}

}  // namespace

TelescopeCertificate telescope(const RatXT& f) {
    TelescopeCertificate cert;
    cert.input = f;

    PartialFractionForm pf = split_partial_fractions(f);
    RatT sum(0);
    for (std::size_t i = 0; i < pf.pole_locations.size(); ++i) {
        cert.residue_data.finite.emplace_back(pf.pole_locations[i], pf.coefficients[i][0]);
        sum = sum + pf.coefficients[i][0];
    }
    cert.residue_data.at_infinity = RatT(0) - sum;

    // nonzero finite residues of f dx; the residue at infinity is determined
    // by them and annihilated automatically by Q-linearity
    std::vector<RatT> alphas;
    for (const auto& [pole, res] : cert.residue_data.finite)
        if (!res.is_zero()) alphas.push_back(res);
    cert.annihilator = wronskian_annihilator(alphas);
    cert.op = cert.annihilator.op;

    // genus 0: R(f) is residue-free, hence exact
    cert.integral = pf_hermite_integrate(pf_apply(cert.op, pf)).reassemble();
    return cert;
}

bool verify_telescope(const TelescopeCertificate& c) {
    if (c.op.is_zero()) return false;
    // recompute L(f) from scratch and compare canonical forms with dx(g);
    // this never splits the (potentially large) integral
    RatXT lhs = pf_apply(c.op, split_partial_fractions(c.input)).reassemble();
    return lhs == d_x(c.integral);
}

}  // namespace dgal
