#pragma once

#include <optional>
#include <vector>

#include "dgal/types.hpp"

namespace dgal {

// A pole of a rational function in x: either a finite location x_i(t) in
// Q(t) or the place at infinity.
struct PoleSpec {
    bool at_infinity = false;
    RatT location{};  // meaningful iff !at_infinity
    int multiplicity = 1;

    static PoleSpec infinity(int mult = 1) {
        PoleSpec p;
        p.at_infinity = true;
        p.multiplicity = mult;
        return p;
    }
    static PoleSpec finite(RatT loc, int mult = 1) {
        PoleSpec p;
        p.location = std::move(loc);
        p.multiplicity = mult;
        return p;
    }
};

// f = poly(x) + sum over poles i and orders j of coeff[i][j-1] / (x - x_i)^j.
struct PartialFractionForm {
    PolyX polynomial;
    std::vector<RatT> pole_locations;          // pairwise distinct, canonical order
    std::vector<std::vector<RatT>> coefficients;  // coefficients[i][j-1] for order j

    RatXT reassemble() const;
};

struct ResidueList {
    std::vector<std::pair<RatT, RatT>> finite;  // (pole location, residue)
    RatT at_infinity{};
};

// Roots in Q(t) of a squarefree polynomial in x over Q(t).  Throws
// NonSplitDenominator (naming the unsplit factor) when the polynomial has a
// factor with no root in Q(t).
std::vector<RatT> split_roots(const PolyX& squarefree);

// Full linear factorization of an arbitrary denominator: (root, multiplicity)
// pairs in canonical order.
std::vector<std::pair<RatT, int>> split_linear_factors(const PolyX& den);

PartialFractionForm split_partial_fractions(const RatXT& f);

// Arithmetic directly on partial-fraction forms.  Working per pole keeps all
// coefficient work inside Q(t) and avoids re-splitting large fractions.
PartialFractionForm pf_derivative_x(const PartialFractionForm& f);
PartialFractionForm pf_derivative_t(const PartialFractionForm& f);
// acc += scale * f, merging pole lists (canonical order preserved)
void pf_accumulate(PartialFractionForm& acc, const RatT& scale,
                   const PartialFractionForm& f);
bool pf_is_zero(const PartialFractionForm& f);
// antiderivative in x of a residue-free form; throws NonzeroResidue
PartialFractionForm pf_hermite_integrate(const PartialFractionForm& f);

RatT residue(const RatXT& f, const PoleSpec& p);

ResidueList residues(const RatXT& f);

struct ChevalleyReport {
    // One entry per pole of f or dt(f): the identity
    // res_P(dt f) = dt(res_P f) checked exactly.
    std::vector<std::pair<RatT, bool>> per_pole;
    bool all_hold = true;
};

ChevalleyReport chevalley_check(const RatXT& f);

// Antiderivative in x of a residue-free split function; the integration
// constant is fixed to zero.  Throws NonzeroResidue otherwise.
RatXT hermite_integrate(const RatXT& f);

}  // namespace dgal
