#pragma once

#include "dgal/ore.hpp"
#include "dgal/residues.hpp"

namespace dgal {

// Certified identity L(f) = dx(g) with L a nonzero operator in Q(t)[Dt].
struct TelescopeCertificate {
    RatXT input;
    ResidueList residue_data;
    AnnihilatorCertificate annihilator;
    OreOperator op;   // L
    RatXT integral;   // g
};

// Given split f in Q(t)(x), annihilate the finite residues of f dx with a
// wronskian operator R and integrate R(f); returns L = R and g with
// L(f) = dx(g), verified on construction.
TelescopeCertificate telescope(const RatXT& f);

// Independent re-check: recomputes apply(L, f) - dx(g) from scratch.
bool verify_telescope(const TelescopeCertificate& c);

}  // namespace dgal
