#pragma once

#include <vector>

#include "dgal/types.hpp"

namespace dgal {

// Rectangular matrix over Q(t), row-major.
struct QtMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<RatT> entries;

    QtMatrix() = default;
    QtMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, RatT(0)) {}

    RatT& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const RatT& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }
};

// Basis of the right nullspace in reduced echelon form: one vector per free
// column, with a 1 in that column and zeros in the other free columns.
// Forward elimination is fraction-free (Bareiss) on the denominator-cleared
// matrix with deterministic first-nonzero pivoting in fixed column order.
std::vector<std::vector<RatT>> nullspace(const QtMatrix& m);

int rank(const QtMatrix& m);

// Determinant of a square matrix over Q(t) (fraction-free after clearing
// row denominators).
RatT determinant(const QtMatrix& m);

}  // namespace dgal
