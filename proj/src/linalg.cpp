#include "dgal/linalg.hpp"

#include <utility>

namespace dgal {

namespace {

PolyT poly_lcm(const PolyT& a, const PolyT& b) {
    PolyT g = poly_gcd(a, b);
    return (a * b).divmod(g).first.monic();
}

// Exact division in Q[t]; Bareiss guarantees zero remainder.
PolyT exact_div(const PolyT& a, const PolyT& b) {
    auto [q, r] = a.divmod(b);
    assert(r.is_zero());
    return q;
}

struct Echelon {
    std::vector<std::vector<PolyT>> m;  // row echelon, fraction-free
    std::vector<int> pivot_cols;        // increasing
    int sign = 1;                       // row-swap parity
    std::vector<RatT> row_scales;       // original row multipliers (nonzero)
};

// Fraction-free (Bareiss) forward elimination after clearing denominators
// row-wise.  Pivots are chosen as the first row with a nonzero entry in the
// leftmost remaining column.
Echelon eliminate(const QtMatrix& in) {
    Echelon e;
    e.m.assign(static_cast<std::size_t>(in.rows), {});
    for (int i = 0; i < in.rows; ++i) {
        PolyT l(Rat(1));
        for (int j = 0; j < in.cols; ++j) {
            const PolyT& d = in.at(i, j).den;
            if (d.degree() > 0) l = poly_lcm(l, d);
        }
        e.row_scales.push_back(RatT(l));
        auto& row = e.m[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(in.cols));
        for (int j = 0; j < in.cols; ++j) {
            const RatT& v = in.at(i, j);
            row[static_cast<std::size_t>(j)] = v.num * exact_div(l, v.den);
        }
    }

    PolyT prev(Rat(1));
    int r = 0;
    for (int col = 0; col < in.cols && r < in.rows; ++col) {
        int piv = -1;
        for (int i = r; i < in.rows; ++i) {
            if (!e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) {
            std::swap(e.m[static_cast<std::size_t>(piv)], e.m[static_cast<std::size_t>(r)]);
            e.sign = -e.sign;
        }
        const auto& prow = e.m[static_cast<std::size_t>(r)];
        PolyT pval = prow[static_cast<std::size_t>(col)];
        for (int i = r + 1; i < in.rows; ++i) {
            auto& row = e.m[static_cast<std::size_t>(i)];
            PolyT head = row[static_cast<std::size_t>(col)];
            for (int j = col; j < in.cols; ++j) {
                PolyT v = pval * row[static_cast<std::size_t>(j)] -
                          head * prow[static_cast<std::size_t>(j)];
                row[static_cast<std::size_t>(j)] = exact_div(v, prev);
            }
        }
        prev = pval;
        e.pivot_cols.push_back(col);
        ++r;
    }
    return e;
}

}  // namespace

int rank(const QtMatrix& m) { return static_cast<int>(eliminate(m).pivot_cols.size()); }

std::vector<std::vector<RatT>> nullspace(const QtMatrix& m) {
    Echelon e = eliminate(m);
    int r = static_cast<int>(e.pivot_cols.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<RatT>> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<RatT> v(static_cast<std::size_t>(m.cols), RatT(0));
        v[static_cast<std::size_t>(f)] = RatT(1);
        for (int i = r - 1; i >= 0; --i) {
            int pc = e.pivot_cols[static_cast<std::size_t>(i)];
            const auto& row = e.m[static_cast<std::size_t>(i)];
            RatT acc(0);
            for (int j = pc + 1; j < m.cols; ++j) {
                if (v[static_cast<std::size_t>(j)].is_zero()) continue;
                acc = acc + RatT(row[static_cast<std::size_t>(j)]) * v[static_cast<std::size_t>(j)];
            }
            v[static_cast<std::size_t>(pc)] =
                (RatT(0) - acc) / RatT(row[static_cast<std::size_t>(pc)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RatT determinant(const QtMatrix& m) {
    assert(m.rows == m.cols);
    if (m.rows == 0) return RatT(1);
    Echelon e = eliminate(m);
    if (static_cast<int>(e.pivot_cols.size()) < m.rows) return RatT(0);
    // Bareiss: after full elimination the last pivot equals the determinant
    // of the cleared matrix.
    PolyT det = e.m[static_cast<std::size_t>(m.rows - 1)][static_cast<std::size_t>(
        e.pivot_cols.back())];
    RatT result(det);
    if (e.sign < 0) result = RatT(0) - result;
    for (const RatT& s : e.row_scales) result = result / s;
    return result;
}

}  // namespace dgal
