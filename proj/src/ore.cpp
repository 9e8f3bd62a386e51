#include "dgal/ore.hpp"

#include "dgal/linalg.hpp"

namespace dgal {

OreOperator OreOperator::monomial(const RatT& c, int k) {
    if (c.is_zero()) return zero();
    std::vector<RatT> v(static_cast<std::size_t>(k) + 1, RatT(0));
    v.back() = c;
    return OreOperator(std::move(v));
}

OreOperator OreOperator::monic() const {
    if (is_zero()) return *this;
    std::vector<RatT> c = coeff;
    RatT l = c.back();
    for (auto& x : c) x = x / l;
    return OreOperator(std::move(c));
}

OreOperator operator+(const OreOperator& a, const OreOperator& b) {
    std::vector<RatT> c(std::max(a.coeff.size(), b.coeff.size()), RatT(0));
    for (std::size_t i = 0; i < a.coeff.size(); ++i) c[i] = a.coeff[i];
    for (std::size_t i = 0; i < b.coeff.size(); ++i) c[i] = c[i] + b.coeff[i];
    return OreOperator(std::move(c));
}

OreOperator operator-(const OreOperator& a) {
    std::vector<RatT> c = a.coeff;
    for (auto& x : c) x = RatT(0) - x;
    return OreOperator(std::move(c));
}

OreOperator operator-(const OreOperator& a, const OreOperator& b) { return a + (-b); }

RatT apply(const OreOperator& L, const RatT& f) {
    RatT acc(0), d = f;
    for (std::size_t i = 0; i < L.coeff.size(); ++i) {
        if (!L.coeff[i].is_zero()) acc = acc + L.coeff[i] * d;
        d = d_t(d);
    }
    return acc;
}

RatXT apply(const OreOperator& L, const RatXT& f) {
    RatXT acc(0), d = f;
    for (std::size_t i = 0; i < L.coeff.size(); ++i) {
        if (!L.coeff[i].is_zero()) acc = acc + xt_const(L.coeff[i]) * d;
        d = d_t(d);
    }
    return acc;
}

OreOperator ore_multiply(const OreOperator& l1, const OreOperator& l2) {
    if (l1.is_zero() || l2.is_zero()) return OreOperator::zero();
    // Dt^i . l2 built incrementally: Dt.(sum b_j Dt^j) = sum dt(b_j) Dt^j + b_j Dt^{j+1}
    OreOperator acc = OreOperator::zero();
    OreOperator shifted = l2;
    for (std::size_t i = 0; i < l1.coeff.size(); ++i) {
        if (!l1.coeff[i].is_zero()) {
            std::vector<RatT> scaled = shifted.coeff;
            for (auto& c : scaled) c = l1.coeff[i] * c;
            acc = acc + OreOperator(std::move(scaled));
        }
        std::vector<RatT> next(shifted.coeff.size() + 1, RatT(0));
        for (std::size_t j = 0; j < shifted.coeff.size(); ++j) {
            next[j] = next[j] + d_t(shifted.coeff[j]);
            next[j + 1] = next[j + 1] + shifted.coeff[j];
        }
        shifted = OreOperator(std::move(next));
    }
    return acc;
}

OreDivision right_divide(const OreOperator& l1, const OreOperator& l2) {
    if (l2.is_zero()) throw DivisorZero();
    OreOperator q = OreOperator::zero();
    OreOperator r = l1;
    while (!r.is_zero() && r.order() >= l2.order()) {
        int k = r.order() - l2.order();
        RatT c = r.coeff.back() / l2.coeff.back();
        OreOperator mono = OreOperator::monomial(c, k);
        q = q + mono;
        r = r - ore_multiply(mono, l2);
    }
    return {q, r};
}

std::vector<RatT> q_linear_basis(const std::vector<RatT>& values) {
    // Put all inputs over one common denominator; Q-linear relations among
    // the values are then relations among the numerator polynomials, decided
    // by elimination on rational coefficient vectors.
    PolyT common(Rat(1));
    for (const auto& v : values) {
        if (v.is_zero()) continue;
        PolyT g = poly_gcd(common, v.den);
        common = (common * v.den).divmod(g).first.monic();
    }
    std::vector<RatT> basis;
    std::vector<std::vector<Rat>> echelon;  // reduced rows, pivot-normalized
    std::vector<int> pivots;
    for (const auto& v : values) {
        if (v.is_zero()) continue;
        PolyT numer = v.num * common.divmod(v.den).first;
        std::vector<Rat> row(static_cast<std::size_t>(numer.degree()) + 1);
        for (int i = 0; i <= numer.degree(); ++i) row[static_cast<std::size_t>(i)] = numer.coeff(i);
        // reduce against current echelon
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            int p = pivots[k];
            if (p >= static_cast<int>(row.size())) continue;
            Rat f = row[static_cast<std::size_t>(p)];
            if (f == 0) continue;
            for (std::size_t j = 0; j < echelon[k].size(); ++j) {
                if (j >= row.size()) row.resize(j + 1, Rat(0));
                row[j] -= f * echelon[k][j];
            }
        }
        int pivot = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) {
                pivot = static_cast<int>(j);
                break;
            }
        if (pivot < 0) continue;
        Rat l = row[static_cast<std::size_t>(pivot)];
        for (auto& x : row) x /= l;
        echelon.push_back(std::move(row));
        pivots.push_back(pivot);
        basis.push_back(v);
    }
    return basis;
}

AnnihilatorCertificate wronskian_annihilator(const std::vector<RatT>& alphas) {
    AnnihilatorCertificate cert;
    cert.inputs = alphas;
    cert.basis = q_linear_basis(alphas);
    int s = static_cast<int>(cert.basis.size());
    if (s == 0) {
        // only the zero function to annihilate; the order-0 identity works
        cert.op = OreOperator::one();
        return cert;
    }
    // R(Y) = wr(Y, beta_1..beta_s), expanded along the Y row: the Dt^j
    // coefficient is the signed s x s minor of derivatives of the betas.
    std::vector<std::vector<RatT>> derivs(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        RatT d = cert.basis[static_cast<std::size_t>(i)];
        for (int j = 0; j <= s; ++j) {
            derivs[static_cast<std::size_t>(i)].push_back(d);
            d = d_t(d);
        }
    }
    std::vector<RatT> coeff(static_cast<std::size_t>(s) + 1, RatT(0));
    for (int j = 0; j <= s; ++j) {
        QtMatrix minor(s, s);
        for (int i = 0; i < s; ++i) {
            int cc = 0;
            for (int col = 0; col <= s; ++col) {
                if (col == j) continue;
                minor.at(i, cc++) = derivs[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            }
        }
        RatT m = determinant(minor);
        if ((j % 2) != 0) m = RatT(0) - m;
        coeff[static_cast<std::size_t>(j)] = m;
    }
    cert.op = OreOperator(std::move(coeff)).monic();
    return cert;
}

}  // namespace dgal
