#pragma once

#include <gmpxx.h>

#include "dgal/poly.hpp"
#include "dgal/ratfunc.hpp"

namespace dgal {

// The field tower Q c Q(t) c Q(t)(x).
using Rat = mpq_class;           // exact rationals, canonical (gcd-reduced, den > 0)
using PolyT = Poly<Rat>;         // Q[t]
using RatT = RatFunc<Rat>;       // Q(t)
using PolyX = Poly<RatT>;        // Q(t)[x]
using RatXT = RatFunc<RatT>;     // Q(t)(x)

// gcd in Q(t)[x] by a fraction-free subresultant remainder sequence over
// Q[t][x]; overloads the generic Euclid, whose coefficient degrees blow up.
Poly<RatFunc<mpq_class>> poly_gcd(const Poly<RatFunc<mpq_class>>& a,
                                  const Poly<RatFunc<mpq_class>>& b);

// gcd in Q[t] by a primitive remainder sequence over Z[t]; overloads the
// generic Euclid, whose rational coefficients blow up.
Poly<mpq_class> poly_gcd(const Poly<mpq_class>& a, const Poly<mpq_class>& b);

inline RatT t_var() { return RatT::variable(); }
inline RatXT x_var() { return RatXT::variable(); }
inline RatXT xt_const(const RatT& a) { return RatXT(PolyX(a)); }

// d/dt on Q(t).
inline RatT d_t(const RatT& f) { return f.derivative(); }

// l_dt(u) = dt(u)/u.
inline RatT log_derivative(const RatT& u) {
    if (u.is_zero()) throw DivisionByZero();
    return d_t(u) / u;
}

// d/dx on Q(t)(x): the polynomial-variable derivative, coefficients constant.
inline RatXT d_x(const RatXT& f) { return f.derivative(); }

namespace detail {
inline PolyX dt_coeffwise(const PolyX& p) {
    PolyX r;
    r.c.resize(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) r.c[i] = d_t(p.c[i]);
    r.trim();
    return r;
}
}  // namespace detail

// d/dt on Q(t)(x): acts on the Q(t) coefficients, dt(x) = 0.  Written with
// u = g0*w, g0 = gcd(u, dt(u)) so the gcd reduction in the constructor works
// on (dn*w - n*s, u*w) instead of the doubled-degree quotient-rule form.
inline RatXT d_t(const RatXT& f) {
    PolyX dn = detail::dt_coeffwise(f.num);
    if (f.den.degree() == 0) return RatXT(dn);
    PolyX dd = detail::dt_coeffwise(f.den);
    if (dd.is_zero()) return RatXT(dn, f.den);
    PolyX g0 = poly_gcd(f.den, dd);
    PolyX w = f.den.divmod(g0).first;
    PolyX s = dd.divmod(g0).first;
    return RatXT(dn * w - f.num * s, f.den * w);
}

// Substitute x = x0(t) into a polynomial / rational function in x.
inline RatT eval_x(const PolyX& p, const RatT& x0) {
    RatT acc(0);
    for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * x0 + p.c[i];
    return acc;
}

inline RatT eval_x(const RatXT& f, const RatT& x0) {
    return eval_x(f.num, x0) / eval_x(f.den, x0);
}

inline Rat eval_rt(const RatT& f, const Rat& t0) {
    Rat d = f.den.eval(t0);
    if (d == 0) throw PoleAtPoint("t-denominator vanishes");
    return f.num.eval(t0) / d;
}

// Exact evaluation of f at a rational point (x0, t0).
inline Rat eval_at(const RatXT& f, const Rat& x0, const Rat& t0) {
    auto eval_polyx = [&](const PolyX& p) {
        Rat acc(0);
        for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * x0 + eval_rt(p.c[i], t0);
        return acc;
    };
    Rat d = eval_polyx(f.den);
    if (d == 0) throw PoleAtPoint("denominator vanishes at (x0, t0)");
    return eval_polyx(f.num) / d;
}

// Canonical ordering of elements of Q(t): by degree in t, then lexicographic
// on denominator and numerator coefficient sequences (high degree first).
inline int compare_rat(const Rat& a, const Rat& b) {
    return cmp(a, b);
}

inline int compare_rt(const RatT& a, const RatT& b) {
    int da = std::max(a.num.degree(), a.den.degree());
    int db = std::max(b.num.degree(), b.den.degree());
    if (da != db) return da < db ? -1 : 1;
    auto cmp_poly = [](const PolyT& p, const PolyT& q) -> int {
        if (p.degree() != q.degree()) return p.degree() < q.degree() ? -1 : 1;
        for (int i = p.degree(); i >= 0; --i) {
            int c = compare_rat(p.coeff(i), q.coeff(i));
            if (c != 0) return c;
        }
        return 0;
    };
    int c = cmp_poly(a.den, b.den);
    if (c != 0) return c;
    return cmp_poly(a.num, b.num);
}

}  // namespace dgal
