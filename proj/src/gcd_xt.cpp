#include <cassert>

#include "dgal/types.hpp"

namespace dgal {

namespace {

// Q[t][x]: x-polynomials with integer-free polynomial coefficients in t.
using PolyXZ = Poly<PolyT>;

PolyT exact_div_qt(const PolyT& a, const PolyT& b) {
    auto [q, r] = a.divmod(b);
    assert(r.is_zero());
    return q;
}

PolyXZ scale_coeffs(const PolyXZ& p, const PolyT& k) {
    PolyXZ r;
    if (k.is_zero()) return r;
    r.c = p.c;
    for (auto& c : r.c) c = c * k;
    return r;
}

PolyXZ divide_coeffs(const PolyXZ& p, const PolyT& k) {
    PolyXZ r;
    r.c = p.c;
    for (auto& c : r.c) c = exact_div_qt(c, k);
    return r;
}

// clear coefficient denominators (all monic by canonicality)
PolyXZ clear_denominators(const Poly<RatT>& p) {
    PolyT l(Rat(1));
    for (const auto& c : p.c) {
        if (c.den.degree() > 0) {
            PolyT g = poly_gcd(l, c.den);
            l = exact_div_qt(l * c.den, g);
        }
    }
    PolyXZ r;
    r.c.resize(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i)
        r.c[i] = p.c[i].num * exact_div_qt(l, p.c[i].den);
    r.trim();
    return r;
}

PolyT content(const PolyXZ& p) {
    PolyT g;
    for (const auto& c : p.c)
        if (!c.is_zero()) g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    return g;
}

PolyXZ primitive_part(const PolyXZ& p) {
    if (p.is_zero()) return p;
    return divide_coeffs(p, content(p));
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, ring operations only
PolyXZ pseudo_rem(PolyXZ a, const PolyXZ& b) {
    int e = a.degree() - b.degree() + 1;
    const PolyT lb = b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        PolyXZ shift = PolyXZ::monomial(a.lead(), a.degree() - b.degree());
        a = scale_coeffs(a, lb) - shift * b;
        --e;
    }
    for (int i = 0; i < e; ++i) a = scale_coeffs(a, lb);
    return a;
}

PolyT pow_qt(const PolyT& p, int e) {
    PolyT r(Rat(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

Poly<RatT> lift(const PolyXZ& p) {
    Poly<RatT> r;
    r.c.resize(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) r.c[i] = RatT(p.c[i]);
    r.trim();
    return r;
}

}  // namespace

Poly<RatFunc<mpq_class>> poly_gcd(const Poly<RatFunc<mpq_class>>& pa,
                                  const Poly<RatFunc<mpq_class>>& pb) {
    if (pa.is_zero()) return pb.monic();
    if (pb.is_zero()) return pa.monic();

    PolyXZ a = primitive_part(clear_denominators(pa));
    PolyXZ b = primitive_part(clear_denominators(pb));
    if (a.degree() < b.degree()) std::swap(a, b);

    PolyT g(Rat(1)), h(Rat(1));
    for (;;) {
        if (b.degree() == 0) return Poly<RatT>(RatT(1));
        int delta = a.degree() - b.degree();
        PolyXZ r = pseudo_rem(a, b);
        if (r.is_zero()) break;
        a = b;
        b = divide_coeffs(r, g * pow_qt(h, delta));
        g = a.lead();
        h = delta == 0 ? h : exact_div_qt(pow_qt(g, delta), pow_qt(h, delta - 1));
    }
    return lift(primitive_part(b)).monic();
}

namespace {

// Z[t], dense, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(ZPoly& v) {
    mpz_class g(0);
    for (const auto& z : v) g = gcd(g, z);
    if (g > 1)
        for (auto& z : v) z /= g;
}

ZPoly to_primitive_z(const Poly<mpq_class>& p) {
    mpz_class l(1);
    for (const auto& q : p.c) l = lcm(l, mpz_class(q.get_den()));
    ZPoly v(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        mpq_class q = p.c[i] * l;
        q.canonicalize();
        v[i] = q.get_num();
    }
    make_primitive(v);
    return v;
}

// a := (an associate of) prem(a, b): each reduction step scales a by lc(b),
// which is harmless because callers re-extract the primitive part anyway
void zprem(ZPoly& a, const ZPoly& b) {
    const mpz_class lb = b.back();
    while (a.size() >= b.size()) {
        mpz_class top = a.back();
        std::size_t k = a.size() - b.size();
        for (auto& z : a) z *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= top * b[i];
        ztrim(a);
        if (a.empty()) return;
    }
}

}  // namespace

Poly<mpq_class> poly_gcd(const Poly<mpq_class>& pa, const Poly<mpq_class>& pb) {
    if (pa.is_zero()) return pb.monic();
    if (pb.is_zero()) return pa.monic();
    if (pa.degree() == 0 || pb.degree() == 0) return Poly<mpq_class>(mpq_class(1));

    ZPoly a = to_primitive_z(pa);
    ZPoly b = to_primitive_z(pb);
    if (a.size() < b.size()) std::swap(a, b);

    for (;;) {
        if (b.size() == 1) return Poly<mpq_class>(mpq_class(1));
        zprem(a, b);
        if (a.empty()) break;
        make_primitive(a);
        std::swap(a, b);
    }

    Poly<mpq_class> r;
    r.c.resize(b.size());
    mpq_class lead(b.back());
    for (std::size_t i = 0; i < b.size(); ++i) r.c[i] = mpq_class(b[i]) / lead;
    return r;
}

}  // namespace dgal
