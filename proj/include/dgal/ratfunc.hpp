#pragma once

#include "dgal/poly.hpp"

namespace dgal {

// Fraction field of Poly<K>.  Invariants: num and den coprime, den monic,
// zero is 0/1.  Equality of canonical forms is equality of values.
template <class K>
struct RatFunc {
    Poly<K> num{};
    Poly<K> den{Poly<K>(K(1))};

    RatFunc() = default;
    RatFunc(const K& k) : num(k), den(K(1)) {}
    RatFunc(int k) : num(K(k)), den(K(1)) {}
    RatFunc(Poly<K> n) : num(std::move(n)), den(K(1)) {}
    RatFunc(Poly<K> n, Poly<K> d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    static RatFunc variable() { return RatFunc(Poly<K>::variable()); }

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.degree() == 0; }

    void normalize() {
        if (den.is_zero()) throw ZeroDenominator();
        if (num.is_zero()) {
            den = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num.divmod(g).first;
            den = den.divmod(g).first;
        }
        K l = den.lead();
        if (!(l == K(1))) {
            Poly<K> dl;
            dl.c = den.c;
            for (auto& x : dl.c) x = x / l;
            den = dl;
            Poly<K> nl;
            nl.c = num.c;
            for (auto& x : nl.c) x = x / l;
            num = nl;
        }
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num = -r.num;
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RatFunc(a.num * b.den, a.den * b.num);
    }

    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero();
        return RatFunc(den, num);
    }

    RatFunc pow(int e) const {
        if (e < 0) return inv().pow(-e);
        RatFunc r(1);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // Derivative with respect to the polynomial variable.  With u = g0*w,
    // g0 = gcd(u, u'), the value is (n'w - n*(u'/g0)) / (u*w); in char 0 this
    // is already in lowest terms (every prime of u fails to divide n'w - n*s),
    // so no gcd reduction of the result is needed.
    RatFunc derivative() const {
        if (den.degree() == 0) {
            RatFunc r;
            r.num = num.derivative();
            return r;
        }
        Poly<K> du = den.derivative();
        Poly<K> g0 = poly_gcd(den, du);
        Poly<K> w = den.divmod(g0).first;
        Poly<K> s = du.divmod(g0).first;
        Poly<K> nn = num.derivative() * w - num * s;
        if (nn.is_zero()) return RatFunc();
        RatFunc r;
        r.num = std::move(nn);
        r.den = den * w;
        return r;
    }
};

}  // namespace dgal
