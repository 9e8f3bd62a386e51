#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "dgal/errors.hpp"

namespace dgal {

// Dense univariate polynomial over a field K.  Coefficient c[i] belongs to
// the monomial v^i; the vector carries no trailing zeros, so the zero
// polynomial is the empty vector.  K must be constructible from int and
// support +, -, *, / and ==.
template <class K>
struct Poly {
    std::vector<K> c;

    Poly() = default;
    Poly(const K& k) {
        if (!(k == K(0))) c.push_back(k);
    }
    Poly(int k) : Poly(K(k)) {}

    static Poly variable() {
        Poly p;
        p.c = {K(0), K(1)};
        return p;
    }
    static Poly monomial(const K& k, int deg) {
        Poly p;
        if (k == K(0)) return p;
        p.c.assign(static_cast<std::size_t>(deg) + 1, K(0));
        p.c.back() = k;
        return p;
    }

    bool is_zero() const { return c.empty(); }
    // deg(0) = -1 by convention.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const K& lead() const {
        assert(!c.empty());
        return c.back();
    }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return K(0);
        return c[static_cast<std::size_t>(i)];
    }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& k : r.c) k = K(0) - k;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    Poly scaled(const K& k) const {
        Poly r;
        if (k == K(0)) return r;
        r.c = c;
        for (auto& x : r.c) x = x * k;
        return r;
    }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw DivisionByZero();
        Poly q, r = *this;
        if (r.degree() < d.degree()) return {q, r};
        q.c.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, K(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            K f = r.lead() / d.lead();
            q.c[static_cast<std::size_t>(k)] = f;
            // r -= f * v^k * d
            for (int i = 0; i <= d.degree(); ++i) {
                std::size_t idx = static_cast<std::size_t>(i + k);
                r.c[idx] = r.c[idx] - f * d.c[static_cast<std::size_t>(i)];
            }
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly r = *this;
        K l = lead();
        for (auto& x : r.c) x = x / l;
        return r;
    }

    // Formal derivative with respect to the polynomial variable.
    Poly derivative() const {
        Poly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * K(static_cast<int>(i));
        r.trim();
        return r;
    }

    K eval(const K& v) const {
        K acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
        return acc;
    }

    // Substitute another polynomial for the variable.
    Poly compose(const Poly& g) const {
        Poly acc;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * g + Poly(c[i]);
        return acc;
    }
};

// Monic gcd by the Euclidean algorithm, renormalizing each remainder to keep
// coefficient growth in check.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly<K> r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a;
}

template <class K>
Poly<K> poly_pow(const Poly<K>& p, int e) {
    assert(e >= 0);
    Poly<K> r(K(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

}  // namespace dgal
