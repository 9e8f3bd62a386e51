#include "dgal/residues.hpp"

#include <algorithm>
#include <map>

#include "dgal/expr.hpp"

namespace dgal {

namespace {

// Yun's squarefree decomposition: den = prod factors[i].first ^ factors[i].second.
std::vector<std::pair<PolyX, int>> squarefree_decomposition(const PolyX& p) {
    std::vector<std::pair<PolyX, int>> out;
    if (p.degree() <= 0) return out;
    PolyX a = p.monic();
    PolyX da = a.derivative();
    PolyX g = poly_gcd(a, da);
    PolyX w = a.divmod(g).first;
    PolyX y = da.divmod(g).first;
    int i = 1;
    while (w.degree() > 0) {
        PolyX z = y - w.derivative();
        PolyX f = poly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, i);
        w = w.divmod(f).first;
        y = z.divmod(f).first;
        ++i;
    }
    return out;
}

// ---- rational roots of an integer polynomial -------------------------------

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> divs;
    if (n == 0) return divs;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

// All rational roots of a nonzero polynomial with rational coefficients.
std::vector<Rat> rational_roots(const Poly<Rat>& p) {
    std::vector<Rat> roots;
    if (p.degree() <= 0) return roots;
    // scale to primitive integer coefficients
    mpz_class den_lcm = 1;
    for (const Rat& c : p.c) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<mpz_class> a(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        Rat v = p.c[i] * Rat(den_lcm);
        a[i] = v.get_num();
    }
    // strip powers of x
    std::size_t low = 0;
    while (low < a.size() && a[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    mpz_class a0 = a[low];
    mpz_class ad = a.back();
    auto is_root = [&](const Rat& r) {
        Rat acc(0);
        for (std::size_t i = a.size(); i-- > low;) acc = acc * r + Rat(a[i]);
        return acc == 0;
    };
    for (const mpz_class& pnum : positive_divisors(a0)) {
        for (const mpz_class& qden : positive_divisors(ad)) {
            Rat r(pnum, qden);
            r.canonicalize();
            if (is_root(r)) roots.push_back(r);
            Rat rn = -r;
            if (is_root(rn)) roots.push_back(rn);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Rat& x, const Rat& y) { return x < y; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// ---- truncated power series in s over Q ------------------------------------

using Series = std::vector<Rat>;  // coefficients of s^0..s^{K-1}

Series series_trunc(Series a, std::size_t k) {
    if (a.size() > k) a.resize(k);
    return a;
}

Series series_add(const Series& a, const Series& b) {
    Series r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Series series_sub(const Series& a, const Series& b) {
    Series r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Series series_mul(const Series& a, const Series& b, std::size_t k) {
    Series r(std::min(k, a.size() + b.size() ? a.size() + b.size() - 1 : 0), Rat(0));
    if (a.empty() || b.empty()) return Series();
    for (std::size_t i = 0; i < a.size() && i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < k; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// inverse of a unit series by Newton iteration
Series series_inv(const Series& u, std::size_t k) {
    assert(!u.empty() && u[0] != 0);
    Series v{Rat(1) / u[0]};
    std::size_t prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        Series uv = series_mul(series_trunc(u, prec), v, prec);
        Series two{Rat(2)};
        v = series_mul(v, series_sub(two, uv), prec);
    }
    return series_trunc(v, k);
}

// evaluate sum coeffs[i](s) * X(s)^i truncated to k terms
Series series_poly_eval(const std::vector<Series>& coeffs, const Series& x, std::size_t k) {
    Series acc;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = series_trunc(series_add(series_mul(acc, x, k), coeffs[i]), k);
    }
    return acc;
}

PolyT series_to_poly(const Series& s) {
    PolyT p;
    p.c = s;
    p.trim();
    return p;
}

// Pade-style rational reconstruction: find u, v in Q[s] with deg <= dmax,
// v(0) != 0 and v*w == u mod s^{2*dmax+1}.  Returns false when none exists.
bool rational_reconstruct(const Series& w, int dmax, PolyT& u_out, PolyT& v_out) {
    std::size_t modlen = static_cast<std::size_t>(2 * dmax + 1);
    PolyT r0 = PolyT::monomial(Rat(1), static_cast<int>(modlen));
    PolyT r1 = series_to_poly(series_trunc(w, modlen));
    PolyT v0(Rat(0)), v1(Rat(1));
    while (!r1.is_zero() && r1.degree() > dmax) {
        auto [q, r2] = r0.divmod(r1);
        PolyT v2 = v0 - q * v1;
        r0 = r1;
        r1 = r2;
        v0 = v1;
        v1 = v2;
    }
    if (v1.is_zero() || v1.coeff(0) == 0) return false;
    if (v1.degree() > dmax) return false;
    u_out = r1;
    v_out = v1;
    return true;
}

// ---- root finding in Q(t) --------------------------------------------------

PolyX linear_factor(const RatT& root) {
    PolyX p;
    p.c = {RatT(0) - root, RatT(1)};
    return p;
}

}  // namespace

std::vector<RatT> split_roots(const PolyX& squarefree) {
    std::vector<RatT> roots;
    int d = squarefree.degree();
    if (d <= 0) return roots;
    if (d == 1) {
        roots.push_back((RatT(0) - squarefree.coeff(0)) / squarefree.coeff(1));
        return roots;
    }
    // clear coefficient denominators: c[k] in Q[t]
    PolyT lcm_den(Rat(1));
    for (const RatT& c : squarefree.c) {
        if (c.den.degree() > 0) {
            PolyT g = poly_gcd(lcm_den, c.den);
            lcm_den = (lcm_den * c.den).divmod(g).first.monic();
        }
    }
    std::vector<PolyT> coeffs(squarefree.c.size());
    int dmax = 0;
    for (std::size_t k = 0; k < squarefree.c.size(); ++k) {
        coeffs[k] = squarefree.c[k].num * lcm_den.divmod(squarefree.c[k].den).first;
        dmax = std::max(dmax, coeffs[k].degree());
    }
    if (dmax == 0) {
        // constant coefficients: roots are the rational roots of a Q-polynomial
        Poly<Rat> pq;
        pq.c.resize(coeffs.size());
        for (std::size_t k = 0; k < coeffs.size(); ++k) pq.c[k] = coeffs[k].coeff(0);
        pq.trim();
        for (const Rat& r : rational_roots(pq)) roots.push_back(RatT(Rat(r)));
        goto done;
    }
    {
        // pick an expansion point t0 where the reduction stays squarefree
        Rat t0;
        Poly<Rat> p0;
        bool found = false;
        for (int cand = 0; cand < 64 && !found; ++cand) {
            Rat c = (cand % 2 == 0) ? Rat(cand / 2) : Rat(-(cand + 1) / 2);
            if (coeffs.back().eval(c) == 0) continue;
            Poly<Rat> trial;
            trial.c.resize(coeffs.size());
            for (std::size_t k = 0; k < coeffs.size(); ++k) trial.c[k] = coeffs[k].eval(c);
            trial.trim();
            Poly<Rat> g = poly_gcd(trial, trial.derivative());
            if (g.degree() == 0) {
                t0 = c;
                p0 = trial;
                found = true;
            }
        }
        assert(found);  // the discriminant has finitely many roots

        std::size_t prec = static_cast<std::size_t>(2 * dmax + 1);
        // recenter coefficients at t0: c_k(t0 + s)
        PolyT shift;
        shift.c = {t0, Rat(1)};
        std::vector<Series> centered(coeffs.size());
        std::vector<Series> centered_d(coeffs.size() ? coeffs.size() - 1 : 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) centered[k] = coeffs[k].compose(shift).c;
        for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
            PolyT dk = coeffs[k + 1].scaled(Rat(static_cast<long>(k + 1)));
            centered_d[k] = dk.compose(shift).c;
        }

        for (const Rat& r : rational_roots(p0)) {
            // Newton lifting of the simple root r to a series root mod s^prec
            Series x{r};
            std::size_t cur = 1;
            while (cur < prec) {
                cur = std::min(2 * cur, prec);
                Series fx = series_poly_eval(centered, x, cur);
                Series dfx = series_poly_eval(centered_d, x, cur);
                x = series_trunc(series_sub(x, series_mul(fx, series_inv(dfx, cur), cur)), cur);
            }
            PolyT u, v;
            if (!rational_reconstruct(x, dmax, u, v)) continue;
            // back to the t variable: s = t - t0
            PolyT unshift;
            unshift.c = {-t0, Rat(1)};
            RatT candidate(u.compose(unshift), v.compose(unshift));
            if (eval_x(squarefree, candidate).is_zero()) roots.push_back(candidate);
        }
    }
done:
    std::sort(roots.begin(), roots.end(),
              [](const RatT& a, const RatT& b) { return compare_rt(a, b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (static_cast<int>(roots.size()) < d) {
        PolyX rem = squarefree.monic();
        for (const RatT& r : roots) rem = rem.divmod(linear_factor(r)).first;
        throw NonSplitDenominator(serialize(rem));
    }
    return roots;
}

std::vector<std::pair<RatT, int>> split_linear_factors(const PolyX& den) {
    std::vector<std::pair<RatT, int>> out;
    for (const auto& [factor, mult] : squarefree_decomposition(den)) {
        for (const RatT& r : split_roots(factor)) out.emplace_back(r, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return compare_rt(a.first, b.first) < 0;
    });
    return out;
}

namespace {

// x-polynomials over Q[t] with one scalar denominator, p/d.  Ring operations
// stay gcd-free, which keeps the common-denominator assembly cheap; only the
// final lift back to Q(t) coefficients normalizes.
struct QXPoly {
    Poly<PolyT> p;
    PolyT d{Rat(1)};
};

PolyT exact_div_t(const PolyT& a, const PolyT& b) { return a.divmod(b).first; }

QXPoly qx_mul(const QXPoly& a, const QXPoly& b) { return {a.p * b.p, a.d * b.d}; }

QXPoly qx_add(const QXPoly& a, const QXPoly& b) {
    PolyT g = poly_gcd(a.d, b.d);
    PolyT ar = exact_div_t(a.d, g), br = exact_div_t(b.d, g);
    QXPoly r;
    r.p = a.p.scaled(br) + b.p.scaled(ar);
    r.d = a.d * br;
    return r;
}

QXPoly qx_const(const RatT& c) { return {Poly<PolyT>(c.num), c.den}; }

// x - a as (den(a)*x - num(a)) / den(a), i.e. still monic after the lift
QXPoly qx_linear(const RatT& a) {
    QXPoly r;
    r.p.c = {-a.num, a.den};
    r.d = a.den;
    return r;
}

QXPoly qx_pow(const QXPoly& b, int e) {
    QXPoly r = qx_const(RatT(1));
    for (int i = 0; i < e; ++i) r = qx_mul(r, b);
    return r;
}

QXPoly qx_from_polyx(const PolyX& q) {
    QXPoly r;
    for (const auto& c : q.c) {
        PolyT g = poly_gcd(r.d, c.den);
        r.d = r.d * exact_div_t(c.den, g);
    }
    r.p.c.resize(q.c.size());
    for (std::size_t i = 0; i < q.c.size(); ++i)
        r.p.c[i] = q.c[i].num * exact_div_t(r.d, q.c[i].den);
    r.p.trim();
    return r;
}

PolyX qx_lift(const QXPoly& q) {
    PolyX r;
    r.c.resize(q.p.c.size());
    for (std::size_t i = 0; i < q.p.c.size(); ++i) r.c[i] = RatT(q.p.c[i], q.d);
    r.trim();
    return r;
}

}  // namespace

RatXT PartialFractionForm::reassemble() const {
    // common-denominator assembly; with nonzero top coefficients at distinct
    // poles the result is already in lowest terms with a monic denominator
    std::vector<RatT> poles;
    std::vector<std::vector<RatT>> coeffs;
    for (std::size_t i = 0; i < pole_locations.size(); ++i) {
        std::vector<RatT> c = coefficients[i];
        while (!c.empty() && c.back().is_zero()) c.pop_back();
        if (c.empty()) continue;
        poles.push_back(pole_locations[i]);
        coeffs.push_back(std::move(c));
    }
    if (poles.empty()) return RatXT(polynomial);

    std::vector<QXPoly> lin(poles.size()), factor_pow(poles.size());
    QXPoly den = qx_const(RatT(1));
    for (std::size_t i = 0; i < poles.size(); ++i) {
        lin[i] = qx_linear(poles[i]);
        factor_pow[i] = qx_pow(lin[i], static_cast<int>(coeffs[i].size()));
        den = qx_mul(den, factor_pow[i]);
    }
    QXPoly num = qx_mul(qx_from_polyx(polynomial), den);
    for (std::size_t i = 0; i < poles.size(); ++i) {
        QXPoly inner;  // sum_j c_j * lin^{E - j} by Horner
        for (const RatT& c : coeffs[i]) inner = qx_add(qx_mul(inner, lin[i]), qx_const(c));
        QXPoly others = qx_const(RatT(1));
        for (std::size_t k = 0; k < poles.size(); ++k)
            if (k != i) others = qx_mul(others, factor_pow[k]);
        num = qx_add(num, qx_mul(inner, others));
    }
    RatXT r;
    r.num = qx_lift(num);
    if (r.num.is_zero()) return RatXT(0);
    r.den = qx_lift(den);
    return r;
}

namespace {

// drop zero top-order coefficients and empty poles
void pf_trim(PartialFractionForm& f) {
    std::vector<RatT> poles;
    std::vector<std::vector<RatT>> coeffs;
    for (std::size_t i = 0; i < f.pole_locations.size(); ++i) {
        std::vector<RatT>& c = f.coefficients[i];
        while (!c.empty() && c.back().is_zero()) c.pop_back();
        if (c.empty()) continue;
        poles.push_back(f.pole_locations[i]);
        coeffs.push_back(std::move(c));
    }
    f.pole_locations = std::move(poles);
    f.coefficients = std::move(coeffs);
}

}  // namespace

PartialFractionForm pf_derivative_x(const PartialFractionForm& f) {
    PartialFractionForm out;
    out.polynomial = f.polynomial.derivative();
    for (std::size_t i = 0; i < f.pole_locations.size(); ++i) {
        const auto& c = f.coefficients[i];
        std::vector<RatT> dc(c.size() + 1, RatT(0));
        // d/dx of c_j/(x-a)^j is -j*c_j/(x-a)^{j+1}
        for (std::size_t j = 0; j < c.size(); ++j)
            dc[j + 1] = dc[j + 1] - c[j] * RatT(static_cast<int>(j) + 1);
        out.pole_locations.push_back(f.pole_locations[i]);
        out.coefficients.push_back(std::move(dc));
    }
    pf_trim(out);
    return out;
}

PartialFractionForm pf_derivative_t(const PartialFractionForm& f) {
    PartialFractionForm out;
    out.polynomial.c.resize(f.polynomial.c.size());
    for (std::size_t k = 0; k < f.polynomial.c.size(); ++k)
        out.polynomial.c[k] = d_t(f.polynomial.c[k]);
    out.polynomial.trim();
    for (std::size_t i = 0; i < f.pole_locations.size(); ++i) {
        const RatT& a = f.pole_locations[i];
        RatT da = d_t(a);
        const auto& c = f.coefficients[i];
        // dt of c_j/(x-a)^j is dt(c_j)/(x-a)^j + j*c_j*dt(a)/(x-a)^{j+1}
        std::vector<RatT> dc(c.size() + 1, RatT(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
            dc[j] = dc[j] + d_t(c[j]);
            dc[j + 1] = dc[j + 1] + c[j] * RatT(static_cast<int>(j) + 1) * da;
        }
        out.pole_locations.push_back(a);
        out.coefficients.push_back(std::move(dc));
    }
    pf_trim(out);
    return out;
}

void pf_accumulate(PartialFractionForm& acc, const RatT& scale,
                   const PartialFractionForm& f) {
    if (scale.is_zero()) return;
    acc.polynomial = acc.polynomial + f.polynomial.scaled(scale);
    for (std::size_t i = 0; i < f.pole_locations.size(); ++i) {
        const RatT& pole = f.pole_locations[i];
        std::size_t slot = 0;
        while (slot < acc.pole_locations.size() &&
               compare_rt(acc.pole_locations[slot], pole) < 0)
            ++slot;
        if (slot == acc.pole_locations.size() || !(acc.pole_locations[slot] == pole)) {
            acc.pole_locations.insert(acc.pole_locations.begin() + slot, pole);
            acc.coefficients.insert(acc.coefficients.begin() + slot,
                                    std::vector<RatT>());
        }
        auto& c = acc.coefficients[slot];
        const auto& fc = f.coefficients[i];
        if (c.size() < fc.size()) c.resize(fc.size(), RatT(0));
        for (std::size_t j = 0; j < fc.size(); ++j) c[j] = c[j] + scale * fc[j];
    }
    pf_trim(acc);
}

bool pf_is_zero(const PartialFractionForm& f) {
    if (!f.polynomial.is_zero()) return false;
    for (const auto& c : f.coefficients)
        for (const auto& v : c)
            if (!v.is_zero()) return false;
    return true;
}

PartialFractionForm pf_hermite_integrate(const PartialFractionForm& f) {
    PartialFractionForm out;
    out.polynomial.c.resize(f.polynomial.c.size() + 1, RatT(0));
    for (std::size_t k = 0; k < f.polynomial.c.size(); ++k)
        out.polynomial.c[k + 1] = f.polynomial.c[k] / RatT(static_cast<int>(k) + 1);
    out.polynomial.trim();
    for (std::size_t i = 0; i < f.pole_locations.size(); ++i) {
        const auto& c = f.coefficients[i];
        if (c.empty()) continue;
        if (!c[0].is_zero()) throw NonzeroResidue(serialize(f.pole_locations[i]));
        std::vector<RatT> ic(c.size() - 1, RatT(0));
        // integral of c_{j+1}/(x-a)^{j+1} is -c_{j+1}/(j (x-a)^j)
        for (std::size_t j = 1; j < c.size(); ++j)
            ic[j - 1] = RatT(0) - c[j] / RatT(static_cast<int>(j));
        out.pole_locations.push_back(f.pole_locations[i]);
        out.coefficients.push_back(std::move(ic));
    }
    pf_trim(out);
    return out;
}

PartialFractionForm split_partial_fractions(const RatXT& f) {
    PartialFractionForm out;
    auto [q, rem] = f.num.divmod(f.den);
    out.polynomial = q;
    if (rem.is_zero()) return out;
    RatXT proper(rem, f.den);

    for (const auto& [root, mult] : split_linear_factors(proper.den)) {
        // Laurent coefficients at x = root from the Taylor expansion of
        // h = proper * (x - root)^mult
        RatXT h = proper * RatXT(poly_pow(linear_factor(root), mult));
        std::vector<RatT> coeff(static_cast<std::size_t>(mult), RatT(0));
        RatXT deriv = h;
        Rat factorial(1);
        for (int j = 0; j < mult; ++j) {
            if (j > 0) {
                deriv = d_x(deriv);
                factorial *= j;
            }
            RatT a = eval_x(deriv, root) / RatT(Rat(factorial));
            coeff[static_cast<std::size_t>(mult - 1 - j)] = a;  // order mult - j
        }
        out.pole_locations.push_back(root);
        out.coefficients.push_back(std::move(coeff));
    }
    return out;
}

RatT residue(const RatXT& f, const PoleSpec& p) {
    PartialFractionForm pf = split_partial_fractions(f);
    if (p.at_infinity) {
        RatT sum(0);
        for (const auto& c : pf.coefficients) sum = sum + c[0];
        return RatT(0) - sum;
    }
    for (std::size_t i = 0; i < pf.pole_locations.size(); ++i)
        if (pf.pole_locations[i] == p.location) return pf.coefficients[i][0];
    return RatT(0);
}

ResidueList residues(const RatXT& f) {
    ResidueList out;
    PartialFractionForm pf = split_partial_fractions(f);
    RatT sum(0);
    for (std::size_t i = 0; i < pf.pole_locations.size(); ++i) {
        out.finite.emplace_back(pf.pole_locations[i], pf.coefficients[i][0]);
        sum = sum + pf.coefficients[i][0];
    }
    out.at_infinity = RatT(0) - sum;
    return out;
}

ChevalleyReport chevalley_check(const RatXT& f) {
    ChevalleyReport report;
    PartialFractionForm pf = split_partial_fractions(f);
    RatXT df = d_t(f);
    PartialFractionForm pdf = split_partial_fractions(df);

    // poles of dt(f) are among the poles of f; walk the union anyway
    std::vector<RatT> poles = pf.pole_locations;
    for (const RatT& p : pdf.pole_locations)
        if (std::find(poles.begin(), poles.end(), p) == poles.end()) poles.push_back(p);
    std::sort(poles.begin(), poles.end(),
              [](const RatT& a, const RatT& b) { return compare_rt(a, b) < 0; });

    auto res_in = [](const PartialFractionForm& form, const RatT& p) {
        for (std::size_t i = 0; i < form.pole_locations.size(); ++i)
            if (form.pole_locations[i] == p) return form.coefficients[i][0];
        return RatT(0);
    };
    for (const RatT& p : poles) {
        bool ok = res_in(pdf, p) == d_t(res_in(pf, p));
        report.per_pole.emplace_back(p, ok);
        if (!ok) report.all_hold = false;
    }
    return report;
}

RatXT hermite_integrate(const RatXT& f) {
    return pf_hermite_integrate(split_partial_fractions(f)).reassemble();
}

}  // namespace dgal
