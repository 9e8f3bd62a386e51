#include "dgal/obstruction.hpp"

#include <algorithm>
#include <map>

#include "dgal/expr.hpp"

namespace dgal {

RSequence r_sequence(const RatXT& B, int m) {
    RSequence seq;
    seq.r.reserve(static_cast<std::size_t>(m) + 1);
    seq.r.push_back(RatXT(1));
    for (int i = 0; i < m; ++i) seq.r.push_back(d_t(seq.r.back()) + B * seq.r.back());
    return seq;
}

Bounds default_bounds(int n, int p) {
    assert(n >= 1 && p >= 1);
    int m = n * p + 1;
    return {m, n * (m - 1) + 1};
}

namespace {

struct PoleData {
    std::vector<std::pair<RatT, int>> finite;  // (location, order), canonical order
    int infinity_order = 0;
};

int infinity_order(const RatXT& f) {
    if (f.is_zero()) return 0;
    return std::max(0, f.num.degree() - f.den.degree());
}

PoleData collect_poles(const RatXT& a, const RatXT& b) {
    std::map<int, std::pair<RatT, int>> dummy;
    std::vector<std::pair<RatT, int>> merged;
    auto add = [&](const RatXT& f) {
        for (const auto& [loc, mult] : split_linear_factors(f.den)) {
            auto it = std::find_if(merged.begin(), merged.end(),
                                   [&](const auto& e) { return e.first == loc; });
            if (it == merged.end()) merged.emplace_back(loc, mult);
            else it->second = std::max(it->second, mult);
        }
    };
    add(a);
    add(b);
    std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) {
        return compare_rt(x.first, y.first) < 0;
    });
    PoleData pd;
    pd.finite = std::move(merged);
    pd.infinity_order = std::max(infinity_order(a), infinity_order(b));
    return pd;
}

// Partial-fraction coefficients of F, mapped into the fixed row layout:
// rows 0..(n+N) hold x^e coefficients, then (n+N) rows per finite pole.
void fill_column(QtMatrix& m, int col, const RatXT& F, const SystemLabels& lab) {
    int width = lab.n + lab.n_bound;
    PartialFractionForm pf = split_partial_fractions(F);
    for (int e = 0; e <= pf.polynomial.degree(); ++e) {
        assert(e <= width);
        m.at(e, col) = pf.polynomial.coeff(e);
    }
    for (std::size_t i = 0; i < pf.pole_locations.size(); ++i) {
        auto it = std::find_if(lab.finite_poles.begin(), lab.finite_poles.end(),
                               [&](const RatT& p) { return p == pf.pole_locations[i]; });
        assert(it != lab.finite_poles.end());
        int pole_idx = static_cast<int>(it - lab.finite_poles.begin());
        int base = (width + 1) + pole_idx * width;
        for (std::size_t j = 0; j < pf.coefficients[i].size(); ++j) {
            assert(static_cast<int>(j) < width);
            m.at(base + static_cast<int>(j), col) = pf.coefficients[i][j];
        }
    }
}

RatXT beta_basis_function(const SystemLabels& lab, int pole_idx, int order) {
    if (pole_idx < 0) return RatXT(PolyX::monomial(RatT(1), order));  // x^order
    RatXT lin = x_var() - xt_const(lab.finite_poles[static_cast<std::size_t>(pole_idx)]);
    return RatXT(1) / lin.pow(order);
}

void check_integrability(const RatXT& a, const RatXT& b) {
    if (!(d_t(a) - d_x(b)).is_zero()) throw IntegrabilityViolation();
}

}  // namespace

ObstructionSystem build_system(const ObstructionProblem& prob) {
    check_integrability(prob.A, prob.B);
    PoleData pd = collect_poles(prob.A, prob.B);
    ObstructionSystem sys;
    sys.labels.finite_poles.reserve(pd.finite.size());
    int n = pd.infinity_order;
    for (const auto& [loc, mult] : pd.finite) {
        sys.labels.finite_poles.push_back(loc);
        n = std::max(n, mult);
    }
    assert(n >= 1);
    sys.labels.n = n;
    sys.labels.p = static_cast<int>(pd.finite.size()) + 1;
    Bounds b = default_bounds(n, sys.labels.p);
    sys.labels.m_bound = prob.bound_m.value_or(b.m);
    sys.labels.n_bound = prob.bound_n.value_or(b.n);

    int M = sys.labels.m_bound, N = sys.labels.n_bound, p = sys.labels.p;
    int rows = p * (n + N) + 1;
    int cols = (M + 1) + (N * p + 1);
    sys.matrix = QtMatrix(rows, cols);

    RSequence seq = r_sequence(prob.B, M);
    for (int i = 0; i <= M; ++i) fill_column(sys.matrix, i, seq.r[static_cast<std::size_t>(i)], sys.labels);

    int col = M + 1;
    auto fill_beta = [&](int pole_idx, int order) {
        RatXT basis = beta_basis_function(sys.labels, pole_idx, order);
        RatXT F = RatXT(0) - (d_x(basis) + prob.A * basis);
        fill_column(sys.matrix, col++, F, sys.labels);
    };
    for (int s = 0; s <= N; ++s) fill_beta(-1, s);
    for (int i = 0; i < p - 1; ++i)
        for (int j = 1; j <= N; ++j) fill_beta(i, j);
    assert(col == cols);
    return sys;
}

namespace {

RatXT assemble_h(const SystemLabels& lab, const std::vector<RatT>& v, int alpha_count) {
    int N = lab.n_bound;
    RatXT h(0);
    int idx = alpha_count;
    for (int s = 0; s <= N; ++s)
        h = h + xt_const(v[static_cast<std::size_t>(idx++)]) * RatXT(PolyX::monomial(RatT(1), s));
    for (std::size_t i = 0; i < lab.finite_poles.size(); ++i) {
        RatXT lin = x_var() - xt_const(lab.finite_poles[i]);
        for (int j = 1; j <= N; ++j) {
            const RatT& c = v[static_cast<std::size_t>(idx++)];
            if (!c.is_zero()) h = h + xt_const(c) / lin.pow(j);
        }
    }
    return h;
}

}  // namespace

ObstructionOutcome solve_obstruction(const ObstructionProblem& prob) {
    check_integrability(prob.A, prob.B);
    // A constant in x: the short-circuit branch
    if (prob.A.den.degree() == 0 && prob.A.num.degree() <= 0) {
        ObstructionCertificate cert;
        cert.A = prob.A;
        cert.B = prob.B;
        if (prob.A.is_zero()) {
            cert.op = OreOperator::one();
            cert.h = x_var();
        } else {
            cert.op = OreOperator({prob.A.num.coeff(0) / prob.A.den.coeff(0)});
            cert.h = RatXT(1);
        }
        assert(verify_obstruction(cert));
        return {cert, 0, 0};
    }

    ObstructionSystem sys = build_system(prob);
    int M = sys.labels.m_bound;
    auto basis = nullspace(sys.matrix);
    assert(!basis.empty());

    // prefer a vector with a nonzero alpha part, of minimal operator order,
    // then first in the reduced-echelon basis order
    int best = -1, best_order = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        int ord = -1;
        for (int i = M; i >= 0; --i)
            if (!basis[k][static_cast<std::size_t>(i)].is_zero()) {
                ord = i;
                break;
            }
        if (ord < 0) continue;
        if (best < 0 || ord < best_order) {
            best = static_cast<int>(k);
            best_order = ord;
        }
    }
    if (best < 0) {
        DegenerateReport report;
        report.A = prob.A;
        report.B = prob.B;
        report.h0 = assemble_h(sys.labels, basis[0], M + 1);
        assert((d_x(report.h0) + prob.A * report.h0).is_zero());
        return {report, sys.matrix.rows, sys.matrix.cols};
    }

    std::vector<RatT> v = basis[static_cast<std::size_t>(best)];
    // monic normalization of the operator, scaling the whole solution
    RatT lead = v[static_cast<std::size_t>(best_order)];
    for (auto& c : v) c = c / lead;

    ObstructionCertificate cert;
    cert.A = prob.A;
    cert.B = prob.B;
    cert.op = OreOperator(std::vector<RatT>(v.begin(), v.begin() + best_order + 1));
    cert.h = assemble_h(sys.labels, v, M + 1);
    assert(verify_obstruction(cert));
    return {cert, sys.matrix.rows, sys.matrix.cols};
}

std::optional<RatXT> rational_first_order_kernel(const RatXT& A) {
    PartialFractionForm pf = split_partial_fractions(A);
    if (!pf.polynomial.is_zero()) return std::nullopt;
    RatXT h0(1);
    for (std::size_t i = 0; i < pf.pole_locations.size(); ++i) {
        for (std::size_t j = 1; j < pf.coefficients[i].size(); ++j)
            if (!pf.coefficients[i][j].is_zero()) return std::nullopt;
        RatT c = RatT(0) - pf.coefficients[i][0];  // A = -sum m_i/(x - x_i)
        if (c.num.degree() > 0 || c.den.degree() > 0) return std::nullopt;
        Rat m = c.is_zero() ? Rat(0) : c.num.coeff(0) / c.den.coeff(0);
        if (m.get_den() != 1) return std::nullopt;
        long mi = mpz_class(m.get_num()).get_si();
        RatXT lin = x_var() - xt_const(pf.pole_locations[i]);
        h0 = h0 * lin.pow(static_cast<int>(mi));
    }
    return h0;
}

bool verify_obstruction(const ObstructionCertificate& c) {
    if (c.op.is_zero()) return false;
    RSequence seq = r_sequence(c.B, c.op.order());
    RatXT lhs(0);
    for (int i = 0; i <= c.op.order(); ++i)
        lhs = lhs + xt_const(c.op.coeff_at(i)) * seq.r[static_cast<std::size_t>(i)];
    RatXT rhs = d_x(c.h) + c.A * c.h;
    return (lhs - rhs).is_zero();
}

}  // namespace dgal
