#include "dgal/groups.hpp"

#include <algorithm>

#include "dgal/expr.hpp"

namespace dgal {

QuotientVerdict has_ga_or_gm_quotient(const GroupDesc& g) {
    const auto* alg = std::get_if<AlgebraicDesc>(&g.body);
    if (alg == nullptr)
        throw UnsupportedDescription("criterion applies to algebraic descriptions only");
    QuotientVerdict v;
    if (alg->torus_rank > 0) {
        v.kind = QuotientVerdict::Kind::GmWitness;
        v.witness_index = 0;
        return v;
    }
    // After passing to R_u/(R_u,R_u) the radical is commutative, so only the
    // module decomposition matters; a trivial-action summand is a Ga quotient.
    for (std::size_t i = 0; i < alg->modules.size(); ++i) {
        if (alg->modules[i].trivial_action) {
            v.kind = QuotientVerdict::Kind::GaWitness;
            v.witness_index = static_cast<int>(i);
            return v;
        }
    }
    return v;
}

namespace {

std::vector<std::vector<RatT>> matrix2(int a, int b, int c, int d) {
    return {{RatT(a), RatT(b)}, {RatT(c), RatT(d)}};
}

RatT det2(const std::vector<std::vector<RatT>>& m) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

// Action of g in SL2 on V_d = Sym^d of the standard representation, in the
// basis X^d, X^{d-1}Y, ..., Y^d (column-vector convention).
std::vector<std::vector<RatT>> sym_power(const std::vector<std::vector<RatT>>& g, int d) {
    // X maps to a*X + c*Y, Y maps to b*X + d*Y
    const RatT &a = g[0][0], &b = g[0][1], &c = g[1][0], &dd = g[1][1];
    std::vector<std::vector<RatT>> m(static_cast<std::size_t>(d) + 1,
                                     std::vector<RatT>(static_cast<std::size_t>(d) + 1, RatT(0)));
    for (int k = 0; k <= d; ++k) {
        // expand (aX + cY)^{d-k} (bX + dY)^k; coefficient of X^{d-j} Y^j
        std::vector<RatT> poly{RatT(1)};  // coefficients in Y-degree
        auto mul_linear = [&](const RatT& xc, const RatT& yc) {
            std::vector<RatT> next(poly.size() + 1, RatT(0));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i] = next[i] + poly[i] * xc;
                next[i + 1] = next[i + 1] + poly[i] * yc;
            }
            poly = std::move(next);
        };
        for (int i = 0; i < d - k; ++i) mul_linear(a, c);
        for (int i = 0; i < k; ++i) mul_linear(b, dd);
        for (int j = 0; j <= d; ++j) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            poly[static_cast<std::size_t>(j)];
    }
    return m;
}

}  // namespace

GeneratorWitness kolchin_dense_generators(const GroupDesc& g) {
    QuotientVerdict verdict = has_ga_or_gm_quotient(g);
    if (verdict.kind != QuotientVerdict::Kind::None)
        throw CriterionFails(verdict.to_string());
    const auto& alg = std::get<AlgebraicDesc>(g.body);

    GeneratorWitness w;
    w.coset_representatives = g.components;

    auto add_condition = [&](std::string desc, bool holds) {
        w.side_conditions.push_back({std::move(desc), holds});
    };

    std::vector<std::vector<RatT>> upper = matrix2(1, 1, 0, 1);
    std::vector<std::vector<RatT>> lower = matrix2(1, 0, 1, 1);
    int sl2_count = 0;
    for (std::size_t fi = 0; fi < alg.semisimple.size(); ++fi) {
        const FactorDesc& f = alg.semisimple[fi];
        if (f.kind == SemisimpleFactor::SL2) {
            ++sl2_count;
            WitnessGenerator u1{"sl2_unipotent_upper", false, upper};
            WitnessGenerator u2{"sl2_unipotent_lower", false, lower};
            // torus element whose first diagonal entry x1 = t satisfies dt(x1) != 0
            std::vector<std::vector<RatT>> torus{{t_var(), RatT(0)},
                                                 {RatT(0), RatT(1) / t_var()}};
            WitnessGenerator g3{"sl2_torus", false, torus};
            add_condition("det(sl2_unipotent_upper) = 1", det2(upper) == RatT(1));
            add_condition("det(sl2_unipotent_lower) = 1", det2(lower) == RatT(1));
            add_condition("det(sl2_torus) = 1", det2(torus) == RatT(1));
            add_condition("dt of first torus diagonal entry is nonzero",
                          !d_t(t_var()).is_zero());
            w.generators.push_back(std::move(u1));
            w.generators.push_back(std::move(u2));
            w.generators.push_back(std::move(g3));
        } else {
            std::string tag = f.kind == SemisimpleFactor::SL3 ? "SL3" : f.tag;
            w.generators.push_back({"zariski_dense_set(" + tag + ")", true, {}});
            w.generators.push_back({"torus_element(" + tag + ")", true, {}});
            w.symbolic_only = true;
        }
    }

    for (std::size_t mi = 0; mi < alg.modules.size(); ++mi) {
        const ModuleDesc& mod = alg.modules[mi];
        int d = mod.dim - 1;  // SL2 irreducible of dimension d+1 is V_d
        if (sl2_count == 0 || d < 1) {
            w.generators.push_back({"highest_weight_vector(module " + std::to_string(mi) + ")",
                                    true,
                                    {}});
            w.symbolic_only = true;
            continue;
        }
        // highest-weight vector: the d-th power of the first variable
        std::vector<std::vector<RatT>> u(1, std::vector<RatT>(static_cast<std::size_t>(d) + 1, RatT(0)));
        u[0][0] = RatT(1);
        WitnessGenerator gen{"highest_weight_u" + std::to_string(mi), false, u};
        // Borel-line stability: the upper-triangular generator and the torus
        // fix the line spanned by u in Sym^d
        bool stable = true;
        std::vector<std::vector<RatT>> borel_elts[2] = {
            upper, {{t_var(), RatT(0)}, {RatT(0), RatT(1) / t_var()}}};
        for (const auto& belt : borel_elts) {
            auto act = sym_power(belt, d);
            for (int j = 1; j <= d; ++j)
                if (!act[static_cast<std::size_t>(j)][0].is_zero()) stable = false;
        }
        add_condition("Borel generators stabilize the line of u" + std::to_string(mi), stable);
        w.generators.push_back(std::move(gen));
    }

    if (g.components > 1) {
        for (int k = 0; k < g.components; ++k)
            w.generators.push_back({"coset_representative_" + std::to_string(k), true, {}});
    }

    for (const SideCondition& sc : w.side_conditions)
        if (!sc.holds) throw CriterionFails("side condition failed: " + sc.description);
    return w;
}

DensityObstructionCert density_obstruction(const std::vector<GaGmGenerator>& elements) {
    DensityObstructionCert cert;
    cert.inputs = elements;
    std::vector<RatT> entries;
    for (const auto& e : elements) entries.push_back(e.a);
    AnnihilatorCertificate ann = wronskian_annihilator(entries);
    // the identity-only span needs a nonzero operator; Dt annihilates a = 0
    cert.op = ann.op.order() == 0 ? OreOperator::dt() : ann.op;
    cert.supergroup =
        "{ [[1,0],[a,b]] : L(a) = 0, dt(b) = 0, b != 0 } with L = " + serialize(cert.op);
    return cert;
}

GroupElement word_eval(const std::vector<GaGmGenerator>& generators,
                       const std::vector<int>& word) {
    GroupElement acc{RatT(0), RatT(1)};
    for (int signed_idx : word) {
        int idx = signed_idx > 0 ? signed_idx : -signed_idx;
        if (idx < 1 || idx > static_cast<int>(generators.size()))
            throw IndexOutOfRange(signed_idx);
        const GaGmGenerator& g = generators[static_cast<std::size_t>(idx - 1)];
        RatT a(g.a), b((Rat(g.b)));
        if (signed_idx < 0) {
            RatT binv = RatT(1) / b;
            a = (RatT(0) - a) * binv;
            b = binv;
        }
        // [[1,0],[acc.a,acc.b]] * [[1,0],[a,b]]
        acc.a = acc.a + acc.b * a;
        acc.b = acc.b * b;
    }
    return acc;
}

}  // namespace dgal
