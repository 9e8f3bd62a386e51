#include "dgal/runner.hpp"

#include <stdexcept>

#include "dgal/expr.hpp"
#include "dgal/groups.hpp"
#include "dgal/obstruction.hpp"
#include "dgal/telescoper.hpp"

namespace dgal {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

GroupDesc parse_group(const json& j) {
    GroupDesc g;
    g.components = j.value("components", 1);
    if (j.contains("diff_catalog")) {
        std::string v = j.at("diff_catalog").get<std::string>();
        if (v == "SectionFourG") g.body = DiffCatalogVariant::SectionFourG;
        else if (v == "SectionFourGPrime") g.body = DiffCatalogVariant::SectionFourGPrime;
        else throw std::invalid_argument("unknown diff_catalog variant: " + v);
        return g;
    }
    AlgebraicDesc alg;
    if (j.contains("semisimple")) {
        for (const auto& f : j.at("semisimple")) {
            if (f.is_string()) {
                std::string s = f.get<std::string>();
                if (s == "SL2") alg.semisimple.push_back({SemisimpleFactor::SL2, "SL2"});
                else if (s == "SL3") alg.semisimple.push_back({SemisimpleFactor::SL3, "SL3"});
                else throw std::invalid_argument("unknown semisimple factor: " + s);
            } else {
                alg.semisimple.push_back(
                    {SemisimpleFactor::Abstract, f.at("abstract").get<std::string>()});
            }
        }
    }
    alg.torus_rank = j.value("torus_rank", 0);
    if (j.contains("modules")) {
        for (const auto& m : j.at("modules")) {
            ModuleDesc md;
            md.dim = m.at("dim").get<int>();
            if (md.dim < 1) throw std::invalid_argument("module dim must be positive");
            md.trivial_action = m.value("action", "irreducible") == std::string("trivial");
            md.weight_tag = m.value("weight", "");
            alg.modules.push_back(md);
        }
    }
    alg.radical_commutative = j.value("radical_commutative", true);
    g.body = alg;
    return g;
}

ojson residues_json(const ResidueList& r) {
    ojson out;
    out["finite"] = ojson::array();
    for (const auto& [pole, res] : r.finite) {
        ojson e;
        e["pole"] = serialize(pole);
        e["residue"] = serialize(res);
        out["finite"].push_back(e);
    }
    out["at_infinity"] = serialize(r.at_infinity);
    return out;
}

ojson witness_json(const GeneratorWitness& w) {
    ojson out;
    out["generators"] = ojson::array();
    for (const auto& g : w.generators) {
        ojson e;
        e["label"] = g.label;
        e["symbolic"] = g.symbolic;
        if (!g.matrix.empty()) {
            ojson rows = ojson::array();
            for (const auto& row : g.matrix) {
                ojson r = ojson::array();
                for (const auto& v : row) r.push_back(serialize(v));
                rows.push_back(r);
            }
            e["matrix"] = rows;
        }
        out["generators"].push_back(e);
    }
    out["side_conditions"] = ojson::array();
    for (const auto& sc : w.side_conditions) {
        ojson e;
        e["description"] = sc.description;
        e["holds"] = sc.holds;
        out["side_conditions"].push_back(e);
    }
    out["coset_representatives"] = w.coset_representatives;
    out["symbolic_only"] = w.symbolic_only;
    return out;
}

std::vector<GaGmGenerator> parse_elements(const json& j) {
    std::vector<GaGmGenerator> elements;
    for (const auto& e : j) {
        GaGmGenerator g;
        g.a = parse_rt(e.at("a").get<std::string>());
        g.b = parse_rat(e.at("b").get<std::string>());
        if (g.b == 0) throw std::invalid_argument("diagonal entry b must be nonzero");
        elements.push_back(std::move(g));
    }
    return elements;
}

ojson header(const std::string& task) {
    ojson out;
    out["task"] = task;
    out["tool"] = kToolVersion;
    return out;
}

}  // namespace

ojson run_task(const json& problem) {
    std::string task = problem.at("task").get<std::string>();

    if (task == "telescope") {
        RatXT f = parse_ratxt(problem.at("f").get<std::string>());
        TelescopeCertificate cert = telescope(f);
        ojson out = header(task);
        out["inputs"]["f"] = serialize(f);
        out["residues"] = residues_json(cert.residue_data);
        ojson basis = ojson::array();
        for (const auto& b : cert.annihilator.basis) basis.push_back(serialize(b));
        out["annihilator_basis"] = basis;
        out["L"] = serialize(cert.op);
        out["g"] = serialize(cert.integral);
        out["order"] = cert.op.order();
        out["verified"] = verify_telescope(cert);
        return out;
    }

    if (task == "obstruct") {
        ObstructionProblem prob;
        prob.A = parse_ratxt(problem.at("A").get<std::string>());
        prob.B = parse_ratxt(problem.at("B").get<std::string>());
        if (problem.contains("M")) prob.bound_m = problem.at("M").get<int>();
        if (problem.contains("N")) prob.bound_n = problem.at("N").get<int>();
        ObstructionOutcome outcome = solve_obstruction(prob);
        ojson out = header(task);
        out["inputs"]["A"] = serialize(prob.A);
        out["inputs"]["B"] = serialize(prob.B);
        out["rows"] = outcome.rows;
        out["cols"] = outcome.cols;
        if (const auto* cert = std::get_if<ObstructionCertificate>(&outcome.result)) {
            out["degenerate"] = false;
            out["L"] = serialize(cert->op);
            out["h"] = serialize(cert->h);
            out["order"] = cert->op.order();
            out["verified"] = verify_obstruction(*cert);
        } else {
            const auto& rep = std::get<DegenerateReport>(outcome.result);
            out["degenerate"] = true;
            out["h0"] = serialize(rep.h0);
            out["verified"] = (d_x(rep.h0) + rep.A * rep.h0).is_zero();
        }
        return out;
    }

    if (task == "annihilate") {
        std::vector<RatT> alphas;
        for (const auto& a : problem.at("alphas"))
            alphas.push_back(parse_rt(a.get<std::string>()));
        AnnihilatorCertificate cert = wronskian_annihilator(alphas);
        ojson out = header(task);
        ojson in = ojson::array(), basis = ojson::array();
        for (const auto& a : cert.inputs) in.push_back(serialize(a));
        for (const auto& b : cert.basis) basis.push_back(serialize(b));
        out["inputs"]["alphas"] = in;
        out["basis"] = basis;
        out["R"] = serialize(cert.op);
        out["order"] = cert.op.order();
        bool ok = !cert.op.is_zero();
        for (const auto& a : alphas) ok = ok && apply(cert.op, a).is_zero();
        out["verified"] = ok;
        return out;
    }

    if (task == "residues") {
        RatXT f = parse_ratxt(problem.at("f").get<std::string>());
        ResidueList r = residues(f);
        ojson out = header(task);
        out["inputs"]["f"] = serialize(f);
        ojson body = residues_json(r);
        out["finite"] = body["finite"];
        out["at_infinity"] = body["at_infinity"];
        RatT sum = r.at_infinity;
        for (const auto& [pole, res] : r.finite) sum = sum + res;
        out["sum_zero"] = sum.is_zero();
        return out;
    }

    if (task == "chevalley") {
        RatXT f = parse_ratxt(problem.at("f").get<std::string>());
        ChevalleyReport rep = chevalley_check(f);
        ojson out = header(task);
        out["inputs"]["f"] = serialize(f);
        out["poles"] = ojson::array();
        for (const auto& [pole, ok] : rep.per_pole) {
            ojson e;
            e["pole"] = serialize(pole);
            e["holds"] = ok;
            out["poles"].push_back(e);
        }
        out["all_hold"] = rep.all_hold;
        return out;
    }

    if (task == "group-check") {
        GroupDesc g = parse_group(problem.at("group"));
        QuotientVerdict v = has_ga_or_gm_quotient(g);
        ojson out = header(task);
        out["inputs"]["group"] = problem.at("group");
        out["verdict"] = v.to_string();
        out["witness_index"] = v.witness_index;
        return out;
    }

    if (task == "group-generators") {
        GroupDesc g = parse_group(problem.at("group"));
        GeneratorWitness w = kolchin_dense_generators(g);
        ojson out = header(task);
        out["inputs"]["group"] = problem.at("group");
        out["witness"] = witness_json(w);
        return out;
    }

    if (task == "density-obstruct") {
        std::vector<GaGmGenerator> elements = parse_elements(problem.at("elements"));
        DensityObstructionCert cert = density_obstruction(elements);
        ojson out = header(task);
        ojson in = ojson::array();
        for (const auto& e : cert.inputs) {
            ojson g;
            g["a"] = serialize(e.a);
            g["b"] = serialize(e.b);
            in.push_back(g);
        }
        out["inputs"]["elements"] = in;
        out["L"] = serialize(cert.op);
        out["supergroup"] = cert.supergroup;
        bool ok = !cert.op.is_zero();
        for (const auto& e : cert.inputs) ok = ok && apply(cert.op, e.a).is_zero();
        out["verified"] = ok;
        return out;
    }

    if (task == "verify") {
        ojson out = header(task);
        out["verified"] = verify_certificate(problem.at("certificate"));
        return out;
    }

    throw std::invalid_argument("unknown task: " + task);
}

bool verify_certificate(const json& cert) {
    std::string task = cert.at("task").get<std::string>();

    if (task == "telescope") {
        TelescopeCertificate c;
        c.input = parse_ratxt(cert.at("inputs").at("f").get<std::string>());
        c.op = parse_operator(cert.at("L").get<std::string>());
        c.integral = parse_ratxt(cert.at("g").get<std::string>());
        return verify_telescope(c);
    }

    if (task == "obstruct") {
        RatXT A = parse_ratxt(cert.at("inputs").at("A").get<std::string>());
        RatXT B = parse_ratxt(cert.at("inputs").at("B").get<std::string>());
        if (cert.value("degenerate", false)) {
            RatXT h0 = parse_ratxt(cert.at("h0").get<std::string>());
            return !h0.is_zero() && (d_x(h0) + A * h0).is_zero();
        }
        ObstructionCertificate c;
        c.A = A;
        c.B = B;
        c.op = parse_operator(cert.at("L").get<std::string>());
        c.h = parse_ratxt(cert.at("h").get<std::string>());
        return verify_obstruction(c);
    }

    if (task == "annihilate") {
        OreOperator r = parse_operator(cert.at("R").get<std::string>());
        if (r.is_zero()) return false;
        for (const auto& a : cert.at("inputs").at("alphas"))
            if (!apply(r, parse_rt(a.get<std::string>())).is_zero()) return false;
        return true;
    }

    if (task == "residues") {
        RatXT f = parse_ratxt(cert.at("inputs").at("f").get<std::string>());
        ojson fresh = run_task(json{{"task", "residues"}, {"f", serialize(f)}});
        return json(fresh.at("finite")) == cert.at("finite") &&
               json(fresh.at("at_infinity")) == cert.at("at_infinity") &&
               cert.value("sum_zero", false);
    }

    if (task == "chevalley") {
        RatXT f = parse_ratxt(cert.at("inputs").at("f").get<std::string>());
        return chevalley_check(f).all_hold && cert.value("all_hold", false);
    }

    if (task == "group-check") {
        GroupDesc g = parse_group(cert.at("inputs").at("group"));
        return has_ga_or_gm_quotient(g).to_string() == cert.at("verdict").get<std::string>();
    }

    if (task == "group-generators") {
        GroupDesc g = parse_group(cert.at("inputs").at("group"));
        GeneratorWitness w = kolchin_dense_generators(g);
        for (const auto& sc : w.side_conditions)
            if (!sc.holds) return false;
        return json(witness_json(w)) == cert.at("witness");
    }

    if (task == "density-obstruct") {
        OreOperator l = parse_operator(cert.at("L").get<std::string>());
        if (l.is_zero()) return false;
        for (const auto& e : cert.at("inputs").at("elements"))
            if (!apply(l, parse_rt(e.at("a").get<std::string>())).is_zero()) return false;
        return true;
    }

    if (task == "verify") return cert.value("verified", false);

    throw std::invalid_argument("unknown certificate task: " + task);
}

}  // namespace dgal
