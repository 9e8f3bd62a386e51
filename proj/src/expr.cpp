#include "dgal/expr.hpp"

#include <cctype>
#include <sstream>

#include "dgal/errors.hpp"
#include "dgal/ore.hpp"

namespace dgal {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& s) : text(s) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(pos, what); }

    mpz_class integer() {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        mpz_class v(text.substr(start, pos - start));
        return neg ? mpz_class(-v) : v;
    }

    ExprAst expr() {
        ExprAst node = term();
        std::vector<ExprAst> parts;
        parts.push_back(std::move(node));
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                parts.push_back(term());
            } else if (c == '-') {
                ++pos;
                ExprAst t = term();
                ExprAst neg{ExprAst::Kind::Negation, {}, 0};
                neg.children.push_back(std::move(t));
                parts.push_back(std::move(neg));
            } else {
                break;
            }
        }
        if (parts.size() == 1) return std::move(parts[0]);
        ExprAst sum{ExprAst::Kind::Sum, std::move(parts), 0};
        return sum;
    }

    ExprAst term() {
        std::vector<ExprAst> parts;
        parts.push_back(factor());
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                parts.push_back(factor());
            } else if (c == '/') {
                ++pos;
                std::size_t at = pos;
                ExprAst d = factor();
                if (d.kind == ExprAst::Kind::Literal && d.literal == 0)
                    throw DivisionByZeroLiteral(at);
                ExprAst q{ExprAst::Kind::Quotient, {}, 0};
                q.children.push_back(parts.size() == 1
                                         ? std::move(parts[0])
                                         : ExprAst{ExprAst::Kind::Product, std::move(parts), 0});
                q.children.push_back(std::move(d));
                parts.clear();
                parts.push_back(std::move(q));
            } else {
                break;
            }
        }
        if (parts.size() == 1) return std::move(parts[0]);
        return ExprAst{ExprAst::Kind::Product, std::move(parts), 0};
    }

    ExprAst factor() {
        ExprAst b = base();
        if (peek() == '^') {
            ++pos;
            ExprAst e{ExprAst::Kind::Literal, {}, integer()};
            ExprAst p{ExprAst::Kind::Power, {}, 0};
            p.children.push_back(std::move(b));
            p.children.push_back(std::move(e));
            return p;
        }
        return b;
    }

    ExprAst base() {
        char c = peek();
        if (c == 'x') {
            ++pos;
            return ExprAst{ExprAst::Kind::VarX, {}, 0};
        }
        if (c == 't') {
            ++pos;
            return ExprAst{ExprAst::Kind::VarT, {}, 0};
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return ExprAst{ExprAst::Kind::Literal, {}, integer()};
        if (c == '(') {
            ++pos;
            ExprAst e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (c == '-') {
            ++pos;
            ExprAst f = factor();
            ExprAst neg{ExprAst::Kind::Negation, {}, 0};
            neg.children.push_back(std::move(f));
            return neg;
        }
        fail("expected 'x', 't', integer, '(' or '-'");
    }
};

}  // namespace

ExprAst parse_expr(const std::string& text) {
    Parser p(text);
    if (p.eof()) p.fail("empty expression");
    ExprAst ast = p.expr();
    if (!p.eof()) p.fail("trailing input");
    return ast;
}

RatXT to_canonical(const ExprAst& ast) {
    try {
        switch (ast.kind) {
            case ExprAst::Kind::VarX:
                return x_var();
            case ExprAst::Kind::VarT:
                return xt_const(t_var());
            case ExprAst::Kind::Literal:
                return RatXT(RatT(Rat(ast.literal)));
            case ExprAst::Kind::Negation:
                return -to_canonical(ast.children[0]);
            case ExprAst::Kind::Sum: {
                RatXT acc(0);
                for (const auto& c : ast.children) acc = acc + to_canonical(c);
                return acc;
            }
            case ExprAst::Kind::Product: {
                RatXT acc(1);
                for (const auto& c : ast.children) acc = acc * to_canonical(c);
                return acc;
            }
            case ExprAst::Kind::Quotient:
                return to_canonical(ast.children[0]) / to_canonical(ast.children[1]);
            case ExprAst::Kind::Power: {
                long e = ast.children[1].literal.get_si();
                return to_canonical(ast.children[0]).pow(static_cast<int>(e));
            }
        }
    } catch (const DivisionByZero&) {
        throw ZeroDenominator();
    }
    throw ZeroDenominator();  // unreachable
}

RatXT parse_ratxt(const std::string& text) { return to_canonical(parse_expr(text)); }

RatT parse_rt(const std::string& text) {
    RatXT v = parse_ratxt(text);
    if (v.den.degree() != 0 || v.num.degree() > 0)
        throw ParseError(0, "expected an expression free of x");
    if (v.num.is_zero()) return RatT(0);
    return v.num.coeff(0) / v.den.coeff(0);
}

Rat parse_rat(const std::string& text) {
    RatT v = parse_rt(text);
    if (v.den.degree() != 0 || v.num.degree() > 0)
        throw ParseError(0, "expected a constant expression");
    if (v.num.is_zero()) return Rat(0);
    return v.num.coeff(0) / v.den.coeff(0);
}

// ---------------------------------------------------------------------------
// serialization

namespace {

// True when s has a '+', '-', '/', or '*' at parenthesis depth 0 that would
// change grouping if s were used as a sub-factor without parentheses.
bool has_toplevel_sum(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && (c == '+') && i > 0) return true;
        else if (depth == 0 && c == '-' && i > 0 && s[i - 1] == ' ') return true;
    }
    return false;
}

bool has_toplevel_div(const std::string& s) {
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && c == '/') return true;
    }
    return false;
}

struct Term {
    bool negative;
    std::string body;  // never empty, no leading sign
};

std::string join_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) out += "-";
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].body;
    }
    return out;
}

std::string monomial_str(const char* var, int deg) {
    if (deg == 0) return "";
    if (deg == 1) return var;
    return std::string(var) + "^" + std::to_string(deg);
}

std::string rat_abs_str(const Rat& v) {
    Rat a = abs(v);
    return a.get_str();
}

std::vector<Term> poly_terms_t(const PolyT& p) {
    std::vector<Term> terms;
    for (int i = p.degree(); i >= 0; --i) {
        Rat c = p.coeff(i);
        if (c == 0) continue;
        Term t;
        t.negative = c < 0;
        std::string mono = monomial_str("t", i);
        std::string cs = rat_abs_str(c);
        if (mono.empty()) t.body = cs;
        else if (abs(c) == 1) t.body = mono;
        else t.body = cs + "*" + mono;
        terms.push_back(std::move(t));
    }
    return terms;
}

// RatT with the sign pulled out of the numerator's leading coefficient.
struct SignedStr {
    bool negative;
    std::string body;
};

SignedStr rt_signed_str(const RatT& v);

std::string rt_str(const RatT& v) {
    SignedStr s = rt_signed_str(v);
    return s.negative ? "-" + s.body : s.body;
}

SignedStr rt_signed_str(const RatT& v) {
    if (v.is_zero()) return {false, "0"};
    bool neg = v.num.lead() < 0;
    PolyT num = neg ? -v.num : v.num;
    std::string ns = join_terms(poly_terms_t(num));
    if (v.is_polynomial()) {
        // a pulled-out sign must bind the whole sum, not just its first term
        if (neg && has_toplevel_sum(ns)) ns = "(" + ns + ")";
        return {neg, ns};
    }
    if (has_toplevel_sum(ns)) ns = "(" + ns + ")";
    std::string ds = join_terms(poly_terms_t(v.den));
    // monic single-monomial denominators ("t", "t^3") need no parentheses
    bool den_simple = v.den.degree() >= 1 && [&] {
        for (int i = 0; i < v.den.degree(); ++i)
            if (!(v.den.coeff(i) == 0)) return false;
        return true;
    }();
    if (!den_simple) ds = "(" + ds + ")";
    return {neg, ns + "/" + ds};
}

std::vector<Term> poly_terms_x(const PolyX& p) {
    std::vector<Term> terms;
    for (int i = p.degree(); i >= 0; --i) {
        RatT c = p.coeff(i);
        if (c.is_zero()) continue;
        SignedStr cs = rt_signed_str(c);
        Term t;
        t.negative = cs.negative;
        std::string mono = monomial_str("x", i);
        if (mono.empty()) {
            t.body = cs.body;
        } else if (cs.body == "1") {
            t.body = mono;
        } else {
            std::string cb = cs.body;
            if (has_toplevel_sum(cb)) cb = "(" + cb + ")";
            t.body = cb + "*" + mono;
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

std::string polyx_str(const PolyX& p) { return join_terms(poly_terms_x(p)); }

}  // namespace

std::string serialize(const Rat& v) { return v.get_str(); }

std::string serialize(const PolyT& v) { return join_terms(poly_terms_t(v)); }

std::string serialize(const RatT& v) { return rt_str(v); }

std::string serialize(const PolyX& v) { return polyx_str(v); }

std::string serialize(const RatXT& v) {
    if (v.is_zero()) return "0";
    if (v.is_polynomial()) return polyx_str(v.num);
    std::string ns = polyx_str(v.num);
    if (has_toplevel_sum(ns)) ns = "(" + ns + ")";
    std::string ds = polyx_str(v.den);
    bool den_simple = v.den.degree() >= 1 && [&] {
        for (int i = 0; i < v.den.degree(); ++i)
            if (!v.den.coeff(i).is_zero()) return false;
        return v.den.lead() == RatT(1);
    }();
    if (!den_simple) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

std::string serialize(const OreOperator& op) {
    if (op.is_zero()) return "0";
    std::vector<Term> terms;
    for (int k = op.order(); k >= 0; --k) {
        RatT c = op.coeff_at(k);
        if (c.is_zero()) continue;
        SignedStr cs = rt_signed_str(c);
        Term t;
        t.negative = cs.negative;
        std::string mono = "Dt^" + std::to_string(k);
        if (cs.body == "1") {
            t.body = mono;
        } else {
            std::string cb = cs.body;
            if (has_toplevel_sum(cb) || has_toplevel_div(cb)) cb = "(" + cb + ")";
            t.body = cb + "*" + mono;
        }
        terms.push_back(std::move(t));
    }
    return join_terms(terms);
}

OreOperator parse_operator(const std::string& text) {
    // Sum of terms "[coeff *] Dt^k" with coeff an x-free expression.
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "0") return OreOperator::zero();

    struct Piece {
        bool negative;
        std::string body;
    };
    std::vector<Piece> pieces;
    int depth = 0;
    std::string cur;
    bool cur_neg = false;
    char prev_tok = '\0';  // previous non-space character
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '(') ++depth;
        if (c == ')') --depth;
        bool separator = depth == 0 && (c == '+' || c == '-') &&
                         prev_tok != '\0' && prev_tok != '(' && prev_tok != '^' &&
                         prev_tok != '*' && prev_tok != '/' && prev_tok != '+' &&
                         prev_tok != '-';
        bool leading_minus = c == '-' && prev_tok == '\0';
        prev_tok = c;
        if (leading_minus) {
            cur_neg = true;
            continue;
        }
        if (separator) {
            pieces.push_back({cur_neg, cur});
            cur.clear();
            cur_neg = (c == '-');
            continue;
        }
        cur += c;
    }
    if (!cur.empty()) pieces.push_back({cur_neg, cur});

    std::vector<RatT> coeff;
    auto add_term = [&](const RatT& c, int k) {
        if (k >= static_cast<int>(coeff.size())) coeff.resize(static_cast<std::size_t>(k) + 1, RatT(0));
        coeff[static_cast<std::size_t>(k)] = coeff[static_cast<std::size_t>(k)] + c;
    };
    for (auto& piece : pieces) {
        std::string s = piece.body;
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        bool neg = piece.negative;
        if (!s.empty() && s.front() == '-') {
            neg = !neg;
            s.erase(s.begin());
        }
        std::size_t dt = s.rfind("Dt^");
        if (dt == std::string::npos) throw ParseError(0, "expected Dt^k term");
        int k = std::stoi(s.substr(dt + 3));
        std::string cs = s.substr(0, dt);
        while (!cs.empty() && (std::isspace(static_cast<unsigned char>(cs.back())) || cs.back() == '*'))
            cs.pop_back();
        RatT c = cs.empty() ? RatT(1) : parse_rt(cs);
        add_term(neg ? RatT(0) - c : c, k);
    }
    return OreOperator(std::move(coeff));
}

}  // namespace dgal
