#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dgal/types.hpp"

namespace dgal {

struct OreOperator;

// AST for the expression grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' int)?
//   base   := 'x' | 't' | int | '(' expr ')' | '-' factor
struct ExprAst {
    enum class Kind { Sum, Product, Quotient, Power, Negation, VarX, VarT, Literal };

    Kind kind;
    std::vector<ExprAst> children;   // Sum/Product: >= 2; Quotient/Power: exactly 2
    mpz_class literal;               // Literal nodes; Power stores exponent as a Literal child
};

ExprAst parse_expr(const std::string& text);
RatXT to_canonical(const ExprAst& ast);

// parse + canonicalize in one step
RatXT parse_ratxt(const std::string& text);
RatT parse_rt(const std::string& text);    // rejects expressions containing x
Rat parse_rat(const std::string& text);    // rejects expressions containing x or t

// Deterministic canonical serialization; parse(serialize(v)) == v exactly.
std::string serialize(const Rat& v);
std::string serialize(const PolyT& v);
std::string serialize(const RatT& v);
std::string serialize(const PolyX& v);
std::string serialize(const RatXT& v);

// Operators print as sums of c*Dt^k terms, k descending, e.g.
// "Dt^1 - (2/t)*Dt^0"; the zero operator prints as "0".
std::string serialize(const OreOperator& op);
OreOperator parse_operator(const std::string& text);

}  // namespace dgal
