#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgal {

// Base for all domain errors.  `code()` is a stable machine-readable tag
// used by the CLI when emitting error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("SyntaxError", what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class DivisionByZeroLiteral : public Error {
public:
    explicit DivisionByZeroLiteral(std::size_t offset)
        : Error("DivisionByZeroLiteral",
                "literal zero denominator (at byte " + std::to_string(offset) + ")") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("DivisionByZero", "division by zero") {}
};

class ZeroDenominator : public Error {
public:
    ZeroDenominator() : Error("ZeroDenominator", "simplification produced a zero denominator") {}
};

class PoleAtPoint : public Error {
public:
    explicit PoleAtPoint(const std::string& where)
        : Error("PoleAtPoint", "evaluation point lies on a pole: " + where) {}
};

class NonSplitDenominator : public Error {
public:
    explicit NonSplitDenominator(const std::string& factor)
        : Error("NonSplitDenominator",
                "denominator does not split into linear factors over Q(t); "
                "irreducible part: " + factor),
          factor_(factor) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

class NonzeroResidue : public Error {
public:
    explicit NonzeroResidue(const std::string& pole)
        : Error("NonzeroResidue", "nonzero residue at pole " + pole +
                                  "; antiderivative is not rational"),
          pole_(pole) {}
    const std::string& pole() const { return pole_; }

private:
    std::string pole_;
};

class IntegrabilityViolation : public Error {
public:
    IntegrabilityViolation() : Error("IntegrabilityViolation", "dt(A) != dx(B)") {}
};

class DivisorZero : public Error {
public:
    DivisorZero() : Error("DivisorZero", "right division by the zero operator") {}
};

class CriterionFails : public Error {
public:
    explicit CriterionFails(const std::string& why)
        : Error("CriterionFails", "group criterion fails: " + why) {}
};

class SymbolicOnly : public Error {
public:
    explicit SymbolicOnly(const std::string& factor)
        : Error("SymbolicOnly", "no matrix realization for factor " + factor) {}
};

class UnsupportedDescription : public Error {
public:
    explicit UnsupportedDescription(const std::string& why)
        : Error("UnsupportedDescription", why) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(int idx)
        : Error("IndexOutOfRange", "generator index out of range: " + std::to_string(idx)) {}
};

}  // namespace dgal
