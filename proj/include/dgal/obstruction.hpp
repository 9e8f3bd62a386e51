#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "dgal/linalg.hpp"
#include "dgal/ore.hpp"
#include "dgal/residues.hpp"

namespace dgal {

// Input data for the obstruction construction: A = dx(dx w)/dx w and
// B = dt(dx w)/dx w, both in Q(t)(x), with dt(A) = dx(B).
struct ObstructionProblem {
    RatXT A;
    RatXT B;
    std::optional<int> bound_m;  // override for M
    std::optional<int> bound_n;  // override for N
};

// R_0 = 1, R_{i+1} = dt(R_i) + B*R_i; dt^i(dx w) = R_i * dx w.
struct RSequence {
    std::vector<RatXT> r;  // r[i] = R_i, i = 0..M
};

RSequence r_sequence(const RatXT& B, int m);

// Minimal integers with M > n*p and N > n*(M-1).
struct Bounds {
    int m;
    int n;
};
Bounds default_bounds(int n, int p);

// Label of one matrix column (unknown) or row (equation location).
struct SystemLabels {
    std::vector<RatT> finite_poles;  // x_1..x_{p-1}, canonical order
    int n = 0;                       // max pole order of A and B
    int p = 0;                       // finite poles + infinity
    int m_bound = 0;
    int n_bound = 0;
};

struct ObstructionSystem {
    SystemLabels labels;
    QtMatrix matrix;  // rows = p(n+N)+1, cols = (M+1) + (Np+1)
};

ObstructionSystem build_system(const ObstructionProblem& prob);

struct ObstructionCertificate {
    OreOperator op;  // L = sum alpha_i Dt^i, nonzero
    RatXT h;
    RatXT A;
    RatXT B;
};

// The all-alpha-zero branch: a rational kernel element of dx h + A h = 0.
struct DegenerateReport {
    RatXT h0;
    RatXT A;
    RatXT B;
};

using ObstructionResult = std::variant<ObstructionCertificate, DegenerateReport>;

// System dimensions actually used, for reporting; zero when the A-in-Q(t)
// short-circuit applies.
struct ObstructionOutcome {
    ObstructionResult result;
    int rows = 0;
    int cols = 0;
};

ObstructionOutcome solve_obstruction(const ObstructionProblem& prob);

// Nonzero rational h0 with dx h0 + A h0 = 0, when one exists: requires
// A = -sum m_i/(x - x_i) with integer m_i and zero polynomial part; then
// h0 = prod (x - x_i)^{m_i}.
std::optional<RatXT> rational_first_order_kernel(const RatXT& A);

bool verify_obstruction(const ObstructionCertificate& c);

}  // namespace dgal
