#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigma/recurrence_spec.hpp"
#include "sigma/sequence.hpp"

namespace sigma {

inline constexpr long kSelfCheckDepth = 64;

struct SolutionReport {
    ClosedFormSequence closed_form;
    TransformExpr transform;
    long verified_upto = 0;
    /// For homogeneous specs: the solutions for unit initial vectors, so that
    /// a_n = sum_i basis[i](n) * a_i. For order 2 these are (gamma_n, beta_n).
    std::optional<std::vector<ClosedFormSequence>> coefficient_decomposition;
};

/// t^k - sum_j c_j t^j
Poly characteristic_polynomial(const RecurrenceSpec& spec);

/// Sum of the forcing transforms: n^p via the n-multiplication rule,
/// b^n = b * b^(n-1) <-> b/(t - b).
TransformExpr forcing_transform(const RecurrenceSpec& spec);

/// Transforms both sides with the shift rule, solves for the transform of
/// a_n, inverts it, and checks the result against direct recursion for
/// n <= verify_upto before returning.
///
/// Throws ResonantForcing when a geometric forcing base is a characteristic
/// root, UnsupportedFactorization from the root finder, and
/// VerificationFailed if the self-check disagrees (a bug, never an input
/// problem).
SolutionReport solve_ivp(const RecurrenceSpec& spec, long verify_upto = kSelfCheckDepth);

/// a_{n+1} = lambda a_n + beta from the explicit formulas:
/// lambda != 1: (a1 + beta/(lambda-1)) lambda^(n-1) + beta/(1-lambda)
/// lambda == 1: a1 + beta (n-1)
SolutionReport solve_affine(const Rational& lambda, const Rational& beta, const Rational& a1);

struct FibonacciCoefficients {
    QuadExt gamma;
    QuadExt beta;
};

/// gamma_n and beta_n with a_n = gamma_n a_1 + beta_n a_2 for
/// a_{n+2} = a_{n+1} + a_n, evaluated from their radical expressions in
/// powers of (1 +- sqrt(5)).
FibonacciCoefficients fibonacci_coefficients(long n);

struct VerificationReport {
    bool passed = true;
    long checked_upto = 0;
    std::optional<long> first_failure;
    std::string reason;
};

/// Checks initial values, the recurrence for every n with n + k <= upto, and
/// for the Fibonacci recurrence also Delta^2 a_n + Delta a_n = a_n.
VerificationReport verify_solution(const RecurrenceSpec& spec, const ClosedFormSequence& seq, long upto);

/// f(n) = 1 + sum_{k=1}^{n-1} 1/k^2 against Delta f = 1/n^2, f(2) = 2.
VerificationReport verify_inverse_square_ivp(long upto);

/// True when every value for n <= upto is an integer.
bool is_integer_valued(const ClosedFormSequence& seq, long upto);

} // namespace sigma
