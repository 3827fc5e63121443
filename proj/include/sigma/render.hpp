#pragma once

#include <string>

#include "sigma/sequence.hpp"

namespace sigma {

/// Generic rendering as a sum of c*C(n-1,k)*r^(n-m) terms, with the
/// binomial shown as (n-1) for k = 1 and omitted for k = 0, and r^... omitted
/// for r = 1. Example: "2 + 3*(n-1)".
std::string render_closed_form(const ClosedFormSequence& f);

/// When f contains the two simple roots (1 +- sqrt(5))/2, rewrites their
/// contribution as (A*(1+sqrt(5))^n + B*(1-sqrt(5))^n)/(2^n*sqrt(5)); the
/// Fibonacci numbers come out as "((1+sqrt(5))^n - (1-sqrt(5))^n)/(2^n*sqrt(5))".
/// Falls back to render_closed_form otherwise.
std::string render_fibonacci_normal(const ClosedFormSequence& f);

/// Rational function with the denominator shown factored when all of its
/// roots are rational, e.g. "(e^(2s) + e^s)/(e^s - 1)^3".
std::string render_transform(const TransformExpr& l, Display display = Display::Exps);

} // namespace sigma
