#pragma once

#include <vector>

#include "sigma/rat_func.hpp"

namespace sigma {

struct RootMultiplicity {
    QuadExt root;
    int multiplicity = 0;

    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// A partial-fraction term coefficient / (t - root)^multiplicity.
struct PFTerm {
    QuadExt root;
    int multiplicity = 0;
    QuadExt coefficient;

    friend bool operator==(const PFTerm&, const PFTerm&) = default;
};

/// Complete root multiset of a polynomial whose irreducible factors over Q
/// are linear or real quadratics, all quadratic roots sharing one radicand.
/// Polynomials with coefficients in Q(sqrt(d)) are handled through their
/// norm. Roots are sorted by decreasing value.
///
/// Throws UnsupportedFactorization for an irreducible factor of degree > 2,
/// complex roots, or roots in different quadratic fields.
std::vector<RootMultiplicity> factor_roots(const Poly& p);

/// Product of (t - root)^multiplicity.
Poly expand_roots(const std::vector<RootMultiplicity>& roots);

/// Decomposes a strictly proper rational function into sum c/(t - r)^m.
/// Coefficients come from an exact linear solve over Q(sqrt(d)); zero
/// coefficients are omitted. Throws ImproperRational if deg num >= deg den.
std::vector<PFTerm> partial_fractions(const RatFunc& a);

/// Sum of the terms as a single normalized rational function.
RatFunc recombine(const std::vector<PFTerm>& terms);

} // namespace sigma
