#pragma once

#include <string>

#include "sigma/poly.hpp"

namespace sigma {

/// A reduced ratio num/den of polynomials in t (t stands for e^s).
/// den is monic and gcd(num, den) = 1; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(Poly num); // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_strictly_proper() const { return num_.degree() < den_.degree(); }

    /// Exact evaluation; throws PoleEvaluation when den(t0) = 0.
    QuadExt eval(const QuadExt& t0) const;
    double eval(double t0) const;

    std::string to_string(Display display = Display::T) const;

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

private:
    Poly num_;
    Poly den_;
};

/// d/ds of A(e^s), written back in t: t * dA/dt.
RatFunc d_ds(const RatFunc& a);

} // namespace sigma
