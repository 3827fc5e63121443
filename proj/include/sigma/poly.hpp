#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sigma/quad_ext.hpp"

namespace sigma {

/// How the formal variable is printed: plain `t`, or `e^s` with t = e^s.
enum class Display { T, Exps };

/// Univariate polynomial in t over Q(sqrt(d)), lowest degree first.
/// Trailing zeros are always trimmed; the zero polynomial has no
/// coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<QuadExt> coefficients);
    Poly(QuadExt constant); // NOLINT(google-explicit-constructor)
    Poly(long constant) : Poly(QuadExt(constant)) {} // NOLINT(google-explicit-constructor)

    /// c * t^k
    static Poly monomial(QuadExt c, int k);
    /// t - root
    static Poly linear(const QuadExt& root);
    static Poly t() { return monomial(QuadExt(1), 1); }

    const std::vector<QuadExt>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Coefficient of t^k, zero beyond the degree.
    QuadExt coefficient(int k) const;
    const QuadExt& leading() const;

    /// Radicand shared by all coefficients (0 if all rational).
    std::int64_t radicand() const;
    bool is_rational() const { return radicand() == 0; }

    Poly monic() const;
    Poly derivative() const;
    Poly conjugate() const;
    Poly scaled(const QuadExt& c) const;
    Poly pow(int exponent) const;

    QuadExt eval(const QuadExt& t0) const;
    double eval(double t0) const;

    std::string to_string(Display display = Display::T) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<QuadExt> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Long division a = q*b + r with deg r < deg b. Throws DivisionByZero for b = 0.
PolyDivision divmod(const Poly& a, const Poly& b);

/// Exact quotient; throws Error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd by the Euclidean algorithm. gcd(0, 0) throws DivisionByZero.
Poly gcd(const Poly& a, const Poly& b);

/// Renders the variable power t^k for the given display mode.
std::string render_power(int k, Display display);

} // namespace sigma
