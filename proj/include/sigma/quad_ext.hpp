#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "sigma/rational.hpp"

namespace sigma {

/// An element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// The radicand d is squarefree. d = 0 is the canonical encoding of a pure
/// rational (and then b = 0); a value whose radical part cancels is demoted
/// to d = 0 automatically. Binary operations require both operands to carry
/// the same radicand unless one of them is pure rational, otherwise
/// RadicandMismatch is thrown.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long value) : rational_(value) {}                  // NOLINT(google-explicit-constructor)
    QuadExt(Rational value) : rational_(std::move(value)) {}   // NOLINT(google-explicit-constructor)
    /// Non-squarefree radicands are reduced: sqrt(12) becomes 2*sqrt(3).
    QuadExt(Rational rational_part, Rational radical_part, std::int64_t radicand);

    /// Exact square root of a nonnegative rational.
    static QuadExt sqrt(const Rational& value);

    const Rational& rational_part() const { return rational_; }
    const Rational& radical_part() const { return radical_; }
    std::int64_t radicand() const { return radicand_; }

    bool is_rational() const { return radicand_ == 0; }
    bool is_zero() const { return radicand_ == 0 && rational_.is_zero(); }

    QuadExt conjugate() const;
    /// x * conjugate(x), always rational.
    Rational norm() const;
    /// Exact sign; no floating point involved.
    int sign() const;
    QuadExt abs() const { return sign() < 0 ? -*this : *this; }
    QuadExt inverse() const;
    QuadExt pow(long exponent) const;

    /// Relative error below 2^-50; cancellation between the two parts is
    /// avoided by routing through the conjugate.
    double to_double() const;

    /// "a + b*sqrt(d)" with reduced rationals, e.g. "1/2 + 1/2*sqrt(5)".
    std::string to_string() const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.radicand_ == b.radicand_ && a.rational_ == b.rational_ && a.radical_ == b.radical_;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

private:
    void normalize();

    Rational rational_;
    Rational radical_;
    std::int64_t radicand_ = 0;
};

/// The radicand shared by a and b (0 when both are rational).
/// Throws RadicandMismatch when they live in different fields.
std::int64_t common_radicand(const QuadExt& a, const QuadExt& b);

/// Exact three-way comparison, -1, 0 or +1.
int compare(const QuadExt& a, const QuadExt& b);

/// Writes n = k^2 * d with d squarefree (d >= 0). Trial division bounds the
/// work, so for inputs with a repeated prime factor above 2^20 the returned d
/// may not be squarefree.
void squarefree_split(const mpz_class& n, mpz_class& k, mpz_class& d);

} // namespace sigma
