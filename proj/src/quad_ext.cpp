#include "sigma/quad_ext.hpp"

#include <cmath>
#include <limits>

#include "sigma/errors.hpp"

namespace sigma {

void squarefree_split(const mpz_class& n, mpz_class& k, mpz_class& d) {
    if (n < 0) throw Error("squarefree_split: negative input");
    k = 1;
    d = n;
    if (d == 0) return;
    constexpr unsigned long kTrialBound = 1UL << 20;
    for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
        mpz_class pp = mpz_class(p) * p;
        if (pp > d) break;
        while (mpz_divisible_p(d.get_mpz_t(), pp.get_mpz_t()) != 0) {
            d /= pp;
            k *= p;
        }
    }
    if (mpz_perfect_square_p(d.get_mpz_t()) != 0) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
        k *= root;
        d = 1;
    }
}

namespace {

std::int64_t to_radicand(const mpz_class& d) {
    if (!d.fits_slong_p()) throw UnsupportedFactorization("radicand too large: " + d.get_str());
    return d.get_si();
}

} // namespace

QuadExt::QuadExt(Rational rational_part, Rational radical_part, std::int64_t radicand)
    : rational_(std::move(rational_part)), radical_(std::move(radical_part)), radicand_(radicand) {
    if (radicand_ < 0) throw Error("negative radicand");
    mpz_class k;
    mpz_class d;
    squarefree_split(mpz_class(static_cast<long>(radicand_)), k, d);
    radical_ *= Rational(k, mpz_class(1));
    radicand_ = to_radicand(d);
    normalize();
}

void QuadExt::normalize() {
    if (radicand_ == 1) {
        rational_ += radical_;
        radical_ = Rational(0);
        radicand_ = 0;
    }
    if (radicand_ == 0) radical_ = Rational(0);
    if (radical_.is_zero()) radicand_ = 0;
}

QuadExt QuadExt::sqrt(const Rational& value) {
    if (value.sign() < 0) throw Error("square root of a negative rational");
    // sqrt(p/q) = sqrt(p*q)/q
    const mpz_class pq = value.numerator() * value.denominator();
    mpz_class k;
    mpz_class d;
    squarefree_split(pq, k, d);
    const Rational scale(k, value.denominator());
    if (d == 1 || d == 0) return QuadExt(d == 0 ? Rational(0) : scale);
    QuadExt out;
    out.radical_ = scale;
    out.radicand_ = to_radicand(d);
    out.normalize();
    return out;
}

std::int64_t common_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.radicand() == 0) return b.radicand();
    if (b.radicand() == 0 || a.radicand() == b.radicand()) return a.radicand();
    throw RadicandMismatch("cannot combine sqrt(" + std::to_string(a.radicand()) + ") and sqrt(" +
                           std::to_string(b.radicand()) + ")");
}

QuadExt QuadExt::conjugate() const {
    QuadExt out = *this;
    out.radical_ = -out.radical_;
    return out;
}

Rational QuadExt::norm() const {
    return rational_ * rational_ - radical_ * radical_ * Rational(static_cast<long>(radicand_));
}

int QuadExt::sign() const {
    const int sa = rational_.sign();
    const int sb = radical_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the part with larger square wins. Equality is impossible
    // for squarefree d > 1.
    const Rational a2 = rational_ * rational_;
    const Rational b2d = radical_ * radical_ * Rational(static_cast<long>(radicand_));
    return a2 > b2d ? sa : sb;
}

QuadExt QuadExt::operator-() const {
    QuadExt out = *this;
    out.rational_ = -out.rational_;
    out.radical_ = -out.radical_;
    return out;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    const std::int64_t d = common_radicand(*this, o);
    rational_ += o.rational_;
    radical_ += o.radical_;
    radicand_ = d;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    return *this += -o;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    const std::int64_t d = common_radicand(*this, o);
    const Rational dd(static_cast<long>(d));
    Rational a = rational_ * o.rational_ + radical_ * o.radical_ * dd;
    Rational b = rational_ * o.radical_ + radical_ * o.rational_;
    rational_ = std::move(a);
    radical_ = std::move(b);
    radicand_ = d;
    normalize();
    return *this;
}

QuadExt QuadExt::inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw DivisionByZero();
    QuadExt out = conjugate();
    out.rational_ /= n;
    out.radical_ /= n;
    return out;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    common_radicand(*this, o);
    return *this *= o.inverse();
}

QuadExt QuadExt::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    QuadExt result(1);
    QuadExt base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

double QuadExt::to_double() const {
    if (radicand_ == 0) return rational_.to_double();
    const double root = std::sqrt(static_cast<double>(radicand_));
    if (rational_.sign() * radical_.sign() >= 0) {
        return rational_.to_double() + radical_.to_double() * root;
    }
    // a + b*sqrt(d) = (a^2 - b^2 d) / (a - b*sqrt(d)); the denominator adds
    // two quantities of equal sign.
    const double den = rational_.to_double() - radical_.to_double() * root;
    return norm().to_double() / den;
}

std::string QuadExt::to_string() const {
    if (radicand_ == 0) return rational_.to_string();
    const std::string root = "sqrt(" + std::to_string(radicand_) + ")";
    const Rational mag = radical_.abs();
    const std::string radical = mag == Rational(1) ? root : mag.to_string() + "*" + root;
    if (rational_.is_zero()) return (radical_.sign() < 0 ? "-" : "") + radical;
    return rational_.to_string() + (radical_.sign() < 0 ? " - " : " + ") + radical;
}

int compare(const QuadExt& a, const QuadExt& b) {
    return (a - b).sign();
}

} // namespace sigma
