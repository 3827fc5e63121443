#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "sigma/factor.hpp"
#include "sigma/poly.hpp"
#include "sigma/rat_func.hpp"
#include "sigma/sequence.hpp"

namespace testing {

using sigma::Poly;
using sigma::QuadExt;
using sigma::Rational;
using sigma::RatFunc;

inline QuadExt sqrt5() { return QuadExt(Rational(0), Rational(1), 5); }
inline QuadExt phi() { return QuadExt(Rational(1, 2), Rational(1, 2), 5); }
inline QuadExt psi() { return QuadExt(Rational(1, 2), Rational(-1, 2), 5); }

/// Coefficients lowest degree first.
inline Poly P(std::initializer_list<QuadExt> c) { return Poly(std::vector<QuadExt>(c)); }

inline Poly t_minus(const QuadExt& r) { return Poly::linear(r); }

/// Fibonacci numbers by plain iteration over big integers, F(1) = F(2) = 1.
inline std::vector<Rational> fibonacci_table(long upto) {
    std::vector<Rational> f{Rational(0), Rational(1), Rational(1)};
    for (long n = 3; n <= upto; ++n) f.push_back(f[n - 1] + f[n - 2]);
    return f;
}

/// Small random values for property tests; every suite seeds its own engine.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long range = 5, long max_den = 4) {
        return Rational(integer(-range, range), integer(1, max_den));
    }
    Rational nonzero_rational(long range = 5, long max_den = 4) {
        Rational r;
        while (r.is_zero()) r = rational(range, max_den);
        return r;
    }
    QuadExt quad(long d = 5) { return QuadExt(rational(), rational(), d); }

    Poly poly(int max_degree, bool radical = false) {
        std::vector<QuadExt> c;
        const int deg = static_cast<int>(integer(0, max_degree));
        for (int i = 0; i <= deg; ++i) c.push_back(radical ? quad() : QuadExt(rational()));
        return Poly(c);
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(integer(0, static_cast<long>(v.size()) - 1))];
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

/// Random denominator that factors: product of (t - r)^m over distinct roots
/// drawn from pool, total degree at most max_degree.
inline std::vector<sigma::RootMultiplicity> random_roots(Gen& g, const std::vector<QuadExt>& pool, int max_degree) {
    std::vector<sigma::RootMultiplicity> out;
    int degree = 0;
    const int wanted = static_cast<int>(g.integer(1, max_degree));
    for (const auto& r : pool) {
        if (degree >= wanted) break;
        if (g.integer(0, 1) == 0) continue;
        const int m = static_cast<int>(g.integer(1, std::min(3, wanted - degree)));
        out.push_back({r, m});
        degree += m;
    }
    if (out.empty()) out.push_back({pool.front(), 1});
    return out;
}

} // namespace testing
