#include "sigma/factor.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <utility>

#include "sigma/errors.hpp"

namespace sigma {

namespace {

// Primitive integer multiple of a rational polynomial.
std::vector<mpz_class> integer_coefficients(const Poly& p) {
    mpz_class lcm = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational_part().denominator().get_mpz_t());
    std::vector<mpz_class> out;
    mpz_class content = 0;
    for (const auto& c : p.coefficients()) {
        mpz_class v = c.rational_part().numerator() * (lcm / c.rational_part().denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content != 0) {
        for (auto& v : out) v /= content;
    }
    return out;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> primes;
    constexpr unsigned long kTrialBound = 1UL << 20;
    for (unsigned long p = 2; p <= kTrialBound && mpz_class(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            n /= p;
            ++e;
        }
        if (e > 0) primes.emplace_back(mpz_class(p), e);
    }
    // Whatever survives trial division is taken to be prime.
    if (n > 1) primes.emplace_back(n, 1);
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : primes) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

// Distinct rational roots of a nonzero rational polynomial.
std::vector<Rational> rational_roots(Poly p) {
    std::vector<Rational> out;
    if (p.degree() < 1) return out;
    if (p.coefficient(0).is_zero()) {
        out.emplace_back(0);
        while (!p.is_zero() && p.coefficient(0).is_zero()) p = exact_div(p, Poly::t());
        if (p.degree() < 1) return out;
    }
    const auto ints = integer_coefficients(p);
    const auto ps = divisors(ints.front());
    const auto qs = divisors(ints.back());
    std::vector<Rational> candidates;
    for (const auto& a : ps) {
        for (const auto& b : qs) {
            candidates.emplace_back(a, b);
            candidates.emplace_back(-a, b);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        if (p.degree() < 1) break;
        if (p.eval(QuadExt(r)).is_zero()) {
            out.push_back(r);
            p = exact_div(p, Poly::linear(QuadExt(r)));
        }
    }
    return out;
}

std::vector<QuadExt> quadratic_roots(const Poly& q) {
    const Rational a = q.coefficient(2).rational_part();
    const Rational b = q.coefficient(1).rational_part();
    const Rational c = q.coefficient(0).rational_part();
    const Rational disc = b * b - Rational(4) * a * c;
    if (disc.sign() < 0) throw UnsupportedFactorization("complex roots are not supported: " + q.to_string());
    const QuadExt root = QuadExt::sqrt(disc);
    const QuadExt two_a(Rational(2) * a);
    return {(QuadExt(-b) + root) / two_a, (QuadExt(-b) - root) / two_a};
}

using Complex = std::complex<long double>;

std::vector<Complex> numeric_roots(const std::vector<long double>& monic) {
    const std::size_t n = monic.size() - 1;
    std::vector<Complex> z(n);
    const Complex seed(0.4L, 0.9L);
    long double radius = 1.0L;
    for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, 1.0L + std::fabs(monic[k]));
    for (std::size_t k = 0; k < n; ++k) z[k] = radius * std::pow(seed, static_cast<int>(k));
    const auto eval = [&](Complex x) {
        Complex acc = 0;
        for (std::size_t k = monic.size(); k-- > 0;) acc = acc * x + monic[k];
        return acc;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex den = 1;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) den *= z[i] - z[j];
            }
            const Complex step = eval(z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-18L) break;
    }
    return z;
}

mpz_class round_to_integer(long double x) {
    if (!std::isfinite(x) || std::fabs(x) > 9e18L) throw UnsupportedFactorization("coefficients too large to split");
    return mpz_class(static_cast<long>(std::llround(x)));
}

// Pairs numeric roots of a monic integer polynomial into integer quadratic
// factors; every candidate is checked by exact division.
bool pair_up(const Poly& rem, std::vector<Complex> roots, std::vector<Poly>& out) {
    if (roots.empty()) return rem.degree() == 0;
    const Complex first = roots.front();
    for (std::size_t j = 1; j < roots.size(); ++j) {
        const mpz_class sum = round_to_integer((first + roots[j]).real());
        const mpz_class prod = round_to_integer((first * roots[j]).real());
        const Poly quad({QuadExt(Rational(prod, 1)), QuadExt(Rational(-sum, 1)), QuadExt(1)});
        auto [q, r] = divmod(rem, quad);
        if (!r.is_zero()) continue;
        std::vector<Complex> rest;
        for (std::size_t k = 1; k < roots.size(); ++k) {
            if (k != j) rest.push_back(roots[k]);
        }
        const std::size_t mark = out.size();
        out.push_back(quad);
        if (pair_up(q, std::move(rest), out)) return true;
        out.resize(mark);
    }
    return false;
}

// Splits a squarefree rational polynomial without rational roots into
// rational quadratic factors.
std::vector<Poly> split_quadratics(const Poly& p) {
    const int n = p.degree();
    if (n == 2) return {p};
    if (n % 2 != 0 || n > 16) {
        throw UnsupportedFactorization("irreducible factor of degree > 2 in " + p.to_string());
    }
    // y = lc*t turns lc^(n-1) p(y/lc) into a monic integer polynomial whose
    // rational factors are monic integer polynomials.
    const auto ints = integer_coefficients(p);
    const mpz_class& lc = ints.back();
    std::vector<QuadExt> ycoef(static_cast<std::size_t>(n) + 1, QuadExt(1));
    std::vector<long double> approx;
    for (int i = 0; i < n; ++i) {
        mpz_class lc_pow;
        mpz_pow_ui(lc_pow.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(n - 1 - i));
        ycoef[static_cast<std::size_t>(i)] = QuadExt(Rational(ints[static_cast<std::size_t>(i)] * lc_pow, 1));
    }
    for (const auto& c : ycoef) approx.push_back(static_cast<long double>(c.rational_part().to_double()));
    const Poly ypoly(ycoef);
    std::vector<Poly> yquads;
    if (!pair_up(ypoly, numeric_roots(approx), yquads)) {
        throw UnsupportedFactorization("irreducible factor of degree > 2 in " + p.to_string());
    }
    std::vector<Poly> out;
    const Rational lcr(lc, 1);
    for (const auto& yq : yquads) {
        // y^2 + b y + c with y = lc t  ->  t^2 + (b/lc) t + c/lc^2
        out.emplace_back(std::vector<QuadExt>{
            QuadExt(yq.coefficient(0).rational_part() / (lcr * lcr)),
            QuadExt(yq.coefficient(1).rational_part() / lcr), QuadExt(1)});
    }
    return out;
}

// (factor, multiplicity) pairs with squarefree, pairwise coprime factors.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    Poly c = gcd(p, p.derivative());
    Poly w = exact_div(p.monic(), c);
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(std::move(z), i);
        ++i;
        c = exact_div(c, y);
        w = std::move(y);
    }
    return out;
}

std::vector<RootMultiplicity> factor_rational(const Poly& p) {
    std::vector<RootMultiplicity> out;
    for (auto& [factor, mult] : squarefree_decomposition(p)) {
        Poly rest = factor;
        for (const auto& r : rational_roots(factor)) {
            out.push_back({QuadExt(r), mult});
            rest = exact_div(rest, Poly::linear(QuadExt(r)));
        }
        if (rest.degree() < 1) continue;
        for (const auto& quad : split_quadratics(rest.monic())) {
            for (auto& r : quadratic_roots(quad)) out.push_back({std::move(r), mult});
        }
    }
    return out;
}

} // namespace

std::vector<RootMultiplicity> factor_roots(const Poly& p) {
    if (p.degree() < 1) throw Error("factor_roots needs a polynomial of degree >= 1");
    const std::int64_t field = p.radicand();
    std::vector<RootMultiplicity> roots;
    if (field == 0) {
        roots = factor_rational(p);
    } else {
        // p * conj(p) is rational; each of its roots is tested against p.
        Poly rest = p.monic();
        for (const auto& candidate : factor_rational(p * p.conjugate())) {
            const QuadExt& r = candidate.root;
            if (r.radicand() != 0 && r.radicand() != field) {
                throw UnsupportedFactorization("roots span more than one quadratic field");
            }
            int m = 0;
            while (rest.degree() > 0 && rest.eval(r).is_zero()) {
                rest = exact_div(rest, Poly::linear(r));
                ++m;
            }
            if (m > 0) roots.push_back({r, m});
        }
        if (rest.degree() > 0) throw UnsupportedFactorization("could not split " + p.to_string());
    }
    std::int64_t d = 0;
    for (const auto& rm : roots) {
        if (rm.root.radicand() == 0) continue;
        if (d != 0 && d != rm.root.radicand()) {
            throw UnsupportedFactorization("roots span more than one quadratic field");
        }
        d = rm.root.radicand();
    }
    std::sort(roots.begin(), roots.end(),
              [](const RootMultiplicity& a, const RootMultiplicity& b) { return compare(a.root, b.root) > 0; });
    if (expand_roots(roots) != p.monic()) throw VerificationFailed("root multiset does not reproduce " + p.to_string());
    return roots;
}

Poly expand_roots(const std::vector<RootMultiplicity>& roots) {
    Poly out(1);
    for (const auto& rm : roots) out *= Poly::linear(rm.root).pow(rm.multiplicity);
    return out;
}

namespace {

// Solves m x = rhs in place by Gaussian elimination over the field.
std::vector<QuadExt> solve_linear(std::vector<std::vector<QuadExt>> m, std::vector<QuadExt> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw Error("singular partial-fraction system");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        const QuadExt inv = m[col][col].inverse();
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const QuadExt f = m[row][col] * inv;
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
    return rhs;
}

} // namespace

std::vector<PFTerm> partial_fractions(const RatFunc& a) {
    if (!a.is_strictly_proper()) throw ImproperRational("partial fractions need deg num < deg den: " + a.to_string());
    if (a.is_zero()) return {};
    const auto roots = factor_roots(a.den());
    const int n = a.den().degree();

    // Unknown c_(r,j) multiplies den / (t - r)^j.
    std::vector<std::pair<const RootMultiplicity*, int>> unknowns;
    std::vector<Poly> basis;
    for (const auto& rm : roots) {
        Poly rest = a.den();
        for (int j = 1; j <= rm.multiplicity; ++j) {
            rest = exact_div(rest, Poly::linear(rm.root));
            unknowns.emplace_back(&rm, j);
            basis.push_back(rest);
        }
    }
    std::vector<std::vector<QuadExt>> m(static_cast<std::size_t>(n), std::vector<QuadExt>(static_cast<std::size_t>(n)));
    std::vector<QuadExt> rhs(static_cast<std::size_t>(n));
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) m[row][col] = basis[col].coefficient(row);
        rhs[row] = a.num().coefficient(row);
    }
    const auto x = solve_linear(std::move(m), std::move(rhs));
    std::vector<PFTerm> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        out.push_back({unknowns[i].first->root, unknowns[i].second, x[i]});
    }
    return out;
}

RatFunc recombine(const std::vector<PFTerm>& terms) {
    RatFunc out;
    for (const auto& term : terms) {
        out += RatFunc(Poly(term.coefficient), Poly::linear(term.root).pow(term.multiplicity));
    }
    return out;
}

} // namespace sigma
