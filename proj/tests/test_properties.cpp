#include <iomanip>
#include <doctest.h>

#include <cmath>

#include "sigma/dsl.hpp"
#include "sigma/errors.hpp"
#include "sigma/numeric.hpp"
#include "sigma/recurrence.hpp"
#include "support.hpp"

using namespace sigma;
using testing::Gen;
using testing::phi;
using testing::psi;
using testing::t_minus;

namespace {

constexpr int kCases = 120;

const std::vector<QuadExt>& rational_pool() {
    static const std::vector<QuadExt> pool{QuadExt(1), QuadExt(2), QuadExt(-1), QuadExt(Rational(1, 2)),
                                           QuadExt(-3), QuadExt(0), QuadExt(Rational(-2, 3))};
    return pool;
}

const std::vector<QuadExt>& closed_form_pool() {
    static const std::vector<QuadExt> pool{QuadExt(1), QuadExt(2), QuadExt(Rational(1, 2)), phi(), psi()};
    return pool;
}

// Random closed form with roots in {1, 2, 1/2, phi, psi} and multiplicity <= 3.
ClosedFormSequence random_closed_form(Gen& g) {
    std::vector<ClosedFormTerm> terms;
    const int count = static_cast<int>(g.integer(1, 4));
    for (int i = 0; i < count; ++i) {
        const QuadExt& root = g.pick(closed_form_pool());
        const QuadExt c = root.is_rational() ? QuadExt(g.nonzero_rational()) : g.quad();
        terms.push_back({c, root, static_cast<int>(g.integer(1, 3))});
    }
    std::map<int, QuadExt> deltas;
    if (g.integer(0, 3) == 0) deltas[static_cast<int>(g.integer(1, 3))] = QuadExt(g.nonzero_rational());
    return ClosedFormSequence(terms, deltas);
}

RatFunc random_proper(Gen& g, const std::vector<QuadExt>& pool, bool radical_numerator) {
    const auto roots = testing::random_roots(g, pool, 6);
    const Poly den = expand_roots(roots);
    Poly num;
    while (num.is_zero()) {
        std::vector<QuadExt> c;
        for (int i = 0; i < den.degree(); ++i) c.push_back(radical_numerator ? g.quad() : QuadExt(g.rational()));
        num = Poly(c);
    }
    return RatFunc(num, den);
}

} // namespace

TEST_SUITE("properties") {
    TEST_CASE("QuadExt field laws") {
        Gen g(101);
        for (int i = 0; i < kCases; ++i) {
            const QuadExt x = g.quad();
            const QuadExt y = g.quad();
            if (!x.is_zero()) CHECK((x * y) / x == y);
            CHECK(x.conjugate().conjugate() == x);
            CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
            CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
            CHECK((x * x.conjugate()).is_rational());
            const double f = x.to_double();
            if (std::fabs(f) > 1e-6) CHECK(x.sign() == (f > 0 ? 1 : -1));
            const Rational r(g.integer(-50, 50), g.integer(1, 50));
            CHECK(mpz_class(gcd(r.numerator(), r.denominator())) == 1);
            CHECK(r.denominator() > 0);
        }
    }

    TEST_CASE("divmod identity") {
        Gen g(202);
        for (int i = 0; i < kCases; ++i) {
            const Poly a = g.poly(8, i % 2 == 0);
            Poly b;
            while (b.is_zero()) b = g.poly(5, i % 3 == 0);
            const auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }

    TEST_CASE("gcd divides both arguments") {
        Gen g(303);
        for (int i = 0; i < kCases; ++i) {
            const Poly common = expand_roots(testing::random_roots(g, rational_pool(), 3));
            const Poly a = common * g.poly(3);
            const Poly b = common * g.poly(3);
            if (a.is_zero() || b.is_zero()) continue;
            const Poly d = gcd(a, b);
            CHECK(divmod(a, d).remainder.is_zero());
            CHECK(divmod(b, d).remainder.is_zero());
            CHECK(divmod(d, common).remainder.is_zero());
        }
    }

    TEST_CASE("factor_roots reconstructs the polynomial") {
        Gen g(404);
        std::vector<QuadExt> pool = rational_pool();
        pool.push_back(phi());
        pool.push_back(psi());
        for (int i = 0; i < kCases; ++i) {
            auto roots = testing::random_roots(g, pool, 7);
            const Poly p = expand_roots(roots).scaled(QuadExt(g.nonzero_rational()));
            const auto found = factor_roots(p);
            CHECK(expand_roots(found) == p.monic());
            int degree = 0;
            for (const auto& rm : found) degree += rm.multiplicity;
            CHECK(degree == p.degree());
        }
    }

    TEST_CASE("partial fractions round trip") {
        Gen g(505);
        std::vector<QuadExt> pool = rational_pool();
        pool.push_back(phi());
        pool.push_back(psi());
        for (int i = 0; i < kCases; ++i) {
            const RatFunc a = random_proper(g, pool, i % 2 == 0);
            const auto terms = partial_fractions(a);
            CHECK(recombine(terms) == a);
            for (const auto& t : terms) {
                CHECK_FALSE(t.coefficient.is_zero());
                CHECK(t.multiplicity >= 1);
            }
        }
    }

    TEST_CASE("d_ds is linear and obeys the product rule") {
        Gen g(606);
        for (int i = 0; i < kCases; ++i) {
            const RatFunc a = random_proper(g, rational_pool(), false);
            const RatFunc b = random_proper(g, rational_pool(), false);
            const QuadExt c(g.rational());
            CHECK(d_ds(a + RatFunc(Poly(c)) * b) == d_ds(a) + RatFunc(Poly(c)) * d_ds(b));
            CHECK(d_ds(a * b) == d_ds(a) * b + a * d_ds(b));
        }
    }

    TEST_CASE("transform and inverse round trip") {
        Gen g(707);
        for (int i = 0; i < kCases; ++i) {
            const ClosedFormSequence f = random_closed_form(g);
            const TransformExpr l = transform_of(f);
            CHECK(inverse_transform(l) == f);
        }
    }

    TEST_CASE("shift rule composition") {
        Gen g(808);
        for (int i = 0; i < kCases; ++i) {
            const ClosedFormSequence f = random_closed_form(g);
            const TransformExpr l = transform_of(f);
            const QuadExt f1 = f.eval(1);
            const QuadExt f2 = f.eval(2);
            const TransformExpr twice = xf_shift(xf_shift(l, 1, {f1}), 1, {f2});
            CHECK(xf_shift(l, 2, {f1, f2}) == twice);
            // and the shifted transform inverts to the shifted sequence
            const ClosedFormSequence shifted = inverse_transform(twice);
            for (long n = 1; n <= 12; ++n) CHECK(shifted.eval(n) == f.eval(n + 2));
        }
    }

    TEST_CASE("delta rule consistency") {
        Gen g(909);
        for (int i = 0; i < kCases; ++i) {
            const ClosedFormSequence f = random_closed_form(g);
            const TransformExpr l = transform_of(f);
            const QuadExt f1 = f.eval(1);
            const TransformExpr d = xf_delta_rule(l, f1);
            CHECK(d == xf_shift(l, 1, {f1}) - l);
            const ClosedFormSequence df = inverse_transform(d);
            const Sequence view = seq_delta(f);
            CHECK(seq_equal_prefix(df, view, 15).equal);
        }
    }

    TEST_CASE("delta and partial sum are inverse") {
        Gen g(1010);
        for (int i = 0; i < kCases; ++i) {
            const ClosedFormSequence f = random_closed_form(g);
            const Sequence s = partial_sum(seq_delta(f));
            for (long n = 1; n <= 50; ++n) CHECK(s(n) == f.eval(n) - f.eval(1));
            // transform side: partial sum of Delta f is f - f(1)
            const TransformExpr l = transform_of(f);
            const TransformExpr lhs = xf_partial_sum(xf_delta_rule(l, f.eval(1)));
            CHECK(lhs == l - xf_geometric(QuadExt(1)).scaled(f.eval(1)));
            // and Delta of the partial sum is f
            const Sequence d = seq_delta(partial_sum(f));
            CHECK(seq_equal_prefix(d, f, 30).equal);
        }
    }

    TEST_CASE("convolution theorem at sequence level") {
        Gen g(1111);
        for (int i = 0; i < kCases; ++i) {
            const ClosedFormSequence f = random_closed_form(g);
            const ClosedFormSequence h = random_closed_form(g);
            const TransformExpr product = xf_convolution(transform_of(f), transform_of(h));
            CHECK(seq_equal_prefix(convolution(f, h), inverse_transform(product), 30).equal);
            CHECK(product == xf_convolution(transform_of(h), transform_of(f)));
        }
    }

    TEST_CASE("convolution associates") {
        Gen g(1212);
        for (int i = 0; i < kCases; ++i) {
            const TransformExpr a = transform_of(random_closed_form(g));
            const TransformExpr b = transform_of(random_closed_form(g));
            const TransformExpr c = transform_of(random_closed_form(g));
            CHECK(xf_convolution(xf_convolution(a, b), c) == xf_convolution(a, xf_convolution(b, c)));
        }
    }

    TEST_CASE("rules agree with the defining series") {
        Gen g(1313);
        for (int i = 0; i < kCases; ++i) {
            ClosedFormSequence f = random_closed_form(g);
            const int rule = static_cast<int>(g.integer(0, 3));
            TransformExpr l = transform_of(f);
            ClosedFormSequence target = f;
            if (rule == 1) {
                l = xf_mul_by_n(l);
                target = inverse_transform(l);
                for (long n = 1; n <= 20; ++n) CHECK(target.eval(n) == QuadExt(n) * f.eval(n));
            } else if (rule == 2) {
                l = xf_partial_sum(l);
                target = inverse_transform(l);
            } else if (rule == 3) {
                l = xf_shift(l, 1, {f.eval(1)});
                target = inverse_transform(l);
            }
            const SeriesCheckConfig cfg = config_for(target, {1.0, 1.5, 2.0}, 1e-9);
            const auto report =
                evaluate_pair([&target](long n) { return target.eval_double(n); }, l, cfg);
            for (const auto& p : report.points) {
                INFO("rule " << rule << " s " << p.s << " N " << p.terms);
                if (p.discrepancy > 1e-9) MESSAGE("f = " << target.terms().size() << " terms, series " << std::setprecision(17) << p.series << " transform " << p.transform << " alpha " << cfg.growth_alpha << " s0 " << cfg.growth_s0 << " " << l.to_string(Display::T));
                CHECK(p.discrepancy <= 1e-9);
            }
        }
    }

    TEST_CASE("tail bound is sound") {
        Gen g(1414);
        for (int i = 0; i < kCases; ++i) {
            const ClosedFormSequence f = random_closed_form(g);
            const GrowthBound b = growth_bound(f);
            const double s = b.s0 + 0.3 + static_cast<double>(g.integer(0, 10)) / 10.0;
            const RealSequence fn = [&f](long n) { return f.eval_double(n); };
            const long n_small = g.integer(1, 30);
            const long m = n_small + g.integer(1, 200);
            const double gap = std::fabs(series_eval(fn, s, m) - series_eval(fn, s, n_small));
            CHECK(gap <= tail_bound(b.alpha, b.s0, s, n_small) * (1.0 + 1e-12) + 1e-15);
        }
    }

    TEST_CASE("solver matches direct recursion") {
        Gen g(1515);
        const std::vector<std::vector<Rational>> characteristic_coefficients = {
            {Rational(1), Rational(1)},               // t^2 - t - 1
            {Rational(-2), Rational(3)},              // (t-1)(t-2)
            {Rational(-1), Rational(2)},              // (t-1)^2
            {Rational(1, 2)},                         // t - 1/2
            {Rational(4), Rational(0)},               // (t-2)(t+2)
            {Rational(2), Rational(1), Rational(-2)}, // (t-1)(t+1)(t+2)
            {Rational(-1), Rational(-1), Rational(3)}, // (t-1)(t^2-2t-1)
        };
        for (int i = 0; i < kCases; ++i) {
            RecurrenceSpec spec;
            spec.coefficients = g.pick(characteristic_coefficients);
            spec.order = static_cast<int>(spec.coefficients.size());
            for (int j = 0; j < spec.order; ++j) spec.initials.push_back(g.rational());
            if (g.integer(0, 1) == 1) spec.forcing.push_back(ForcingTerm::power_of_n(g.rational(), static_cast<int>(g.integer(0, 3))));
            if (g.integer(0, 2) == 0) spec.forcing.push_back(ForcingTerm::geometric(g.nonzero_rational(), Rational(3)));
            const auto report = solve_ivp(spec);
            RecursiveSequence direct(spec);
            for (long n = 1; n <= 64; ++n) {
                const QuadExt v = report.closed_form.eval(n);
                CHECK(v.is_rational());
                CHECK(v == QuadExt(direct(n)));
            }
        }
    }

    TEST_CASE("superposition for the Fibonacci recurrence") {
        Gen g(1616);
        for (int i = 0; i < kCases; ++i) {
            const Rational a1 = g.rational(20, 9);
            const Rational a2 = g.rational(20, 9);
            const auto f = solve_ivp(RecurrenceSpec::fibonacci(a1, a2)).closed_form;
            for (long n = 1; n <= 40; ++n) {
                const auto [gamma, beta] = fibonacci_coefficients(n);
                CHECK(f.eval(n) == gamma * QuadExt(a1) + beta * QuadExt(a2));
            }
        }
    }

    TEST_CASE("DSL parse render parse") {
        Gen g(1717);
        for (int i = 0; i < kCases; ++i) {
            DslProgram p;
            const int k = static_cast<int>(g.integer(1, 4));
            p.recurrence.lhs_shift = k;
            for (int j = 0; j < k; ++j) {
                const Rational c = g.rational();
                if (!c.is_zero()) p.recurrence.rhs[j] = c;
            }
            if (g.integer(0, 1) == 1) p.recurrence.forcing.push_back(ForcingTerm::power_of_n(g.nonzero_rational(), 3));
            if (g.integer(0, 1) == 1) p.recurrence.forcing.push_back(ForcingTerm::power_of_n(g.nonzero_rational(), 0));
            if (g.integer(0, 1) == 1) {
                p.recurrence.forcing.push_back(ForcingTerm::geometric(g.nonzero_rational(), Rational(g.integer(1, 9), g.integer(1, 4))));
            }
            for (int j = 1; j <= k; ++j) p.initials[j] = g.rational();
            const std::string text = render_dsl(p);
            INFO(text);
            const DslProgram back = parse_dsl(text);
            CHECK(back == p);
            CHECK(render_dsl(back) == text);
        }
    }
}
