#include <doctest.h>

#include "sigma/errors.hpp"
#include "sigma/recurrence.hpp"
#include "sigma/render.hpp"
#include "sigma/sequence.hpp"
#include "support.hpp"

using namespace sigma;
using testing::P;
using testing::phi;
using testing::psi;
using testing::sqrt5;
using testing::t_minus;

namespace {

const Poly kT = Poly::t();

ClosedFormSequence binet() {
    return ClosedFormSequence({{phi() / sqrt5(), phi(), 1}, {-psi() / sqrt5(), psi(), 1}});
}

Sequence from_fn(QuadExt (*fn)(long)) {
    return Sequence(Sequence::Fn(fn));
}

QuadExt nat(long n) { return QuadExt(n); }
QuadExt one(long) { return QuadExt(1); }
QuadExt square(long n) { return QuadExt(n * n); }

} // namespace

TEST_SUITE("closed_form") {
    TEST_CASE("Binet values") {
        const auto f = binet();
        const long expected[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
        for (long n = 1; n <= 9; ++n) {
            CHECK(f.eval(n) == QuadExt(expected[n - 1]));
            CHECK(f.eval(n).is_rational());
        }
        CHECK(f.eval_rational(9) == Rational(34));
    }

    TEST_CASE("second-order IVP closed form at n = 1") {
        // 2n - 1 + n(n-1)(n-2)/6 = 1 + 2(n-1) + C(n-1,2) + C(n-1,3)
        const ClosedFormSequence f({{QuadExt(1), QuadExt(1), 1},
                                    {QuadExt(2), QuadExt(1), 2},
                                    {QuadExt(1), QuadExt(1), 3},
                                    {QuadExt(1), QuadExt(1), 4}});
        CHECK(f.eval(1) == QuadExt(1));
        for (long n = 1; n <= 30; ++n) {
            CHECK(f.eval(n) == QuadExt(Rational(2 * n - 1) + Rational(n * (n - 1) * (n - 2), 6)));
        }
    }

    TEST_CASE("delta terms") {
        const ClosedFormSequence d({}, {{3, QuadExt(Rational(7, 2))}});
        CHECK(d.eval(3) == QuadExt(Rational(7, 2)));
        CHECK(d.eval(2).is_zero());
        CHECK(d.eval(4).is_zero());
    }

    TEST_CASE("root zero uses 0^0 = 1") {
        const ClosedFormSequence z({{QuadExt(5), QuadExt(0), 2}});
        CHECK(z.eval(1).is_zero());
        CHECK(z.eval(2) == QuadExt(5));
        CHECK(z.eval(3).is_zero());
    }

    TEST_CASE("canonical merge") {
        const ClosedFormSequence a({{QuadExt(1), QuadExt(2), 1}, {QuadExt(2), QuadExt(2), 1}, {QuadExt(1), QuadExt(3), 1}});
        const ClosedFormSequence b({{QuadExt(1), QuadExt(3), 1}, {QuadExt(3), QuadExt(2), 1}});
        CHECK(a == b);
        const ClosedFormSequence c({{QuadExt(1), QuadExt(2), 1}, {QuadExt(-1), QuadExt(2), 1}});
        CHECK(c.terms().empty());
    }

    TEST_CASE("irrational value is rejected by eval_rational") {
        const ClosedFormSequence f({{QuadExt(1), phi(), 1}});
        CHECK_THROWS_AS(f.eval_rational(2), VerificationFailed);
    }
}

TEST_SUITE("sequence_ops") {
    TEST_CASE("delta") {
        const auto d1 = seq_delta(from_fn(one));
        const auto dsq = seq_delta(from_fn(square));
        for (long n = 1; n <= 20; ++n) {
            CHECK(d1(n).is_zero());
            CHECK(dsq(n) == QuadExt(2 * n + 1));
        }
        // Delta a_{n+1} = a_n for Fibonacci
        const Sequence fib = binet();
        const Sequence shifted(Sequence::Fn([fib](long n) { return fib(n + 1); }));
        const auto dfib = seq_delta(shifted);
        for (long n = 1; n <= 40; ++n) CHECK(dfib(n) == fib(n));
    }

    TEST_CASE("convolution examples") {
        const Sequence n = from_fn(nat);
        const Sequence u = from_fn(one);
        for (long k = 1; k <= 100; ++k) {
            CHECK(seq_convolve(n, u, k) == QuadExt(Rational(k * k - k, 2)));
            CHECK(seq_convolve(n, n, k) == QuadExt(Rational(k * k * k - k, 6)));
        }
        CHECK(seq_convolve(from_fn(square), n, 1).is_zero());
        const auto c = convolution(n, u);
        CHECK(c(10) == QuadExt(45));
    }

    TEST_CASE("partial sum") {
        const auto s = partial_sum(from_fn(nat));
        CHECK(s(1).is_zero());
        CHECK(s(5) == QuadExt(10));
    }

    TEST_CASE("prefix comparison") {
        const Sequence rec = RecursiveSequence(RecurrenceSpec::fibonacci());
        CHECK(seq_equal_prefix(binet(), rec, 60).equal);

        const Sequence nm1 = ClosedFormSequence({{QuadExt(1), QuadExt(1), 2}});
        const Sequence u = from_fn(one);
        CHECK(seq_equal_prefix(nm1, convolution(u, u), 50).equal);

        const Sequence tampered = RecursiveSequence(RecurrenceSpec::fibonacci(Rational(1), Rational(2)));
        const auto cmp = seq_equal_prefix(binet(), tampered, 3);
        CHECK_FALSE(cmp.equal);
        REQUIRE(cmp.first_mismatch.has_value());
        CHECK(*cmp.first_mismatch == 2);
    }

    TEST_CASE("recursive sequence holds its initials") {
        RecursiveSequence r(RecurrenceSpec::fibonacci(Rational(2), Rational(-3, 7)));
        CHECK(r(1) == Rational(2));
        CHECK(r(2) == Rational(-3, 7));
        CHECK(r(3) == Rational(11, 7));
    }
}

TEST_SUITE("inverse_transform") {
    TEST_CASE("inversion rule for repeated roots matches brute-force convolution") {
        for (const Rational r : {Rational(1), Rational(2), Rational(1, 2)}) {
            const Sequence g = ClosedFormSequence({{QuadExt(1), QuadExt(r), 1}});
            Sequence power = g;
            for (int m = 2; m <= 4; ++m) {
                power = convolution(power, g);
                const Sequence rule = ClosedFormSequence({{QuadExt(1), QuadExt(r), m}});
                CHECK(seq_equal_prefix(power, rule, 25).equal);
            }
        }
    }

    TEST_CASE("examples") {
        const auto nm1 = inverse_transform(TransformExpr(RatFunc(1, t_minus(1).pow(2))));
        for (long n = 1; n <= 20; ++n) CHECK(nm1.eval(n) == QuadExt(n - 1));

        const auto cubic = inverse_transform(TransformExpr(RatFunc(kT, t_minus(1).pow(4))));
        CHECK(cubic == ClosedFormSequence({{QuadExt(1), QuadExt(1), 3}, {QuadExt(1), QuadExt(1), 4}}));
        for (long n = 1; n <= 20; ++n) CHECK(cubic.eval(n) == QuadExt(Rational(n * (n - 1) * (n - 2), 6)));

        const auto fib = inverse_transform(TransformExpr(RatFunc(kT, P({-1, -1, 1}))));
        CHECK(fib == binet());
    }

    TEST_CASE("root-zero poles become deltas") {
        const auto d = inverse_transform(TransformExpr(RatFunc(1, kT.pow(2))));
        CHECK(d.terms().empty());
        CHECK(d.deltas().at(2) == QuadExt(1));
        // 1/(t(t-1)) is the unit step delayed by one: 0, 1, 1, 1, ...
        const auto step = inverse_transform(TransformExpr(RatFunc(1, kT * t_minus(1))));
        CHECK(step.eval(1).is_zero());
        for (long n = 2; n <= 10; ++n) CHECK(step.eval(n) == QuadExt(1));
    }

    TEST_CASE("forward transform") {
        CHECK(transform_of(binet()) == TransformExpr(RatFunc(kT, P({-1, -1, 1}))));
        const ClosedFormSequence d({}, {{2, QuadExt(3)}});
        CHECK(transform_of(d) == xf_delta(2, QuadExt(3)));
    }

    TEST_CASE("unsupported denominator propagates") {
        CHECK_THROWS_AS(inverse_transform(TransformExpr(RatFunc(1, P({-1, -1, 0, 1})))), UnsupportedFactorization);
    }
}

TEST_SUITE("render") {
    TEST_CASE("Fibonacci-normal display") {
        CHECK(render_fibonacci_normal(binet()) == "((1+sqrt(5))^n - (1-sqrt(5))^n)/(2^n*sqrt(5))");
    }

    TEST_CASE("generic display") {
        const ClosedFormSequence affine({{QuadExt(2), QuadExt(1), 1}, {QuadExt(3), QuadExt(1), 2}});
        CHECK(render_closed_form(affine) == "2 + 3*(n-1)");
        CHECK(render_fibonacci_normal(affine) == "2 + 3*(n-1)");
        const ClosedFormSequence geo({{QuadExt(Rational(3, 2)), QuadExt(3), 1}, {QuadExt(Rational(-1, 2)), QuadExt(1), 1}});
        CHECK(render_closed_form(geo) == "3/2*3^(n-1) - 1/2");
        CHECK(render_closed_form(ClosedFormSequence()) == "0");
        const ClosedFormSequence with_delta({{QuadExt(1), QuadExt(2), 3}}, {{1, QuadExt(-1)}});
        CHECK(render_closed_form(with_delta) == "C(n-1,2)*2^(n-3) - delta(n,1)");
    }

    TEST_CASE("factored transform display") {
        CHECK(render_transform(xf_geometric(QuadExt(5))) == "1/(e^s - 5)");
        CHECK(render_transform(xf_n_pow_k(2)) == "(e^(2s) + e^s)/(e^s - 1)^3");
        CHECK(render_transform(xf_n_pow_k(2), Display::T) == "(t^2 + t)/(t - 1)^3");
    }
}
