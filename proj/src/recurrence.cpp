#include "sigma/recurrence.hpp"

#include <algorithm>

#include "sigma/errors.hpp"

namespace sigma {

Poly characteristic_polynomial(const RecurrenceSpec& spec) {
    Poly out = Poly::monomial(QuadExt(1), spec.order);
    for (int j = 0; j < spec.order; ++j) {
        out -= Poly::monomial(QuadExt(spec.coefficients[static_cast<std::size_t>(j)]), j);
    }
    return out;
}

TransformExpr forcing_transform(const RecurrenceSpec& spec) {
    TransformExpr out;
    for (const auto& f : spec.forcing) {
        if (f.kind == ForcingTerm::Kind::Power) {
            out = out + xf_n_pow_k(f.power, kMaxForcingPower).scaled(QuadExt(f.coefficient));
        } else {
            out = out + xf_geometric(QuadExt(f.base)).scaled(QuadExt(f.coefficient * f.base));
        }
    }
    return out;
}

namespace {

std::vector<QuadExt> lift(const std::vector<Rational>& xs) {
    return {xs.begin(), xs.end()};
}

SolutionReport solve_impl(const RecurrenceSpec& spec, long verify_upto, bool decompose) {
    spec.validate();
    const int k = spec.order;
    const Poly chr = characteristic_polynomial(spec);
    for (const auto& f : spec.forcing) {
        if (f.kind == ForcingTerm::Kind::Geometric && chr.eval(QuadExt(f.base)).is_zero()) {
            throw ResonantForcing("forcing " + f.base.to_string() + "^n resonates with a characteristic root");
        }
    }

    // l{a_(n+k)} - sum_j c_j l{a_(n+j)} = F with l{a_(n+j)} = t^j L - sub_j:
    // chr(t) L = sub_k - sum_(j>=1) c_j sub_j + F
    const std::vector<QuadExt> initials = lift(spec.initials);
    Poly known = shift_parts(k, initials).subtracted;
    for (int j = 1; j < k; ++j) {
        const std::vector<QuadExt> head(initials.begin(), initials.begin() + j);
        known -= shift_parts(j, head).subtracted.scaled(QuadExt(spec.coefficients[static_cast<std::size_t>(j)]));
    }
    const RatFunc solved = (RatFunc(known) + forcing_transform(spec).to_ratfunc()) / RatFunc(chr);

    SolutionReport report;
    report.transform = TransformExpr(solved);
    report.closed_form = inverse_transform(report.transform);

    const long upto = std::max<long>(verify_upto, k);
    const VerificationReport check = verify_solution(spec, report.closed_form, upto);
    if (!check.passed) {
        throw VerificationFailed("closed form disagrees with the recurrence at n = " +
                                 std::to_string(check.first_failure.value_or(0)) + ": " + check.reason);
    }
    const auto prefix = seq_equal_prefix(Sequence(report.closed_form), Sequence(RecursiveSequence(spec)), upto);
    if (!prefix.equal) {
        throw VerificationFailed("closed form disagrees with direct recursion at n = " +
                                 std::to_string(*prefix.first_mismatch));
    }
    report.verified_upto = upto;

    if (decompose && spec.is_homogeneous()) {
        std::vector<ClosedFormSequence> basis;
        for (int i = 0; i < k; ++i) {
            RecurrenceSpec unit = spec;
            std::fill(unit.initials.begin(), unit.initials.end(), Rational(0));
            unit.initials[static_cast<std::size_t>(i)] = Rational(1);
            basis.push_back(solve_impl(unit, verify_upto, false).closed_form);
        }
        report.coefficient_decomposition = std::move(basis);
    }
    return report;
}

} // namespace

SolutionReport solve_ivp(const RecurrenceSpec& spec, long verify_upto) {
    return solve_impl(spec, verify_upto, true);
}

SolutionReport solve_affine(const Rational& lambda, const Rational& beta, const Rational& a1) {
    const QuadExt one(1);
    std::vector<ClosedFormTerm> terms;
    if (lambda == Rational(1)) {
        terms.push_back({QuadExt(a1), one, 1});
        terms.push_back({QuadExt(beta), one, 2});
    } else {
        terms.push_back({QuadExt(a1 + beta / (lambda - Rational(1))), QuadExt(lambda), 1});
        terms.push_back({QuadExt(beta / (Rational(1) - lambda)), one, 1});
    }
    std::map<int, QuadExt> deltas;
    if (lambda.is_zero()) {
        // 0^(n-1) is delta(n, 1)
        deltas[1] = terms.front().coefficient;
        terms.erase(terms.begin());
    }

    SolutionReport report;
    report.closed_form = ClosedFormSequence(std::move(terms), std::move(deltas));
    const QuadExt lam(lambda);
    report.transform = TransformExpr(RatFunc(Poly(QuadExt(a1)), Poly::linear(lam)) +
                                     RatFunc(Poly(QuadExt(beta)), Poly::linear(one) * Poly::linear(lam)));

    const RecurrenceSpec spec = RecurrenceSpec::affine(lambda, beta, a1);
    const auto check = verify_solution(spec, report.closed_form, kSelfCheckDepth);
    if (!check.passed) {
        throw VerificationFailed("affine formula disagrees with iteration at n = " +
                                 std::to_string(check.first_failure.value_or(0)));
    }
    report.verified_upto = kSelfCheckDepth;
    return report;
}

FibonacciCoefficients fibonacci_coefficients(long n) {
    if (n < 1) throw Error("sequences are indexed from n = 1");
    const QuadExt root5(Rational(0), Rational(1), 5);
    const QuadExt plus = QuadExt(1) + root5;   // 1 + sqrt(5)
    const QuadExt minus = QuadExt(1) - root5;  // 1 - sqrt(5)
    const QuadExt p = plus.pow(n - 1);
    const QuadExt m = minus.pow(n - 1);
    const QuadExt two_n = QuadExt(Rational(2).pow(n));
    FibonacciCoefficients out;
    out.gamma = ((root5 - QuadExt(1)) * p + (root5 + QuadExt(1)) * m) / (two_n * root5);
    out.beta = (p - m) / (QuadExt(Rational(2).pow(n - 1)) * root5);
    return out;
}

VerificationReport verify_solution(const RecurrenceSpec& spec, const ClosedFormSequence& seq, long upto) {
    spec.validate();
    if (upto < spec.order) throw Error("verification depth must be at least the recurrence order");
    VerificationReport report;
    report.checked_upto = upto;
    const auto fail = [&report](long n, std::string reason) {
        report.passed = false;
        report.first_failure = n;
        report.reason = std::move(reason);
        return report;
    };

    std::vector<QuadExt> values;
    values.reserve(static_cast<std::size_t>(upto));
    for (long n = 1; n <= upto; ++n) values.push_back(seq.eval(n));
    const auto at = [&values](long n) -> const QuadExt& { return values[static_cast<std::size_t>(n - 1)]; };

    for (int i = 1; i <= spec.order; ++i) {
        if (!(at(i) == QuadExt(spec.initials[static_cast<std::size_t>(i - 1)]))) {
            return fail(i, "initial value a[" + std::to_string(i) + "] is " + at(i).to_string() + ", expected " +
                               spec.initials[static_cast<std::size_t>(i - 1)].to_string());
        }
    }
    for (long n = 1; n + spec.order <= upto; ++n) {
        QuadExt rhs(spec.forcing_at(n));
        for (int j = 0; j < spec.order; ++j) rhs += QuadExt(spec.coefficients[static_cast<std::size_t>(j)]) * at(n + j);
        if (!(at(n + spec.order) == rhs)) {
            return fail(n + spec.order, "recurrence violated: a[" + std::to_string(n + spec.order) + "] = " +
                                            at(n + spec.order).to_string() + ", expected " + rhs.to_string());
        }
    }
    const bool fibonacci_form = spec.order == 2 && spec.is_homogeneous() &&
                                spec.coefficients[0] == Rational(1) && spec.coefficients[1] == Rational(1);
    if (fibonacci_form) {
        for (long n = 1; n + 2 <= upto; ++n) {
            const QuadExt d1 = at(n + 1) - at(n);
            const QuadExt d2 = at(n + 2) - QuadExt(2) * at(n + 1) + at(n);
            if (!(d2 + d1 == at(n))) return fail(n, "difference form Delta^2 a + Delta a = a violated");
        }
    }
    return report;
}

VerificationReport verify_inverse_square_ivp(long upto) {
    VerificationReport report;
    report.checked_upto = upto;
    // Each f(n) is summed from scratch so the difference check is not
    // tautological.
    const auto f = [](long n) {
        Rational out(1);
        for (long k = 1; k <= n - 1; ++k) out += Rational(1, k * k);
        return out;
    };
    if (f(2) != Rational(2)) {
        report.passed = false;
        report.first_failure = 2;
        report.reason = "f(2) != 2";
        return report;
    }
    Rational prev = f(1);
    for (long n = 1; n <= upto; ++n) {
        const Rational next = f(n + 1);
        if (next - prev != Rational(1, n * n)) {
            report.passed = false;
            report.first_failure = n;
            report.reason = "Delta f(n) != 1/n^2";
            return report;
        }
        prev = next;
    }
    return report;
}

bool is_integer_valued(const ClosedFormSequence& seq, long upto) {
    for (long n = 1; n <= upto; ++n) {
        const QuadExt v = seq.eval(n);
        if (!v.is_rational() || !v.rational_part().is_integer()) return false;
    }
    return true;
}

} // namespace sigma
