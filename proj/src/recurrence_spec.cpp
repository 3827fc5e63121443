#include "sigma/recurrence_spec.hpp"

#include "sigma/errors.hpp"

namespace sigma {

Rational ForcingTerm::eval(long n) const {
    if (kind == Kind::Power) return coefficient * Rational(n).pow(power);
    return coefficient * base.pow(n);
}

void RecurrenceSpec::validate() const {
    if (order < 1) throw Error("recurrence order must be at least 1");
    if (static_cast<int>(coefficients.size()) != order) {
        throw Error("expected " + std::to_string(order) + " recurrence coefficients");
    }
    if (static_cast<int>(initials.size()) != order) {
        throw Error("expected exactly " + std::to_string(order) + " initial values");
    }
    for (const auto& f : forcing) {
        if (f.kind == ForcingTerm::Kind::Power) {
            if (f.power < 0) throw Error("forcing power must be nonnegative");
            if (f.power > kMaxForcingPower) {
                throw DegreeLimitExceeded("forcing n^" + std::to_string(f.power) + " exceeds n^" +
                                          std::to_string(kMaxForcingPower));
            }
        } else if (f.base.sign() <= 0) {
            throw Error("geometric forcing base must be positive, got " + f.base.to_string());
        }
    }
}

Rational RecurrenceSpec::forcing_at(long n) const {
    Rational out;
    for (const auto& f : forcing) out += f.eval(n);
    return out;
}

RecurrenceSpec RecurrenceSpec::fibonacci(Rational a1, Rational a2) {
    return {2, {Rational(1), Rational(1)}, {}, {std::move(a1), std::move(a2)}};
}

RecurrenceSpec RecurrenceSpec::affine(Rational lambda, Rational beta, Rational a1) {
    RecurrenceSpec spec{1, {std::move(lambda)}, {}, {std::move(a1)}};
    if (!beta.is_zero()) spec.forcing.push_back(ForcingTerm::power_of_n(std::move(beta), 0));
    return spec;
}

RecurrenceSpec RecurrenceSpec::difference_form(int order, std::vector<ForcingTerm> forcing, Rational f1,
                                               Rational delta_f1) {
    if (order == 1) return {1, {Rational(1)}, std::move(forcing), {std::move(f1)}};
    if (order == 2) {
        // f(n+2) - 2 f(n+1) + f(n) = g(n)
        Rational f2 = f1 + delta_f1;
        return {2, {Rational(-1), Rational(2)}, std::move(forcing), {std::move(f1), std::move(f2)}};
    }
    throw Error("difference form supports order 1 or 2");
}

} // namespace sigma
