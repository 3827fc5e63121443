#include "sigma/rat_func.hpp"

#include <algorithm>
#include <cmath>

#include "sigma/errors.hpp"

namespace sigma {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    const Poly g = gcd(num, den);
    Poly n = exact_div(num, g);
    Poly d = exact_div(den, g);
    const QuadExt lead_inv = d.leading().inverse();
    num_ = n.scaled(lead_inv);
    den_ = d.scaled(lead_inv);
}

QuadExt RatFunc::eval(const QuadExt& t0) const {
    const QuadExt d = den_.eval(t0);
    if (d.is_zero()) throw PoleEvaluation("pole at t = " + t0.to_string());
    return num_.eval(t0) / d;
}

double RatFunc::eval(double t0) const {
    const double d = den_.eval(t0);
    if (d == 0.0) throw PoleEvaluation("pole at t = " + std::to_string(t0));
    return num_.eval(t0) / d;
}

std::string RatFunc::to_string(Display display) const {
    const auto wrap = [](const Poly& p, Display disp) {
        std::string s = p.to_string(disp);
        const bool single_term =
            p.is_constant() || std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                             [](const QuadExt& c) { return !c.is_zero(); }) == 1;
        return single_term && s.find(' ') == std::string::npos ? s : "(" + s + ")";
    };
    if (den_ == Poly(1)) return num_.to_string(display);
    return wrap(num_, display) + "/" + wrap(den_, display);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc d_ds(const RatFunc& a) {
    // t * (N'D - ND') / D^2
    const Poly& n = a.num();
    const Poly& d = a.den();
    return RatFunc(Poly::t() * (n.derivative() * d - n * d.derivative()), d * d);
}

} // namespace sigma
