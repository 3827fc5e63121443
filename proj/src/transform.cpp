#include "sigma/transform.hpp"

#include <cmath>

#include "sigma/errors.hpp"

namespace sigma {

namespace {

void drop_zeros(std::map<int, QuadExt>& m) {
    std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
}

// Builds rational + sum c_e t^e (any integer e), rejecting a surviving
// polynomial part.
TransformExpr assemble(const RatFunc& r, const std::map<int, QuadExt>& powers, const char* rule) {
    auto [poly, rem] = divmod(r.num(), r.den());
    std::map<int, QuadExt> deltas;
    for (const auto& [e, c] : powers) {
        if (e >= 0) {
            poly += Poly::monomial(c, e);
        } else {
            deltas[-e] += c;
        }
    }
    if (!poly.is_zero()) {
        throw ImproperResult(std::string(rule) + ": polynomial part " + poly.to_string() +
                             " remains, not the transform of a sequence");
    }
    drop_zeros(deltas);
    return TransformExpr(RatFunc(rem, r.den()), std::move(deltas));
}

} // namespace

TransformExpr::TransformExpr(RatFunc rational, std::map<int, QuadExt> deltas)
    : rational_(std::move(rational)), deltas_(std::move(deltas)) {
    if (!rational_.is_strictly_proper()) {
        throw ImproperResult("transform rational part must be strictly proper: " + rational_.to_string());
    }
    for (const auto& [j, c] : deltas_) {
        if (j < 1) throw ImproperResult("delta index must be >= 1, got " + std::to_string(j));
    }
    drop_zeros(deltas_);
}

RatFunc TransformExpr::to_ratfunc() const {
    RatFunc out = rational_;
    for (const auto& [j, c] : deltas_) out += RatFunc(Poly(c), Poly::monomial(QuadExt(1), j));
    return out;
}

QuadExt TransformExpr::eval(const QuadExt& t0) const {
    QuadExt out = rational_.eval(t0);
    for (const auto& [j, c] : deltas_) out += c / t0.pow(j);
    return out;
}

double TransformExpr::eval_at_s(double s) const {
    double out = rational_.eval(std::exp(s));
    for (const auto& [j, c] : deltas_) out += c.to_double() * std::exp(-s * j);
    return out;
}

std::string TransformExpr::to_string(Display display) const {
    std::string out = deltas_.empty() || !rational_.is_zero() ? rational_.to_string(display) : "";
    for (const auto& [j, c] : deltas_) {
        const bool negative = c.is_rational() && c.sign() < 0;
        const QuadExt mag = negative ? -c : c;
        std::string coeff = mag.is_rational() ? mag.to_string() : "(" + mag.to_string() + ")";
        std::string term = display == Display::T
                               ? coeff + "/" + render_power(j, display)
                               : (mag == QuadExt(1) ? "" : coeff + "*") + "e^(-" + (j == 1 ? "" : std::to_string(j)) + "s)";
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    return out;
}

TransformExpr TransformExpr::operator-() const {
    return scaled(QuadExt(-1));
}

TransformExpr TransformExpr::scaled(const QuadExt& c) const {
    std::map<int, QuadExt> d;
    for (const auto& [j, x] : deltas_) d[j] = x * c;
    return TransformExpr(rational_ * RatFunc(Poly(c)), std::move(d));
}

TransformExpr operator+(const TransformExpr& a, const TransformExpr& b) {
    std::map<int, QuadExt> d = a.deltas_;
    for (const auto& [j, x] : b.deltas_) d[j] += x;
    return TransformExpr(a.rational_ + b.rational_, std::move(d));
}

TransformExpr operator-(const TransformExpr& a, const TransformExpr& b) {
    return a + (-b);
}

ShiftParts shift_parts(int k, const std::vector<QuadExt>& initials) {
    if (k < 1) throw Error("shift order must be positive");
    if (static_cast<int>(initials.size()) != k) {
        throw Error("shift by " + std::to_string(k) + " needs exactly " + std::to_string(k) + " initial values");
    }
    Poly sub;
    for (int i = 1; i <= k; ++i) sub += Poly::monomial(initials[static_cast<std::size_t>(i - 1)], k - i);
    return {k, std::move(sub)};
}

TransformExpr xf_geometric(const QuadExt& a) {
    return TransformExpr(RatFunc(Poly(1), Poly::linear(a)));
}

TransformExpr xf_delta(int j, const QuadExt& c) {
    return TransformExpr(RatFunc(), {{j, c}});
}

TransformExpr xf_shift(const TransformExpr& l, int k, const std::vector<QuadExt>& initials) {
    const ShiftParts parts = shift_parts(k, initials);
    const RatFunc& r = l.rational();
    const RatFunc lifted(Poly::monomial(QuadExt(1), k) * r.num(), r.den());
    std::map<int, QuadExt> powers;
    for (const auto& [j, c] : l.deltas()) powers[k - j] += c;
    const auto& sub = parts.subtracted.coefficients();
    for (std::size_t e = 0; e < sub.size(); ++e) powers[static_cast<int>(e)] -= sub[e];
    return assemble(lifted, powers, "shift rule");
}

TransformExpr xf_delta_rule(const TransformExpr& l, const QuadExt& f1) {
    const RatFunc& r = l.rational();
    const RatFunc lifted(Poly::linear(QuadExt(1)) * r.num(), r.den());
    std::map<int, QuadExt> powers;
    for (const auto& [j, c] : l.deltas()) {
        powers[1 - j] += c;
        powers[-j] -= c;
    }
    powers[0] -= f1;
    return assemble(lifted, powers, "difference rule");
}

TransformExpr xf_mul_by_n(const TransformExpr& l) {
    std::map<int, QuadExt> d;
    for (const auto& [j, c] : l.deltas()) d[j] = c * QuadExt(static_cast<long>(j));
    return TransformExpr(-d_ds(l.rational()), std::move(d));
}

TransformExpr xf_convolution(const TransformExpr& a, const TransformExpr& b) {
    RatFunc rational = a.rational() * b.rational();
    std::map<int, QuadExt> d;
    const auto cross = [&rational](const RatFunc& r, const std::map<int, QuadExt>& deltas) {
        for (const auto& [j, c] : deltas) {
            rational += RatFunc(r.num().scaled(c), Poly::monomial(QuadExt(1), j) * r.den());
        }
    };
    cross(a.rational(), b.deltas());
    cross(b.rational(), a.deltas());
    for (const auto& [i, x] : a.deltas()) {
        for (const auto& [j, y] : b.deltas()) d[i + j] += x * y;
    }
    return TransformExpr(std::move(rational), std::move(d));
}

TransformExpr xf_partial_sum(const TransformExpr& l) {
    return xf_convolution(l, xf_geometric(QuadExt(1)));
}

TransformExpr xf_n_pow_k(int k, int max_power) {
    if (k < 0) throw Error("power must be nonnegative");
    if (k > max_power) {
        throw DegreeLimitExceeded("n^" + std::to_string(k) + " exceeds the configured maximum power " +
                                  std::to_string(max_power));
    }
    TransformExpr out = xf_geometric(QuadExt(1));
    for (int i = 0; i < k; ++i) out = xf_mul_by_n(out);
    return out;
}

} // namespace sigma
