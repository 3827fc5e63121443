#include "sigma/poly.hpp"

#include "sigma/errors.hpp"

namespace sigma {

Poly::Poly(std::vector<QuadExt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Poly::Poly(QuadExt constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly Poly::monomial(QuadExt c, int k) {
    std::vector<QuadExt> cs(static_cast<std::size_t>(k) + 1);
    cs.back() = std::move(c);
    return Poly(std::move(cs));
}

Poly Poly::linear(const QuadExt& root) {
    return Poly({-root, QuadExt(1)});
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QuadExt Poly::coefficient(int k) const {
    if (k < 0 || k > degree()) return QuadExt();
    return coeffs_[static_cast<std::size_t>(k)];
}

const QuadExt& Poly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

std::int64_t Poly::radicand() const {
    std::int64_t d = 0;
    for (const auto& c : coeffs_) {
        if (c.radicand() == 0 || c.radicand() == d) continue;
        if (d != 0) throw RadicandMismatch("polynomial mixes radicands");
        d = c.radicand();
    }
    return d;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::derivative() const {
    std::vector<QuadExt> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * QuadExt(static_cast<long>(k)));
    return Poly(std::move(out));
}

Poly Poly::conjugate() const {
    std::vector<QuadExt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.conjugate());
    return Poly(std::move(out));
}

Poly Poly::scaled(const QuadExt& c) const {
    std::vector<QuadExt> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return Poly(std::move(out));
}

Poly Poly::pow(int exponent) const {
    Poly out(1);
    for (int i = 0; i < exponent; ++i) out *= *this;
    return out;
}

QuadExt Poly::eval(const QuadExt& t0) const {
    QuadExt acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
    return acc;
}

double Poly::eval(double t0) const {
    // Horner in extended precision: expanded coefficients with radicals
    // cancel heavily near the poles of the transforms we evaluate.
    constexpr mp_bitcnt_t kBits = 256;
    const mpf_class t(t0, kBits);
    mpf_class acc(0, kBits);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        mpf_class c(it->rational_part().value(), kBits);
        if (it->radicand() != 0) {
            mpf_class root(static_cast<long>(it->radicand()), kBits);
            root = sqrt(root);
            c += mpf_class(it->radical_part().value(), kBits) * root;
        }
        acc = acc * t + c;
    }
    return acc.get_d();
}

std::string render_power(int k, Display display) {
    if (display == Display::T) {
        if (k == 1) return "t";
        return "t^" + std::to_string(k);
    }
    if (k == 1) return "e^s";
    return "e^(" + std::to_string(k) + "s)";
}

std::string Poly::to_string(Display display) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const QuadExt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        // A coefficient with both parts is parenthesized and always added.
        const bool compound = !c.is_rational() && !c.rational_part().is_zero();
        const bool negative = !compound && c.sign() < 0;
        const QuadExt mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string coeff = compound ? "(" + mag.to_string() + ")" : mag.to_string();
        if (k == 0) {
            out += coeff;
        } else if (mag == QuadExt(1)) {
            out += render_power(k, display);
        } else {
            out += coeff + "*" + render_power(k, display);
        }
    }
    return out;
}

Poly Poly::operator-() const {
    return scaled(QuadExt(-1));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    return *this += -o;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<QuadExt> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<QuadExt> rem = a.coefficients();
    std::vector<QuadExt> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const QuadExt lead_inv = b.leading().inverse();
    const auto& bc = b.coefficients();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const auto top = static_cast<std::size_t>(k + b.degree());
        if (rem[top].is_zero()) continue;
        const QuadExt q = rem[top] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("polynomial division is not exact");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw DivisionByZero();
    Poly x = a.monic();
    Poly y = b.monic();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).remainder;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

} // namespace sigma
