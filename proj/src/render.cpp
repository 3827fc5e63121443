#include "sigma/render.hpp"

#include <optional>

#include "sigma/errors.hpp"
#include "sigma/factor.hpp"

namespace sigma {

namespace {

bool compound(const QuadExt& x) {
    return !x.is_rational() && !x.rational_part().is_zero();
}

// Appends a signed summand to out, pulling a leading minus into the joiner.
void append_summand(std::string& out, std::string summand) {
    const bool negative = !summand.empty() && summand.front() == '-';
    if (out.empty()) {
        out = std::move(summand);
    } else if (negative) {
        out += " - " + summand.substr(1);
    } else {
        out += " + " + summand;
    }
}

// c * product(factors), where factors may be empty.
std::string scaled_product(const QuadExt& c, const std::string& factors) {
    if (factors.empty()) return compound(c) ? "(" + c.to_string() + ")" : c.to_string();
    if (c == QuadExt(1)) return factors;
    if (c == QuadExt(-1)) return "-" + factors;
    if (compound(c)) return "(" + c.to_string() + ")*" + factors;
    return c.to_string() + "*" + factors;
}

std::string power_base(const QuadExt& r) {
    if (r.is_rational() && r.rational_part().is_integer() && r.sign() > 0) return r.to_string();
    return "(" + r.to_string() + ")";
}

std::string render_term(const ClosedFormTerm& t) {
    std::string factors;
    const auto join = [&factors](const std::string& f) { factors += (factors.empty() ? "" : "*") + f; };
    if (t.multiplicity == 2) join("(n-1)");
    if (t.multiplicity >= 3) join("C(n-1," + std::to_string(t.multiplicity - 1) + ")");
    if (!(t.root == QuadExt(1))) join(power_base(t.root) + "^(n-" + std::to_string(t.multiplicity) + ")");
    return scaled_product(t.coefficient, factors);
}

std::string render_deltas(const std::map<int, QuadExt>& deltas, std::string out) {
    for (const auto& [j, c] : deltas) append_summand(out, scaled_product(c, "delta(n," + std::to_string(j) + ")"));
    return out;
}

std::string render_linear_factor(const QuadExt& root, Display display) {
    const std::string x = render_power(1, display);
    if (root.is_zero()) return x;
    if (root.sign() > 0) return "(" + x + " - " + root.to_string() + ")";
    return "(" + x + " + " + (-root).to_string() + ")";
}

std::optional<std::string> factored_denominator(const Poly& den, Display display) {
    if (den.degree() < 1 || !den.is_rational()) return std::nullopt;
    std::vector<RootMultiplicity> roots;
    try {
        roots = factor_roots(den);
    } catch (const CapabilityError&) {
        return std::nullopt;
    }
    std::string out;
    for (const auto& rm : roots) {
        if (!rm.root.is_rational()) return std::nullopt;
        if (!out.empty()) out += "*";
        if (rm.root.is_zero()) {
            out += render_power(rm.multiplicity, display);
            continue;
        }
        out += render_linear_factor(rm.root, display);
        if (rm.multiplicity > 1) out += "^" + std::to_string(rm.multiplicity);
    }
    return roots.size() == 1 ? out : "(" + out + ")";
}

} // namespace

std::string render_closed_form(const ClosedFormSequence& f) {
    std::string out;
    for (const auto& t : f.terms()) append_summand(out, render_term(t));
    out = render_deltas(f.deltas(), std::move(out));
    return out.empty() ? "0" : out;
}

std::string render_fibonacci_normal(const ClosedFormSequence& f) {
    const QuadExt root5(Rational(0), Rational(1), 5);
    const QuadExt phi = (QuadExt(1) + root5) / QuadExt(2);
    const QuadExt psi = (QuadExt(1) - root5) / QuadExt(2);
    QuadExt a;
    QuadExt b;
    std::vector<ClosedFormTerm> rest;
    for (const auto& t : f.terms()) {
        if (t.multiplicity == 1 && t.root == phi) {
            a = t.coefficient * root5 / phi;
        } else if (t.multiplicity == 1 && t.root == psi) {
            b = t.coefficient * root5 / psi;
        } else {
            rest.push_back(t);
        }
    }
    if (a.is_zero() && b.is_zero()) return render_closed_form(f);

    // c phi^(n-1) = (c sqrt(5)/phi) (1+sqrt(5))^n / (2^n sqrt(5))
    const std::string plus = "(1+sqrt(5))^n";
    const std::string minus = "(1-sqrt(5))^n";
    const std::string den = "/(2^n*sqrt(5))";
    std::string main;
    if (!a.is_zero() && (b == -a || b == a)) {
        const std::string body = "(" + plus + (b == a ? " + " : " - ") + minus + ")";
        main = scaled_product(a, body) + den;
    } else {
        std::string inner;
        if (!a.is_zero()) append_summand(inner, scaled_product(a, plus));
        if (!b.is_zero()) append_summand(inner, scaled_product(b, minus));
        main = "(" + inner + ")" + den;
    }
    std::string out = main;
    for (const auto& t : rest) append_summand(out, render_term(t));
    return render_deltas(f.deltas(), std::move(out));
}

std::string render_transform(const TransformExpr& l, Display display) {
    const RatFunc& r = l.rational();
    std::string out;
    if (!r.is_zero()) {
        if (auto den = factored_denominator(r.den(), display)) {
            std::string num = r.num().to_string(display);
            const bool single = r.num().is_constant() ||
                                (num.find(' ') == std::string::npos && num.find('(') == std::string::npos);
            out = (single ? num : "(" + num + ")") + "/" + *den;
        } else {
            out = r.to_string(display);
        }
    }
    if (l.deltas().empty()) return out.empty() ? "0" : out;
    append_summand(out, TransformExpr(RatFunc(), l.deltas()).to_string(display));
    return out;
}

} // namespace sigma
