#pragma once

#include <map>
#include <string>
#include <vector>

#include "sigma/rat_func.hpp"

namespace sigma {

/// Sigma-transform of a sequence on n >= 1: a strictly proper rational
/// function in t = e^s plus finitely many Kronecker-delta terms c * t^-j
/// (the transform of c * delta(n, j)).
///
/// Both parts are validated at construction, so every TransformExpr inverts
/// to a sequence.
class TransformExpr {
public:
    TransformExpr() = default;
    /// Throws ImproperResult unless the rational part is strictly proper and
    /// every delta index is >= 1.
    explicit TransformExpr(RatFunc rational, std::map<int, QuadExt> deltas = {});

    const RatFunc& rational() const { return rational_; }
    const std::map<int, QuadExt>& deltas() const { return deltas_; }

    bool is_zero() const { return rational_.is_zero() && deltas_.empty(); }

    /// rational + sum c_j / t^j as one rational function.
    RatFunc to_ratfunc() const;

    QuadExt eval(const QuadExt& t0) const;
    /// Evaluates at a real s, i.e. at t = e^s.
    double eval_at_s(double s) const;

    std::string to_string(Display display = Display::Exps) const;

    TransformExpr operator-() const;
    friend TransformExpr operator+(const TransformExpr& a, const TransformExpr& b);
    friend TransformExpr operator-(const TransformExpr& a, const TransformExpr& b);
    TransformExpr scaled(const QuadExt& c) const;

    /// Semantic equality: compares the combined rational functions.
    friend bool operator==(const TransformExpr& a, const TransformExpr& b) {
        return a.to_ratfunc() == b.to_ratfunc();
    }

private:
    RatFunc rational_;
    std::map<int, QuadExt> deltas_;
};

/// The shift rule written as a linear operator on an unknown transform L:
/// shift_k(L) = t^k * L - subtracted(t), with subtracted = sum f(i) t^(k-i).
/// The solver assembles these without forming t^k * L.
struct ShiftParts {
    int k = 0;
    Poly subtracted;
};

ShiftParts shift_parts(int k, const std::vector<QuadExt>& initials);

/// a^(n-1)  <->  1/(t - a). For a = 0 this is delta(n, 1) <-> 1/t.
TransformExpr xf_geometric(const QuadExt& a);

/// c * delta(n, j)  <->  c * t^-j
TransformExpr xf_delta(int j, const QuadExt& c = QuadExt(1));

/// f(n+k)  <->  t^k L - sum_{i=1..k} f(i) t^(k-i).
/// initials must be f(1..k). Throws ImproperResult when the result would
/// keep a polynomial part, which happens exactly when the initials do not
/// match the sequence behind L.
TransformExpr xf_shift(const TransformExpr& l, int k, const std::vector<QuadExt>& initials);

/// (Delta f)(n)  <->  (t - 1) L - f(1)
TransformExpr xf_delta_rule(const TransformExpr& l, const QuadExt& f1);

/// n f(n)  <->  -d/ds L. Delta terms scale by their index.
TransformExpr xf_mul_by_n(const TransformExpr& l);

/// (f * g)(n)  <->  F G
TransformExpr xf_convolution(const TransformExpr& a, const TransformExpr& b);

/// sum_{k=1}^{n-1} f(k)  <->  L / (t - 1)
TransformExpr xf_partial_sum(const TransformExpr& l);

inline constexpr int kDefaultMaxPower = 12;

/// n^k  <->  (-d/ds)^k 1/(t - 1). Throws DegreeLimitExceeded for k > max_power.
TransformExpr xf_n_pow_k(int k, int max_power = kDefaultMaxPower);

} // namespace sigma
