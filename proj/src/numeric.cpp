#include "sigma/numeric.hpp"

#include <cmath>
#include <sstream>

#include "sigma/errors.hpp"

namespace sigma {

void SeriesCheckConfig::validate() const {
    if (!(tolerance > 0.0)) throw Error("tolerance must be positive");
    for (double s : s_values) {
        if (!(s > growth_s0)) {
            std::ostringstream msg;
            msg << "s = " << s << " does not exceed the growth exponent s0 = " << growth_s0;
            throw DivergenceGuard(msg.str());
        }
    }
}

double series_eval(const RealSequence& f, double s, long terms) {
    if (terms < 1) throw Error("series needs at least one term");
    double sum = 0.0;
    double compensation = 0.0;
    for (long n = 1; n <= terms; ++n) {
        // Kahan summation
        const double y = f(n) * std::exp(-s * static_cast<double>(n)) - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double series_eval(const RealSequence& f, double s, long terms, const GrowthBound& bound) {
    if (!(s > bound.s0)) throw DivergenceGuard("s must exceed the growth exponent s0");
    return series_eval(f, s, terms);
}

double tail_bound(double alpha, double s0, double s, long terms) {
    if (!(s > s0)) throw DivergenceGuard("tail bound needs s > s0");
    const double gap = s0 - s;
    return alpha * std::exp(gap * static_cast<double>(terms + 1)) / -std::expm1(gap);
}

long terms_for_bound(double alpha, double s0, double s, double target) {
    if (!(s > s0)) throw DivergenceGuard("tail bound needs s > s0");
    if (!(target > 0.0)) throw Error("target must be positive");
    // alpha e^(-(s-s0)(N+1)) / (1 - e^(s0-s)) < target
    const double rate = s - s0;
    const double need = (std::log(alpha / target) - std::log(-std::expm1(-rate))) / rate - 1.0;
    long n = std::max(1L, static_cast<long>(std::ceil(need)));
    if (static_cast<double>(n) > static_cast<double>(kMaxSeriesTerms) || !std::isfinite(need)) {
        throw DivergenceGuard("series needs more than " + std::to_string(kMaxSeriesTerms) +
                              " terms; s is too close to the growth exponent");
    }
    while (tail_bound(alpha, s0, s, n) >= target) ++n;
    return n;
}

GrowthBound growth_bound(const ClosedFormSequence& f, double margin, double safety) {
    GrowthBound out;
    const double top = f.growth_root();
    out.s0 = (top > 0.0 ? std::log(top) : 0.0) + margin;
    double alpha = 0.0;
    for (const auto& t : f.terms()) {
        const double c = std::fabs(t.coefficient.to_double());
        const double r = std::fabs(t.root.to_double());
        const int m = t.multiplicity;
        if (r == 0.0) {
            alpha += c * std::exp(-out.s0 * m);
            continue;
        }
        // |c| r^-m C(n-1, m-1) e^(-rate n); the binomial factor times the
        // exponential is unimodal in n, so walk to the peak.
        const double rate = out.s0 - std::log(r);
        long n = m;
        while (static_cast<double>(n) / static_cast<double>(n - m + 1) * std::exp(-rate) >= 1.0) ++n;
        const double log_binom = std::lgamma(static_cast<double>(n)) - std::lgamma(static_cast<double>(m)) -
                                 std::lgamma(static_cast<double>(n - m + 1));
        alpha += c * std::exp(log_binom - rate * static_cast<double>(n) - m * std::log(r));
    }
    for (const auto& [j, c] : f.deltas()) alpha += std::fabs(c.to_double()) * std::exp(-out.s0 * j);
    out.alpha = std::max(alpha * safety, 1e-300);
    return out;
}

PairCheckReport evaluate_pair(const RealSequence& f, const TransformExpr& l, const SeriesCheckConfig& cfg) {
    cfg.validate();
    PairCheckReport report;
    for (double s : cfg.s_values) {
        PairCheckPoint p;
        p.s = s;
        p.terms = terms_for_bound(cfg.growth_alpha, cfg.growth_s0, s, cfg.tolerance / 2.0);
        p.bound = tail_bound(cfg.growth_alpha, cfg.growth_s0, s, p.terms);
        p.series = series_eval(f, s, p.terms);
        p.transform = l.eval_at_s(s);
        p.discrepancy = std::fabs(p.series - p.transform);
        p.passed = p.discrepancy < cfg.tolerance;
        report.passed = report.passed && p.passed;
        report.points.push_back(p);
    }
    return report;
}

PairCheckReport check_pair(const RealSequence& f, const TransformExpr& l, const SeriesCheckConfig& cfg) {
    PairCheckReport report = evaluate_pair(f, l, cfg);
    for (const auto& p : report.points) {
        if (p.passed) continue;
        std::ostringstream msg;
        msg.precision(17);
        msg << "series and transform disagree at s = " << p.s << " with N = " << p.terms
            << ": discrepancy " << p.discrepancy << " (tolerance " << cfg.tolerance << ")";
        throw CheckFailed(msg.str());
    }
    return report;
}

SeriesCheckConfig config_for(const ClosedFormSequence& f, std::vector<double> s_values, double tolerance) {
    const GrowthBound g = growth_bound(f);
    SeriesCheckConfig cfg;
    cfg.s_values = std::move(s_values);
    cfg.tolerance = tolerance;
    cfg.growth_alpha = g.alpha;
    cfg.growth_s0 = g.s0;
    return cfg;
}

double harmonic_transform_check(double s) {
    if (!(s > 0.0)) throw DivergenceGuard("the transform of 1/n needs s > 0");
    const long terms = terms_for_bound(1.0, 0.0, s, 1e-15);
    const double series = series_eval([](long n) { return 1.0 / static_cast<double>(n); }, s, terms);
    const double closed = s - std::log(std::expm1(s));
    return std::fabs(series - closed);
}

double ratio_limit(const Sequence& f, long n) {
    const QuadExt den = f(n);
    if (den.is_zero()) throw ZeroDenominator("f(" + std::to_string(n) + ") = 0");
    return (f(n + 1) / den).to_double();
}

} // namespace sigma
