#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sigma/sequence.hpp"

namespace sigma {

using RealSequence = std::function<double(long)>;

/// |f(n)| <= alpha * e^(s0 n) for all n >= 1.
struct GrowthBound {
    double alpha = 1.0;
    double s0 = 0.0;
};

struct SeriesCheckConfig {
    std::vector<double> s_values{1.0, 1.5, 2.0};
    double tolerance = 1e-9;
    double growth_alpha = 1.0;
    double growth_s0 = 0.0;

    /// Throws DivergenceGuard if some s does not exceed growth_s0.
    void validate() const;
};

inline constexpr long kMaxSeriesTerms = 1'000'000;

/// sum_{n=1}^{terms} f(n) e^(-s n) in double precision.
double series_eval(const RealSequence& f, double s, long terms);
/// Same, refusing s <= bound.s0.
double series_eval(const RealSequence& f, double s, long terms, const GrowthBound& bound);

/// alpha e^((s0 - s)(N+1)) / (1 - e^(s0 - s)), an upper bound on
/// |sum_{n>N} f(n) e^(-s n)|. N = 0 gives the whole-series bound
/// alpha / (e^(s - s0) - 1). Throws DivergenceGuard for s <= s0.
double tail_bound(double alpha, double s0, double s, long terms);

/// Smallest N >= 1 with tail_bound(...) < target. Throws DivergenceGuard if
/// that exceeds kMaxSeriesTerms.
long terms_for_bound(double alpha, double s0, double s, double target);

/// s0 = ln(max |root|) + margin and the supremum of |f(n)| e^(-s0 n) over
/// all n, taken term by term and multiplied by the safety factor.
GrowthBound growth_bound(const ClosedFormSequence& f, double margin = 0.01, double safety = 2.0);

struct PairCheckPoint {
    double s = 0.0;
    long terms = 0;
    double series = 0.0;
    double transform = 0.0;
    double discrepancy = 0.0;
    double bound = 0.0;
    bool passed = false;
};

struct PairCheckReport {
    std::vector<PairCheckPoint> points;
    bool passed = true;
};

/// For each s picks N with tail bound < tolerance/2 and compares the
/// truncated series with L(e^s). Never throws on a mismatch.
PairCheckReport evaluate_pair(const RealSequence& f, const TransformExpr& l, const SeriesCheckConfig& cfg);

/// evaluate_pair that throws CheckFailed naming the first bad s, N and
/// discrepancy.
PairCheckReport check_pair(const RealSequence& f, const TransformExpr& l, const SeriesCheckConfig& cfg);

/// Config for a closed form: growth parameters from growth_bound.
SeriesCheckConfig config_for(const ClosedFormSequence& f, std::vector<double> s_values, double tolerance = 1e-9);

/// |sum_{n<=N} e^(-s n)/n - (s - ln(e^s - 1))| with N from the tail bound
/// for alpha = 1, s0 = 0.
double harmonic_transform_check(double s);

/// f(n+1)/f(n) formed exactly, converted to double last. Throws
/// ZeroDenominator when f(n) = 0.
double ratio_limit(const Sequence& f, long n);

} // namespace sigma
