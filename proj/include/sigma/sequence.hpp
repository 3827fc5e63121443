#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "sigma/recurrence_spec.hpp"
#include "sigma/transform.hpp"

namespace sigma {

/// coefficient * C(n-1, multiplicity-1) * root^(n-multiplicity), the exact
/// inverse transform of coefficient / (t - root)^multiplicity.
struct ClosedFormTerm {
    QuadExt coefficient;
    QuadExt root;
    int multiplicity = 1;

    friend bool operator==(const ClosedFormTerm&, const ClosedFormTerm&) = default;
};

/// Finite sum of ClosedFormTerms plus delta terms. Terms with the same
/// (root, multiplicity) are merged and zero terms dropped, so two equal
/// sequences have identical term lists. 0^0 is taken as 1.
class ClosedFormSequence {
public:
    ClosedFormSequence() = default;
    explicit ClosedFormSequence(std::vector<ClosedFormTerm> terms, std::map<int, QuadExt> deltas = {});

    const std::vector<ClosedFormTerm>& terms() const { return terms_; }
    const std::map<int, QuadExt>& deltas() const { return deltas_; }

    QuadExt eval(long n) const;
    /// Same as eval but throws VerificationFailed when the value has a
    /// nonzero radical part.
    Rational eval_rational(long n) const;
    double eval_double(long n) const;

    /// Largest |root|, 0 when there are no terms.
    double growth_root() const;
    int max_multiplicity() const;

    ClosedFormSequence scaled(const QuadExt& c) const;
    friend ClosedFormSequence operator+(const ClosedFormSequence& a, const ClosedFormSequence& b);
    friend bool operator==(const ClosedFormSequence&, const ClosedFormSequence&) = default;

private:
    std::vector<ClosedFormTerm> terms_;
    std::map<int, QuadExt> deltas_;
};

/// Values of a recurrence computed by direct iteration, memoized.
/// Not safe for concurrent use of one instance.
class RecursiveSequence {
public:
    explicit RecursiveSequence(RecurrenceSpec spec);

    const Rational& operator()(long n);
    const RecurrenceSpec& spec() const { return spec_; }

private:
    RecurrenceSpec spec_;
    std::vector<Rational> memo_;
};

/// Type-erased read-only sequence on n >= 1.
class Sequence {
public:
    using Fn = std::function<QuadExt(long)>;

    explicit Sequence(Fn fn) : fn_(std::move(fn)) {}
    Sequence(const ClosedFormSequence& cf); // NOLINT(google-explicit-constructor)
    /// Takes ownership of the memo; copies of the Sequence share it.
    Sequence(RecursiveSequence rs); // NOLINT(google-explicit-constructor)

    QuadExt operator()(long n) const { return fn_(n); }

private:
    Fn fn_;
};

/// (Delta f)(n) = f(n+1) - f(n)
Sequence seq_delta(Sequence f);

/// sum_{k=1}^{n-1} f(k) g(n-k); zero at n = 1.
QuadExt seq_convolve(const Sequence& f, const Sequence& g, long n);
Sequence convolution(Sequence f, Sequence g);

/// n -> sum_{k=1}^{n-1} f(k)
Sequence partial_sum(Sequence f);

struct PrefixComparison {
    bool equal = true;
    std::optional<long> first_mismatch;
};

/// Exact comparison of f(n) and g(n) for 1 <= n <= upto.
PrefixComparison seq_equal_prefix(const Sequence& f, const Sequence& g, long upto);

/// Partial fractions of the rational part, each c/(t-r)^m mapped to
/// c C(n-1, m-1) r^(n-m); root-0 terms become deltas at n = m.
ClosedFormSequence inverse_transform(const TransformExpr& l);

/// Forward transform assembled by linearity from geometric transforms and
/// their convolution powers.
TransformExpr transform_of(const ClosedFormSequence& f);

} // namespace sigma
