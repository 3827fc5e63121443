#include "sigma/sequence.hpp"

#include <algorithm>
#include <cmath>

#include "sigma/errors.hpp"
#include "sigma/factor.hpp"

namespace sigma {

// ---- ClosedFormSequence ----------------------------------------------------

ClosedFormSequence::ClosedFormSequence(std::vector<ClosedFormTerm> terms, std::map<int, QuadExt> deltas)
    : deltas_(std::move(deltas)) {
    for (auto& term : terms) {
        if (term.multiplicity < 1) throw Error("term multiplicity must be at least 1");
        auto it = std::find_if(terms_.begin(), terms_.end(), [&](const ClosedFormTerm& x) {
            return x.root == term.root && x.multiplicity == term.multiplicity;
        });
        if (it == terms_.end()) {
            terms_.push_back(std::move(term));
        } else {
            it->coefficient += term.coefficient;
        }
    }
    std::erase_if(terms_, [](const ClosedFormTerm& t) { return t.coefficient.is_zero(); });
    std::erase_if(deltas_, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [j, c] : deltas_) {
        if (j < 1) throw Error("delta index must be >= 1");
    }
    std::sort(terms_.begin(), terms_.end(), [](const ClosedFormTerm& a, const ClosedFormTerm& b) {
        const int c = compare(a.root, b.root);
        if (c != 0) return c > 0;
        return a.multiplicity < b.multiplicity;
    });
}

QuadExt ClosedFormSequence::eval(long n) const {
    if (n < 1) throw Error("sequences are indexed from n = 1");
    QuadExt out;
    for (const auto& t : terms_) {
        if (n < t.multiplicity) continue;
        const Rational c = binomial(n - 1, t.multiplicity - 1);
        out += t.coefficient * QuadExt(c) * t.root.pow(n - t.multiplicity);
    }
    if (auto it = deltas_.find(static_cast<int>(n)); it != deltas_.end()) out += it->second;
    return out;
}

Rational ClosedFormSequence::eval_rational(long n) const {
    const QuadExt v = eval(n);
    if (!v.is_rational()) {
        throw VerificationFailed("closed form has irrational value " + v.to_string() + " at n = " + std::to_string(n));
    }
    return v.rational_part();
}

double ClosedFormSequence::eval_double(long n) const {
    if (n < 1) throw Error("sequences are indexed from n = 1");
    double out = 0.0;
    for (const auto& t : terms_) {
        if (n < t.multiplicity) continue;
        double c = 1.0;
        for (int i = 1; i < t.multiplicity; ++i) c = c * static_cast<double>(n - i) / i;
        out += t.coefficient.to_double() * c * std::pow(t.root.to_double(), static_cast<double>(n - t.multiplicity));
    }
    if (auto it = deltas_.find(static_cast<int>(n)); it != deltas_.end()) out += it->second.to_double();
    return out;
}

double ClosedFormSequence::growth_root() const {
    double out = 0.0;
    for (const auto& t : terms_) out = std::max(out, std::fabs(t.root.to_double()));
    return out;
}

int ClosedFormSequence::max_multiplicity() const {
    int out = 0;
    for (const auto& t : terms_) out = std::max(out, t.multiplicity);
    return out;
}

ClosedFormSequence ClosedFormSequence::scaled(const QuadExt& c) const {
    std::vector<ClosedFormTerm> terms = terms_;
    for (auto& t : terms) t.coefficient *= c;
    std::map<int, QuadExt> deltas = deltas_;
    for (auto& [j, x] : deltas) x *= c;
    return ClosedFormSequence(std::move(terms), std::move(deltas));
}

ClosedFormSequence operator+(const ClosedFormSequence& a, const ClosedFormSequence& b) {
    std::vector<ClosedFormTerm> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    std::map<int, QuadExt> deltas = a.deltas_;
    for (const auto& [j, x] : b.deltas_) deltas[j] += x;
    return ClosedFormSequence(std::move(terms), std::move(deltas));
}

// ---- RecursiveSequence -----------------------------------------------------

RecursiveSequence::RecursiveSequence(RecurrenceSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    memo_ = spec_.initials;
}

const Rational& RecursiveSequence::operator()(long n) {
    if (n < 1) throw Error("sequences are indexed from n = 1");
    const auto k = static_cast<long>(spec_.order);
    while (static_cast<long>(memo_.size()) < n) {
        // next index is m + k where m = size - k + 1
        const long m = static_cast<long>(memo_.size()) - k + 1;
        Rational next = spec_.forcing_at(m);
        for (long j = 0; j < k; ++j) next += spec_.coefficients[static_cast<std::size_t>(j)] * memo_[static_cast<std::size_t>(m + j - 1)];
        memo_.push_back(std::move(next));
    }
    return memo_[static_cast<std::size_t>(n - 1)];
}

// ---- Sequence views --------------------------------------------------------

Sequence::Sequence(const ClosedFormSequence& cf)
    : fn_([cf](long n) { return cf.eval(n); }) {}

Sequence::Sequence(RecursiveSequence rs) {
    auto shared = std::make_shared<RecursiveSequence>(std::move(rs));
    fn_ = [shared](long n) { return QuadExt((*shared)(n)); };
}

Sequence seq_delta(Sequence f) {
    return Sequence([f = std::move(f)](long n) { return f(n + 1) - f(n); });
}

QuadExt seq_convolve(const Sequence& f, const Sequence& g, long n) {
    if (n < 1) throw Error("sequences are indexed from n = 1");
    QuadExt out;
    for (long k = 1; k <= n - 1; ++k) out += f(k) * g(n - k);
    return out;
}

Sequence convolution(Sequence f, Sequence g) {
    return Sequence([f = std::move(f), g = std::move(g)](long n) { return seq_convolve(f, g, n); });
}

Sequence partial_sum(Sequence f) {
    return Sequence([f = std::move(f)](long n) {
        QuadExt out;
        for (long k = 1; k <= n - 1; ++k) out += f(k);
        return out;
    });
}

PrefixComparison seq_equal_prefix(const Sequence& f, const Sequence& g, long upto) {
    if (upto < 1) throw Error("prefix length must be at least 1");
    for (long n = 1; n <= upto; ++n) {
        if (!(f(n) == g(n))) return {false, n};
    }
    return {};
}

// ---- transform <-> closed form --------------------------------------------

ClosedFormSequence inverse_transform(const TransformExpr& l) {
    std::vector<ClosedFormTerm> terms;
    std::map<int, QuadExt> deltas = l.deltas();
    for (const auto& pf : partial_fractions(l.rational())) {
        if (pf.root.is_zero()) {
            deltas[pf.multiplicity] += pf.coefficient;
        } else {
            terms.push_back({pf.coefficient, pf.root, pf.multiplicity});
        }
    }
    return ClosedFormSequence(std::move(terms), std::move(deltas));
}

TransformExpr transform_of(const ClosedFormSequence& f) {
    TransformExpr out;
    for (const auto& t : f.terms()) {
        const TransformExpr base = xf_geometric(t.root);
        TransformExpr power = base;
        for (int i = 1; i < t.multiplicity; ++i) power = xf_convolution(power, base);
        out = out + power.scaled(t.coefficient);
    }
    for (const auto& [j, c] : f.deltas()) out = out + xf_delta(j, c);
    return out;
}

} // namespace sigma
