#include "sigma/report_json.hpp"

#include "sigma/errors.hpp"
#include "sigma/render.hpp"

namespace sigma {

using nlohmann::json;

json to_json(const Rational& r) {
    return r.to_string();
}

json to_json(const QuadExt& x) {
    return {{"rational", to_json(x.rational_part())},
            {"radical", to_json(x.radical_part())},
            {"radicand", x.radicand()}};
}

json to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_json(c));
    return out;
}

namespace {

json deltas_json(const std::map<int, QuadExt>& deltas) {
    json out = json::array();
    for (const auto& [j, c] : deltas) out.push_back({{"index", j}, {"coefficient", to_json(c)}});
    return out;
}

} // namespace

json to_json(const ClosedFormSequence& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) {
        terms.push_back(
            {{"coefficient", to_json(t.coefficient)}, {"root", to_json(t.root)}, {"multiplicity", t.multiplicity}});
    }
    return {{"terms", terms}, {"deltas", deltas_json(f.deltas())}, {"text", render_fibonacci_normal(f)}};
}

json to_json(const TransformExpr& l) {
    return {{"numerator", to_json(l.rational().num())},
            {"denominator", to_json(l.rational().den())},
            {"deltas", deltas_json(l.deltas())},
            {"text", render_transform(l, Display::Exps)}};
}

json to_json(const PairCheckReport& r) {
    json points = json::array();
    for (const auto& p : r.points) {
        points.push_back({{"s", p.s},
                          {"N", p.terms},
                          {"series", p.series},
                          {"transform", p.transform},
                          {"discrepancy", p.discrepancy},
                          {"bound", p.bound},
                          {"passed", p.passed}});
    }
    return {{"points", points}, {"passed", r.passed}};
}

json to_json(const VerificationReport& r) {
    json out = {{"passed", r.passed}, {"checked_upto", r.checked_upto}, {"reason", r.reason}};
    out["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
    return out;
}

json to_json(const SolutionReport& report, long terms) {
    json values = json::array();
    for (long n = 1; n <= terms; ++n) values.push_back(report.closed_form.eval(n).to_string());
    json out = {{"closed_form", to_json(report.closed_form)},
                {"transform", to_json(report.transform)},
                {"verified_upto", report.verified_upto},
                {"values", values}};
    if (report.coefficient_decomposition) {
        json basis = json::array();
        for (const auto& b : *report.coefficient_decomposition) basis.push_back(to_json(b));
        out["coefficient_decomposition"] = basis;
    } else {
        out["coefficient_decomposition"] = nullptr;
    }
    return out;
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw Error("expected a rational string \"p\" or \"p/q\"");
    return Rational::parse(j.get<std::string>());
}

QuadExt quad_from_json(const json& j) {
    if (!j.is_object()) return QuadExt(rational_from_json(j));
    try {
        return QuadExt(rational_from_json(j.at("rational")), rational_from_json(j.at("radical")),
                       j.at("radicand").get<std::int64_t>());
    } catch (const json::exception& e) {
        throw Error(std::string("malformed number: ") + e.what());
    }
}

ClosedFormSequence closed_form_from_json(const json& j) {
    try {
        std::vector<ClosedFormTerm> terms;
        for (const auto& t : j.at("terms")) {
            const int m = t.at("multiplicity").get<int>();
            if (m < 1) throw Error("multiplicity must be at least 1");
            terms.push_back({quad_from_json(t.at("coefficient")), quad_from_json(t.at("root")), m});
        }
        std::map<int, QuadExt> deltas;
        if (j.contains("deltas")) {
            for (const auto& d : j.at("deltas")) {
                const int index = d.at("index").get<int>();
                if (index < 1) throw Error("delta index must be at least 1");
                deltas[index] += quad_from_json(d.at("coefficient"));
            }
        }
        return ClosedFormSequence(std::move(terms), std::move(deltas));
    } catch (const json::exception& e) {
        throw Error(std::string("malformed closed form: ") + e.what());
    }
}

} // namespace sigma
