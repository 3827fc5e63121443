#pragma once

#include <json.hpp>

#include "sigma/numeric.hpp"
#include "sigma/recurrence.hpp"

namespace sigma {

/// Exact numbers are strings: "p" or "p/q". A QuadExt a + b*sqrt(d) is
/// {"rational": a, "radical": b, "radicand": d}.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const QuadExt& x);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const ClosedFormSequence& f);
nlohmann::json to_json(const TransformExpr& l);
nlohmann::json to_json(const PairCheckReport& r);
nlohmann::json to_json(const VerificationReport& r);

/// values holds f(1..terms) as exact strings.
nlohmann::json to_json(const SolutionReport& report, long terms);

/// Inverses of the encodings above. Throw Error on malformed input.
Rational rational_from_json(const nlohmann::json& j);
QuadExt quad_from_json(const nlohmann::json& j);
ClosedFormSequence closed_form_from_json(const nlohmann::json& j);

} // namespace sigma
