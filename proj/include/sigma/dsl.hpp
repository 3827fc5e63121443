#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sigma/recurrence_spec.hpp"

namespace sigma {

/// a[n+k] = sum_j rhs[j] a[n+j] + forcing
struct DslRecurrence {
    int lhs_shift = 0;
    std::map<int, Rational> rhs;
    std::vector<ForcingTerm> forcing;

    friend bool operator==(const DslRecurrence&, const DslRecurrence&) = default;
};

struct DslProgram {
    DslRecurrence recurrence;
    std::map<int, Rational> initials;
    std::map<std::string, std::string> options;

    RecurrenceSpec to_spec() const;

    friend bool operator==(const DslProgram&, const DslProgram&) = default;
};

/// Parses the recurrence language:
///
///   program    := stmt (";" stmt)* [";"]
///   stmt       := recurrence | initial
///   recurrence := "a[n+" INT "]" "=" expr
///   expr       := ["-"] term (("+"|"-") term)*
///   term       := RATIONAL? ("*"? atom)?
///   atom       := "a[n+" INT "]" | "a[n]" | "n" ("^" INT)? | RATIONAL "^n" | RATIONAL
///   initial    := "a[" INT "]" "=" ["-"] RATIONAL
///   RATIONAL   := INT ("/" INT)?
///
/// Whitespace is ignored. Like terms are combined. Throws ParseError with a
/// 1-based line and column, or SemanticError for a missing or repeated
/// recurrence, missing or duplicate initials, or a right-hand shift that is
/// not below the left-hand one.
DslProgram parse_dsl(std::string_view text);

/// Canonical text that parses back to an equal program.
std::string render_dsl(const DslProgram& program);

} // namespace sigma
