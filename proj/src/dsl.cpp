#include "sigma/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "sigma/errors.hpp"

namespace sigma {

namespace {

struct Position {
    int line = 1;
    int column = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    DslProgram program() {
        DslProgram out;
        bool have_recurrence = false;
        std::map<int, Position> seen_initials;
        skip_ws();
        if (at_end()) fail("empty program");
        while (true) {
            const Position stmt_pos = pos_;
            expect('a');
            expect('[');
            skip_ws();
            if (peek() == 'n') {
                DslRecurrence rec = recurrence_after_bracket();
                if (have_recurrence) throw SemanticError(where(stmt_pos) + "more than one recurrence");
                have_recurrence = true;
                out.recurrence = std::move(rec);
            } else {
                const int index = integer();
                expect(']');
                expect('=');
                Rational value = signed_rational();
                if (seen_initials.contains(index)) {
                    throw SemanticError(where(stmt_pos) + "duplicate initial value a[" + std::to_string(index) + "]");
                }
                seen_initials[index] = stmt_pos;
                out.initials[index] = std::move(value);
            }
            skip_ws();
            if (at_end()) break;
            expect(';');
            skip_ws();
            if (at_end()) break;
        }
        if (!have_recurrence) throw SemanticError("program has no recurrence a[n+k] = ...");
        const int k = out.recurrence.lhs_shift;
        for (const auto& [index, p] : seen_initials) {
            if (index < 1 || index > k) {
                throw SemanticError(where(p) + "initial a[" + std::to_string(index) + "] is outside 1.." +
                                    std::to_string(k));
            }
        }
        for (int i = 1; i <= k; ++i) {
            if (!out.initials.contains(i)) throw SemanticError("missing initial value a[" + std::to_string(i) + "]");
        }
        return out;
    }

private:
    // after "a[" with 'n' next
    DslRecurrence recurrence_after_bracket() {
        DslRecurrence rec;
        const Position lhs_pos = pos_;
        rec.lhs_shift = shift_after_bracket();
        if (rec.lhs_shift < 1) throw SemanticError(where(lhs_pos) + "left side must be a[n+k] with k >= 1");
        expect('=');
        expression(rec);
        for (const auto& [shift, c] : rec.rhs) {
            (void)c;
            if (shift >= rec.lhs_shift) {
                throw SemanticError(where(lhs_pos) + "right side uses a[n+" + std::to_string(shift) +
                                    "], which is not below the left side a[n+" + std::to_string(rec.lhs_shift) + "]");
            }
        }
        std::erase_if(rec.rhs, [](const auto& kv) { return kv.second.is_zero(); });
        canonicalize(rec.forcing);
        return rec;
    }

    // "n" ("+" INT)? "]"
    int shift_after_bracket() {
        expect('n');
        skip_ws();
        int shift = 0;
        if (peek() == '+') {
            ++index_;
            ++pos_.column;
            shift = integer();
        }
        expect(']');
        return shift;
    }

    void expression(DslRecurrence& rec) {
        skip_ws();
        int sign = 1;
        if (peek() == '-') {
            advance();
            sign = -1;
        } else if (peek() == '+') {
            advance();
        }
        term(rec, sign);
        while (true) {
            skip_ws();
            if (peek() == '+') {
                advance();
                term(rec, 1);
            } else if (peek() == '-') {
                advance();
                term(rec, -1);
            } else {
                break;
            }
        }
    }

    void term(DslRecurrence& rec, int sign) {
        skip_ws();
        Rational coefficient(sign);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const Rational r = unsigned_rational();
            skip_ws();
            if (peek() == '^') {
                geometric(rec, coefficient, r);
                return;
            }
            coefficient *= r;
            skip_ws();
            if (peek() == '*') {
                advance();
                atom(rec, coefficient);
            } else if (peek() == 'a' || peek() == 'n' || std::isdigit(static_cast<unsigned char>(peek()))) {
                atom(rec, coefficient);
            } else {
                rec.forcing.push_back(ForcingTerm::power_of_n(coefficient, 0));
            }
            return;
        }
        atom(rec, coefficient);
    }

    void atom(DslRecurrence& rec, const Rational& coefficient) {
        skip_ws();
        const char c = peek();
        if (c == 'a') {
            advance();
            expect('[');
            const int shift = shift_after_bracket();
            rec.rhs[shift] += coefficient;
        } else if (c == 'n') {
            advance();
            skip_ws();
            int power = 1;
            if (peek() == '^') {
                advance();
                power = integer();
            }
            rec.forcing.push_back(ForcingTerm::power_of_n(coefficient, power));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const Rational r = unsigned_rational();
            skip_ws();
            if (peek() == '^') {
                geometric(rec, coefficient, r);
            } else {
                rec.forcing.push_back(ForcingTerm::power_of_n(coefficient * r, 0));
            }
        } else {
            fail(std::string("expected a[n+k], a[n], n, or a number") + describe_next());
        }
    }

    void geometric(DslRecurrence& rec, const Rational& coefficient, const Rational& base) {
        const Position p = pos_;
        expect('^');
        expect('n');
        if (base.sign() <= 0) throw SemanticError(where(p) + "geometric base must be positive");
        rec.forcing.push_back(ForcingTerm::geometric(coefficient, base));
    }

    static void canonicalize(std::vector<ForcingTerm>& forcing) {
        std::vector<ForcingTerm> out;
        for (auto& f : forcing) {
            auto it = std::find_if(out.begin(), out.end(), [&](const ForcingTerm& g) {
                return g.kind == f.kind && g.power == f.power && g.base == f.base;
            });
            if (it == out.end()) {
                out.push_back(std::move(f));
            } else {
                it->coefficient += f.coefficient;
            }
        }
        std::erase_if(out, [](const ForcingTerm& f) { return f.coefficient.is_zero(); });
        std::sort(out.begin(), out.end(), [](const ForcingTerm& a, const ForcingTerm& b) {
            if (a.kind != b.kind) return a.kind == ForcingTerm::Kind::Power;
            if (a.kind == ForcingTerm::Kind::Power) return a.power > b.power;
            return a.base > b.base;
        });
        forcing = std::move(out);
    }

    Rational signed_rational() {
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            advance();
        }
        Rational r = unsigned_rational();
        return negative ? -r : r;
    }

    Rational unsigned_rational() {
        skip_ws();
        const Position start = pos_;
        const std::string num = digits();
        std::string den = "1";
        skip_ws();
        if (peek() == '/') {
            advance();
            skip_ws();
            den = digits();
        }
        if (mpz_class(den) == 0) fail_at(start, "zero denominator");
        return Rational(mpz_class(num), mpz_class(den));
    }

    int integer() {
        skip_ws();
        const Position start = pos_;
        const std::string d = digits();
        if (d.size() > 6) fail_at(start, "integer too large");
        return std::stoi(d);
    }

    std::string digits() {
        skip_ws();
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            out += peek();
            advance();
        }
        if (out.empty()) fail("expected a number" + describe_next());
        return out;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'" + describe_next());
        advance();
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[index_]))) advance();
    }

    char peek() const { return at_end() ? '\0' : text_[index_]; }
    bool at_end() const { return index_ >= text_.size(); }

    void advance() {
        if (text_[index_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++index_;
    }

    std::string describe_next() const {
        if (at_end()) return ", found end of input";
        return std::string(", found '") + peek() + "'";
    }

    static std::string where(const Position& p) {
        return std::to_string(p.line) + ":" + std::to_string(p.column) + ": ";
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_.line, pos_.column); }
    [[noreturn]] static void fail_at(const Position& p, const std::string& what) {
        throw ParseError(what, p.line, p.column);
    }

    std::string_view text_;
    std::size_t index_ = 0;
    Position pos_;
};

std::string render_coefficient_times(const Rational& c, const std::string& atom, bool first) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    std::string body = mag == Rational(1) ? atom : mag.to_string() + "*" + atom;
    if (first) return (negative ? "-" : "") + body;
    return (negative ? " - " : " + ") + body;
}

} // namespace

DslProgram parse_dsl(std::string_view text) {
    return Parser(text).program();
}

RecurrenceSpec DslProgram::to_spec() const {
    RecurrenceSpec spec;
    spec.order = recurrence.lhs_shift;
    spec.coefficients.assign(static_cast<std::size_t>(spec.order), Rational(0));
    for (const auto& [shift, c] : recurrence.rhs) spec.coefficients[static_cast<std::size_t>(shift)] = c;
    spec.forcing = recurrence.forcing;
    for (const auto& [i, v] : initials) spec.initials.push_back(v);
    try {
        spec.validate();
    } catch (const CapabilityError&) {
        throw;
    } catch (const Error& e) {
        throw SemanticError(e.what());
    }
    return spec;
}

std::string render_dsl(const DslProgram& program) {
    const auto& rec = program.recurrence;
    std::string out = "a[n+" + std::to_string(rec.lhs_shift) + "] = ";
    std::string rhs;
    for (auto it = rec.rhs.rbegin(); it != rec.rhs.rend(); ++it) {
        const std::string atom = it->first == 0 ? "a[n]" : "a[n+" + std::to_string(it->first) + "]";
        rhs += render_coefficient_times(it->second, atom, rhs.empty());
    }
    for (const auto& f : rec.forcing) {
        if (f.kind == ForcingTerm::Kind::Geometric) {
            rhs += render_coefficient_times(f.coefficient, f.base.to_string() + "^n", rhs.empty());
        } else if (f.power == 0) {
            const bool negative = f.coefficient.sign() < 0;
            const std::string mag = f.coefficient.abs().to_string();
            rhs += rhs.empty() ? (negative ? "-" : "") + mag : (negative ? " - " : " + ") + mag;
        } else {
            const std::string atom = f.power == 1 ? "n" : "n^" + std::to_string(f.power);
            rhs += render_coefficient_times(f.coefficient, atom, rhs.empty());
        }
    }
    out += rhs.empty() ? "0" : rhs;
    for (const auto& [i, v] : program.initials) out += "; a[" + std::to_string(i) + "] = " + v.to_string();
    return out;
}

} // namespace sigma
