#include "sigma/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "sigma/errors.hpp"
#include "sigma/numeric.hpp"
#include "sigma/render.hpp"
#include "sigma/report_json.hpp"

namespace sigma {

namespace {

using nlohmann::json;

CommandResult guarded(const std::function<CommandResult()>& body) {
    CommandResult r;
    try {
        return body();
    } catch (const ParseError& e) {
        r.exit_code = kExitInput;
        r.err = std::string("parse error: ") + e.what() + "\n";
    } catch (const SemanticError& e) {
        r.exit_code = kExitInput;
        r.err = std::string("semantic error: ") + e.what() + "\n";
    } catch (const UnsupportedFactorization& e) {
        r.exit_code = kExitCapability;
        r.err = std::string("UnsupportedFactorization: ") + e.what() + "\n";
    } catch (const DegreeLimitExceeded& e) {
        r.exit_code = kExitCapability;
        r.err = std::string("DegreeLimitExceeded: ") + e.what() + "\n";
    } catch (const ResonantForcing& e) {
        r.exit_code = kExitCapability;
        r.err = std::string("ResonantForcing: ") + e.what() + "\n";
    } catch (const DivergenceGuard& e) {
        r.exit_code = kExitCapability;
        r.err = std::string("DivergenceGuard: ") + e.what() + "\n";
    } catch (const VerificationFailed& e) {
        r.exit_code = kExitVerification;
        r.err = std::string("VerificationFailed: ") + e.what() + "\n";
    } catch (const CheckFailed& e) {
        r.exit_code = kExitVerification;
        r.err = std::string("CheckFailed: ") + e.what() + "\n";
    } catch (const Error& e) {
        r.exit_code = kExitInput;
        r.err = std::string("error: ") + e.what() + "\n";
    }
    return r;
}

std::string join_values(const ClosedFormSequence& f, long terms) {
    std::string out;
    for (long n = 1; n <= terms; ++n) {
        if (n > 1) out += ", ";
        out += f.eval(n).to_string();
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GridSplit {
    std::vector<double> used;
    std::vector<double> skipped;
};

// Grid points at or below the growth exponent cannot converge; they are
// skipped, and an empty grid falls back to two points above s0.
GridSplit usable_grid(const std::vector<double>& grid, double s0) {
    GridSplit g;
    for (double s : grid) (s > s0 ? g.used : g.skipped).push_back(s);
    if (g.used.empty()) g.used = {s0 + 0.5, s0 + 1.0};
    return g;
}

} // namespace

CommandResult cmd_solve(const std::string& program_text, const CliOptions& opts) {
    return guarded([&] {
        const DslProgram program = parse_dsl(program_text);
        const RecurrenceSpec spec = program.to_spec();
        const SolutionReport report = solve_ivp(spec, std::max(opts.verify_upto, kSelfCheckDepth));
        CommandResult r;
        if (opts.json) {
            json j = to_json(report, opts.terms);
            j["recurrence"] = render_dsl(program);
            r.out = j.dump(2) + "\n";
            return r;
        }
        std::ostringstream out;
        out << "recurrence: " << render_dsl(program) << "\n";
        out << "transform: " << render_transform(report.transform, opts.display) << "\n";
        out << "closed form: " << render_fibonacci_normal(report.closed_form) << "\n";
        out << "values (n = 1.." << opts.terms << "): " << join_values(report.closed_form, opts.terms) << "\n";
        out << "verified: closed form equals direct recursion for n <= " << report.verified_upto << "\n";
        if (report.coefficient_decomposition) {
            const auto& basis = *report.coefficient_decomposition;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                std::string name = "coefficient of a[" + std::to_string(i + 1) + "]";
                if (basis.size() == 2) name = i == 0 ? "gamma_n" : "beta_n";
                out << name << " = " << render_fibonacci_normal(basis[i]) << "\n";
            }
        }
        r.out = out.str();
        return r;
    });
}

CommandResult cmd_verify(const std::string& program_text, const CliOptions& opts) {
    return guarded([&] {
        const DslProgram program = parse_dsl(program_text);
        const RecurrenceSpec spec = program.to_spec();
        const SolutionReport solved = solve_ivp(spec);
        ClosedFormSequence candidate = solved.closed_form;
        if (opts.closed_form_file) {
            try {
                candidate = closed_form_from_json(json::parse(read_file(*opts.closed_form_file)));
            } catch (const json::exception& e) {
                throw Error(std::string("malformed closed-form file: ") + e.what());
            }
        }

        const VerificationReport exact = verify_solution(spec, candidate, opts.verify_upto);

        const GrowthBound growth = growth_bound(candidate);
        const GridSplit grid = usable_grid(opts.s_grid, growth.s0);
        SeriesCheckConfig cfg;
        cfg.s_values = grid.used;
        cfg.tolerance = opts.tol;
        cfg.growth_alpha = growth.alpha;
        cfg.growth_s0 = growth.s0;
        const PairCheckReport numeric =
            evaluate_pair([&candidate](long n) { return candidate.eval_double(n); }, solved.transform, cfg);

        const bool passed = exact.passed && numeric.passed;
        CommandResult r;
        r.exit_code = passed ? kExitOk : kExitVerification;
        if (opts.json) {
            json j = {{"passed", passed},
                      {"exact", to_json(exact)},
                      {"numeric", to_json(numeric)},
                      {"skipped_s", grid.skipped},
                      {"closed_form", to_json(candidate)}};
            r.out = j.dump(2) + "\n";
            return r;
        }
        std::ostringstream out;
        out.precision(3);
        out << "closed form: " << render_fibonacci_normal(candidate) << "\n";
        if (exact.passed) {
            out << "exact: pass (n <= " << exact.checked_upto << ")\n";
        } else {
            out << "exact: FAIL";
            if (exact.first_failure) out << " at n = " << *exact.first_failure;
            out << ": " << exact.reason << "\n";
        }
        for (double s : grid.skipped) out << "numeric: s = " << s << " skipped (s0 = " << growth.s0 << ")\n";
        for (const auto& p : numeric.points) {
            out << "numeric: s = " << p.s << ", N = " << p.terms << ", discrepancy " << std::scientific
                << p.discrepancy << ", tail bound " << p.bound << std::defaultfloat << (p.passed ? " pass" : " FAIL")
                << "\n";
        }
        out << (passed ? "PASS" : "FAIL") << "\n";
        r.out = out.str();
        return r;
    });
}

std::vector<std::pair<std::string, std::string>> transform_table(Display display) {
    const std::string t = render_power(1, display);
    const auto tpow = [display](int k) { return render_power(k, display); };
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("1", render_transform(xf_geometric(QuadExt(1)), display));
    for (const char* a : {"1/2", "2", "5"}) {
        const Rational base = Rational::parse(a);
        const std::string lhs = base.is_integer() ? std::string(a) : "(" + std::string(a) + ")";
        rows.emplace_back(lhs + "^(n-1)", render_transform(xf_geometric(QuadExt(base)), display));
    }
    rows.emplace_back("a^(n-1)", "1/(" + t + " - a)");
    rows.emplace_back("a^n", "a/(" + t + " - a)");
    rows.emplace_back("delta(n,1)", render_transform(xf_delta(1), display));
    rows.emplace_back("delta(n,j)", display == Display::T ? "1/t^j" : "e^(-js)");
    for (int k = 1; k <= 3; ++k) {
        rows.emplace_back(k == 1 ? "n" : "n^" + std::to_string(k), render_transform(xf_n_pow_k(k), display));
    }
    rows.emplace_back("1/n", "s - ln(e^s - 1)");
    rows.emplace_back("F(n) (Fibonacci)",
                      render_transform(solve_ivp(RecurrenceSpec::fibonacci()).transform, display));
    rows.emplace_back("f(n+1)", t + "F(s) - f(1)");
    rows.emplace_back("f(n+2)", tpow(2) + "F(s) - f(1)" + t + " - f(2)");
    rows.emplace_back("f(n+k)", (display == Display::T ? std::string("t^k") : std::string("e^(ks)")) +
                                    "F(s) - sum_{i=1..k} f(i)" +
                                    (display == Display::T ? std::string("t^(k-i)") : std::string("e^((k-i)s)")));
    rows.emplace_back("(Delta f)(n)", "(" + t + " - 1)F(s) - f(1)");
    rows.emplace_back("n*f(n)", "-F'(s)");
    rows.emplace_back("(f*g)(n)", "F(s)G(s)");
    rows.emplace_back("sum_{k=1}^{n-1} f(k)", "F(s)/(" + t + " - 1)");
    return rows;
}

CommandResult cmd_table(const CliOptions& opts) {
    return guarded([&] {
        CommandResult r;
        const auto rows = transform_table(opts.display);
        if (opts.json) {
            json j = json::array();
            for (const auto& [f, l] : rows) j.push_back({{"sequence", f}, {"transform", l}});
            r.out = j.dump(2) + "\n";
            return r;
        }
        for (const auto& [f, l] : rows) r.out += f + " <-> " + l + "\n";
        return r;
    });
}

CommandResult run_cli(const std::vector<std::string>& args, std::istream& in) {
    CLI::App app{"Sigma-transform solver for linear recurrences"};
    app.require_subcommand(1);
    CliOptions opts;
    std::string input_file;
    std::string expr;
    std::string display = "exps";
    std::string grid_text;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", input_file, "program file, or - for stdin");
        cmd->add_option("-e,--expr", expr, "program text");
        cmd->add_option("--terms", opts.terms, "number of values to print")->check(CLI::Range(0L, 100000L));
        cmd->add_option("--verify-upto", opts.verify_upto, "exact verification depth")
            ->check(CLI::Range(1L, 100000L));
    };
    const auto add_output = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opts.json, "emit JSON");
        cmd->add_option("--display", display, "transform variable: t or exps")
            ->check(CLI::IsMember({"t", "exps"}));
    };

    CLI::App* solve = app.add_subcommand("solve", "solve a recurrence initial value problem");
    add_common(solve);
    add_output(solve);

    CLI::App* verify = app.add_subcommand("verify", "verify a closed form exactly and numerically");
    add_common(verify);
    add_output(verify);
    verify->add_option("--s-grid", grid_text, "comma-separated s values");
    verify->add_option("--tol", opts.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--closed-form", opts.closed_form_file, "JSON closed form to check");

    CLI::App* table = app.add_subcommand("table", "print the transform table");
    add_output(table);

    CommandResult r;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        r.out = app.help();
        return r;
    } catch (const CLI::ParseError& e) {
        r.exit_code = kExitInput;
        r.err = std::string(e.what()) + "\n";
        return r;
    }
    opts.display = display == "t" ? Display::T : Display::Exps;
    if (!grid_text.empty()) {
        opts.s_grid.clear();
        std::stringstream ss(grid_text);
        std::string item;
        try {
            while (std::getline(ss, item, ',')) opts.s_grid.push_back(std::stod(item));
        } catch (const std::exception&) {
            r.exit_code = kExitInput;
            r.err = "invalid --s-grid: " + grid_text + "\n";
            return r;
        }
    }

    if (table->parsed()) return cmd_table(opts);

    std::string text;
    if (!expr.empty()) {
        text = expr;
    } else if (!input_file.empty() && input_file != "-") {
        try {
            text = read_file(input_file);
        } catch (const Error& e) {
            r.exit_code = kExitInput;
            r.err = std::string("error: ") + e.what() + "\n";
            return r;
        }
    } else {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return solve->parsed() ? cmd_solve(text, opts) : cmd_verify(text, opts);
}

} // namespace sigma
