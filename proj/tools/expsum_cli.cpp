#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "expsum/acceptance.hpp"
#include "expsum/quad.hpp"
#include "expsum/theorems.hpp"

namespace {

using namespace expsum;

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitUsage = 64;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ArgumentError("cannot open output file: " + out_path);
    out << text;
}

nlohmann::json coeffs_json(const std::vector<cplx>& coeffs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const cplx& z : coeffs) arr.push_back({{"re", z.real()}, {"im", z.imag()}});
    return arr;
}

Functional parse_functional(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ArgumentError("functional must be point:<y> or deriv:<y>");
    const std::string kind = text.substr(0, colon);
    const double y = std::stod(text.substr(colon + 1));
    if (kind == "point") return Functional::point(y);
    if (kind == "deriv") return Functional::deriv(y);
    throw ArgumentError("unknown functional kind: " + kind);
}

std::vector<int> parse_n_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {std::stoi(text)};
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw ArgumentError("bad n range: " + text);
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

int report_exit(const std::vector<CheckReport>& rows) {
    bool violated = false, inconclusive = false;
    for (const CheckReport& r : rows) {
        violated = violated || r.status == CheckStatus::Violated;
        inconclusive = inconclusive || r.status == CheckStatus::Inconclusive;
    }
    if (violated) return kExitViolated;
    if (inconclusive) {
        std::cerr << "warning: inconclusive rows (conditioning or quadrature limits)\n";
        return kExitNumerical;
    }
    return kExitHolds;
}

struct CommonFlags {
    std::string theorem;
    std::string n_range = "2";
    std::uint64_t seed = 42;
    int samples = 100;
    std::string format = "csv";
    std::string out;
    std::string exponents;
    double imag_range = 0.0;
    double real_range = 2.0;
    double min_gap = 1e-2;
    double q = 2.0;
    double weight_rate = 0.0;
    std::vector<double> interval = {0.0, 1.0};
    std::string functional = "point:0";
    bool monomial = false;
    bool half_line = false;
    std::optional<double> horizon, y, delta, lambda;
};

std::string serialize(const std::vector<CheckReport>& rows, const std::string& format) {
    if (format == "csv") return to_csv(rows);
    if (format == "json") return to_json_text(rows);
    throw ArgumentError("format must be csv or json");
}

Extras extras_from(const CommonFlags& f) {
    Extras e;
    e.horizon = f.horizon;
    e.y = f.y;
    e.delta = f.delta;
    e.lambda = f.lambda;
    if (f.q != 2.0) e.q = f.q;
    return e;
}

int cmd_check(const CommonFlags& f) {
    const TheoremId id = theorem_id_from_string(f.theorem);
    std::vector<CheckReport> rows;
    if (!f.exponents.empty()) {
        const ExponentSet exps = ExponentSet::load(f.exponents);
        rows.push_back(check_exact(id, exps, extras_from(f)));
    } else {
        RandomModel m;
        m.n = parse_n_range(f.n_range).front();
        m.seed = f.seed;
        m.imag_range = f.imag_range;
        m.real_range = f.real_range;
        m.min_gap = f.min_gap;
        rows = run_samples(id, m, f.samples);
    }
    write_output(serialize(rows, f.format), f.out);
    return report_exit(rows);
}

int cmd_sweep(const CommonFlags& f) {
    const TheoremId id = theorem_id_from_string(f.theorem);
    RandomModel tmpl;
    tmpl.seed = f.seed;
    tmpl.imag_range = f.imag_range;
    tmpl.real_range = f.real_range;
    tmpl.min_gap = f.min_gap;
    const std::vector<CheckReport> rows = sweep(id, parse_n_range(f.n_range), tmpl, f.samples);
    write_output(serialize(rows, f.format), f.out);
    for (const SweepSummary& s : summarize_sweep(rows)) {
        std::fprintf(stderr, "n=%d min_margin=%.17g holds=%d violated=%d inconclusive=%d\n",
                     s.n, s.min_margin, s.holds, s.violated, s.inconclusive);
    }
    return report_exit(rows);
}

int cmd_extremal(const CommonFlags& f) {
    if (f.exponents.empty()) throw ArgumentError("extremal requires --exponents");
    const ExponentSet exps = ExponentSet::load(f.exponents);
    const Functional fn = parse_functional(f.functional);
    ExtremalResult r;
    if (f.monomial) {
        MonomialSystem sys{exps.values()};
        r = christoffel_sup(sys, fn);
    } else {
        const NormSpec spec = f.half_line
                                  ? NormSpec::halfline(f.weight_rate)
                                  : NormSpec::interval(f.interval.at(0), f.interval.at(1),
                                                       f.weight_rate, 2.0);
        r = christoffel_sup(exps, spec, fn);
    }
    nlohmann::json j = {{"value", r.value},
                        {"condition", r.gram_condition},
                        {"witness_coeffs", coeffs_json(r.witness_coeffs)}};
    write_output(j.dump(2) + "\n", f.out);
    return kExitHolds;
}

int cmd_sigma(int k, int grid, const CommonFlags& f) {
    const SigmaResult r = sigma_minimax(k, grid);
    nlohmann::json j = {{"k", k},
                        {"grid", grid},
                        {"value", r.value},
                        {"closed_form", sigma_closed(k)},
                        {"converged", r.converged},
                        {"iterations", r.iterations},
                        {"coeffs", coeffs_json(r.coeffs)}};
    write_output(j.dump(2) + "\n", f.out);
    if (!r.converged) {
        std::cerr << "minimax iteration stalled; value is the best iterate\n";
        return kExitNumerical;
    }
    return kExitHolds;
}

int cmd_witness(const CommonFlags& f) {
    const TheoremId id = theorem_id_from_string(f.theorem);
    const int n = parse_n_range(f.n_range).front();
    const WitnessResult w = witness(id, n, extras_from(f));
    nlohmann::json j = {{"theorem", to_string(id)},
                        {"n", n},
                        {"achieved_ratio", w.achieved_ratio},
                        {"bound", w.bound}};
    std::optional<ExponentSet> file_exps;
    if (w.exp_witness) {
        j["type"] = "exponential";
        j["exponents"] = nlohmann::json::parse(w.exp_witness->exponents().to_json_string());
        j["coeffs"] = coeffs_json(w.exp_witness->coefficients());
        file_exps = w.exp_witness->exponents();
    } else if (w.poly_witness) {
        j["type"] = "polynomial";
        nlohmann::json coeffs = nlohmann::json::array();
        std::vector<cplx> powers;
        for (std::size_t k = 0; k < w.poly_witness->coeffs.size(); ++k) {
            coeffs.push_back(w.poly_witness->coeffs[k]);
            powers.push_back(cplx(static_cast<double>(k)));
        }
        j["coeffs"] = coeffs;
        file_exps = ExponentSet(powers);
    }
    std::cout << j.dump(2) << "\n";
    if (!f.out.empty() && file_exps) file_exps->save(f.out);
    return kExitHolds;
}

int cmd_table() {
    const bool ok = run_acceptance(std::cout);
    return ok ? kExitHolds : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"expsum: extremal constants and inequality checks for exponential sums"};
    app.require_subcommand(1);

    CommonFlags f;
    int sigma_k = 1;
    int sigma_grid = 4096;

    auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", f.seed, "random seed")->capture_default_str();
        cmd->add_option("--samples", f.samples, "samples per n")->capture_default_str();
        cmd->add_option("--imag-range", f.imag_range,
                        "imaginary-part range (0 means 5n)");
        cmd->add_option("--real-range", f.real_range, "real-part range");
        cmd->add_option("--min-gap", f.min_gap, "minimum exponent separation");
    };
    auto add_report_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", f.format, "csv or json")->capture_default_str();
        cmd->add_option("--out", f.out, "output path (default stdout)");
    };

    CLI::App* check = app.add_subcommand("check", "run one inequality check");
    check->add_option("--theorem", f.theorem, "theorem id, e.g. T3_1")->required();
    check->add_option("--n", f.n_range, "number of exponents");
    check->add_option("--exponents", f.exponents, "exponent JSON file (exact check)");
    check->add_option("--horizon", f.horizon, "truncation horizon (default 9n)");
    check->add_option("--y", f.y, "evaluation point");
    check->add_option("--delta", f.delta, "window half-width");
    check->add_option("--q", f.q, "norm exponent");
    add_model_flags(check);
    add_report_flags(check);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "check across a range of n");
    sweep_cmd->add_option("--theorem", f.theorem, "theorem id")->required();
    sweep_cmd->add_option("--n-range", f.n_range, "range, e.g. 2..8")->required();
    add_model_flags(sweep_cmd);
    add_report_flags(sweep_cmd);

    CLI::App* extremal_cmd = app.add_subcommand("extremal", "point/derivative kernel value");
    extremal_cmd->add_option("--exponents", f.exponents, "exponent JSON file")->required();
    extremal_cmd->add_option("--interval", f.interval, "domain endpoints")->expected(2);
    extremal_cmd->add_flag("--half-line", f.half_line, "use [0, infinity) with q = 2");
    extremal_cmd->add_flag("--monomial", f.monomial,
                           "treat the file as Müntz powers on [0,1]");
    extremal_cmd->add_option("--weight-rate", f.weight_rate, "measure rate c in e^{-ct}");
    extremal_cmd->add_option("--functional", f.functional, "point:<y> or deriv:<y>")
        ->capture_default_str();
    add_report_flags(extremal_cmd);

    CLI::App* sigma_cmd = app.add_subcommand("sigma", "circle minimax constant");
    sigma_cmd->add_option("--k", sigma_k, "polynomial degree")->required();
    sigma_cmd->add_option("--grid", sigma_grid, "circle grid size")->capture_default_str();
    add_report_flags(sigma_cmd);

    CLI::App* witness_cmd = app.add_subcommand("witness", "sharpness construction");
    witness_cmd->add_option("--theorem", f.theorem, "theorem id")->required();
    witness_cmd->add_option("--n", f.n_range, "number of exponents")->required();
    witness_cmd->add_option("--lambda", f.lambda, "frequency parameter");
    witness_cmd->add_option("--out", f.out, "write the witness exponent file here");

    CLI::App* table_cmd = app.add_subcommand("table", "run the full verification table");
    (void)table_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            return app.exit(e);
        }
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(f);
        if (sweep_cmd->parsed()) return cmd_sweep(f);
        if (extremal_cmd->parsed()) return cmd_extremal(f);
        if (sigma_cmd->parsed()) return cmd_sigma(sigma_k, sigma_grid, f);
        if (witness_cmd->parsed()) return cmd_witness(f);
        if (table_cmd->parsed()) return cmd_table();
    } catch (const ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const WrongClass& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
