#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ramanujan/bivariate.hpp"
#include "ramanujan/quasimodular.hpp"
#include "ramanujan/reduce.hpp"
#include "ramanujan/render.hpp"
#include "ramanujan/theta.hpp"

namespace {

using namespace ramanujan;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

constexpr int kDefaultExpandOrder = 50;
constexpr int kDefaultXOrder = 9;
constexpr int kDefaultBivariateQOrder = 30;

int default_order(int fallback) {
    if (const char* env = std::getenv("RAMANUJAN_DEFAULT_ORDER")) {
        try {
            const int n = std::stoi(env);
            if (n >= 0) return n;
        } catch (const std::exception&) {
            // fall through to the built-in default
        }
    }
    return fallback;
}

Series parse_series(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "u") return Series::U;
    if (s == "v") return Series::V;
    throw CLI::ValidationError("--series", "expected 'u' or 'v'");
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot open output file: " + output_path);
    out << text << "\n";
}

PartitionWeight weight_for(Series s) {
    return s == Series::U ? PartitionWeight::phi_u_weight() : PartitionWeight::phi_v_weight();
}

// The period-8 odd table used alongside the built-in characters in the
// lemma suite: the Kronecker symbol (-8|n).
const CharacterSpec& chi_minus8() {
    static const CharacterSpec chi(
        {Rational(0), Rational(1), Rational(0), Rational(1), Rational(0), Rational(-1),
         Rational(0), Rational(-1)},
        Parity::odd, "chi_-8");
    return chi;
}

std::vector<CheckReport> run_checks(const std::string& which, int M, int N_flag, int tmax) {
    std::vector<CheckReport> reports;
    const bool all = which == "all";
    const auto want = [&](const char* name) { return all || which == name; };

    if (want("odes")) {
        const int N = N_flag >= 0 ? N_flag : default_order(100);
        for (auto& r : verify_ramanujan_odes(N)) reports.push_back(std::move(r));
    }
    if (want("classical")) {
        const int N = N_flag >= 0 ? N_flag : default_order(500);
        for (auto& r : verify_classical_identities(N)) reports.push_back(std::move(r));
    }
    if (want("main")) {
        const int N = N_flag >= 0 ? N_flag : default_order(kDefaultExpandOrder);
        for (const Series s : {Series::U, Series::V}) {
            const PartitionWeight phi = weight_for(s);
            for (int t = 1; t <= tmax; ++t) {
                const QSeries lhs = expand(trace(phi, t), N);
                const QSeries rhs = s == Series::U ? oracle_u(t, N) : oracle_v(t, N);
                CheckReport r{std::string("trace ") + series_name(s) + "_" +
                                  std::to_string(2 * t) + " = oracle",
                              true, -1, N, "identical through q^" + std::to_string(N)};
                for (int i = 0; i <= N; ++i) {
                    if (lhs[i] != rhs[i]) {
                        r.passed = false;
                        r.detail = "first discrepancy at q^" + std::to_string(i);
                        break;
                    }
                }
                reports.push_back(std::move(r));
            }
        }
    }
    if (want("genfun")) {
        const int N = N_flag >= 0 ? N_flag : default_order(kDefaultBivariateQOrder);
        reports.push_back(check_genfun(Series::U, M, N));
        reports.push_back(check_genfun(Series::V, M, N));
    }
    if (want("lemma")) {
        const int N = N_flag >= 0 ? N_flag : default_order(kDefaultBivariateQOrder);
        reports.push_back(check_lemma_genfun(CharacterSpec::chi_minus4(), M, N));
        reports.push_back(check_lemma_genfun(CharacterSpec::chi_12(), M, N));
        reports.push_back(check_lemma_genfun(chi_minus8(), M, N));
    }
    if (want("products")) {
        const int N = N_flag >= 0 ? N_flag : default_order(kDefaultBivariateQOrder);
        reports.push_back(check_jacobi_products(1, M, N));
        reports.push_back(check_jacobi_products(2, M, N));
        reports.push_back(check_product_theorem(Series::U, M, N));
        reports.push_back(check_product_theorem(Series::V, M, N));
    }
    if (want("key")) {
        const int N = N_flag >= 0 ? N_flag : default_order(20);
        for (auto& r : check_key_identity(M, N)) reports.push_back(std::move(r));
    }
    return reports;
}

// Parsed invocation: which command, which series, and the truncation knobs.
struct RunConfig {
    std::string series_str;
    std::string format = "text";
    std::string output;
    std::string check = "all";
    int t = 0;
    int tmax = 8;
    int order = -1;  // -1: fall back to env/default
    int xorder = kDefaultXOrder;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramanujan U/V q-series: partition Eisenstein traces, theta oracles, "
                 "identity verification, and reduction to the E2/E4/E6 basis"};
    app.require_subcommand(1);

    RunConfig cfg;

    const auto add_common = [&](CLI::App* cmd, bool needs_series) {
        if (needs_series)
            cmd->add_option("--series", cfg.series_str, "series family: u or v")->required();
        cmd->add_option("--format", cfg.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", cfg.output, "write to this file instead of stdout");
    };

    auto* cmd_trace = app.add_subcommand("trace", "partition Eisenstein trace of U_2t or V_2t");
    add_common(cmd_trace, true);
    cmd_trace->add_option("--t", cfg.t, "trace index t (weight 2t)")->required()
        ->check(CLI::NonNegativeNumber);

    auto* cmd_reduce =
        app.add_subcommand("reduce", "K-coefficients of U_2t or V_2t in the E2/E4/E6 basis");
    add_common(cmd_reduce, true);
    cmd_reduce->add_option("--t", cfg.t, "trace index t >= 1")->required()
        ->check(CLI::PositiveNumber);
    cmd_reduce->add_option("--order", cfg.order, "verification order (default 60)")
        ->check(CLI::NonNegativeNumber);

    auto* cmd_qexpand =
        app.add_subcommand("qexpand", "q-expansion from the theta oracle and from the trace");
    add_common(cmd_qexpand, true);
    cmd_qexpand->add_option("--t", cfg.t, "series index t")->required()
        ->check(CLI::NonNegativeNumber);
    cmd_qexpand->add_option("--order", cfg.order, "truncation order N (default 50)")
        ->check(CLI::NonNegativeNumber);

    auto* cmd_verify = app.add_subcommand("verify", "run identity verification suites");
    add_common(cmd_verify, false);
    cmd_verify
        ->add_option("--check", cfg.check,
                     "odes|genfun|products|lemma|classical|main|key|all")
        ->check(CLI::IsMember({"odes", "genfun", "products", "lemma", "classical", "main",
                               "key", "all"}));
    cmd_verify->add_option("--order", cfg.order, "q-order override for the selected suites")
        ->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--xorder", cfg.xorder, "X-order for the bivariate suites")
        ->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--t-max", cfg.tmax, "largest t for the main-theorem suite")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_trace->parsed()) {
            const Series s = parse_series(cfg.series_str);
            const QuasimodularPoly p = trace(weight_for(s), cfg.t);
            emit(cfg.format == "json" ? trace_json(s, p).dump(2) : trace_text(s, p),
                 cfg.output);
            return 0;
        }
        if (cmd_reduce->parsed()) {
            const Series s = parse_series(cfg.series_str);
            const int nverify = cfg.order >= 0 ? cfg.order : default_order(60);
            const E246Poly p = k_table(s, cfg.t, nverify);
            emit(cfg.format == "json" ? reduce_json(p).dump(2) : reduce_text(p), cfg.output);
            return 0;
        }
        if (cmd_qexpand->parsed()) {
            const Series s = parse_series(cfg.series_str);
            const int N = cfg.order >= 0 ? cfg.order : default_order(kDefaultExpandOrder);
            const QSeries fromtrace = expand(trace(weight_for(s), cfg.t), N);
            const QSeries oracle = s == Series::U ? oracle_u(cfg.t, N) : oracle_v(cfg.t, N);
            const bool equal = oracle == fromtrace;
            emit(cfg.format == "json" ? qexpand_json(oracle, equal).dump(2)
                                      : qexpand_text(oracle, fromtrace, equal),
                 cfg.output);
            return 0;
        }
        // verify
        const auto reports = run_checks(cfg.check, cfg.xorder, cfg.order, cfg.tmax);
        emit(cfg.format == "json" ? verify_json(reports).dump(2) : verify_text(reports),
             cfg.output);
        return all_passed(reports) ? 0 : kExitVerifyFailed;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
