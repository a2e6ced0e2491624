// Command-line interface: exact constants, pointwise kernel evaluation, and
// the named verification suites. Exit codes: 0 success, 1 verification
// failure, 2 usage or validation error, 3 numerical failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qszego/constants.hpp"
#include "qszego/errors.hpp"
#include "qszego/kernel.hpp"
#include "qszego/quadrature.hpp"
#include "qszego/report.hpp"
#include "qszego/verify.hpp"

namespace {

struct OutputMode {
    bool as_json = false;
};

void emit(const qszego::RunReport& report, const OutputMode& mode) {
    if (mode.as_json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << qszego::report_to_text(report);
    }
}

qszego::SiegelPoint<double> parse_point(const std::vector<double>& coords, int m,
                                        const char* flag) {
    const std::size_t expected = 4 * (static_cast<std::size_t>(m) + 1);
    if (coords.size() != expected) {
        throw qszego::RangeError(std::string(flag) + " needs " + std::to_string(expected) +
                                 " comma-separated coordinates for order " + std::to_string(m) +
                                 " (4 per quaternion slot), got " +
                                 std::to_string(coords.size()));
    }
    qszego::Quaternion<double> q1(coords[0], coords[1], coords[2], coords[3]);
    qszego::HVector<double> zp(static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l) {
        const std::size_t b = 4 * (static_cast<std::size_t>(l) + 1);
        zp[static_cast<std::size_t>(l)] =
            qszego::Quaternion<double>(coords[b], coords[b + 1], coords[b + 2], coords[b + 3]);
    }
    return qszego::SiegelPoint<double>(q1, std::move(zp));
}

int cmd_constants(int n, const OutputMode& mode) {
    using namespace qszego;
    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    report.command = "constants";
    report.inputs = json{{"n", n}};

    const PiScaled c = c_exact(n); // throws RangeError for n < 1
    json alpha_list = json::array();
    for (int k = 0; k <= 2 * n; ++k) alpha_list.push_back(to_string(alpha(n, k)));
    report.outputs = json{
        {"alpha", alpha_list},
        {"K", to_string(K_sum(n))},
        {"c_exact", pi_scaled_to_json(c)},
        {"c_float", c.to_float()},
        {"F_e", to_string(F_e_closed(n))},
    };
    const auto t1 = std::chrono::steady_clock::now();
    report.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
    emit(report, mode);
    return 0;
}

int cmd_kernel_eval(int n, const std::vector<double>& qc, const std::vector<double>& pc,
                    const std::string& normalization, const qszego::QuadratureSpec& spec,
                    const OutputMode& mode) {
    using namespace qszego;
    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    report.command = "kernel-eval";

    Normalization norm = Normalization::unnormalized;
    if (normalization == "exact") {
        norm = Normalization::exact;
    } else if (normalization == "empirical") {
        norm = Normalization::empirical;
    } else if (normalization != "unnormalized") {
        throw RangeError("normalization must be one of exact, empirical, unnormalized");
    }

    const SiegelPoint<double> q = parse_point(qc, n, "--q");
    const SiegelPoint<double> p = parse_point(pc, n, "--p");

    KernelContext ctx(n);
    if (norm == Normalization::empirical) {
        const CEmpResult ce = c_emp_report(n, spec);
        ctx.c_emp = ce.value;
        report.spec_hash = ce.spec_hash;
        report.error_estimates["c_empirical_abs"] = ce.abs_error_estimate;
    }

    const Quaternion<double> sigma = kernel_arg(q, p).sigma;
    const Quaternion<double> raw = s_unnorm(sigma, n, ctx.eps_sing_rel * qabs(sigma) + 1e-300);
    const Quaternion<double> value = kernel_S(q, p, ctx, norm);
    const Quaternion<double> swapped = kernel_S(p, q, ctx, norm);
    const double symmetry = qabs(value - qconj(swapped)) / std::max(qabs(value), 1e-300);

    report.inputs = json{{"n", n}, {"q", qc}, {"p", pc}, {"normalization", normalization}};
    report.outputs = json{
        {"sigma", quaternion_to_json(sigma)},
        {"s_unnormalized", quaternion_to_json(raw)},
        {"S", quaternion_to_json(value)},
        {"symmetry_crosscheck_rel", symmetry},
    };
    if (norm == Normalization::empirical) {
        report.outputs["c_empirical"] = *ctx.c_emp;
    } else if (norm == Normalization::exact) {
        report.outputs["c_exact"] = pi_scaled_to_json(*ctx.c_norm_exact);
        report.outputs["c_float"] = ctx.c_norm_float;
    }
    const auto t1 = std::chrono::steady_clock::now();
    report.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
    emit(report, mode);
    return 0;
}

int cmd_verify(int n, const std::string& suite, std::uint64_t seed,
               const qszego::QuadratureSpec& spec, const OutputMode& mode) {
    using namespace qszego;
    const SuiteResult result = run_suite(suite, n, spec, seed);

    RunReport report;
    report.command = "verify";
    report.inputs = json{{"n", n},
                         {"suite", suite},
                         {"seed", seed},
                         {"quadrature", json::parse(spec.canonical_json())}};
    report.outputs = suite_to_json(result);
    if (suite == "reproduce") report.spec_hash = spec.hash();
    for (const auto& c : result.checks) {
        if (c.threshold > 0.0) report.error_estimates[c.name] = c.measured;
    }
    report.wall_time_seconds = result.wall_time_seconds;

    if (mode.as_json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << "command: verify (suite " << suite << ", order " << n << ")\n"
                  << suite_to_text(result);
    }
    return result.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit kernel calculator and verifier for the quaternionic Siegel domain"};
    app.require_subcommand(1);

    int n = 1;
    std::uint64_t seed = 20240816u;
    std::string suite;
    std::string normalization = "unnormalized";
    std::vector<double> q_coords, p_coords;
    qszego::QuadratureSpec spec;
    OutputMode mode;
    bool as_text = false;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", mode.as_json, "emit a JSON run report");
        auto* t = cmd->add_flag("--text", as_text, "emit plain text (default)");
        t->excludes("--json");
    };

    auto* constants = app.add_subcommand(
        "constants", "print the exact normalization constant and its ingredients");
    constants->add_option("--n", n, "kernel order")->capture_default_str();
    add_common(constants);

    auto* kernel = app.add_subcommand(
        "kernel-eval", "evaluate the two-point kernel at interior points");
    kernel->add_option("--n", n, "kernel order")->capture_default_str();
    kernel->add_option("--q", q_coords, "first point, 4(n+1) comma-separated coordinates")
        ->delimiter(',')
        ->required();
    kernel->add_option("--p", p_coords, "second point, 4(n+1) comma-separated coordinates")
        ->delimiter(',')
        ->required();
    kernel->add_option("--normalization", normalization,
                       "exact | empirical | unnormalized")
        ->capture_default_str();
    kernel->add_option("--rel-tol", spec.target_rel_tol, "quadrature relative tolerance")
        ->capture_default_str();
    kernel->add_option("--radial-nodes", spec.radial_nodes, "quadrature nodes per axis")
        ->capture_default_str();
    add_common(kernel);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--n", n, "kernel order")->capture_default_str();
    verify
        ->add_option("--suite", suite,
                     "one of: regularity, invariance, ode, oracle, reproduce")
        ->required();
    verify->add_option("--seed", seed, "seed for the deterministic draw sequence")
        ->capture_default_str();
    verify->add_option("--rel-tol", spec.target_rel_tol, "quadrature relative tolerance")
        ->capture_default_str();
    verify->add_option("--radial-nodes", spec.radial_nodes, "quadrature nodes per axis")
        ->capture_default_str();
    verify->add_option("--mc-samples", spec.mc_samples, "Monte Carlo sample count")
        ->capture_default_str();
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        spec.seed = seed;
        if (constants->parsed()) return cmd_constants(n, mode);
        if (kernel->parsed()) {
            return cmd_kernel_eval(n, q_coords, p_coords, normalization, spec, mode);
        }
        if (verify->parsed()) return cmd_verify(n, suite, seed, spec, mode);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const qszego::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qszego::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
