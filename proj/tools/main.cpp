#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringstab/circulant.hpp"
#include "ringstab/equilibrium.hpp"
#include "ringstab/oracle.hpp"
#include "ringstab/special_functions.hpp"
#include "ringstab/stability.hpp"
#include "ringstab/verification.hpp"
#include "ringstab/version.hpp"

namespace {

using nlohmann::ordered_json;

// Numbers are serialized as decimal strings with 15 significant digits so
// output is byte-stable and diffable across runs and platforms.
std::string num15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

ordered_json num_list(const std::vector<double>& values) {
    ordered_json list = ordered_json::array();
    for (double v : values) list.push_back(num15(v));
    return list;
}

void emit(const std::string& command, const ordered_json& inputs, const ordered_json& results) {
    ordered_json record;
    record["command"] = command;
    record["inputs"] = inputs;
    record["results"] = results;
    record["version"] = ringstab::kVersion;
    std::cout << record.dump(2) << "\n";
}

ordered_json interval_json(const ringstab::RatioInterval& interval) {
    ordered_json results;
    switch (interval.kind) {
        case ringstab::IntervalKind::finite: results["kind"] = "finite"; break;
        case ringstab::IntervalKind::empty: results["kind"] = "empty"; break;
        case ringstab::IntervalKind::all_ratios: results["kind"] = "all_ratios"; break;
    }
    if (interval.kind == ringstab::IntervalKind::finite) {
        results["lo"] = num15(interval.lo);
        results["hi"] = num15(interval.hi);
    }
    results["stiffness"] = num15(interval.stiffness);
    results["cross"] = num15(interval.cross);
    results["coupling"] = num15(interval.coupling);
    results["linear_coeff"] = num15(interval.linear_coeff);
    results["discriminant"] = num15(interval.discriminant);
    return results;
}

int run_classify(int n, double ratio, double zero_tol, const std::string& ratio_text) {
    const ringstab::StabilityReport report = ringstab::classify_ring(n, ratio, zero_tol);
    ordered_json inputs;
    inputs["n"] = std::to_string(n);
    inputs["ratio"] = ratio_text;
    inputs["zero_tol"] = num15(zero_tol);
    ordered_json results;
    results["verdict"] = ringstab::to_string(report.verdict);
    results["zero_mode_count"] = report.zero_mode_count;
    results["eigenvalues"] = num_list(report.eigenvalues);
    ordered_json failed = ordered_json::array();
    for (int l : report.failed_conditions) failed.push_back(l);
    results["failed_conditions"] = failed;
    emit("classify", inputs, results);
    return 0;
}

int run_interval(int j) {
    const ringstab::RatioInterval interval = ringstab::stability_interval(j);
    ordered_json inputs;
    inputs["j"] = std::to_string(j);
    emit("interval", inputs, interval_json(interval));
    return 0;
}

int run_spectrum(int n, double ratio, double zero_tol, const std::string& ratio_text) {
    const ringstab::StabilityReport report = ringstab::classify_ring(n, ratio, zero_tol);
    const ringstab::RingConfiguration config =
        (n % 2 == 0) ? ringstab::RingConfiguration::alternating(n, std::sqrt(ratio),
                                                                1.0 / std::sqrt(ratio))
                     : ringstab::RingConfiguration::regular(n);
    const std::vector<double> dense =
        ringstab::oracle::jacobi_eigenvalues(ringstab::ring_hessian(config).dense);
    double deviation = 0.0;
    for (std::size_t i = 0; i < dense.size(); ++i)
        deviation = std::max(deviation, std::abs(dense[i] - report.eigenvalues[i]));
    ordered_json inputs;
    inputs["n"] = std::to_string(n);
    inputs["ratio"] = ratio_text;
    inputs["zero_tol"] = num15(zero_tol);
    ordered_json results;
    results["analytic"] = num_list(report.eigenvalues);
    results["oracle"] = num_list(dense);
    results["max_deviation"] = num15(deviation);
    emit("spectrum", inputs, results);
    return 0;
}

int run_rank(int n, double zero_tol) {
    const int rank = ringstab::equilibrium_matrix_rank(n, zero_tol);
    std::vector<double> modes(n);
    for (int l = 1; l <= n; ++l) modes[l - 1] = ringstab::equilibrium_mode(n, l);
    ordered_json inputs;
    inputs["n"] = std::to_string(n);
    inputs["zero_tol"] = num15(zero_tol);
    ordered_json results;
    results["rank"] = rank;
    results["mass_parameters"] = n - rank;
    results["f1"] = num_list(modes);
    emit("rank", inputs, results);
    return 0;
}

int run_fn_table(const std::string& fn, double from, double to, int points) {
    std::printf("phi,value\n");
    for (int i = 0; i < points; ++i) {
        const double phi =
            (points == 1) ? from : from + (to - from) * static_cast<double>(i) / (points - 1);
        const double value =
            (fn == "F") ? ringstab::force_kernel(phi) : ringstab::stiffness_kernel(phi);
        std::printf("%s,%s\n", num15(phi).c_str(), num15(value).c_str());
    }
    return 0;
}

int run_verify() {
    const std::vector<ringstab::selfcheck::CheckResult> results = ringstab::selfcheck::run_all();
    int failed = 0;
    ordered_json checks = ordered_json::array();
    for (const auto& r : results) {
        ordered_json entry;
        entry["name"] = r.name;
        entry["pass"] = r.pass;
        entry["detail"] = r.detail;
        checks.push_back(entry);
        if (!r.pass) ++failed;
    }
    ordered_json inputs = ordered_json::object();
    ordered_json summary;
    summary["checks"] = checks;
    summary["passed"] = static_cast<int>(results.size()) - failed;
    summary["failed"] = failed;
    emit("verify", inputs, summary);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear stability of co-orbital ring configurations"};
    app.set_version_flag("--version", ringstab::kVersion);
    app.require_subcommand(1);

    int classify_n = 0;
    double classify_ratio = 1.0;
    double classify_tol = 1e-9;
    std::string classify_ratio_text = "1";
    auto* classify = app.add_subcommand(
        "classify", "Classify linear stability of the regular n-gon ring");
    classify->add_option("--n", classify_n, "number of ring bodies (>= 3)")
        ->required()
        ->check(CLI::Range(3, 100000));
    classify->add_option("--ratio", classify_ratio, "mass ratio mu1/mu2 (default 1)")
        ->check(CLI::PositiveNumber);
    classify->add_option("--zero-tol", classify_tol,
                         "zero-eigenvalue tolerance relative to the spectral radius")
        ->check(CLI::PositiveNumber);

    int interval_j = 0;
    auto* interval = app.add_subcommand(
        "interval", "Mass-ratio interval guaranteeing stability of the 2j-gon ring");
    interval->add_option("--j", interval_j, "half the ring size (>= 2)")
        ->required()
        ->check(CLI::Range(2, 100000));

    int spectrum_n = 0;
    double spectrum_ratio = 1.0;
    double spectrum_tol = 1e-9;
    auto* spectrum = app.add_subcommand(
        "spectrum", "Hessian spectrum, analytic and via the dense Jacobi oracle");
    // The oracle side materializes the dense n x n Hessian, so this
    // subcommand is capped where the Jacobi sweep stays interactive.
    spectrum->add_option("--n", spectrum_n, "number of ring bodies (3..400)")
        ->required()
        ->check(CLI::Range(3, 400));
    spectrum->add_option("--ratio", spectrum_ratio, "mass ratio mu1/mu2 (default 1)")
        ->check(CLI::PositiveNumber);
    spectrum->add_option("--zero-tol", spectrum_tol,
                         "zero-eigenvalue tolerance relative to the spectral radius")
        ->check(CLI::PositiveNumber);

    int rank_n = 0;
    double rank_tol = 0.0;
    auto* rank = app.add_subcommand("rank", "Rank and mode table of the equilibrium matrix");
    rank->add_option("--n", rank_n, "number of ring bodies (>= 3)")
        ->required()
        ->check(CLI::Range(3, 100000));
    rank->add_option("--zero-tol", rank_tol, "zero-mode tolerance (default 1e-8 * n)")
        ->check(CLI::PositiveNumber);

    std::string table_fn;
    double table_from = 0.0;
    double table_to = 0.0;
    int table_points = 0;
    auto* table = app.add_subcommand("fn-table", "CSV table of the kernel functions");
    table->add_option("--fn", table_fn, "which kernel: F or f")
        ->required()
        ->check(CLI::IsMember({"F", "f"}));
    table->add_option("--from", table_from, "first angle, radians")->required();
    table->add_option("--to", table_to, "last angle, radians")->required();
    table->add_option("--points", table_points, "number of samples")
        ->required()
        ->check(CLI::Range(1, 10000000));

    auto* verify = app.add_subcommand("verify", "Run the full invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (classify->parsed()) {
            if (classify->count("--ratio") > 0)
                classify_ratio_text = classify->get_option("--ratio")->as<std::string>();
            return run_classify(classify_n, classify_ratio, classify_tol, classify_ratio_text);
        }
        if (interval->parsed()) return run_interval(interval_j);
        if (spectrum->parsed()) {
            const std::string ratio_text =
                spectrum->count("--ratio") > 0
                    ? spectrum->get_option("--ratio")->as<std::string>()
                    : "1";
            return run_spectrum(spectrum_n, spectrum_ratio, spectrum_tol, ratio_text);
        }
        if (rank->parsed()) {
            if (rank->count("--zero-tol") == 0) rank_tol = 1e-8 * rank_n;
            return run_rank(rank_n, rank_tol);
        }
        if (table->parsed()) return run_fn_table(table_fn, table_from, table_to, table_points);
        if (verify->parsed()) return run_verify();
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
