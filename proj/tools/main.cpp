#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "accretive/catalog.hpp"
#include "accretive/io.hpp"
#include "accretive/numrad.hpp"
#include "accretive/rng.hpp"
#include "accretive/sweep.hpp"
#include "accretive/window_solver.hpp"

namespace {

using namespace accretive;

int exit_code_for(const Verdict& vd) {
    switch (vd.outcome()) {
        case Outcome::Pass: return 0;
        case Outcome::Fail: return 1;
        case Outcome::HypothesisNotMet: return 2;
    }
    return 3;
}

struct CheckArgs {
    std::string case_id;
    std::string matrix_path;
    std::string matrix_b_path;
    std::string instance_path;
    std::vector<double> window;
    std::vector<double> window_b;
    std::optional<double> t;
    std::string map_kind;
    uint64_t seed = 0x5EEDULL;
    int dim = 2;
    bool replay = false;
};

int run_check(const CheckArgs& args, const SweepSettings& settings) {
    Verdict vd;
    if (!args.instance_path.empty()) {
        vd = run_instance(read_instance_file(args.instance_path), settings);
    } else if (!args.matrix_path.empty()) {
        Instance inst;
        inst.case_id = args.case_id;
        inst.seed = args.seed;
        inst.matrix = read_matrix_file(args.matrix_path);
        if (!args.matrix_b_path.empty()) inst.matrix_b = read_matrix_file(args.matrix_b_path);
        if (!args.window.empty()) inst.window = Window(args.window.at(0), args.window.at(1));
        if (!args.window_b.empty()) inst.window_b = Window(args.window_b.at(0), args.window_b.at(1));
        if (args.t) inst.t = *args.t;
        if (args.map_kind == "trace") inst.map = PositiveMapSpec::normalized_trace();
        vd = run_instance(inst, settings);
    } else {
        // Replay one registry trial from its seed, e.g. straight out of a
        // sweep fail file or an argmin_seed field.
        const CaseInfo* info = find_case(args.case_id);
        if (info == nullptr) {
            std::cerr << "unknown case id: " << args.case_id << "\n";
            return 3;
        }
        SplitMix64 rng(args.seed);
        vd = info->run_trial(rng, args.dim, settings);
    }
    std::cout << verdict_to_json(vd) << "\n";
    std::cerr << vd.case_id << ": " << outcome_name(vd.outcome())
              << " slack_norm=" << vd.slack_norm << "\n";
    return exit_code_for(vd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Accretive transform toolkit: window feasibility, certified numerical "
                 "radius, and a catalog of operator inequality checks"};
    app.require_subcommand(1);

    SweepSettings settings;

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "Evaluate one catalog case");
    check->add_option("--case", check_args.case_id, "case id, see `sweep --list`");
    check->add_option("--matrix", check_args.matrix_path, "matrix JSON file for A");
    check->add_option("--matrix-b", check_args.matrix_b_path, "matrix JSON file for B");
    check->add_option("--instance", check_args.instance_path, "instance JSON file (overrides other inputs)");
    check->add_option("--window", check_args.window, "window as two values: m M")->expected(2);
    check->add_option("--window-b", check_args.window_b, "second window: n N")->expected(2);
    double t_value = 0.0;
    CLI::Option* t_opt = check->add_option("--t", t_value, "trade parameter / alpha where used");
    check->add_option("--map", check_args.map_kind, "positive map kind (trace)")
        ->check(CLI::IsMember({"trace", ""}));
    check->add_option("--seed", check_args.seed, "trial seed for registry replay");
    check->add_option("--dim", check_args.dim, "dimension for registry replay");
    check->add_option("--tol", settings.tol.rel, "relative tolerance");
    check->add_option("--eps", settings.eps, "radius enclosure width");

    SweepConfig sweep_config;
    std::string sweep_out, sweep_csv;
    std::string dims_csv;
    bool list_cases = false;
    CLI::App* sweep = app.add_subcommand("sweep", "Run randomized trials over the catalog");
    sweep->add_option("--seed", sweep_config.master_seed, "master seed");
    sweep->add_option("--trials", sweep_config.trials, "trials per case");
    sweep->add_option("--dims", dims_csv, "comma-separated dimensions (default 2,3,4,5,6)");
    sweep->add_option("--case", sweep_config.case_filter, "substring filter on case ids");
    sweep->add_option("--out", sweep_out, "write the JSON report here (default stdout)");
    sweep->add_option("--csv", sweep_csv, "also write a CSV summary here");
    sweep->add_option("--fill", sweep_config.settings.fill, "generator fill factor in (0,1]");
    sweep->add_option("--tol", sweep_config.settings.tol.rel, "relative tolerance");
    sweep->add_option("--eps", sweep_config.settings.eps, "radius enclosure width");
    sweep->add_option("--threads", sweep_config.threads, "worker threads (report is identical)");
    sweep->add_option("--fail-dir", sweep_config.fail_dir, "dump failing trials here");
    sweep->add_flag("--list", list_cases, "list case ids and exit");

    std::string win_matrix, win_variant = "A", win_objective = "kantorovich";
    double win_pad = 1e-6;
    CLI::App* window = app.add_subcommand("window", "Search the optimal feasible window");
    window->add_option("--matrix", win_matrix, "matrix JSON file")->required();
    window->add_option("--variant", win_variant, "hypothesis image: A iAstar iA Ainv absA absIAstar");
    window->add_option("--pad", win_pad, "relative padding of the reported radius");
    window->add_option("--objective", win_objective, "kantorovich | width")
        ->check(CLI::IsMember({"kantorovich", "width"}));
    window->add_option("--tol", settings.tol.rel, "relative tolerance");

    std::string rad_matrix;
    double rad_eps = 1e-8;
    CLI::App* radius = app.add_subcommand("radius", "Certified numerical radius enclosure");
    radius->add_option("--matrix", rad_matrix, "matrix JSON file")->required();
    radius->add_option("--eps", rad_eps, "enclosure width relative to max(1, ||A||)");

    std::string range_matrix;
    int range_count = 256;
    CLI::App* range = app.add_subcommand("range", "Numerical range boundary samples as CSV");
    range->add_option("--matrix", range_matrix, "matrix JSON file")->required();
    range->add_option("--count", range_count, "number of samples");

    CLI::App* demo = app.add_subcommand("demo", "Recompute the fixed worked examples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            if (*t_opt) check_args.t = t_value;
            return run_check(check_args, settings);
        }
        if (sweep->parsed()) {
            if (list_cases) {
                for (const CaseInfo& info : catalog_registry())
                    std::cout << info.id << "  " << info.description << "\n";
                return 0;
            }
            if (!dims_csv.empty()) {
                sweep_config.dims.clear();
                std::string token;
                for (const char c : dims_csv + ",") {
                    if (c == ',') {
                        if (!token.empty()) sweep_config.dims.push_back(std::stoi(token));
                        token.clear();
                    } else {
                        token += c;
                    }
                }
            }
            const SweepReport report = run_sweep(sweep_config);
            const std::string body = report_to_json(report);
            if (sweep_out.empty()) std::cout << body;
            else write_text_file(sweep_out, body);
            if (!sweep_csv.empty()) write_text_file(sweep_csv, report_to_csv(report));
            std::fprintf(stderr, "%zu cases, %d total failures, %.1fs\n", report.cases.size(),
                         report.total_fail, report.elapsed_seconds);
            return report.total_fail == 0 ? 0 : 1;
        }
        if (window->parsed()) {
            const Matrix a = read_matrix_file(win_matrix);
            const WindowObjective obj = win_objective == "width" ? WindowObjective::Width
                                                                 : WindowObjective::Kantorovich;
            const WindowSearchResult res =
                optimal_window(a, parse_variant(win_variant), win_pad, settings.tol, obj);
            std::cout << window_result_to_json(res) << "\n";
            if (res.status == WindowStatus::Ok) return 0;
            return res.status == WindowStatus::Degenerate ? 2 : 1;
        }
        if (radius->parsed()) {
            const Enclosure enc = numerical_radius(read_matrix_file(rad_matrix), rad_eps);
            std::cout << enclosure_to_json(enc) << "\n";
            return 0;
        }
        if (range->parsed()) {
            std::cout << range_to_csv(range_samples(read_matrix_file(range_matrix), range_count));
            return 0;
        }
        if (demo->parsed()) {
            const DemoReport rep = demo_examples();
            std::cout << demo_report_to_json(rep);
            return rep.all_ok ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
    return 3;
}
