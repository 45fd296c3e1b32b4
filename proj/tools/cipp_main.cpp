#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cipp/config.hpp"
#include "cipp/errors.hpp"
#include "cipp/pipeline.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool closed_tour = false;
    std::string deposit_rule;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("config", args.config_path, "run configuration (JSON)")->required();
    cmd->add_option("--out", args.out_dir, "output directory (overrides config)");
    cmd->add_option("--seed", args.seed, "random seed (overrides config)");
    cmd->add_flag("--closed-tour", args.closed_tour, "close the path back to its start");
    cmd->add_option("--deposit-rule", args.deposit_rule, "pheromone deposit rule")
        ->check(CLI::IsMember({"edge", "tour"}));
}

cipp::RunConfig load_with_overrides(const CLI::App* cmd, const CommonArgs& args,
                                    cipp::RunMode mode) {
    cipp::RunConfig cfg = cipp::load_config(args.config_path);
    cfg.mode = mode;
    if (cmd->count("--out") > 0) cfg.output_dir = args.out_dir;
    if (cmd->count("--seed") > 0) cfg.aco.seed = args.seed;
    if (args.closed_tour) cfg.aco.closed_tour = true;
    if (cmd->count("--deposit-rule") > 0) {
        cfg.aco.deposit_rule = args.deposit_rule == "tour"
                                   ? cipp::DepositRule::TourInverseFitness
                                   : cipp::DepositRule::EdgeInverseCost;
    }
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-UAV formation inspection path planner"};
    app.require_subcommand(1);

    CommonArgs plan_args, compare_args, oracle_args;
    int n_seeds = 10;
    int max_m = 8;

    CLI::App* plan = app.add_subcommand("plan", "plan an inspection path and export artifacts");
    add_common(plan, plan_args);

    CLI::App* compare =
        app.add_subcommand("compare", "benchmark the planner against the back-and-forth baseline");
    add_common(compare, compare_args);
    compare->add_option("--seeds", n_seeds, "number of planner runs")->check(CLI::PositiveNumber);

    CLI::App* oracle =
        app.add_subcommand("oracle", "check the planner against exhaustive search on a small scene");
    add_common(oracle, oracle_args);
    oracle->add_option("--max-m", max_m, "largest instance to enumerate")
        ->check(CLI::Range(2, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (plan->parsed()) {
            const auto cfg = load_with_overrides(plan, plan_args, cipp::RunMode::Plan);
            const auto summary = cipp::run_plan(cfg);
            std::cout << "planned " << summary.viewpoint_count << " viewpoints across "
                      << summary.layer_count << " layers\n"
                      << "fitness " << summary.fitness << "\n"
                      << "artifacts in " << summary.output_dir.string() << "\n";
        } else if (compare->parsed()) {
            const auto cfg = load_with_overrides(compare, compare_args, cipp::RunMode::Compare);
            const auto summary = cipp::run_compare(cfg, n_seeds);
            std::cout << "baf fitness  " << summary.baf_fitness << "\n"
                      << "aco fitness  " << summary.aco_mean << " +/- " << summary.aco_std
                      << " over " << n_seeds << " seeds\n"
                      << "improvement  " << summary.improvement_percent << " %\n"
                      << "table in " << summary.output_csv.string() << "\n";
        } else if (oracle->parsed()) {
            const auto cfg = load_with_overrides(oracle, oracle_args, cipp::RunMode::Oracle);
            const auto summary = cipp::run_oracle(cfg, max_m);
            std::cout << "viewpoints     " << summary.viewpoint_count << "\n"
                      << "optimum        " << summary.optimum << " (" << summary.paths_evaluated
                      << " paths)\n"
                      << "aco fitness    " << summary.aco_fitness << "\n"
                      << "gap            " << summary.gap_percent << " %\n"
                      << "report in " << summary.output_json.string() << "\n";
        }
    } catch (const cipp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(cipp::ErrorKind::Pipeline);
    }
    return 0;
}
