// Experiment runner: BER/PER sweeps, theorem checks and learning runs driven
// by a JSON config, with CSV outputs.

#include "jamsim/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "experiment config (JSON)")
        ->required();
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--seed", opts.seed, "master seed override")
        ->check(CLI::NonNegativeNumber)
        ->each([&opts](const std::string&) { opts.seed_set = true; });
    cmd->add_option("--threads", opts.threads, "worker threads")
        ->check(CLI::PositiveNumber);
}

jamsim::ExperimentConfig load(const CommonOpts& opts, jamsim::ExperimentMode expected) {
    jamsim::ExperimentConfig cfg = jamsim::load_config(opts.config_path);
    if (cfg.mode != expected) {
        throw std::invalid_argument("config mode does not match the subcommand");
    }
    if (opts.seed_set) cfg.seed = opts.seed;
    cfg.threads = opts.threads;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"link-level jamming simulator"};
    app.require_subcommand(1);

    CommonOpts sweep_opts, thm_opts, learn_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "run a BER sweep over the action grid");
    add_common(sweep, sweep_opts);
    CLI::App* theorems = app.add_subcommand("theorems", "evaluate optimality predicates");
    add_common(theorems, thm_opts);
    CLI::App* learn = app.add_subcommand("learn", "run paired learning episodes");
    add_common(learn, learn_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            const auto cfg = load(sweep_opts, jamsim::ExperimentMode::BerSweep);
            const auto result = jamsim::run_ber_sweep(cfg, sweep_opts.out_dir);
            std::cout << "wrote " << result.rows.size() << " rows to "
                      << result.csv_path << "\n";
        } else if (theorems->parsed()) {
            const auto cfg = load(thm_opts, jamsim::ExperimentMode::TheoremCheck);
            const auto result = jamsim::run_theorem_check(cfg, thm_opts.out_dir);
            std::cout << "wrote " << result.rows.size() << " rows to "
                      << result.csv_path << " (lambda_max_mean="
                      << result.lambda_max_mean << ")\n";
        } else if (learn->parsed()) {
            const auto cfg = load(learn_opts, jamsim::ExperimentMode::Learning);
            const auto result = jamsim::run_learning(cfg, learn_opts.out_dir);
            std::cout << "wrote " << result.summaries.size() << " seed summaries to "
                      << result.summary_path << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
