#pragma once

#include "jamsim/learning.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace jamsim {

using Json = nlohmann::json;

enum class ExperimentMode { BerSweep, TheoremCheck, Learning };

struct SweepConfig {
    std::vector<int> pilot_lengths = {4, 512};
    std::vector<JamScheme> schemes = {JamScheme::Barrage, JamScheme::Pilot};
    std::vector<double> energies = {5, 10, 15, 20};
    int assumed_pilot_len = 0;  // 0: jam exactly the plan's pilot length
    long frames_per_point = 2000;
};

struct TheoremCheckConfig {
    std::vector<int> k_grid = {4, 16, 128, 512};
    double lambda_max_mean = 0.0;  // 0: estimate offline below
    long lambda_trials = 20000;
    long sim_frames = 200;
    double unit_energy = 20.0;
};

struct LearningRunConfig {
    long steps = 4000;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    AgentConfig agent;
    EnvConfig env;
    ActionSpace actions;
};

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::BerSweep;
    LinkConfig link;
    int packets_per_frame = 24;
    int packet_bits = 1024;
    std::string data_mcs = "bpsk";
    std::string ack_mcs = "bpsk";
    int ack_len = 512;
    SweepConfig sweep;
    TheoremCheckConfig theorems;
    LearningRunConfig learning;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string config_hash;  // filled at load time

    FramePlan plan_for(int pilot_len) const {
        return make_frame_plan(pilot_len, packets_per_frame, packet_bits,
                               mcs_by_name(data_mcs), mcs_by_name(ack_mcs), ack_len,
                               link.tx_antennas);
    }
};

namespace detail {

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

template <typename T>
T get_or(const Json& j, const std::string& key, const T& fallback) {
    if (j.contains(key)) {
        return j.at(key).get<T>();
    }
    return fallback;
}

// Runs fn(0..count-1) on up to `threads` workers; output slots are indexed,
// so the result never depends on scheduling.
template <typename Fn>
void parallel_for(long count, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    const int workers = static_cast<int>(std::min<long>(threads, count));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace detail

inline LinkConfig link_from_json(const Json& j, LinkConfig base = {}) {
    base.tx_antennas = detail::get_or(j, "m", base.tx_antennas);
    base.rx_antennas = detail::get_or(j, "n", base.rx_antennas);
    base.jam_antennas = detail::get_or(j, "l", base.jam_antennas);
    base.theta_h = detail::get_or(j, "theta_h", base.theta_h);
    base.theta_g = detail::get_or(j, "theta_g", base.theta_g);
    base.theta_f = detail::get_or(j, "theta_f", base.theta_f);
    base.symbol_energy = detail::get_or(j, "symbol_energy", base.symbol_energy);
    base.noise_density = detail::get_or(j, "noise_density", base.noise_density);
    base.validate();
    return base;
}

// Parses a versioned experiment config. Unknown modes or malformed values
// raise invalid_argument with the offending field in the message.
inline ExperimentConfig parse_config(const Json& j) {
    if (!j.contains("schema") || j.at("schema").get<int>() != 1) {
        throw std::invalid_argument("config: missing or unsupported schema version");
    }
    ExperimentConfig cfg;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "ber_sweep") {
        cfg.mode = ExperimentMode::BerSweep;
    } else if (mode == "theorem_check") {
        cfg.mode = ExperimentMode::TheoremCheck;
    } else if (mode == "learning") {
        cfg.mode = ExperimentMode::Learning;
    } else {
        throw std::invalid_argument("config: unknown mode '" + mode + "'");
    }
    if (j.contains("link")) cfg.link = link_from_json(j.at("link"));
    if (j.contains("frame")) {
        const Json& f = j.at("frame");
        cfg.packets_per_frame = detail::get_or(f, "packets_per_frame", cfg.packets_per_frame);
        cfg.packet_bits = detail::get_or(f, "packet_bits", cfg.packet_bits);
        cfg.data_mcs = detail::get_or<std::string>(f, "data_mcs", cfg.data_mcs);
        cfg.ack_mcs = detail::get_or<std::string>(f, "ack_mcs", cfg.ack_mcs);
        cfg.ack_len = detail::get_or(f, "ack_len", cfg.ack_len);
    }
    cfg.seed = detail::get_or<std::uint64_t>(j, "seed", cfg.seed);

    if (j.contains("sweep")) {
        const Json& s = j.at("sweep");
        cfg.sweep.pilot_lengths =
            detail::get_or(s, "pilot_lengths", cfg.sweep.pilot_lengths);
        if (s.contains("schemes")) {
            cfg.sweep.schemes.clear();
            for (const auto& name : s.at("schemes")) {
                cfg.sweep.schemes.push_back(scheme_from_name(name.get<std::string>()));
            }
        }
        cfg.sweep.energies = detail::get_or(s, "energies", cfg.sweep.energies);
        cfg.sweep.assumed_pilot_len =
            detail::get_or(s, "assumed_pilot_len", cfg.sweep.assumed_pilot_len);
        cfg.sweep.frames_per_point =
            detail::get_or(s, "frames_per_point", cfg.sweep.frames_per_point);
        if (cfg.sweep.energies.empty() || cfg.sweep.pilot_lengths.empty() ||
            cfg.sweep.schemes.empty()) {
            throw std::invalid_argument("config: sweep grid must be non-empty");
        }
    }
    if (j.contains("theorems")) {
        const Json& t = j.at("theorems");
        cfg.theorems.k_grid = detail::get_or(t, "k_grid", cfg.theorems.k_grid);
        cfg.theorems.lambda_max_mean =
            detail::get_or(t, "lambda_max_mean", cfg.theorems.lambda_max_mean);
        cfg.theorems.lambda_trials =
            detail::get_or(t, "lambda_trials", cfg.theorems.lambda_trials);
        cfg.theorems.sim_frames = detail::get_or(t, "sim_frames", cfg.theorems.sim_frames);
        cfg.theorems.unit_energy = detail::get_or(t, "unit_energy", cfg.theorems.unit_energy);
    }
    if (j.contains("learning")) {
        const Json& l = j.at("learning");
        LearningRunConfig& run = cfg.learning;
        run.steps = detail::get_or<long>(l, "steps", run.steps);
        run.seeds = detail::get_or(l, "seeds", run.seeds);
        run.agent.alpha = detail::get_or(l, "alpha", run.agent.alpha);
        run.agent.beta = detail::get_or(l, "beta", run.agent.beta);
        run.agent.epsilon_ack = detail::get_or(l, "epsilon_ack", run.agent.epsilon_ack);
        run.agent.eta = detail::get_or(l, "eta", run.agent.eta);
        run.agent.reward_cfg.energy_price =
            detail::get_or(l, "energy_price", run.agent.reward_cfg.energy_price);
        run.env.true_pilot_len = detail::get_or(l, "true_pilot_len", run.env.true_pilot_len);
        run.env.transition_period =
            detail::get_or(l, "transition_period", run.env.transition_period);
        run.env.lambda_max_mean =
            detail::get_or(l, "lambda_max_mean", run.env.lambda_max_mean);
        run.env.packets_per_frame = cfg.packets_per_frame;
        run.env.packet_bits = cfg.packet_bits;
        run.env.ack_len = cfg.ack_len;
        run.env.route1 = cfg.link;
        run.env.route2 = cfg.link;
        if (l.contains("route1")) run.env.route1 = link_from_json(l.at("route1"), cfg.link);
        if (l.contains("route2")) run.env.route2 = link_from_json(l.at("route2"), cfg.link);
        run.actions.pilot_lengths =
            detail::get_or(l, "pilot_lengths", run.actions.pilot_lengths);
        run.actions.energy_levels =
            detail::get_or(l, "energy_levels", run.actions.energy_levels);
        run.actions.energy_step = detail::get_or(l, "energy_step", run.actions.energy_step);
        run.agent.initial_belief.k_support = run.actions.pilot_lengths;
        run.agent.initial_belief.k_prob.assign(
            run.actions.pilot_lengths.size(),
            1.0 / static_cast<double>(run.actions.pilot_lengths.size()));
        if (run.seeds.empty()) {
            throw std::invalid_argument("config: learning.seeds must be non-empty");
        }
    }
    Json canonical = j;
    cfg.config_hash = detail::fnv1a_hex(canonical.dump());
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

// ---------------------------------------------------------------------------
// BER sweep
// ---------------------------------------------------------------------------

struct SweepRow {
    int pilot_len = 0;
    JamScheme scheme = JamScheme::None;
    double energy = 0.0;
    int assumed_pilot_len = 0;
    std::string target;  // "data" or "ack"
    BerCi ber;
    long flagged_frames = 0;
    long frames = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::string csv_path;
};

inline SweepResult run_ber_sweep(const ExperimentConfig& cfg, const std::string& out_dir) {
    if (cfg.mode != ExperimentMode::BerSweep) {
        throw std::invalid_argument("run_ber_sweep: config mode is not ber_sweep");
    }
    struct Point {
        int k;
        JamScheme scheme;
        double energy;
        int t_p;
    };
    std::vector<Point> grid;
    for (int k : cfg.sweep.pilot_lengths) {
        for (JamScheme scheme : cfg.sweep.schemes) {
            for (double e : cfg.sweep.energies) {
                Point p;
                p.k = k;
                p.scheme = scheme;
                p.energy = e;
                p.t_p = scheme == JamScheme::Pilot
                            ? (cfg.sweep.assumed_pilot_len > 0 ? cfg.sweep.assumed_pilot_len : k)
                            : 0;
                grid.push_back(p);
            }
        }
    }
    std::vector<BerEstimate> estimates(grid.size());
    detail::parallel_for(static_cast<long>(grid.size()), cfg.threads, [&](long i) {
        const Point& p = grid[static_cast<std::size_t>(i)];
        const FramePlan plan = cfg.plan_for(p.k);
        JammingAction action;
        action.scheme = p.scheme;
        action.total_energy = p.energy;
        action.assumed_pilot_len = p.t_p;
        estimates[static_cast<std::size_t>(i)] =
            estimate_ber(cfg.link, plan, action, cfg.sweep.frames_per_point,
                         stream_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    });

    SweepResult result;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Point& p = grid[i];
        const BerEstimate& est = estimates[i];
        for (const std::string& target : {std::string("data"), std::string("ack")}) {
            SweepRow row;
            row.pilot_len = p.k;
            row.scheme = p.scheme;
            row.energy = p.energy;
            row.assumed_pilot_len = p.t_p;
            row.target = target;
            row.ber = target == "data" ? est.data : est.ack;
            row.flagged_frames = est.flagged_frames;
            row.frames = est.frames;
            result.rows.push_back(row);
        }
    }

    std::filesystem::create_directories(out_dir);
    result.csv_path = (std::filesystem::path(out_dir) / "sweep.csv").string();
    std::ofstream out(result.csv_path, std::ios::binary);
    out << "config_hash,seed,pilot_len,scheme,energy,assumed_pilot_len,target,"
           "ber,ci95,bits,bit_errors,flagged_frames,frames\n";
    for (const SweepRow& r : result.rows) {
        out << cfg.config_hash << ',' << cfg.seed << ',' << r.pilot_len << ','
            << scheme_name(r.scheme) << ',' << detail::fmt(r.energy) << ','
            << r.assumed_pilot_len << ',' << r.target << ',' << detail::fmt(r.ber.ber)
            << ',' << detail::fmt(r.ber.ci95) << ',' << r.ber.bits << ','
            << r.ber.bit_errors << ',' << r.flagged_frames << ',' << r.frames << '\n';
    }
    return result;
}

// ---------------------------------------------------------------------------
// Theorem check
// ---------------------------------------------------------------------------

struct TheoremRow {
    std::string predicate;
    int pilot_len = 0;
    bool verdict = false;
    double sim_a = 0.0;  // metric for the predicate's "winner if true" side
    double sim_b = 0.0;
    bool simulated_ordering = false;
    bool agree = false;
};

struct TheoremResult {
    std::vector<TheoremRow> rows;
    double lambda_max_mean = 0.0;
    std::string csv_path;
};

inline TheoremResult run_theorem_check(const ExperimentConfig& cfg,
                                       const std::string& out_dir) {
    if (cfg.mode != ExperimentMode::TheoremCheck) {
        throw std::invalid_argument("run_theorem_check: config mode is not theorem_check");
    }
    TheoremResult result;
    result.lambda_max_mean = cfg.theorems.lambda_max_mean;
    if (result.lambda_max_mean <= 0.0) {
        LinkConfig unit = cfg.link;
        unit.theta_h = 1.0;
        Rng rng(stream_seed(cfg.seed, 0xabcdef));
        result.lambda_max_mean =
            estimate_expected_lambda_max(unit, cfg.theorems.lambda_trials, rng);
    }
    const Mcs data_mcs = mcs_by_name(cfg.data_mcs);
    const Mcs ack_mcs = mcs_by_name(cfg.ack_mcs);

    struct KCase {
        int k;
        BerEstimate barrage, pilot, ack;
    };
    std::vector<KCase> cases(cfg.theorems.k_grid.size());
    detail::parallel_for(static_cast<long>(cases.size()), cfg.threads, [&](long i) {
        KCase& c = cases[static_cast<std::size_t>(i)];
        c.k = cfg.theorems.k_grid[static_cast<std::size_t>(i)];
        const FramePlan plan = cfg.plan_for(c.k);
        JammingAction a;
        a.total_energy = cfg.theorems.unit_energy;
        a.scheme = JamScheme::Barrage;
        c.barrage = estimate_ber(cfg.link, plan, a, cfg.theorems.sim_frames,
                                 stream_seed(cfg.seed, 3 * i + 1));
        a.scheme = JamScheme::Pilot;
        a.assumed_pilot_len = c.k;
        c.pilot = estimate_ber(cfg.link, plan, a, cfg.theorems.sim_frames,
                               stream_seed(cfg.seed, 3 * i + 2));
        a.scheme = JamScheme::Ack;
        a.assumed_pilot_len = 0;
        c.ack = estimate_ber(cfg.link, plan, a, cfg.theorems.sim_frames,
                             stream_seed(cfg.seed, 3 * i + 3));
    });

    for (const KCase& c : cases) {
        const FramePlan plan = cfg.plan_for(c.k);
        ScenarioParams p;
        p.pilot_len = c.k;
        p.data_len = plan.data_len;
        p.ack_len = cfg.ack_len;
        p.tx_antennas = cfg.link.tx_antennas;
        p.rx_antennas = cfg.link.rx_antennas;
        p.jam_antennas = cfg.link.jam_antennas;
        p.theta_g = cfg.link.theta_g;
        p.theta_f = cfg.link.theta_f;
        p.gamma_th_data = data_mcs.gamma_th;
        p.gamma_th_ack = ack_mcs.gamma_th;
        p.lambda_max_mean = result.lambda_max_mean;

        {
            TheoremRow r;
            r.predicate = "thm1_pilot_beats_barrage";
            r.pilot_len = c.k;
            r.verdict = thm1_pilot_beats_barrage(c.k, plan.data_len, p.tx_antennas);
            r.sim_a = c.pilot.data.ber;
            r.sim_b = c.barrage.data.ber;
            r.simulated_ordering = r.sim_a > r.sim_b;
            r.agree = r.verdict == r.simulated_ordering;
            result.rows.push_back(r);
        }
        {
            TheoremRow r;
            r.predicate = "thm2_pilot_beats_ack_on_ack";
            r.pilot_len = c.k;
            r.verdict = thm2_pilot_beats_ack_on_ack(cfg.ack_len, c.k, p.theta_g,
                                                    p.theta_f, p.jam_antennas,
                                                    p.rx_antennas);
            r.sim_a = c.pilot.ack.ber;
            r.sim_b = c.ack.ack.ber;
            r.simulated_ordering = r.sim_a > r.sim_b;
            r.agree = r.verdict == r.simulated_ordering;
            result.rows.push_back(r);
        }
        {
            TheoremRow r;
            r.predicate = "thm3_ack_beats_barrage";
            r.pilot_len = c.k;
            r.verdict = thm3_ack_beats_barrage(p);
            r.sim_a = c.ack.ack.ber;
            r.sim_b = c.barrage.data.ber;
            r.simulated_ordering = r.sim_a > r.sim_b;
            r.agree = r.verdict == r.simulated_ordering;
            result.rows.push_back(r);
        }
        {
            TheoremRow r;
            r.predicate = "thm3_ack_beats_pilot";
            r.pilot_len = c.k;
            r.verdict = thm3_ack_beats_pilot(p);
            r.sim_a = c.ack.ack.ber;
            r.sim_b = c.pilot.data.ber;
            r.simulated_ordering = r.sim_a > r.sim_b;
            r.agree = r.verdict == r.simulated_ordering;
            result.rows.push_back(r);
        }
        {
            TheoremRow r;
            r.predicate = "cond_ack_over_pilot_combined";
            r.pilot_len = c.k;
            r.verdict = cond_ack_over_pilot_combined(p);
            r.sim_a = c.ack.ack.ber;
            r.sim_b = std::max(c.pilot.data.ber, c.pilot.ack.ber);
            r.simulated_ordering = r.sim_a > r.sim_b;
            r.agree = r.verdict == r.simulated_ordering;
            result.rows.push_back(r);
        }
    }

    std::filesystem::create_directories(out_dir);
    result.csv_path = (std::filesystem::path(out_dir) / "theorems.csv").string();
    std::ofstream out(result.csv_path, std::ios::binary);
    out << "config_hash,seed,predicate,pilot_len,lambda_max_mean,verdict,sim_a,sim_b,"
           "simulated_ordering,agree\n";
    for (const TheoremRow& r : result.rows) {
        out << cfg.config_hash << ',' << cfg.seed << ',' << r.predicate << ','
            << r.pilot_len << ',' << detail::fmt(result.lambda_max_mean) << ','
            << (r.verdict ? 1 : 0) << ',' << detail::fmt(r.sim_a) << ','
            << detail::fmt(r.sim_b) << ',' << (r.simulated_ordering ? 1 : 0) << ','
            << (r.agree ? 1 : 0) << '\n';
    }
    return result;
}

// ---------------------------------------------------------------------------
// Learning runs
// ---------------------------------------------------------------------------

struct LearningSeedSummary {
    std::uint64_t seed = 0;
    double cum_reward_enhanced = 0.0;
    double cum_reward_semiuniform = 0.0;
    long fluctuations_enhanced = 0;    // greedy-action changes before step 2000
    long fluctuations_semiuniform = 0;
    int initial_state = 0;
    int state_after_transition = 0;
    int greedy_initial_enhanced = 0;   // greedy action at the initial state, end of run
    int greedy_route2_enhanced = 0;    // greedy action at the first route-2 state
};

struct LearningResult {
    std::vector<LearningSeedSummary> summaries;
    std::string trace_path;
    std::string best_path;
    std::string summary_path;
};

inline long count_fluctuations(const std::vector<StepRecord>& trace, long before_step) {
    long count = 0;
    for (std::size_t t = 1; t < trace.size() &&
                            trace[t].step < before_step; ++t) {
        if (trace[t].greedy_action != trace[t - 1].greedy_action) ++count;
    }
    return count;
}

inline LearningResult run_learning(const ExperimentConfig& cfg, const std::string& out_dir) {
    if (cfg.mode != ExperimentMode::Learning) {
        throw std::invalid_argument("run_learning: config mode is not learning");
    }
    const LearningRunConfig& run = cfg.learning;
    struct PairResult {
        std::vector<StepRecord> enhanced;
        std::vector<StepRecord> semi;
        LearningSeedSummary summary;
    };
    std::vector<PairResult> pairs(run.seeds.size());
    detail::parallel_for(static_cast<long>(run.seeds.size()), cfg.threads, [&](long i) {
        PairResult& pr = pairs[static_cast<std::size_t>(i)];
        const std::uint64_t seed = run.seeds[static_cast<std::size_t>(i)];
        AgentConfig enhanced = run.agent;
        enhanced.mode = ExplorationMode::Enhanced;
        AgentConfig semi = run.agent;
        semi.mode = ExplorationMode::SemiUniform;
        EpisodeResult er = run_episode(LearningEnv(run.env), enhanced, run.actions,
                                       run.steps, seed);
        EpisodeResult sr = run_episode(LearningEnv(run.env), semi, run.actions,
                                       run.steps, seed);
        LearningSeedSummary& s = pr.summary;
        s.seed = seed;
        s.cum_reward_enhanced = er.trace.back().cum_reward;
        s.cum_reward_semiuniform = sr.trace.back().cum_reward;
        s.fluctuations_enhanced = count_fluctuations(er.trace, 2000);
        s.fluctuations_semiuniform = count_fluctuations(sr.trace, 2000);
        s.initial_state = er.trace.front().state;
        const long boundary = std::min<long>(run.env.transition_period,
                                             static_cast<long>(er.trace.size()) - 1);
        s.state_after_transition = er.trace[static_cast<std::size_t>(boundary)].state;
        s.greedy_initial_enhanced = er.q.argmax(s.initial_state);
        s.greedy_route2_enhanced = er.q.argmax(s.state_after_transition);
        pr.enhanced = std::move(er.trace);
        pr.semi = std::move(sr.trace);
    });

    std::filesystem::create_directories(out_dir);
    LearningResult result;
    result.trace_path = (std::filesystem::path(out_dir) / "learn_trace.csv").string();
    result.best_path = (std::filesystem::path(out_dir) / "learn_best_action.csv").string();
    result.summary_path = (std::filesystem::path(out_dir) / "learn_summary.csv").string();

    std::ofstream trace(result.trace_path, std::ios::binary);
    trace << "config_hash,seed,step,state_enhanced,action_enhanced,reward_enhanced,"
             "cum_reward_enhanced,state_semiuniform,action_semiuniform,"
             "reward_semiuniform,cum_reward_semiuniform\n";
    std::ofstream best(result.best_path, std::ios::binary);
    best << "config_hash,seed,step,best_action_enhanced,best_action_semiuniform\n";
    for (const PairResult& pr : pairs) {
        for (std::size_t t = 0; t < pr.enhanced.size(); ++t) {
            const StepRecord& e = pr.enhanced[t];
            const StepRecord& u = pr.semi[t];
            trace << cfg.config_hash << ',' << pr.summary.seed << ',' << e.step << ','
                  << e.state << ',' << e.action << ',' << detail::fmt(e.reward) << ','
                  << detail::fmt(e.cum_reward) << ',' << u.state << ',' << u.action
                  << ',' << detail::fmt(u.reward) << ',' << detail::fmt(u.cum_reward)
                  << '\n';
            best << cfg.config_hash << ',' << pr.summary.seed << ',' << e.step << ','
                 << e.greedy_action << ',' << u.greedy_action << '\n';
        }
        result.summaries.push_back(pr.summary);
    }
    std::ofstream summary(result.summary_path, std::ios::binary);
    summary << "config_hash,seed,cum_reward_enhanced,cum_reward_semiuniform,"
               "fluctuations_enhanced,fluctuations_semiuniform,initial_state,"
               "state_after_transition,greedy_initial_enhanced,greedy_route2_enhanced\n";
    for (const LearningSeedSummary& s : result.summaries) {
        summary << cfg.config_hash << ',' << s.seed << ','
                << detail::fmt(s.cum_reward_enhanced) << ','
                << detail::fmt(s.cum_reward_semiuniform) << ','
                << s.fluctuations_enhanced << ',' << s.fluctuations_semiuniform << ','
                << s.initial_state << ',' << s.state_after_transition << ','
                << s.greedy_initial_enhanced << ',' << s.greedy_route2_enhanced << '\n';
    }
    return result;
}

}  // namespace jamsim
