#pragma once

#include "jamsim/linkmetrics.hpp"
#include "jamsim/theorems.hpp"

#include <array>
#include <deque>

namespace jamsim {

inline constexpr int kNumRoutes = 2;
inline constexpr int kNumMcs = 4;
inline constexpr int kNumStates = kNumRoutes * kNumMcs;

// State of the adaptive transmitter: which route it uses and which MCS.
struct MdpState {
    int route = 1;      // 1 or 2
    int mcs_index = 1;  // 1..4

    int index() const { return (route - 1) * kNumMcs + mcs_index; }  // 1..8

    static MdpState from_index(int idx) {
        if (idx < 1 || idx > kNumStates) {
            throw std::invalid_argument("MdpState: index out of range");
        }
        MdpState s;
        s.route = (idx - 1) / kNumMcs + 1;
        s.mcs_index = (idx - 1) % kNumMcs + 1;
        return s;
    }
};

// Discrete action grid: 20 energy levels per scheme, pilot split over the
// candidate burst lengths. Index layout: 1-20 barrage, then 20 per pilot
// length, then 20 ACK.
struct ActionSpace {
    int energy_levels = 20;
    double energy_step = 10.0;
    std::vector<int> pilot_lengths = {4, 16, 128, 512};

    int size() const { return energy_levels * (2 + static_cast<int>(pilot_lengths.size())); }

    JammingAction decode(int index) const {
        if (index < 1 || index > size()) {
            throw std::invalid_argument("ActionSpace: index out of range");
        }
        const int zero_based = index - 1;
        const int block = zero_based / energy_levels;
        const int level = zero_based % energy_levels + 1;
        JammingAction a;
        a.total_energy = energy_step * level;
        if (block == 0) {
            a.scheme = JamScheme::Barrage;
        } else if (block <= static_cast<int>(pilot_lengths.size())) {
            a.scheme = JamScheme::Pilot;
            a.assumed_pilot_len = pilot_lengths[static_cast<std::size_t>(block - 1)];
        } else {
            a.scheme = JamScheme::Ack;
        }
        return a;
    }

    int encode(JamScheme scheme, int level, int pilot_len = 0) const {
        int block = 0;
        if (scheme == JamScheme::Pilot) {
            auto it = std::find(pilot_lengths.begin(), pilot_lengths.end(), pilot_len);
            if (it == pilot_lengths.end()) {
                throw std::invalid_argument("ActionSpace: unknown pilot length");
            }
            block = 1 + static_cast<int>(it - pilot_lengths.begin());
        } else if (scheme == JamScheme::Ack) {
            block = 1 + static_cast<int>(pilot_lengths.size());
        } else if (scheme != JamScheme::Barrage) {
            throw std::invalid_argument("ActionSpace: scheme has no action block");
        }
        return block * energy_levels + level;
    }
};

// Tabular action-value store with per-pair visit counts. The effective
// learning rate is alpha / (1 + decay * visits), so alpha=1, decay=0
// reproduces the plain one-shot update.
struct QTable {
    int states = kNumStates;
    int actions = 120;
    double alpha = 0.1;
    double beta = 0.9;
    double visit_decay_power = 1.0;  // 0 disables the decay
    std::vector<double> values;
    std::vector<long> visits;
    std::vector<long> state_visits;

    QTable(int states_, int actions_, double alpha_, double beta_)
        : states(states_), actions(actions_), alpha(alpha_), beta(beta_),
          values(static_cast<std::size_t>(states_) * actions_, 0.0),
          visits(static_cast<std::size_t>(states_) * actions_, 0),
          state_visits(static_cast<std::size_t>(states_), 0) {
        if (alpha <= 0.0 || alpha > 1.0) {
            throw std::invalid_argument("QTable: alpha must be in (0, 1]");
        }
        if (beta < 0.0 || beta >= 1.0) {
            throw std::invalid_argument("QTable: beta must be in [0, 1)");
        }
    }

    std::size_t at(int state, int action) const {
        if (state < 1 || state > states || action < 1 || action > actions) {
            throw std::invalid_argument("QTable: index out of range");
        }
        return static_cast<std::size_t>(state - 1) * actions + (action - 1);
    }

    double q(int state, int action) const { return values[at(state, action)]; }

    double max_q(int state) const {
        const std::size_t base = at(state, 1);
        double best = values[base];
        for (int a = 1; a < actions; ++a) {
            best = std::max(best, values[base + static_cast<std::size_t>(a)]);
        }
        return best;
    }

    // Greedy action; ties resolve to the lowest index.
    int argmax(int state) const {
        const std::size_t base = at(state, 1);
        int best = 1;
        double best_q = values[base];
        for (int a = 2; a <= actions; ++a) {
            const double q = values[base + static_cast<std::size_t>(a - 1)];
            if (q > best_q) {
                best_q = q;
                best = a;
            }
        }
        return best;
    }
};

// One Q-learning backup: Q(s,a) <- (1-a_eff) Q(s,a) + a_eff (r + beta max Q(s',.)).
inline void q_update(QTable& qt, int state, int action, double reward, int next_state) {
    const std::size_t idx = qt.at(state, action);
    const long n = qt.visits[idx];
    const double a_eff =
        qt.visit_decay_power == 0.0
            ? qt.alpha
            : qt.alpha / std::pow(1.0 + static_cast<double>(n), qt.visit_decay_power);
    const double target = reward + qt.beta * qt.max_q(next_state);
    qt.values[idx] = (1.0 - a_eff) * qt.values[idx] + a_eff * target;
    ++qt.visits[idx];
    ++qt.state_visits[static_cast<std::size_t>(state - 1)];
}

struct RewardConfig {
    double energy_price = 0.1;  // p, reward units per unit energy
};

// R(s, a) = packets lost - p * energy spent.
inline double reward(long packets_lost, const JammingAction& action,
                     const RewardConfig& cfg) {
    if (cfg.energy_price < 0.0) {
        throw std::invalid_argument("reward: price must be >= 0");
    }
    return static_cast<double>(packets_lost) - cfg.energy_price * action.total_energy;
}

// Semi-uniform baseline: exploit the greedy action with probability
// 1 - epsilon, otherwise draw uniformly from the whole action set.
inline int explore_semi_uniform(const QTable& qt, int state, double epsilon, Rng& rng) {
    if (epsilon < 0.0 || epsilon > 1.0) {
        throw std::invalid_argument("explore_semi_uniform: epsilon out of range");
    }
    if (canonical(rng) < epsilon) {
        return 1 + static_cast<int>(canonical(rng) * qt.actions) % qt.actions;
    }
    return qt.argmax(state);
}

// Belief over the hidden pilot length (and over the data-block length, which
// feeds the pilot-vs-barrage crossover test).
struct BeliefOverK {
    std::vector<int> k_support = {4, 16, 128, 512};
    std::vector<double> k_prob = {0.25, 0.25, 0.25, 0.25};
    std::vector<long> d_support = {122880};
    std::vector<double> d_prob = {1.0};

    void validate() const {
        auto check = [](const std::vector<double>& p) {
            double sum = 0.0;
            for (double v : p) {
                if (v < 0.0) throw std::invalid_argument("BeliefOverK: negative mass");
                sum += v;
            }
            if (std::abs(sum - 1.0) > 1e-9) {
                throw std::invalid_argument("BeliefOverK: probabilities must sum to 1");
            }
        };
        if (k_support.size() != k_prob.size() || d_support.size() != d_prob.size()) {
            throw std::invalid_argument("BeliefOverK: support/probability size mismatch");
        }
        check(k_prob);
        check(d_prob);
    }
};

// Running effectiveness baseline the belief update compares against.
struct BaselineStats {
    double mean = 0.0;
    long count = 0;
};

// Reweights the pilot-length belief from one jamming observation. A result
// clearly above the baseline reinforces the hypothesis K = T_p; a result
// clearly below it penalizes that hypothesis. Observations inside the margin
// leave the belief untouched.
inline void update_belief_K(BeliefOverK& belief, int chosen_pilot_len,
                            double observed_losses, const BaselineStats& baseline,
                            double eta = 0.1, double rel_margin = 0.25,
                            double abs_margin = 5.0) {
    belief.validate();
    if (baseline.count < 3) return;  // not enough history to call high/low
    const double margin = std::max(abs_margin, rel_margin * baseline.mean);
    const bool high = observed_losses > baseline.mean + margin;
    const bool low = observed_losses < baseline.mean - margin;
    if (!high && !low) return;
    double sum = 0.0;
    for (std::size_t i = 0; i < belief.k_support.size(); ++i) {
        const bool chosen = belief.k_support[i] == chosen_pilot_len;
        double w;
        if (high) {
            w = chosen ? (1.0 + eta) : 1.0 / (1.0 + eta);
        } else {
            w = chosen ? 1.0 / (1.0 + eta) : (1.0 + eta);
        }
        belief.k_prob[i] *= w;
        sum += belief.k_prob[i];
    }
    for (double& p : belief.k_prob) {
        p /= sum;
    }
}

// Proposal distribution of the enhanced exploration: probability of exploring
// barrage, and of exploring pilot jamming at each candidate burst length.
// Lengths above the crossover sqrt(D_max * M) are never proposed; their mass
// is exactly the barrage probability when D is known.
struct ExplorationProposal {
    double p_barrage = 0.0;
    std::vector<double> p_pilot;  // aligned with belief.k_support
};

inline ExplorationProposal exploration_proposal(const BeliefOverK& belief,
                                                int tx_antennas) {
    belief.validate();
    ExplorationProposal prop;
    prop.p_pilot.assign(belief.k_support.size(), 0.0);
    long d_max = 1;
    for (long d : belief.d_support) d_max = std::max(d_max, d);
    const double limit = thm1_crossover(d_max, tx_antennas);

    // P_b = sum_d P{D=d} P{k > sqrt(d M)}.
    for (std::size_t di = 0; di < belief.d_support.size(); ++di) {
        const double crossover = thm1_crossover(belief.d_support[di], tx_antennas);
        for (std::size_t ki = 0; ki < belief.k_support.size(); ++ki) {
            if (static_cast<double>(belief.k_support[ki]) > crossover) {
                prop.p_barrage += belief.d_prob[di] * belief.k_prob[ki];
            }
        }
    }
    double legal_mass = 0.0;
    for (std::size_t ki = 0; ki < belief.k_support.size(); ++ki) {
        if (static_cast<double>(belief.k_support[ki]) <= limit) {
            legal_mass += belief.k_prob[ki];
        }
    }
    const double pilot_total = 1.0 - prop.p_barrage;
    for (std::size_t ki = 0; ki < belief.k_support.size(); ++ki) {
        if (static_cast<double>(belief.k_support[ki]) <= limit && legal_mass > 0.0) {
            prop.p_pilot[ki] = pilot_total * belief.k_prob[ki] / legal_mass;
        }
    }
    if (legal_mass == 0.0) {
        prop.p_barrage = 1.0;  // nothing legal to propose on the pilot side
    }
    return prop;
}

// One draw of the theorem-enhanced exploration (Algorithm-1 style proposal):
// pick barrage or a pilot length from the belief-derived distribution, then
// switch to ACK jamming with probability epsilon when the relevant optimality
// condition holds for the current scenario. Energy levels draw uniformly.
// The exploit-vs-explore gate wraps this from the episode loop.
inline int explore_enhanced(const QTable&, int /*state*/, const BeliefOverK& belief,
                            ScenarioParams params, const ActionSpace& actions,
                            double epsilon, Rng& rng) {
    if (epsilon < 0.0 || epsilon > 1.0) {
        throw std::invalid_argument("explore_enhanced: epsilon out of range");
    }
    const ExplorationProposal prop = exploration_proposal(belief, params.tx_antennas);
    const double u = canonical(rng);
    JamScheme scheme;
    int pilot_len = 0;
    if (u < prop.p_barrage) {
        scheme = JamScheme::Barrage;
    } else {
        scheme = JamScheme::Pilot;
        double acc = prop.p_barrage;
        pilot_len = belief.k_support.back();
        for (std::size_t ki = 0; ki < prop.p_pilot.size(); ++ki) {
            acc += prop.p_pilot[ki];
            if (u < acc) {
                pilot_len = belief.k_support[ki];
                break;
            }
        }
    }
    if (scheme == JamScheme::Barrage) {
        if (thm3_ack_beats_barrage(params) && canonical(rng) < epsilon) {
            scheme = JamScheme::Ack;
        }
    } else {
        params.pilot_len = pilot_len;
        if (cond_ack_over_pilot_combined(params) && canonical(rng) < epsilon) {
            scheme = JamScheme::Ack;
        }
    }
    const int level = 1 + static_cast<int>(canonical(rng) * actions.energy_levels) %
                              actions.energy_levels;
    return actions.encode(scheme, level, pilot_len);
}

// Environment configuration for the learning scenario: two receivers with
// different jammer geometry, a hidden true pilot length, and the transmitter's
// adaptation rule.
struct EnvConfig {
    LinkConfig route1;
    LinkConfig route2;
    std::array<Mcs, kNumMcs> mcs_table = {mcs_bpsk(), mcs_qpsk(), mcs_qam16(), mcs_qam64()};
    Mcs ack_mcs = mcs_bpsk();
    int true_pilot_len = 128;   // hidden from the agent
    int packets_per_frame = 240;
    int packet_bits = 1024;
    int ack_len = 512;
    double lambda_max_mean = 3.5;
    int transition_period = 1000;  // forced state-transition cadence in steps
    double step_down_per = 0.1;
    double step_up_per = 0.01;
    int adapt_window_packets = 100;

    const LinkConfig& route(int r) const { return r == 1 ? route1 : route2; }
};

struct EnvStepResult {
    MdpState next_state;
    long packets_lost = 0;
    double energy_spent = 0.0;
};

// Analytic environment: expected SINR under the decoded action, PER model,
// binomial packet losses, and the transmitter's forced adaptation schedule.
class LearningEnv {
public:
    explicit LearningEnv(EnvConfig cfg) : cfg_(std::move(cfg)) {
        cfg_.route1.validate();
        cfg_.route2.validate();
        if (cfg_.true_pilot_len < 1 || cfg_.transition_period < 1) {
            throw std::invalid_argument("LearningEnv: invalid config");
        }
        for (int i = 0; i < kNumMcs; ++i) {
            const long total_bits =
                static_cast<long>(cfg_.packets_per_frame) * cfg_.packet_bits;
            const long denom = static_cast<long>(cfg_.mcs_table[i].bits_per_symbol) *
                               cfg_.route1.tx_antennas;
            if (total_bits % denom != 0) {
                throw std::invalid_argument("LearningEnv: frame bits do not fill slots");
            }
            data_len_[i] = total_bits / denom;
        }
    }

    const EnvConfig& config() const { return cfg_; }
    long data_len(int mcs_index) const { return data_len_[mcs_index - 1]; }
    long step_count() const { return step_; }

    // Effective per-pilot-symbol jamming energy given the burst length the
    // jammer assumed and the true pilot length: a matched burst concentrates
    // the whole budget on the estimation window; a mis-sized burst loses the
    // min/max overlap ratio (mis-timed coverage on the short side, dilution
    // on the long side).
    static double effective_pilot_energy(double total_energy, int assumed_len,
                                         int true_len, int jam_antennas) {
        const double overlap = static_cast<double>(std::min(assumed_len, true_len));
        const double span = static_cast<double>(std::max(assumed_len, true_len));
        return total_energy * overlap /
               (static_cast<double>(jam_antennas) * true_len * span);
    }

    EnvStepResult step(const MdpState& state, const JammingAction& action, Rng& rng) {
        action.validate();
        const LinkConfig& link = cfg_.route(state.route);
        const Mcs& data_mcs = cfg_.mcs_table[static_cast<std::size_t>(state.mcs_index - 1)];
        const long d = data_len_[state.mcs_index - 1];
        const double l = static_cast<double>(link.jam_antennas);
        const double k = static_cast<double>(cfg_.true_pilot_len);

        double e_jb = 0.0, e_jp = 0.0, e_ja = 0.0;
        switch (action.scheme) {
            case JamScheme::Barrage:
                e_jb = action.total_energy / (l * static_cast<double>(d));
                break;
            case JamScheme::Pilot:
                e_jp = effective_pilot_energy(action.total_energy, action.assumed_pilot_len,
                                              cfg_.true_pilot_len, link.jam_antennas);
                break;
            case JamScheme::Ack:
                e_ja = action.total_energy / (l * static_cast<double>(cfg_.ack_len));
                break;
            case JamScheme::None:
                break;
        }

        FramePlan plan;
        plan.pilot_len = cfg_.true_pilot_len;
        plan.data_len = d;
        plan.ack_len = cfg_.ack_len;
        plan.data_mcs = data_mcs;
        plan.ack_mcs = cfg_.ack_mcs;
        plan.packets_per_frame = cfg_.packets_per_frame;
        plan.packet_bits = cfg_.packet_bits;

        const JamScheme data_scheme =
            action.scheme == JamScheme::Pilot ? JamScheme::Pilot : JamScheme::Barrage;
        const double gamma_data =
            expected_sinr(data_scheme, link, plan, e_jb, e_jp, 0.0, cfg_.lambda_max_mean);
        const double gamma_ack =
            expected_sinr(JamScheme::Ack, link, plan, 0.0, e_jp, e_ja, cfg_.lambda_max_mean);
        const double per_data = per_model(gamma_data, data_mcs);
        const double per_ack = per_model(gamma_ack, cfg_.ack_mcs);

        const long lost_data = draw_binomial(cfg_.packets_per_frame, per_data, rng);
        const long delivered = cfg_.packets_per_frame - lost_data;
        const long lost_ack = draw_binomial(delivered, per_ack, rng);

        EnvStepResult result;
        result.packets_lost = lost_data + lost_ack;
        result.energy_spent = action.total_energy;

        // The transmitter counts unacknowledged packets; both loss modes look
        // the same from its side of the link.
        window_.push_back({result.packets_lost, cfg_.packets_per_frame});
        long window_total = 0;
        for (auto it = window_.rbegin(); it != window_.rend(); ++it) {
            window_total += it->second;
        }
        while (window_.size() > 1 &&
               window_total - window_.front().second >= cfg_.adapt_window_packets) {
            window_total -= window_.front().second;
            window_.pop_front();
        }

        ++step_;
        result.next_state = state;
        if (step_ % cfg_.transition_period == 0) {
            result.next_state.route = state.route == 1 ? 2 : 1;
            long lost = 0, total = 0;
            for (const auto& w : window_) {
                lost += w.first;
                total += w.second;
            }
            const double rate = total > 0 ? static_cast<double>(lost) /
                                                static_cast<double>(total)
                                          : 0.0;
            if (rate > cfg_.step_down_per) {
                result.next_state.mcs_index = std::max(1, state.mcs_index - 1);
            } else if (rate < cfg_.step_up_per) {
                result.next_state.mcs_index = std::min(kNumMcs, state.mcs_index + 1);
            }
        }
        return result;
    }

private:
    static long draw_binomial(long n, double p, Rng& rng) {
        if (p <= 0.0 || n <= 0) return 0;
        if (p >= 1.0) return n;
        long hits = 0;
        for (long i = 0; i < n; ++i) {
            if (canonical(rng) < p) ++hits;
        }
        return hits;
    }

    EnvConfig cfg_;
    std::array<long, kNumMcs> data_len_{};
    long step_ = 0;
    std::deque<std::pair<long, long>> window_;  // (lost, total) per step
};

enum class ExplorationMode { SemiUniform, Enhanced };

struct AgentConfig {
    ExplorationMode mode = ExplorationMode::Enhanced;
    double alpha = 0.1;
    double beta = 0.9;
    double epsilon_ack = 0.3;  // ACK-switch probability inside the proposal
    double eta = 0.1;          // belief reweighting strength
    RewardConfig reward_cfg;
    BeliefOverK initial_belief;
};

struct StepRecord {
    long step = 0;
    int state = 0;
    int action = 0;
    double reward = 0.0;
    double cum_reward = 0.0;
    int greedy_action = 0;
};

struct EpisodeResult {
    std::vector<StepRecord> trace;
    QTable q;
    BeliefOverK belief;

    EpisodeResult(int states, int actions, double alpha, double beta)
        : q(states, actions, alpha, beta) {}
};

// Runs one learning episode from the (route 1, highest MCS) start state.
// Deterministic given the seed.
inline EpisodeResult run_episode(LearningEnv env, const AgentConfig& agent,
                                 const ActionSpace& actions, long steps,
                                 std::uint64_t seed) {
    if (steps < 1) {
        throw std::invalid_argument("run_episode: steps must be >= 1");
    }
    Rng rng(stream_seed(seed, 0));
    EpisodeResult result(kNumStates, actions.size(), agent.alpha, agent.beta);
    result.belief = agent.initial_belief;
    result.belief.validate();
    result.trace.reserve(static_cast<std::size_t>(steps));

    std::array<BaselineStats, kNumStates> pilot_baseline{};
    MdpState state{1, kNumMcs};  // route 1, highest MCS
    double cum = 0.0;

    const EnvConfig& ecfg = env.config();
    for (long t = 0; t < steps; ++t) {
        const int s_idx = state.index();
        const double explore_prob =
            1.0 / (1.0 + static_cast<double>(
                             result.q.state_visits[static_cast<std::size_t>(s_idx - 1)]));

        int a_idx;
        if (agent.mode == ExplorationMode::SemiUniform) {
            a_idx = explore_semi_uniform(result.q, s_idx, explore_prob, rng);
        } else if (canonical(rng) < explore_prob) {
            ScenarioParams params;
            params.pilot_len = ecfg.true_pilot_len;  // overwritten per proposal
            params.data_len = env.data_len(state.mcs_index);
            params.ack_len = ecfg.ack_len;
            params.tx_antennas = ecfg.route(state.route).tx_antennas;
            params.rx_antennas = ecfg.route(state.route).rx_antennas;
            params.jam_antennas = ecfg.route(state.route).jam_antennas;
            params.theta_g = ecfg.route(state.route).theta_g;
            params.theta_f = ecfg.route(state.route).theta_f;
            params.gamma_th_data =
                ecfg.mcs_table[static_cast<std::size_t>(state.mcs_index - 1)].gamma_th;
            params.gamma_th_ack = ecfg.ack_mcs.gamma_th;
            params.lambda_max_mean = ecfg.lambda_max_mean;
            BeliefOverK belief_now = result.belief;
            belief_now.d_support = {env.data_len(state.mcs_index)};
            belief_now.d_prob = {1.0};
            a_idx = explore_enhanced(result.q, s_idx, belief_now, params, actions,
                                     agent.epsilon_ack, rng);
        } else {
            a_idx = result.q.argmax(s_idx);
        }

        const JammingAction action = actions.decode(a_idx);
        const EnvStepResult step = env.step(state, action, rng);
        const double r = reward(step.packets_lost, action, agent.reward_cfg);
        q_update(result.q, s_idx, a_idx, r, step.next_state.index());

        if (agent.mode == ExplorationMode::Enhanced &&
            action.scheme == JamScheme::Pilot) {
            BaselineStats& base = pilot_baseline[static_cast<std::size_t>(s_idx - 1)];
            update_belief_K(result.belief, action.assumed_pilot_len,
                            static_cast<double>(step.packets_lost), base, agent.eta);
            const double rate = 0.2;
            base.mean = base.count == 0
                            ? static_cast<double>(step.packets_lost)
                            : (1.0 - rate) * base.mean +
                                  rate * static_cast<double>(step.packets_lost);
            ++base.count;
        }

        cum += r;
        StepRecord rec;
        rec.step = t;
        rec.state = s_idx;
        rec.action = a_idx;
        rec.reward = r;
        rec.cum_reward = cum;
        rec.greedy_action = result.q.argmax(s_idx);
        result.trace.push_back(rec);
        state = step.next_state;
    }
    return result;
}

}  // namespace jamsim
