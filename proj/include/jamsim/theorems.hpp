#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jamsim {

// Scenario inputs the optimality conditions operate on. lambda_max_mean is
// the unit-path-loss mean of the largest eigenvalue of (H^T)^H H^T, computed
// offline (see channel::estimate_expected_lambda_max).
struct ScenarioParams {
    long pilot_len = 4;      // K
    long data_len = 122880;  // D
    long ack_len = 512;      // A
    int tx_antennas = 2;     // M
    int rx_antennas = 2;     // N
    int jam_antennas = 2;    // L
    double theta_g = 1.0;
    double theta_f = 1.0;
    double gamma_th_data = 1.0;
    double gamma_th_ack = 1.0;
    double lambda_max_mean = 3.5;

    void validate() const {
        if (pilot_len < 1 || data_len < 1 || ack_len < 1 || tx_antennas < 1 ||
            rx_antennas < 1 || jam_antennas < 1 || theta_g <= 0.0 || theta_f <= 0.0 ||
            gamma_th_data <= 0.0 || gamma_th_ack <= 0.0 || lambda_max_mean <= 0.0) {
            throw std::invalid_argument("ScenarioParams: all fields must be positive");
        }
    }
};

// Per unit energy, pilot jamming drives the data SINR below barrage jamming
// exactly when K < sqrt(D*M).
inline bool thm1_pilot_beats_barrage(long pilot_len, long data_len, int tx_antennas) {
    if (pilot_len < 1 || data_len < 1 || tx_antennas < 1) {
        throw std::invalid_argument("thm1: arguments must be positive");
    }
    return static_cast<double>(pilot_len) <
           std::sqrt(static_cast<double>(data_len) * static_cast<double>(tx_antennas));
}

inline double thm1_crossover(long data_len, int tx_antennas) {
    return std::sqrt(static_cast<double>(data_len) * static_cast<double>(tx_antennas));
}

// Per unit energy, pilot jamming yields a higher PER lower bound on the
// following ACK than direct ACK jamming when A*theta_G/(K*theta_F) >= K*L/N^2.
inline bool thm2_pilot_beats_ack_on_ack(long ack_len, long pilot_len, double theta_g,
                                        double theta_f, int jam_antennas,
                                        int rx_antennas) {
    if (ack_len < 1 || pilot_len < 1 || theta_g <= 0.0 || theta_f <= 0.0 ||
        jam_antennas < 1 || rx_antennas < 1) {
        throw std::invalid_argument("thm2: arguments must be positive");
    }
    const double lhs = static_cast<double>(ack_len) * theta_g /
                       (static_cast<double>(pilot_len) * theta_f);
    const double rhs = static_cast<double>(pilot_len) * jam_antennas /
                       (static_cast<double>(rx_antennas) * rx_antennas);
    return lhs >= rhs;
}

// Pilot length where the thm2 condition is at equality.
inline double thm2_boundary_k(long ack_len, double theta_g, double theta_f,
                              int jam_antennas, int rx_antennas) {
    return std::sqrt(static_cast<double>(ack_len) * theta_g * rx_antennas * rx_antennas /
                     (static_cast<double>(jam_antennas) * theta_f));
}

// Noise-free comparison of PER lower bounds: ACK jamming beats barrage when
// A*theta_G/(D*theta_F) < L*gamma_th_a / (E{lambda_max}*N*gamma_th_d).
inline bool thm3_ack_beats_barrage(const ScenarioParams& p) {
    p.validate();
    const double lhs = static_cast<double>(p.ack_len) * p.theta_g /
                       (static_cast<double>(p.data_len) * p.theta_f);
    const double rhs = static_cast<double>(p.jam_antennas) * p.gamma_th_ack /
                       (p.lambda_max_mean * p.rx_antennas * p.gamma_th_data);
    return lhs < rhs;
}

// ACK jamming beats pilot jamming on the PER lower bound when
// A*theta_G/(K*theta_F) < K*L*gamma_th_a / (E{lambda_max}*M*N*gamma_th_d).
inline bool thm3_ack_beats_pilot(const ScenarioParams& p) {
    p.validate();
    const double lhs = static_cast<double>(p.ack_len) * p.theta_g /
                       (static_cast<double>(p.pilot_len) * p.theta_f);
    const double rhs = static_cast<double>(p.pilot_len) * p.jam_antennas *
                       p.gamma_th_ack /
                       (p.lambda_max_mean * p.tx_antennas * p.rx_antennas *
                        p.gamma_th_data);
    return lhs < rhs;
}

// Combined gate for preferring ACK jamming over pilot jamming: the left side
// must fall below both the thm2 and thm3 right-hand sides.
inline bool cond_ack_over_pilot_combined(const ScenarioParams& p) {
    p.validate();
    const double lhs = static_cast<double>(p.ack_len) * p.theta_g /
                       (static_cast<double>(p.pilot_len) * p.theta_f);
    const double rhs_link = static_cast<double>(p.pilot_len) * p.jam_antennas /
                            (static_cast<double>(p.rx_antennas) * p.rx_antennas);
    const double rhs_per = static_cast<double>(p.pilot_len) * p.jam_antennas *
                           p.gamma_th_ack /
                           (p.lambda_max_mean * p.tx_antennas * p.rx_antennas *
                            p.gamma_th_data);
    return lhs < std::min(rhs_link, rhs_per);
}

}  // namespace jamsim
