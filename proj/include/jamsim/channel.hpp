#pragma once

#include "jamsim/numerics.hpp"

namespace jamsim {

// Static physical scenario of the two-link setup: antenna counts, per-channel
// path-loss variances, symbol energy and noise density.
struct LinkConfig {
    int tx_antennas = 2;   // M
    int rx_antennas = 2;   // N, must be >= M so the ZF detector exists
    int jam_antennas = 2;  // L
    double theta_h = 1.0;
    double theta_g = 1.0;
    double theta_f = 1.0;
    double symbol_energy = 1.0;   // E_s
    double noise_density = 0.1;   // N_0

    void validate() const {
        if (tx_antennas < 1 || rx_antennas < 1 || jam_antennas < 1) {
            throw std::invalid_argument("LinkConfig: antenna counts must be >= 1");
        }
        if (rx_antennas < tx_antennas) {
            throw std::invalid_argument("LinkConfig: need N >= M for ZF detection");
        }
        if (theta_h <= 0.0 && theta_h != 0.0) {
            throw std::invalid_argument("LinkConfig: negative theta_h");
        }
        if (theta_h < 0.0 || theta_g < 0.0 || theta_f < 0.0) {
            throw std::invalid_argument("LinkConfig: path losses must be >= 0");
        }
        if (symbol_energy <= 0.0) {
            throw std::invalid_argument("LinkConfig: symbol energy must be > 0");
        }
        if (noise_density < 0.0) {
            throw std::invalid_argument("LinkConfig: noise density must be >= 0");
        }
    }
};

// One block-fading draw: H (tx->rx), G (jam->rx), F (jam->tx).
struct ChannelRealization {
    CMatrix h;  // N x M
    CMatrix g;  // N x L
    CMatrix f;  // M x L
};

inline ChannelRealization draw_channels(const LinkConfig& cfg, Rng& rng) {
    cfg.validate();
    ChannelRealization ch;
    ch.h = sample_complex_gaussian(cfg.rx_antennas, cfg.tx_antennas, cfg.theta_h, rng);
    ch.g = sample_complex_gaussian(cfg.rx_antennas, cfg.jam_antennas, cfg.theta_g, rng);
    ch.f = sample_complex_gaussian(cfg.tx_antennas, cfg.jam_antennas, cfg.theta_f, rng);
    return ch;
}

// Monte Carlo mean of the largest eigenvalue of (H^T)^H H^T over fresh draws.
// Used by the ACK-link analysis, where it enters as a precomputed constant.
inline double estimate_expected_lambda_max(const LinkConfig& cfg, long trials, Rng& rng) {
    cfg.validate();
    if (trials < 1) {
        throw std::invalid_argument("estimate_expected_lambda_max: trials must be >= 1");
    }
    double acc = 0.0;
    for (long t = 0; t < trials; ++t) {
        const CMatrix h =
            sample_complex_gaussian(cfg.rx_antennas, cfg.tx_antennas, cfg.theta_h, rng);
        const CMatrix ht = h.transpose();
        acc += max_eigenpair(ht.adjoint() * ht).value;
    }
    return acc / static_cast<double>(trials);
}

}  // namespace jamsim
