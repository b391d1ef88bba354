#pragma once

#include "jamsim/jamming.hpp"

#include <numeric>

namespace jamsim {

struct SinrReport {
    std::vector<double> per_stream;  // linear SINR, one per spatial channel
    double mean = 0.0;
};

inline SinrReport make_report(std::vector<double> per_stream) {
    SinrReport r;
    r.per_stream = std::move(per_stream);
    if (!r.per_stream.empty()) {
        r.mean = std::accumulate(r.per_stream.begin(), r.per_stream.end(), 0.0) /
                 static_cast<double>(r.per_stream.size());
    }
    return r;
}

struct TrialOutcome {
    long bit_errors = 0;
    long bits = 0;
    long packet_errors = 0;
    long packets = 0;
    bool flagged = false;
};

namespace detail {

inline double cap_sinr(double numerator, double denominator) {
    if (!(denominator > 0.0)) return kSinrCeiling;
    return std::min(numerator / denominator, kSinrCeiling);
}

}  // namespace detail

// Post-ZF SINR per spatial channel under barrage jamming:
// gamma_m = E_s / (E_j [H+ G G^H (H+)^H]_mm + N_0 [(H^H H)^-1]_mm).
inline SinrReport sinr_barrage(const CMatrix& h, const CMatrix& g, double symbol_energy,
                               double jam_energy, double noise_density) {
    const CMatrix pinv = left_pinv(h);
    const CMatrix pg = pinv * g;
    std::vector<double> gamma(static_cast<std::size_t>(h.cols()));
    for (Eigen::Index m = 0; m < h.cols(); ++m) {
        const double interf = jam_energy * pg.row(m).squaredNorm();
        const double noise = noise_density * pinv.row(m).squaredNorm();
        gamma[static_cast<std::size_t>(m)] = detail::cap_sinr(symbol_energy, interf + noise);
    }
    return make_report(std::move(gamma));
}

// Effective post-ZF SINR when the pilot was jammed: the interference leaked
// through the channel estimate is scaled by M/K and the noise picks up the
// estimation penalty (1 + 1/K).
inline SinrReport sinr_pilot(const CMatrix& h, const CMatrix& g, double symbol_energy,
                             double jam_energy, double noise_density, int pilot_len,
                             int tx_antennas) {
    if (pilot_len < 1) {
        throw std::invalid_argument("sinr_pilot: pilot length must be >= 1");
    }
    if (tx_antennas != h.cols()) {
        throw std::invalid_argument("sinr_pilot: antenna count does not match H");
    }
    const double k = static_cast<double>(pilot_len);
    const double m_over_k = static_cast<double>(tx_antennas) / k;
    const double noise_scale = 1.0 + 1.0 / k;
    const CMatrix pinv = left_pinv(h);
    const CMatrix pg = pinv * g;
    std::vector<double> gamma(static_cast<std::size_t>(h.cols()));
    for (Eigen::Index m = 0; m < h.cols(); ++m) {
        const double interf = jam_energy * m_over_k * pg.row(m).squaredNorm();
        const double noise = noise_scale * noise_density * pinv.row(m).squaredNorm();
        gamma[static_cast<std::size_t>(m)] = detail::cap_sinr(symbol_energy, interf + noise);
    }
    return make_report(std::move(gamma));
}

// Post-processing SINR of the beamformed ACK symbol, with the residual
// pilot-jamming term (E_jp) and the direct ACK-jamming term (E_ja).
inline SinrReport sinr_ack(const CMatrix& h_hat, const CVector& beam, const CMatrix& g,
                           const CMatrix& f, double symbol_energy, double pilot_jam_energy,
                           double ack_jam_energy, double noise_density,
                           [[maybe_unused]] int pilot_len, int jam_antennas) {
    const CMatrix ht = h_hat.transpose();
    const CVector steered = ht.adjoint() * (ht * beam);
    const double normalizer = std::real(beam.dot(steered));
    if (!(std::abs(normalizer) > 0.0)) {
        throw std::runtime_error("sinr_ack: zero normalizer");
    }
    const double n = static_cast<double>(h_hat.rows());
    const CVector b = ht * beam;  // Hhat^T u
    const double residual =
        (pilot_jam_energy / static_cast<double>(jam_antennas)) * g.squaredNorm() +
        n * noise_density;
    const double direct = ack_jam_energy * (f.adjoint() * b).squaredNorm() +
                          noise_density * b.squaredNorm();
    const double numerator = normalizer * normalizer * symbol_energy;
    const double denominator = residual * normalizer + direct;
    return make_report({detail::cap_sinr(numerator, denominator)});
}

// Expected SINR over the fading distributions for each scheme; lambda_max_mean
// is the unit-path-loss mean of the largest eigenvalue of (H^T)^H H^T.
inline double expected_sinr(JamScheme scheme, const LinkConfig& cfg, const FramePlan& plan,
                            double barrage_energy, double pilot_energy, double ack_energy,
                            double lambda_max_mean) {
    cfg.validate();
    const double es = cfg.symbol_energy;
    const double n0 = cfg.noise_density;
    const double k = static_cast<double>(plan.pilot_len);
    switch (scheme) {
        case JamScheme::None:
            return detail::cap_sinr(es * cfg.theta_h, n0);
        case JamScheme::Barrage:
            return detail::cap_sinr(es * cfg.theta_h, barrage_energy * cfg.theta_g + n0);
        case JamScheme::Pilot:
            return detail::cap_sinr(
                es * cfg.theta_h,
                (static_cast<double>(cfg.tx_antennas) / k) * pilot_energy * cfg.theta_g +
                    (1.0 + 1.0 / k) * n0);
        case JamScheme::Ack: {
            const double n = static_cast<double>(cfg.rx_antennas);
            const double l = static_cast<double>(cfg.jam_antennas);
            const double numer = lambda_max_mean * n * es * cfg.theta_h;
            const double denom = (n * n / k) * (pilot_energy * cfg.theta_g + n0) +
                                 (l * ack_energy * cfg.theta_f + n0);
            return detail::cap_sinr(numer, denom);
        }
    }
    return 0.0;
}

// Exponential PER model: certain loss at or below the threshold, exponential
// decay above, clamped into [0, 1].
inline double per_model(double gamma, const Mcs& mcs) {
    if (gamma <= mcs.gamma_th) return 1.0;
    return std::min(1.0, mcs.per_a * std::exp(-mcs.per_b * gamma));
}

// PER lower bound from Markov's inequality on the SINR, clamped into [0, 1].
inline double per_lower_bound(double gamma_bar, double gamma_th) {
    if (gamma_th <= 0.0) {
        throw std::invalid_argument("per_lower_bound: threshold must be > 0");
    }
    return std::clamp(1.0 - gamma_bar / gamma_th, 0.0, 1.0);
}

// Outcome of one simulated frame: forward data block and backward ACK.
struct FrameOutcome {
    TrialOutcome data;
    TrialOutcome ack;
    SinrReport data_sinr;
    SinrReport ack_sinr;
};

namespace detail {

inline std::uint8_t next_bit(Rng& rng, std::uint64_t& word, int& left) {
    if (left == 0) {
        word = rng();
        left = 64;
    }
    const std::uint8_t bit = static_cast<std::uint8_t>(word & 1u);
    word >>= 1;
    --left;
    return bit;
}

// Marks a trial that hit a singular estimate: half the bits errored, every
// packet errored, flagged for reporting.
inline void mark_flagged(TrialOutcome& out, long bits, long packets) {
    out.bits = bits;
    out.bit_errors = bits / 2;
    out.packets = packets;
    out.packet_errors = packets;
    out.flagged = true;
}

}  // namespace detail

// One full frame through the pilot / data / ACK pipeline under the given
// jamming action. The pilot is always transmitted and LS-estimated; jamming
// touches it only when the allocation covers pilot slots.
inline FrameOutcome simulate_frame(const LinkConfig& cfg, const FramePlan& plan,
                                   const JammingAction& action, Rng& rng) {
    cfg.validate();
    action.validate();
    const int m = cfg.tx_antennas;
    const int n = cfg.rx_antennas;
    const int l = cfg.jam_antennas;
    const double es = cfg.symbol_energy;
    const double n0 = cfg.noise_density;
    const EnergyAllocation alloc = allocate_energy(action, cfg, plan);

    const ChannelRealization ch = draw_channels(cfg, rng);

    FrameOutcome out;
    const long data_bits_total =
        static_cast<long>(plan.packets_per_frame) * plan.packet_bits;
    const long ack_bits_total =
        static_cast<long>(plan.ack_len) * plan.ack_mcs.bits_per_symbol;

    // Pilot phase.
    const SymbolBlock pilot = build_pilot(m, plan.pilot_len, es);
    CMatrix received_pilot = ch.h * pilot.matrix;
    CVector jam(l), noise(n);
    for (int k = 0; k < plan.pilot_len; ++k) {
        if (alloc.covers(k) && alloc.energy_per_symbol > 0.0) {
            for (int i = 0; i < l; ++i) jam(i) = complex_gaussian(alloc.energy_per_symbol, rng);
            received_pilot.col(k).noalias() += ch.g * jam;
        }
        for (int i = 0; i < n; ++i) noise(i) = complex_gaussian(n0, rng);
        received_pilot.col(k) += noise;
    }
    CMatrix h_hat;
    CMatrix detector;
    bool flagged = false;
    try {
        h_hat = ls_estimate(received_pilot, pilot);
        detector = left_pinv(h_hat);
    } catch (const std::exception&) {
        flagged = true;
    }

    // Effective per-pilot-symbol jamming energy after averaging the burst over
    // the K estimation slots; used only for the analytic per-frame report.
    const long pilot_overlap =
        std::max(0L, std::min<long>(alloc.jam_end, plan.pilot_len) - alloc.jam_begin);
    const double pilot_energy_eff =
        action.scheme == JamScheme::Pilot
            ? alloc.energy_per_symbol * static_cast<double>(pilot_overlap) /
                  static_cast<double>(plan.pilot_len)
            : 0.0;

    if (flagged) {
        detail::mark_flagged(out.data, data_bits_total, plan.packets_per_frame);
        detail::mark_flagged(out.ack, ack_bits_total, 1);
        out.data_sinr = make_report(std::vector<double>(static_cast<std::size_t>(m), 0.0));
        out.ack_sinr = make_report({0.0});
        return out;
    }

    // Data phase, streamed slot by slot.
    const Constellation data_map(plan.data_mcs, es);
    const int bps = plan.data_mcs.bits_per_symbol;
    const int bits_per_slot = bps * m;
    std::vector<std::uint8_t> tx_bits(static_cast<std::size_t>(bits_per_slot));
    std::vector<std::uint8_t> rx_bits(static_cast<std::size_t>(bits_per_slot));
    std::vector<std::uint8_t> packet_errored(static_cast<std::size_t>(plan.packets_per_frame), 0);
    CVector x(m), y(n), xhat(m);
    std::uint64_t bit_word = 0;
    int bits_left = 0;
    long bit_index = 0;
    out.data.bits = data_bits_total;
    out.data.packets = plan.packets_per_frame;
    for (long d = 0; d < plan.data_len; ++d) {
        for (int i = 0; i < bits_per_slot; ++i) {
            tx_bits[static_cast<std::size_t>(i)] = detail::next_bit(rng, bit_word, bits_left);
        }
        for (int s = 0; s < m; ++s) {
            x(s) = data_map.map(tx_bits.data() + s * bps);
        }
        y.noalias() = ch.h * x;
        const long slot = plan.pilot_len + d;
        if (alloc.covers(slot) && alloc.energy_per_symbol > 0.0) {
            for (int i = 0; i < l; ++i) jam(i) = complex_gaussian(alloc.energy_per_symbol, rng);
            y.noalias() += ch.g * jam;
        }
        for (int i = 0; i < n; ++i) y(i) += complex_gaussian(n0, rng);
        xhat.noalias() = detector * y;
        for (int s = 0; s < m; ++s) {
            data_map.unmap(xhat(s), rx_bits.data() + s * bps);
        }
        for (int i = 0; i < bits_per_slot; ++i) {
            if (rx_bits[static_cast<std::size_t>(i)] != tx_bits[static_cast<std::size_t>(i)]) {
                ++out.data.bit_errors;
                packet_errored[static_cast<std::size_t>((bit_index + i) / plan.packet_bits)] = 1;
            }
        }
        bit_index += bits_per_slot;
    }
    for (std::uint8_t e : packet_errored) {
        out.data.packet_errors += e;
    }

    // ACK phase: single beamformed stream back through H^T.
    out.ack.bits = ack_bits_total;
    out.ack.packets = 1;
    try {
        const CVector beam = beamform_vector(h_hat);
        const CMatrix ht = ch.h.transpose();
        const CMatrix ht_hat = h_hat.transpose();
        const CVector matched_template = ht_hat.adjoint() * (ht_hat * beam);
        const Complex normalizer = beam.dot(matched_template);
        if (std::abs(normalizer) == 0.0) {
            throw std::runtime_error("zero normalizer");
        }
        const CVector through = ht * beam;                       // H^T u
        const CVector combiner = (beam.adjoint() * ht_hat.adjoint()).adjoint();
        const Constellation ack_map(plan.ack_mcs, es);
        const int abps = plan.ack_mcs.bits_per_symbol;
        std::vector<std::uint8_t> abits(static_cast<std::size_t>(abps));
        std::vector<std::uint8_t> arx(static_cast<std::size_t>(abps));
        CVector yack(m);
        bool ack_errored = false;
        for (int slot = 0; slot < plan.ack_len; ++slot) {
            for (int i = 0; i < abps; ++i) {
                abits[static_cast<std::size_t>(i)] = detail::next_bit(rng, bit_word, bits_left);
            }
            const Complex xa = ack_map.map(abits.data());
            yack = through * xa;
            if (action.scheme == JamScheme::Ack && alloc.energy_per_symbol > 0.0) {
                for (int i = 0; i < l; ++i) jam(i) = complex_gaussian(alloc.energy_per_symbol, rng);
                yack.noalias() += ch.f * jam;
            }
            for (int i = 0; i < m; ++i) yack(i) += complex_gaussian(n0, rng);
            const Complex xhat_a = combiner.dot(yack) / normalizer;
            ack_map.unmap(xhat_a, arx.data());
            for (int i = 0; i < abps; ++i) {
                if (arx[static_cast<std::size_t>(i)] != abits[static_cast<std::size_t>(i)]) {
                    ++out.ack.bit_errors;
                    ack_errored = true;
                }
            }
        }
        out.ack.packet_errors = ack_errored ? 1 : 0;

        out.ack_sinr = sinr_ack(h_hat, beam, ch.g, ch.f, es, pilot_energy_eff,
                                action.scheme == JamScheme::Ack ? alloc.energy_per_symbol : 0.0,
                                n0, plan.pilot_len, l);
    } catch (const std::exception&) {
        detail::mark_flagged(out.ack, ack_bits_total, 1);
        out.ack_sinr = make_report({0.0});
    }

    // Analytic per-realization SINR for the data block.
    try {
        if (action.scheme == JamScheme::Pilot) {
            out.data_sinr = sinr_pilot(ch.h, ch.g, es, pilot_energy_eff, n0,
                                       plan.pilot_len, m);
        } else {
            const double data_jam =
                action.scheme == JamScheme::Barrage ? alloc.energy_per_symbol : 0.0;
            out.data_sinr = sinr_barrage(ch.h, ch.g, es, data_jam, n0);
        }
    } catch (const std::exception&) {
        out.data_sinr = make_report(std::vector<double>(static_cast<std::size_t>(m), 0.0));
    }
    return out;
}

struct BerCi {
    double ber = 0.0;
    double ci95 = 0.0;
    long bits = 0;
    long bit_errors = 0;
};

struct BerEstimate {
    BerCi data;
    BerCi ack;
    long flagged_frames = 0;
    long frames = 0;
};

namespace detail {

// Ratio estimator with a cluster-robust (per-frame) normal CI; frames are the
// independent units, bits inside a frame share one fading draw.
inline BerCi pool_frames(const std::vector<long>& errors, const std::vector<long>& bits) {
    BerCi out;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        out.bit_errors += errors[i];
        out.bits += bits[i];
    }
    if (out.bits == 0) return out;
    out.ber = static_cast<double>(out.bit_errors) / static_cast<double>(out.bits);
    double ssq = 0.0;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        const double resid = static_cast<double>(errors[i]) -
                             out.ber * static_cast<double>(bits[i]);
        ssq += resid * resid;
    }
    out.ci95 = 1.96 * std::sqrt(ssq) / static_cast<double>(out.bits);
    return out;
}

}  // namespace detail

// Monte Carlo BER over independent frames; frame f runs on its own stream
// derived from (seed, f), so results do not depend on evaluation order.
inline BerEstimate estimate_ber(const LinkConfig& cfg, const FramePlan& plan,
                                const JammingAction& action, long frames,
                                std::uint64_t seed) {
    if (frames < 1) {
        throw std::invalid_argument("estimate_ber: frames must be >= 1");
    }
    std::vector<long> data_err(static_cast<std::size_t>(frames));
    std::vector<long> data_bits(static_cast<std::size_t>(frames));
    std::vector<long> ack_err(static_cast<std::size_t>(frames));
    std::vector<long> ack_bits(static_cast<std::size_t>(frames));
    BerEstimate est;
    est.frames = frames;
    for (long f = 0; f < frames; ++f) {
        Rng rng = make_stream(seed, static_cast<std::uint64_t>(f));
        const FrameOutcome frame = simulate_frame(cfg, plan, action, rng);
        const std::size_t i = static_cast<std::size_t>(f);
        data_err[i] = frame.data.bit_errors;
        data_bits[i] = frame.data.bits;
        ack_err[i] = frame.ack.bit_errors;
        ack_bits[i] = frame.ack.bits;
        if (frame.data.flagged || frame.ack.flagged) {
            ++est.flagged_frames;
        }
    }
    est.data = detail::pool_frames(data_err, data_bits);
    est.ack = detail::pool_frames(ack_err, ack_bits);
    return est;
}

}  // namespace jamsim
