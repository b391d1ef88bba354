#pragma once

#include "jamsim/channel.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace jamsim {

// Modulation-and-coding scheme abstraction: constellation order plus the
// parameters of the exponential PER-vs-SINR model. The (a, b) defaults follow
// the classic AMC link-layer fits; gamma_th is pinned to ln(a)/b so the model
// is continuous where it leaves the PER=1 region.
struct Mcs {
    int id = 1;
    std::string name = "bpsk";
    int bits_per_symbol = 1;
    double per_a = 274.7229;
    double per_b = 7.9932;       // 1/SINR units
    double gamma_th = 0.0;       // linear SINR threshold

    void validate() const {
        if (bits_per_symbol != 1 && bits_per_symbol != 2 && bits_per_symbol != 4 &&
            bits_per_symbol != 6) {
            throw std::invalid_argument("Mcs: bits_per_symbol must be 1, 2, 4 or 6");
        }
        if (per_a <= 0.0 || per_b <= 0.0 || gamma_th <= 0.0) {
            throw std::invalid_argument("Mcs: PER model parameters must be positive");
        }
        if (per_a * std::exp(-per_b * gamma_th) > 1.0 + 1e-12) {
            throw std::invalid_argument("Mcs: PER model exceeds 1 at threshold");
        }
    }
};

inline Mcs make_mcs(int id, const std::string& name, int bits, double a, double b) {
    Mcs m;
    m.id = id;
    m.name = name;
    m.bits_per_symbol = bits;
    m.per_a = a;
    m.per_b = b;
    m.gamma_th = std::log(a) / b;
    m.validate();
    return m;
}

// Default four-MCS ladder (BPSK-1/2, QPSK-1/2, 16QAM-3/4, 64QAM-3/4 fits).
inline Mcs mcs_bpsk() { return make_mcs(1, "bpsk", 1, 274.7229, 7.9932); }
inline Mcs mcs_qpsk() { return make_mcs(2, "qpsk", 2, 90.2514, 3.4998); }
inline Mcs mcs_qam16() { return make_mcs(3, "qam16", 4, 53.3987, 0.3756); }
inline Mcs mcs_qam64() { return make_mcs(4, "qam64", 6, 35.3508, 0.0900); }

inline Mcs mcs_by_name(const std::string& name) {
    if (name == "bpsk") return mcs_bpsk();
    if (name == "qpsk") return mcs_qpsk();
    if (name == "qam16") return mcs_qam16();
    if (name == "qam64") return mcs_qam64();
    throw std::invalid_argument("unknown MCS name: " + name);
}

// Per-frame protocol shape: pilot, aggregated data block and ACK lengths.
struct FramePlan {
    int pilot_len = 4;        // K, vector-symbol slots
    long data_len = 0;        // D, vector-symbol slots (derived)
    int ack_len = 512;        // A, scalar-symbol slots
    Mcs data_mcs = mcs_bpsk();
    Mcs ack_mcs = mcs_bpsk();
    int packets_per_frame = 240;
    int packet_bits = 1024;
};

inline FramePlan make_frame_plan(int pilot_len, int packets_per_frame, int packet_bits,
                                 const Mcs& data_mcs, const Mcs& ack_mcs, int ack_len,
                                 int tx_antennas) {
    data_mcs.validate();
    ack_mcs.validate();
    if (pilot_len < tx_antennas) {
        throw std::invalid_argument("FramePlan: pilot length must be >= M");
    }
    if (packets_per_frame < 1 || packet_bits < 1 || ack_len < 1) {
        throw std::invalid_argument("FramePlan: lengths must be positive");
    }
    const long total_bits = static_cast<long>(packets_per_frame) * packet_bits;
    const long denom = static_cast<long>(data_mcs.bits_per_symbol) * tx_antennas;
    if (total_bits % denom != 0) {
        throw std::invalid_argument("FramePlan: frame bits do not fill whole slots");
    }
    FramePlan plan;
    plan.pilot_len = pilot_len;
    plan.data_len = total_bits / denom;
    plan.ack_len = ack_len;
    plan.data_mcs = data_mcs;
    plan.ack_mcs = ack_mcs;
    plan.packets_per_frame = packets_per_frame;
    plan.packet_bits = packet_bits;
    return plan;
}

// Block of symbols on a grid of streams x slots.
struct SymbolBlock {
    CMatrix matrix;
    double energy_per_symbol = 1.0;
};

// Pilot built from the first M rows of the K-point DFT matrix, scaled so that
// X X^H = K E_s I_M holds exactly.
inline SymbolBlock build_pilot(int tx_antennas, int pilot_len, double symbol_energy) {
    if (tx_antennas < 1 || pilot_len < tx_antennas) {
        throw std::invalid_argument("build_pilot: need K >= M >= 1");
    }
    if (symbol_energy <= 0.0) {
        throw std::invalid_argument("build_pilot: symbol energy must be > 0");
    }
    SymbolBlock block;
    block.energy_per_symbol = symbol_energy;
    block.matrix.resize(tx_antennas, pilot_len);
    const double amp = std::sqrt(symbol_energy);
    for (int m = 0; m < tx_antennas; ++m) {
        for (int k = 0; k < pilot_len; ++k) {
            const double phase = -2.0 * M_PI * static_cast<double>(m) *
                                 static_cast<double>(k) / static_cast<double>(pilot_len);
            block.matrix(m, k) = amp * Complex(std::cos(phase), std::sin(phase));
        }
    }
    return block;
}

namespace detail {

// Gray label of the i-th amplitude level counted from the most positive end.
inline unsigned gray_code(unsigned i) { return i ^ (i >> 1); }

struct AxisMap {
    int levels = 2;      // points per axis
    double scale = 1.0;  // half of the grid step amplitude
    std::vector<int> label_to_index;  // gray label -> level index
};

inline AxisMap make_axis(int bits_per_axis, double symbol_energy, bool two_axes) {
    AxisMap axis;
    axis.levels = 1 << bits_per_axis;
    // Mean of the odd-integer grid {±1, ±3, ...} squared is (levels^2 - 1)/3.
    const double axis_power = (static_cast<double>(axis.levels) * axis.levels - 1.0) / 3.0;
    const double total = two_axes ? 2.0 * axis_power : axis_power;
    axis.scale = std::sqrt(symbol_energy / total);
    axis.label_to_index.assign(axis.levels, 0);
    for (int i = 0; i < axis.levels; ++i) {
        axis.label_to_index[static_cast<int>(gray_code(static_cast<unsigned>(i)))] = i;
    }
    return axis;
}

// Level index 0 is the most positive amplitude.
inline double axis_amplitude(const AxisMap& axis, int index) {
    return axis.scale * static_cast<double>(axis.levels - 1 - 2 * index);
}

// Hard decision on one axis. On an exact boundary the side with the smaller
// gray label wins, which keeps demodulation deterministic.
inline int axis_decide(const AxisMap& axis, double x) {
    const double pos = (static_cast<double>(axis.levels - 1) - x / axis.scale) / 2.0;
    double nearest = std::round(pos);
    if (std::abs(pos - std::floor(pos) - 0.5) < 1e-12) {
        const int lo = static_cast<int>(std::floor(pos));
        const int hi = lo + 1;
        const int lo_c = std::clamp(lo, 0, axis.levels - 1);
        const int hi_c = std::clamp(hi, 0, axis.levels - 1);
        nearest = gray_code(static_cast<unsigned>(lo_c)) <
                          gray_code(static_cast<unsigned>(hi_c))
                      ? lo_c
                      : hi_c;
    }
    return std::clamp(static_cast<int>(nearest), 0, axis.levels - 1);
}

inline unsigned bits_to_value(const std::uint8_t* bits, int count) {
    unsigned v = 0;
    for (int i = 0; i < count; ++i) {
        v = (v << 1) | (bits[i] & 1u);
    }
    return v;
}

inline void value_to_bits(unsigned v, int count, std::uint8_t* bits) {
    for (int i = count - 1; i >= 0; --i) {
        bits[i] = static_cast<std::uint8_t>(v & 1u);
        v >>= 1;
    }
}

}  // namespace detail

// Gray-mapped PSK/QAM symbol mapper with average symbol energy E_s. BPSK maps
// bit 0 to +sqrt(E_s); square constellations split bits evenly between the
// in-phase and quadrature axes.
class Constellation {
public:
    Constellation(const Mcs& mcs, double symbol_energy)
        : bps_(mcs.bits_per_symbol), half_(mcs.bits_per_symbol / 2) {
        if (bps_ == 1) {
            amp_ = std::sqrt(symbol_energy);
        } else {
            axis_ = detail::make_axis(half_, symbol_energy, true);
        }
    }

    int bits_per_symbol() const { return bps_; }

    Complex map(const std::uint8_t* bits) const {
        if (bps_ == 1) {
            return Complex(bits[0] ? -amp_ : amp_, 0.0);
        }
        const unsigned li = detail::bits_to_value(bits, half_);
        const unsigned lq = detail::bits_to_value(bits + half_, half_);
        return Complex(detail::axis_amplitude(axis_, axis_.label_to_index[li]),
                       detail::axis_amplitude(axis_, axis_.label_to_index[lq]));
    }

    void unmap(Complex symbol, std::uint8_t* bits) const {
        if (bps_ == 1) {
            bits[0] = symbol.real() < 0.0 ? 1 : 0;
            return;
        }
        const int ii = detail::axis_decide(axis_, symbol.real());
        const int iq = detail::axis_decide(axis_, symbol.imag());
        detail::value_to_bits(detail::gray_code(static_cast<unsigned>(ii)), half_, bits);
        detail::value_to_bits(detail::gray_code(static_cast<unsigned>(iq)), half_,
                              bits + half_);
    }

private:
    int bps_;
    int half_;
    double amp_ = 1.0;
    detail::AxisMap axis_{};
};

inline std::vector<Complex> modulate(const std::vector<std::uint8_t>& bits,
                                     const Mcs& mcs, double symbol_energy) {
    if (bits.size() % static_cast<std::size_t>(mcs.bits_per_symbol) != 0) {
        throw std::invalid_argument("modulate: bit count not divisible by bits/symbol");
    }
    const Constellation c(mcs, symbol_energy);
    std::vector<Complex> symbols(bits.size() / mcs.bits_per_symbol);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        symbols[i] = c.map(bits.data() + i * mcs.bits_per_symbol);
    }
    return symbols;
}

inline std::vector<std::uint8_t> demodulate(const std::vector<Complex>& symbols,
                                            const Mcs& mcs, double symbol_energy = 1.0) {
    const Constellation c(mcs, symbol_energy);
    std::vector<std::uint8_t> bits(symbols.size() * mcs.bits_per_symbol);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        c.unmap(symbols[i], bits.data() + i * mcs.bits_per_symbol);
    }
    return bits;
}

// Least-squares channel estimate from the received pilot block: Hhat = Y X^+.
inline CMatrix ls_estimate(const CMatrix& received, const SymbolBlock& pilot) {
    if (received.cols() != pilot.matrix.cols()) {
        throw std::invalid_argument("ls_estimate: pilot/observation length mismatch");
    }
    return received * right_pinv(pilot.matrix);
}

// Zero-forcing detection: xhat = Hhat^+ y.
inline CMatrix zf_detect(const CMatrix& received, const CMatrix& h_hat) {
    return left_pinv(h_hat) * received;
}

// Transmit beamformer for the ACK link: sqrt(N) times the dominant
// eigenvector of (Hhat^T)^H Hhat^T, so the total transmit energy is N E_s.
inline CVector beamform_vector(const CMatrix& h_hat) {
    if (h_hat.norm() == 0.0) {
        throw std::invalid_argument("beamform_vector: zero channel estimate");
    }
    const CMatrix ht = h_hat.transpose();
    const Eigenpair pair = max_eigenpair(ht.adjoint() * ht);
    return std::sqrt(static_cast<double>(h_hat.rows())) * pair.vector;
}

// MRC recovery of the beamformed ACK symbol.
inline Complex ack_recover(const CVector& received, const CMatrix& h_hat,
                           const CVector& beam) {
    const CMatrix ht = h_hat.transpose();
    const CVector matched = ht.adjoint() * received;           // (Hhat^T)^H y
    const CVector steered = ht.adjoint() * (ht * beam);        // (Hhat^T)^H Hhat^T u
    const Complex normalizer = beam.dot(steered);              // u^H (...) u
    if (std::abs(normalizer) == 0.0) {
        throw std::runtime_error("ack_recover: zero normalizer");
    }
    return beam.dot(matched) / normalizer;
}

}  // namespace jamsim
