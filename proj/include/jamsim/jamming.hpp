#pragma once

#include "jamsim/phy.hpp"

namespace jamsim {

enum class JamScheme { None, Barrage, Pilot, Ack };

inline const char* scheme_name(JamScheme s) {
    switch (s) {
        case JamScheme::None: return "none";
        case JamScheme::Barrage: return "barrage";
        case JamScheme::Pilot: return "pilot";
        case JamScheme::Ack: return "ack";
    }
    return "?";
}

inline JamScheme scheme_from_name(const std::string& s) {
    if (s == "none") return JamScheme::None;
    if (s == "barrage") return JamScheme::Barrage;
    if (s == "pilot") return JamScheme::Pilot;
    if (s == "ack") return JamScheme::Ack;
    throw std::invalid_argument("unknown jamming scheme: " + s);
}

// What the jammer does in one frame: scheme, total energy budget in E_s
// units, and for pilot jamming the assumed pilot length.
struct JammingAction {
    JamScheme scheme = JamScheme::None;
    double total_energy = 0.0;
    int assumed_pilot_len = 0;  // T_p, pilot scheme only

    void validate() const {
        if (total_energy < 0.0) {
            throw std::invalid_argument("JammingAction: negative energy");
        }
        if (scheme == JamScheme::Pilot && assumed_pilot_len < 1) {
            throw std::invalid_argument("JammingAction: pilot length must be >= 1");
        }
    }
};

// Slot-level energy budget. Frame slots are indexed on one timeline:
// [0, K) pilot, [K, K+D) data, [K+D, K+D+A) ACK. A mis-sized pilot burst is a
// contiguous prefix, so overflow past K lands on data slots.
struct EnergyAllocation {
    double energy_per_symbol = 0.0;  // E_j, per symbol per jammer antenna
    long jam_begin = 0;
    long jam_end = 0;  // exclusive

    long slot_count() const { return jam_end - jam_begin; }
    bool covers(long slot) const { return slot >= jam_begin && slot < jam_end; }
};

inline EnergyAllocation allocate_energy(const JammingAction& action,
                                        const LinkConfig& cfg, const FramePlan& plan) {
    action.validate();
    const double l = static_cast<double>(cfg.jam_antennas);
    EnergyAllocation alloc;
    switch (action.scheme) {
        case JamScheme::None:
            break;
        case JamScheme::Barrage:
            alloc.jam_begin = plan.pilot_len;
            alloc.jam_end = plan.pilot_len + plan.data_len;
            alloc.energy_per_symbol =
                action.total_energy / (l * static_cast<double>(plan.data_len));
            break;
        case JamScheme::Pilot:
            alloc.jam_begin = 0;
            alloc.jam_end = action.assumed_pilot_len;
            alloc.energy_per_symbol =
                action.total_energy / (l * static_cast<double>(action.assumed_pilot_len));
            break;
        case JamScheme::Ack:
            alloc.jam_begin = plan.pilot_len + plan.data_len;
            alloc.jam_end = alloc.jam_begin + plan.ack_len;
            alloc.energy_per_symbol =
                action.total_energy / (l * static_cast<double>(plan.ack_len));
            break;
    }
    return alloc;
}

// Signal-to-jamming ratio in dB against the per-symbol signal energy.
inline double sjr_db(double symbol_energy, int jam_antennas, double energy_per_symbol) {
    return 10.0 * std::log10(symbol_energy /
                             (static_cast<double>(jam_antennas) * energy_per_symbol));
}

// Gaussian jamming block: i.i.d. entries with per-entry variance E_j,
// independent across slots.
inline SymbolBlock gen_jamming_block(int jam_antennas, double energy_per_symbol,
                                     long slots, Rng& rng) {
    if (energy_per_symbol < 0.0) {
        throw std::invalid_argument("gen_jamming_block: negative energy");
    }
    SymbolBlock block;
    block.energy_per_symbol = energy_per_symbol;
    if (slots <= 0 || jam_antennas < 1) {
        block.matrix.resize(std::max(jam_antennas, 1), 0);
        return block;
    }
    block.matrix = sample_complex_gaussian(jam_antennas, slots, energy_per_symbol, rng);
    return block;
}

}  // namespace jamsim
