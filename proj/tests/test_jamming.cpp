#include "jamsim/jamming.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jamsim;

namespace {

LinkConfig cfg222() {
    LinkConfig cfg;
    return cfg;
}

FramePlan plan_full() {
    return make_frame_plan(4, 240, 1024, mcs_bpsk(), mcs_bpsk(), 512, 2);
}

}  // namespace

TEST_CASE("barrage allocation spreads the budget over the data block") {
    JammingAction action;
    action.scheme = JamScheme::Barrage;
    action.total_energy = 20.0;
    const EnergyAllocation alloc = allocate_energy(action, cfg222(), plan_full());
    REQUIRE(alloc.energy_per_symbol == Catch::Approx(20.0 / 245760.0).margin(1e-18));
    REQUIRE(alloc.slot_count() == 122880);
    // With E_s = 1 this is the 37.9 dB signal-to-jamming operating point.
    REQUIRE(sjr_db(1.0, 2, alloc.energy_per_symbol) ==
            Catch::Approx(37.9).margin(0.05));
}

TEST_CASE("pilot allocation concentrates on the assumed burst") {
    JammingAction action;
    action.scheme = JamScheme::Pilot;
    action.total_energy = 1.0;
    action.assumed_pilot_len = 4;
    const EnergyAllocation alloc = allocate_energy(action, cfg222(), plan_full());
    REQUIRE(alloc.energy_per_symbol == Catch::Approx(1.0 / 8.0).margin(1e-15));
    REQUIRE(alloc.jam_begin == 0);
    REQUIRE(alloc.jam_end == 4);
}

TEST_CASE("none allocation is empty") {
    JammingAction action;
    action.scheme = JamScheme::None;
    action.total_energy = 42.0;
    const EnergyAllocation alloc = allocate_energy(action, cfg222(), plan_full());
    REQUIRE(alloc.energy_per_symbol == 0.0);
    REQUIRE(alloc.slot_count() == 0);
}

TEST_CASE("energy is conserved for every scheme and burst length") {
    const LinkConfig cfg = cfg222();
    const FramePlan plan = plan_full();
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        JammingAction action;
        const int pick = static_cast<int>(rng() % 3);
        action.scheme = pick == 0   ? JamScheme::Barrage
                        : pick == 1 ? JamScheme::Pilot
                                    : JamScheme::Ack;
        action.total_energy = static_cast<double>(rng() % 1000) / 7.0;
        action.assumed_pilot_len = 1 + static_cast<int>(rng() % 600);
        const EnergyAllocation alloc = allocate_energy(action, cfg, plan);
        const double spent = cfg.jam_antennas * alloc.energy_per_symbol *
                             static_cast<double>(alloc.slot_count());
        if (action.total_energy == 0.0) {
            REQUIRE(spent == 0.0);
        } else {
            REQUIRE(spent == Catch::Approx(action.total_energy).epsilon(1e-12));
        }
    }
}

TEST_CASE("mis-sized pilot bursts stay a contiguous prefix") {
    const FramePlan plan = plan_full();
    JammingAction action;
    action.scheme = JamScheme::Pilot;
    action.total_energy = 8.0;

    SECTION("short burst covers only the head of the pilot") {
        action.assumed_pilot_len = 2;
        const EnergyAllocation alloc = allocate_energy(action, cfg222(), plan);
        REQUIRE(alloc.jam_end == 2);
        REQUIRE(alloc.covers(1));
        REQUIRE_FALSE(alloc.covers(2));
    }
    SECTION("long burst spills into data slots") {
        action.assumed_pilot_len = 10;  // pilot is 4 slots
        const EnergyAllocation alloc = allocate_energy(action, cfg222(), plan);
        REQUIRE(alloc.jam_end == 10);
        REQUIRE(alloc.covers(plan.pilot_len));  // first data slot hit
        REQUIRE(cfg222().jam_antennas * alloc.energy_per_symbol * alloc.slot_count() ==
                Catch::Approx(8.0).epsilon(1e-12));
    }
}

TEST_CASE("ACK allocation covers the ACK block") {
    const FramePlan plan = plan_full();
    JammingAction action;
    action.scheme = JamScheme::Ack;
    action.total_energy = 20.0;
    const EnergyAllocation alloc = allocate_energy(action, cfg222(), plan);
    REQUIRE(alloc.jam_begin == plan.pilot_len + plan.data_len);
    REQUIRE(alloc.slot_count() == plan.ack_len);
    REQUIRE(alloc.energy_per_symbol == Catch::Approx(20.0 / 1024.0).margin(1e-15));
}

TEST_CASE("jamming block statistics") {
    SECTION("zero energy gives a zero block") {
        Rng rng(7);
        const SymbolBlock block = gen_jamming_block(2, 0.0, 100, rng);
        REQUIRE(block.matrix.norm() == 0.0);
    }
    SECTION("per-entry power matches E_j") {
        Rng rng(8);
        const SymbolBlock block = gen_jamming_block(2, 0.5, 100000, rng);
        const double power = block.matrix.squaredNorm() /
                             static_cast<double>(block.matrix.size());
        REQUIRE(power > 0.495);
        REQUIRE(power < 0.505);
    }
    SECTION("columns are uncorrelated across slots") {
        Rng rng(9);
        const SymbolBlock block = gen_jamming_block(2, 1.0, 100000, rng);
        Complex acc(0, 0);
        for (long k = 0; k + 1 < block.matrix.cols(); k += 2) {
            acc += block.matrix(0, k) * std::conj(block.matrix(0, k + 1));
        }
        const double rho = std::abs(acc) / (0.5 * block.matrix.cols());
        REQUIRE(rho < 0.02);
    }
}
