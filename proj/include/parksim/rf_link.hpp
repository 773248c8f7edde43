#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "parksim/sim.hpp"

namespace parksim {

/// One encoder word: 8 address bits plus a 4-bit data nibble.
struct Ht12Frame {
    std::uint8_t address = 0;
    std::uint8_t data = 0; // low 4 bits
};

/// Serial bit sequence on the radio channel, one entry per bit (0/1).
using BitStream = std::vector<std::uint8_t>;

/// Bits per transmitted word: 1 sync bit + 8 address bits + 4 data bits.
inline constexpr std::size_t kWordBits = 13;

/// Four occupancy sensors feeding one encoder. Bank b covers slots
/// 4b .. 4b+3; occupancy[i] maps to data bit i.
struct SensorBank {
    unsigned bank_index = 0;
    std::uint8_t address = 0;
    std::array<bool, 4> occupancy{};
};

/// Occupancy nibble read off a bank's sensors: bit i set iff slot 4b+i holds a car.
std::uint8_t sense(const SensorBank& bank);

/// Serialize `repetitions` copies of the 13-bit word
/// [sync=1, address MSB..LSB, data MSB..LSB].
BitStream encode(const Ht12Frame& frame, unsigned repetitions);

/// Copy of `stream` with the listed bit positions inverted. Flipping the same
/// position twice restores the bit.
BitStream corrupt(const BitStream& stream, const std::vector<std::size_t>& flip_positions);

struct DecodeResult {
    std::optional<std::uint8_t> data;
    bool vt = false; // valid-transmission flag
};

/// Scan word-aligned 13-bit words for a run of k consecutive words that are
/// sync-valid, match `local_address` and agree on the data nibble. A trailing
/// partial word is ignored.
DecodeResult decode(const BitStream& stream, std::uint8_t local_address, unsigned k);

/// Serial link from the slot sensors to the decoder, run one bit per cycle.
/// A sweep transmits every bank in index order; each bank's segment is
/// decoded as it completes and accepted nibbles land in the mailbox. Bit
/// flips armed before a sweep starts are applied to that sweep's stream.
class RfLink {
public:
    RfLink(Simulation& sim, unsigned banks, unsigned k);

    /// Arm a channel bit flip for the next sweep. Positions index the
    /// concatenated stream of the whole sweep.
    void arm_flip(std::size_t bit_position);

    /// Begin transmitting the given per-slot occupancy (one bool per slot,
    /// banks*4 entries). No-op if a sweep is already in flight.
    void start_sweep(const std::vector<bool>& occupancy);

    void tick();

    bool sweeping() const { return cursor_ < tx_.size(); }
    /// True for exactly the cycle on which the last bank finished decoding.
    bool sweep_completed() const { return completed_pulse_; }

    const std::array<std::optional<std::uint8_t>, 8>& mailbox() const { return mailbox_; }

private:
    Simulation& sim_;
    unsigned banks_;
    unsigned k_;
    std::size_t sig_tx_;
    std::size_t sig_rx_;
    std::size_t sig_vt_;

    BitStream tx_;
    BitStream rx_;
    std::size_t cursor_ = 0;
    bool completed_pulse_ = false;
    std::set<std::size_t> armed_flips_;
    std::array<std::optional<std::uint8_t>, 8> mailbox_{};
};

} // namespace parksim
