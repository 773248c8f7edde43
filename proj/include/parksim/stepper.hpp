#pragma once

#include <cstdint>
#include <stdexcept>

#include "parksim/sim.hpp"

namespace parksim {

class BusyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DoorAction { Open, Close };
enum class Direction { Cw, Ccw };

/// Full-step one-phase-on door motor. The divider counter `cnt` advances
/// every tick; each wrap is one `clkd` edge and, while a door command is
/// active, one motor step. Z is the one-hot coil word.
class Stepper {
public:
    Stepper(unsigned div, unsigned steps_per_door);

    /// Advance one clock cycle, returning the coil word after the cycle.
    std::uint8_t tick();

    /// Start a door move. Open runs clockwise, close counter-clockwise,
    /// each for steps_per_door steps. Rejected while a move is in flight.
    void command_door(DoorAction action);

    bool busy() const { return steps_remaining_ > 0; }
    std::uint8_t coil_word() const { return kPhases[phase_]; }
    unsigned phase() const { return phase_; }
    std::uint64_t steps_taken() const { return steps_taken_; }
    Direction direction() const { return direction_; }
    unsigned cnt() const { return cnt_; }
    bool clkd() const { return clkd_; }

    /// Back to power-on state (phase 0, divider cleared, no command).
    void reset();

private:
    static constexpr std::uint8_t kPhases[4] = {0b1000, 0b0100, 0b0010, 0b0001};

    unsigned div_;
    unsigned steps_per_door_;
    unsigned phase_ = 0;
    unsigned cnt_ = 0;
    bool clkd_ = false;
    std::uint64_t steps_taken_ = 0;
    unsigned steps_remaining_ = 0;
    Direction direction_ = Direction::Cw;
};

/// Standalone demo block: wires a Stepper to the board signals Z/clkd/cnt
/// and, when `rotate_on_reset_release` is set, opens the door once on the
/// falling edge of `reset`.
class StepperBlock : public Tickable {
public:
    StepperBlock(Simulation& sim, unsigned div, unsigned steps_per_door,
                 bool rotate_on_reset_release);

    void tick(Cycle now) override;

    const Stepper& motor() const { return motor_; }
    Stepper& motor() { return motor_; }

private:
    Simulation& sim_;
    Stepper motor_;
    bool rotate_on_reset_release_;
    std::uint8_t prev_reset_ = 0;
    std::size_t sig_reset_;
    std::size_t sig_z_;
    std::size_t sig_clkd_;
    std::size_t sig_cnt_;
};

/// Smallest width that can hold values 0..max.
unsigned bits_for(unsigned max);

} // namespace parksim
