#include "parksim/stepper.hpp"

namespace parksim {

unsigned bits_for(unsigned max) {
    unsigned bits = 1;
    while ((1u << bits) <= max) {
        ++bits;
    }
    return bits;
}

Stepper::Stepper(unsigned div, unsigned steps_per_door)
    : div_(div), steps_per_door_(steps_per_door) {
    if (div_ < 1 || div_ > 256) {
        throw ConfigError("stepper: div must be in 1..256");
    }
    if (steps_per_door_ < 1) {
        throw ConfigError("stepper: steps_per_door must be >= 1");
    }
}

std::uint8_t Stepper::tick() {
    ++cnt_;
    if (cnt_ >= div_) {
        cnt_ = 0;
        clkd_ = !clkd_;
        if (steps_remaining_ > 0) {
            phase_ = direction_ == Direction::Cw ? (phase_ + 1) % 4 : (phase_ + 3) % 4;
            ++steps_taken_;
            --steps_remaining_;
        }
    }
    return kPhases[phase_];
}

void Stepper::command_door(DoorAction action) {
    if (busy()) {
        throw BusyError("stepper: door command while a move is in flight");
    }
    direction_ = action == DoorAction::Open ? Direction::Cw : Direction::Ccw;
    steps_remaining_ = steps_per_door_;
}

void Stepper::reset() {
    phase_ = 0;
    cnt_ = 0;
    clkd_ = false;
    steps_taken_ = 0;
    steps_remaining_ = 0;
    direction_ = Direction::Cw;
}

StepperBlock::StepperBlock(Simulation& sim, unsigned div, unsigned steps_per_door,
                           bool rotate_on_reset_release)
    : sim_(sim), motor_(div, steps_per_door), rotate_on_reset_release_(rotate_on_reset_release) {
    sig_reset_ = sim_.has_signal("reset") ? sim_.signal("reset") : sim_.add_signal("reset", 1, 0);
    sig_z_ = sim_.add_signal("Z", 4, motor_.coil_word());
    sig_clkd_ = sim_.add_signal("clkd", 1, 0);
    sig_cnt_ = sim_.add_signal("cnt", bits_for(div > 0 ? div - 1 : 0), 0);
}

void StepperBlock::tick(Cycle) {
    std::uint8_t reset = sim_.get(sig_reset_);
    if (reset) {
        motor_.reset();
    } else if (rotate_on_reset_release_ && prev_reset_ == 1 && !motor_.busy()) {
        motor_.command_door(DoorAction::Open);
    }
    prev_reset_ = reset;

    std::uint8_t z = reset ? motor_.coil_word() : motor_.tick();
    sim_.set(sig_z_, z);
    sim_.set(sig_clkd_, motor_.clkd() ? 1 : 0);
    sim_.set(sig_cnt_, motor_.cnt());
}

} // namespace parksim
