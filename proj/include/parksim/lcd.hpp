#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "parksim/sim.hpp"

namespace parksim {

/// Parallel bus of a 16-pin character display. A write is latched on the
/// falling edge of `e` with rw low; rs selects command (0) or data (1).
struct LcdBus {
    bool rs = false;
    bool rw = false;
    bool e = false;
    std::uint8_t db = 0;
};

/// 2x16 character display. Supports clear, display-on, function-set and
/// set-DDRAM-address commands; anything else is logged as a warning and
/// ignored. Row 0 occupies DDRAM 0x00..0x0F, row 1 0x40..0x4F.
class LcdDevice {
public:
    static constexpr unsigned kColumns = 16;
    static constexpr std::uint8_t kRow1Base = 0x40;

    /// Decode one latched transaction (a falling-edge bus sample).
    void apply_edge(const LcdBus& bus);

    /// Per-cycle sampling: latches only when `e` falls with rw low. Holding
    /// the bus steady never changes the display.
    void step(const LcdBus& bus);

    void reset();

    std::string row_text(unsigned row) const;
    const std::array<std::array<std::uint8_t, kColumns>, 2>& framebuffer() const {
        return framebuffer_;
    }
    std::uint8_t cursor() const { return cursor_; }
    bool display_on() const { return display_on_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::array<std::array<std::uint8_t, kColumns>, 2> framebuffer_{{
        {0x20, 0x20, 0x20, 0x20, 0x20, 0x20, 0x20, 0x20,
         0x20, 0x20, 0x20, 0x20, 0x20, 0x20, 0x20, 0x20},
        {0x20, 0x20, 0x20, 0x20, 0x20, 0x20, 0x20, 0x20,
         0x20, 0x20, 0x20, 0x20, 0x20, 0x20, 0x20, 0x20},
    }};
    std::uint8_t cursor_ = 0x00;
    bool display_on_ = false;
    bool prev_e_ = false;
    LcdBus held_{};
    std::vector<std::string> warnings_;

    static bool valid_ddram(std::uint8_t addr);
};

/// Bus transactions that print `text` on the given row: one set-cursor
/// command followed by one data write per character. Text must be at most 16
/// printable ASCII characters.
std::vector<LcdBus> render_message(std::string_view text, unsigned row);

/// Plays queued transactions onto the bus, two cycles each: a setup cycle
/// with `e` high and a latch cycle with `e` low, so every transaction shows
/// a falling edge in the trace.
class LcdDriver {
public:
    void enqueue(const std::vector<LcdBus>& transactions);
    void enqueue_clear();
    void enqueue_display_on();

    /// Bus values to drive for the current cycle.
    LcdBus tick();

    bool idle() const { return queue_.empty() && !latch_phase_; }
    void clear_queue();

private:
    std::deque<LcdBus> queue_;
    LcdBus current_{};
    bool latch_phase_ = false;
};

} // namespace parksim
