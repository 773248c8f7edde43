#include "parksim/lcd.hpp"

#include <stdexcept>

namespace parksim {

bool LcdDevice::valid_ddram(std::uint8_t addr) {
    return addr <= 0x0F || (addr >= kRow1Base && addr <= kRow1Base + 0x0F);
}

void LcdDevice::apply_edge(const LcdBus& bus) {
    if (bus.rw) {
        return; // read transactions are not modeled
    }
    if (bus.rs) {
        unsigned row = cursor_ >= kRow1Base ? 1 : 0;
        unsigned col = cursor_ & 0x0F;
        framebuffer_[row][col] = bus.db;
        if (col + 1 < kColumns) {
            ++cursor_; // saturate at the row end
        }
        return;
    }
    if (bus.db == 0x01) {
        for (auto& row : framebuffer_) {
            row.fill(0x20);
        }
        cursor_ = 0x00;
    } else if (bus.db == 0x0C) {
        display_on_ = true;
    } else if (bus.db == 0x38) {
        // function set: 8-bit bus, 2 lines; accepted, nothing to do
    } else if (bus.db & 0x80) {
        std::uint8_t addr = bus.db & 0x7F;
        if (valid_ddram(addr)) {
            cursor_ = addr;
        } else {
            warnings_.push_back("lcd: set cursor to invalid DDRAM address");
        }
    } else {
        warnings_.push_back("lcd: unsupported command");
    }
}

void LcdDevice::step(const LcdBus& bus) {
    if (prev_e_ && !bus.e) {
        // held_ carries the values present while e was high
        apply_edge(held_);
    }
    prev_e_ = bus.e;
    held_ = bus;
}

void LcdDevice::reset() {
    for (auto& row : framebuffer_) {
        row.fill(0x20);
    }
    cursor_ = 0x00;
    display_on_ = false;
    prev_e_ = false;
    held_ = LcdBus{};
    warnings_.clear();
}

std::string LcdDevice::row_text(unsigned row) const {
    if (row > 1) {
        throw std::out_of_range("lcd: row must be 0 or 1");
    }
    std::string text;
    for (std::uint8_t c : framebuffer_[row]) {
        text.push_back(static_cast<char>(c));
    }
    return text;
}

std::vector<LcdBus> render_message(std::string_view text, unsigned row) {
    if (row > 1) {
        throw std::invalid_argument("render_message: row must be 0 or 1");
    }
    if (text.size() > LcdDevice::kColumns) {
        throw std::invalid_argument("render_message: text longer than 16 characters");
    }
    for (char c : text) {
        if (c < 0x20 || c > 0x7E) {
            throw std::invalid_argument("render_message: non-printable character");
        }
    }
    std::vector<LcdBus> out;
    out.reserve(text.size() + 1);
    std::uint8_t base = row == 0 ? 0x00 : LcdDevice::kRow1Base;
    out.push_back(LcdBus{false, false, true, static_cast<std::uint8_t>(0x80 | base)});
    for (char c : text) {
        out.push_back(LcdBus{true, false, true, static_cast<std::uint8_t>(c)});
    }
    return out;
}

void LcdDriver::enqueue(const std::vector<LcdBus>& transactions) {
    queue_.insert(queue_.end(), transactions.begin(), transactions.end());
}

void LcdDriver::enqueue_clear() {
    queue_.push_back(LcdBus{false, false, true, 0x01});
}

void LcdDriver::enqueue_display_on() {
    queue_.push_back(LcdBus{false, false, true, 0x0C});
}

LcdBus LcdDriver::tick() {
    if (latch_phase_) {
        latch_phase_ = false;
        LcdBus bus = current_;
        bus.e = false;
        return bus;
    }
    if (!queue_.empty()) {
        current_ = queue_.front();
        queue_.pop_front();
        latch_phase_ = true;
        return current_;
    }
    return LcdBus{};
}

void LcdDriver::clear_queue() {
    queue_.clear();
    latch_phase_ = false;
    current_ = LcdBus{};
}

} // namespace parksim
