#include "parksim/rf_link.hpp"

#include <stdexcept>

namespace parksim {

std::uint8_t sense(const SensorBank& bank) {
    std::uint8_t nibble = 0;
    for (unsigned i = 0; i < 4; ++i) {
        if (bank.occupancy[i]) {
            nibble |= static_cast<std::uint8_t>(1u << i);
        }
    }
    return nibble;
}

BitStream encode(const Ht12Frame& frame, unsigned repetitions) {
    if (repetitions < 1) {
        throw std::invalid_argument("encode: repetitions must be >= 1");
    }
    BitStream stream;
    stream.reserve(repetitions * kWordBits);
    for (unsigned r = 0; r < repetitions; ++r) {
        stream.push_back(1); // sync
        for (int bit = 7; bit >= 0; --bit) {
            stream.push_back((frame.address >> bit) & 1u);
        }
        for (int bit = 3; bit >= 0; --bit) {
            stream.push_back((frame.data >> bit) & 1u);
        }
    }
    return stream;
}

BitStream corrupt(const BitStream& stream, const std::vector<std::size_t>& flip_positions) {
    BitStream out = stream;
    for (std::size_t pos : flip_positions) {
        if (pos >= out.size()) {
            throw std::out_of_range("corrupt: flip position beyond stream length");
        }
        out[pos] ^= 1u;
    }
    return out;
}

DecodeResult decode(const BitStream& stream, std::uint8_t local_address, unsigned k) {
    if (k < 1) {
        throw std::invalid_argument("decode: k must be >= 1");
    }
    std::size_t words = stream.size() / kWordBits; // trailing partial word ignored
    unsigned run = 0;
    std::uint8_t run_data = 0;
    for (std::size_t w = 0; w < words; ++w) {
        const std::uint8_t* word = stream.data() + w * kWordBits;
        bool valid = word[0] == 1;
        std::uint8_t address = 0;
        for (unsigned i = 0; i < 8; ++i) {
            address = static_cast<std::uint8_t>((address << 1) | word[1 + i]);
        }
        std::uint8_t data = 0;
        for (unsigned i = 0; i < 4; ++i) {
            data = static_cast<std::uint8_t>((data << 1) | word[9 + i]);
        }
        if (valid && address == local_address) {
            if (run > 0 && data == run_data) {
                ++run;
            } else {
                run = 1;
                run_data = data;
            }
            if (run >= k) {
                return DecodeResult{run_data, true};
            }
        } else {
            run = 0;
        }
    }
    return DecodeResult{std::nullopt, false};
}

RfLink::RfLink(Simulation& sim, unsigned banks, unsigned k) : sim_(sim), banks_(banks), k_(k) {
    if (banks_ < 1 || banks_ > 8) {
        throw ConfigError("rf link: banks must be in 1..8");
    }
    if (k_ < 1) {
        throw ConfigError("rf link: k must be >= 1");
    }
    sig_tx_ = sim_.add_signal("rf.rf_tx", 1, 0);
    sig_rx_ = sim_.add_signal("rf.rf_rx", 1, 0);
    sig_vt_ = sim_.add_signal("rf.vt", 1, 0);
}

void RfLink::arm_flip(std::size_t bit_position) {
    armed_flips_.insert(bit_position);
}

void RfLink::start_sweep(const std::vector<bool>& occupancy) {
    if (sweeping()) {
        return;
    }
    if (occupancy.size() < static_cast<std::size_t>(banks_) * 4) {
        throw ConfigError("rf link: occupancy vector shorter than banks*4");
    }
    tx_.clear();
    for (unsigned b = 0; b < banks_; ++b) {
        SensorBank bank;
        bank.bank_index = b;
        bank.address = static_cast<std::uint8_t>(b);
        for (unsigned i = 0; i < 4; ++i) {
            bank.occupancy[i] = occupancy[b * 4 + i];
        }
        BitStream word = encode(Ht12Frame{bank.address, sense(bank)}, k_);
        tx_.insert(tx_.end(), word.begin(), word.end());
    }
    rx_ = tx_;
    for (std::size_t pos : armed_flips_) {
        if (pos < rx_.size()) {
            rx_[pos] ^= 1u;
        }
    }
    armed_flips_.clear();
    cursor_ = 0;
}

void RfLink::tick() {
    completed_pulse_ = false;
    sim_.set(sig_vt_, 0);
    if (!sweeping()) {
        sim_.set(sig_tx_, 0);
        sim_.set(sig_rx_, 0);
        return;
    }
    sim_.set(sig_tx_, tx_[cursor_]);
    sim_.set(sig_rx_, rx_[cursor_]);
    ++cursor_;

    const std::size_t segment = static_cast<std::size_t>(k_) * kWordBits;
    if (cursor_ % segment == 0) {
        unsigned bank = static_cast<unsigned>(cursor_ / segment) - 1;
        BitStream part(rx_.begin() + static_cast<std::ptrdiff_t>(bank * segment),
                       rx_.begin() + static_cast<std::ptrdiff_t>((bank + 1) * segment));
        DecodeResult res = decode(part, static_cast<std::uint8_t>(bank), k_);
        if (res.vt) {
            mailbox_[bank] = res.data;
            sim_.set(sig_vt_, 1);
        }
        if (cursor_ == tx_.size()) {
            completed_pulse_ = true;
        }
    }
}

} // namespace parksim
