#include "parksim/vcd.hpp"

#include <map>
#include <sstream>

namespace parksim {

namespace {

// Printable ASCII identifier: '!'..'~', base 94.
std::string vcd_id(std::size_t n) {
    std::string s;
    do {
        s.push_back(static_cast<char>('!' + n % 94));
        n /= 94;
    } while (n > 0);
    return s;
}

std::string format_value(std::uint8_t value, unsigned width, const std::string& id) {
    if (width == 1) {
        return std::string(value ? "1" : "0") + id;
    }
    std::string bits(width, '0');
    for (unsigned i = 0; i < width; ++i) {
        if (value & (1u << (width - 1 - i))) {
            bits[i] = '1';
        }
    }
    return "b" + bits + " " + id;
}

void verify(const Trace& trace) {
    const auto& signals = trace.signals();
    std::vector<std::uint8_t> last = trace.initial_values();
    Cycle prev_cycle = 0;
    bool first = true;
    for (const auto& ev : trace.events()) {
        if (ev.signal >= signals.size()) {
            throw InvariantError("vcd: event references unknown signal");
        }
        unsigned width = signals[ev.signal].width;
        if ((ev.value & ~((1u << width) - 1u)) != 0) {
            throw InvariantError("vcd: event value does not fit signal width");
        }
        if (!first && ev.cycle < prev_cycle) {
            throw InvariantError("vcd: events not sorted by cycle");
        }
        if (last[ev.signal] == ev.value) {
            throw InvariantError("vcd: consecutive events carry the same value");
        }
        last[ev.signal] = ev.value;
        prev_cycle = ev.cycle;
        first = false;
    }
}

} // namespace

std::string emit_vcd(const Trace& trace, std::string_view timescale) {
    verify(trace);

    const auto& signals = trace.signals();
    std::vector<std::string> ids(signals.size());
    for (std::size_t i = 0; i < signals.size(); ++i) {
        ids[i] = vcd_id(i);
    }

    std::ostringstream out;
    out << "$timescale " << timescale << " $end\n";
    out << "$scope module top $end\n";

    // Root vars first, then one child scope per dotted prefix, in first
    // declaration order.
    std::vector<std::string> scope_order;
    std::map<std::string, std::vector<std::size_t>> scoped;
    for (std::size_t i = 0; i < signals.size(); ++i) {
        auto dot = signals[i].name.find('.');
        if (dot == std::string::npos) {
            out << "$var wire " << signals[i].width << " " << ids[i] << " "
                << signals[i].name << " $end\n";
        } else {
            std::string scope = signals[i].name.substr(0, dot);
            if (!scoped.count(scope)) {
                scope_order.push_back(scope);
            }
            scoped[scope].push_back(i);
        }
    }
    for (const auto& scope : scope_order) {
        out << "$scope module " << scope << " $end\n";
        for (std::size_t i : scoped[scope]) {
            out << "$var wire " << signals[i].width << " " << ids[i] << " "
                << signals[i].name.substr(scope.size() + 1) << " $end\n";
        }
        out << "$upscope $end\n";
    }
    out << "$upscope $end\n";
    out << "$enddefinitions $end\n";

    out << "$dumpvars\n";
    for (std::size_t i = 0; i < signals.size(); ++i) {
        out << format_value(trace.initial_values()[i], signals[i].width, ids[i]) << "\n";
    }
    out << "$end\n";

    bool section_open = false;
    Cycle current = 0;
    for (const auto& ev : trace.events()) {
        if (!section_open || ev.cycle != current) {
            out << "#" << ev.cycle << "\n";
            current = ev.cycle;
            section_open = true;
        }
        out << format_value(ev.value, signals[ev.signal].width, ids[ev.signal]) << "\n";
    }
    return out.str();
}

} // namespace parksim
