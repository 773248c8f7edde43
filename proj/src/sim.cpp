#include "parksim/sim.hpp"

#include <algorithm>

namespace parksim {

namespace {

std::uint8_t width_mask(unsigned width) {
    return static_cast<std::uint8_t>((1u << width) - 1u);
}

} // namespace

std::size_t Trace::declare(const std::string& name, unsigned width, std::uint8_t initial) {
    if (name.empty()) {
        throw ConfigError("signal name must not be empty");
    }
    if (width < 1 || width > 8) {
        throw ConfigError("signal '" + name + "': width must be in 1..8");
    }
    if (by_name_.count(name)) {
        throw ConfigError("duplicate signal name '" + name + "'");
    }
    if ((initial & ~width_mask(width)) != 0) {
        throw ConfigError("signal '" + name + "': initial value does not fit width");
    }
    std::size_t idx = signals_.size();
    signals_.push_back(SignalId{name, width});
    initials_.push_back(initial);
    per_signal_.emplace_back();
    by_name_.emplace(name, idx);
    return idx;
}

void Trace::record(Cycle t, std::size_t signal, std::uint8_t value) {
    if (signal >= signals_.size()) {
        throw InvariantError("trace record: unknown signal index");
    }
    if ((value & ~width_mask(signals_[signal].width)) != 0) {
        throw InvariantError("trace record: value does not fit width of '" + signals_[signal].name + "'");
    }
    if (!events_.empty() && t < events_.back().cycle) {
        throw InvariantError("trace record: cycle went backwards");
    }
    const auto& hist = per_signal_[signal];
    std::uint8_t prev = hist.empty() ? initials_[signal] : hist.back().second;
    if (prev == value) {
        throw InvariantError("trace record: duplicate value for '" + signals_[signal].name + "'");
    }
    events_.push_back(TraceEvent{t, signal, value});
    per_signal_[signal].emplace_back(t, value);
}

bool Trace::has_signal(const std::string& name) const {
    return by_name_.count(name) != 0;
}

std::size_t Trace::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) {
        throw ConfigError("unknown signal '" + name + "'");
    }
    return it->second;
}

std::uint8_t Trace::value_at(std::size_t signal, Cycle t) const {
    if (signal >= signals_.size()) {
        throw InvariantError("trace value_at: unknown signal index");
    }
    const auto& hist = per_signal_[signal];
    auto it = std::upper_bound(hist.begin(), hist.end(), t,
                               [](Cycle c, const std::pair<Cycle, std::uint8_t>& e) { return c < e.first; });
    if (it == hist.begin()) {
        return initials_[signal];
    }
    return std::prev(it)->second;
}

std::uint8_t Trace::value_at(const std::string& name, Cycle t) const {
    return value_at(index_of(name), t);
}

const std::vector<std::pair<Cycle, std::uint8_t>>& Trace::changes_of(std::size_t signal) const {
    if (signal >= per_signal_.size()) {
        throw InvariantError("trace changes_of: unknown signal index");
    }
    return per_signal_[signal];
}

const std::vector<std::pair<Cycle, std::uint8_t>>& Trace::changes_of(const std::string& name) const {
    return changes_of(index_of(name));
}

Simulation::Simulation() {
    clk_ = add_signal("clk", 1, 0);
}

std::size_t Simulation::add_signal(const std::string& name, unsigned width, std::uint8_t initial) {
    if (started_) {
        throw ConfigError("cannot declare signal '" + name + "' after the simulation started");
    }
    std::size_t idx = trace_.declare(name, width, initial);
    board_.push_back(initial);
    captured_.push_back(initial);
    return idx;
}

std::size_t Simulation::signal(const std::string& name) const {
    return trace_.index_of(name);
}

bool Simulation::has_signal(const std::string& name) const {
    return trace_.has_signal(name);
}

void Simulation::set(std::size_t sig, unsigned value) {
    if (sig >= board_.size()) {
        throw InvariantError("set: unknown signal index");
    }
    unsigned width = trace_.signals()[sig].width;
    if ((value & ~static_cast<unsigned>(width_mask(width))) != 0) {
        throw InvariantError("set: value does not fit width of '" + trace_.signals()[sig].name + "'");
    }
    board_[sig] = static_cast<std::uint8_t>(value);
}

std::uint8_t Simulation::get(std::size_t sig) const {
    if (sig >= board_.size()) {
        throw InvariantError("get: unknown signal index");
    }
    return board_[sig];
}

unsigned Simulation::width_of(std::size_t sig) const {
    if (sig >= board_.size()) {
        throw InvariantError("width_of: unknown signal index");
    }
    return trace_.signals()[sig].width;
}

void Simulation::register_component(Tickable& component, unsigned order) {
    if (started_) {
        throw ConfigError("cannot register a component after the simulation started");
    }
    for (const auto& e : components_) {
        if (e.order == order) {
            throw ConfigError("duplicate component order " + std::to_string(order));
        }
    }
    components_.push_back(Entry{&component, order});
    std::sort(components_.begin(), components_.end(),
              [](const Entry& a, const Entry& b) { return a.order < b.order; });
}

const Trace& Simulation::run(Cycle n) {
    started_ = true;
    for (Cycle i = 0; i < n; ++i) {
        board_[clk_] = board_[clk_] ? 0 : 1;
        for (const auto& e : components_) {
            e.component->tick(now_);
        }
        for (std::size_t s = 0; s < board_.size(); ++s) {
            if (board_[s] != captured_[s]) {
                trace_.record(now_, s, board_[s]);
                captured_[s] = board_[s];
            }
        }
        ++now_;
    }
    return trace_;
}

} // namespace parksim
