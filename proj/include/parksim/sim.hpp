#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace parksim {

/// Simulation time in clock cycles. All behavior is expressed in whole
/// cycles; there is no sub-cycle timing.
using Cycle = std::uint64_t;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency check fails (a bug, not bad input).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SignalId {
    std::string name; // dotted names become nested VCD scopes, e.g. "ident.w2"
    unsigned width = 1; // bits, 1..8
};

struct TraceEvent {
    Cycle cycle = 0;
    std::size_t signal = 0;
    std::uint8_t value = 0;
};

/// Change-only record of signal activity over a run. Events are ordered by
/// cycle; within a cycle they follow signal declaration order. Consecutive
/// events on one signal always carry different values.
class Trace {
public:
    std::size_t declare(const std::string& name, unsigned width, std::uint8_t initial = 0);

    /// Append a change event. Rejects values wider than the signal,
    /// out-of-order cycles and no-op (same value) records.
    void record(Cycle t, std::size_t signal, std::uint8_t value);

    const std::vector<SignalId>& signals() const { return signals_; }
    const std::vector<std::uint8_t>& initial_values() const { return initials_; }
    const std::vector<TraceEvent>& events() const { return events_; }

    bool has_signal(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;

    /// Value of a signal as of the end of cycle t (initial value if the
    /// signal never changed up to and including t).
    std::uint8_t value_at(std::size_t signal, Cycle t) const;
    std::uint8_t value_at(const std::string& name, Cycle t) const;

    /// Per-signal change list (cycle, new value), ordered by cycle.
    const std::vector<std::pair<Cycle, std::uint8_t>>& changes_of(std::size_t signal) const;
    const std::vector<std::pair<Cycle, std::uint8_t>>& changes_of(const std::string& name) const;

private:
    std::vector<SignalId> signals_;
    std::vector<std::uint8_t> initials_;
    std::vector<TraceEvent> events_;
    std::vector<std::vector<std::pair<Cycle, std::uint8_t>>> per_signal_;
    std::unordered_map<std::string, std::size_t> by_name_;
};

class Tickable {
public:
    virtual ~Tickable() = default;
    virtual void tick(Cycle now) = 0;
};

/// Deterministic cycle scheduler. Components are ticked once per cycle in
/// ascending registration order; at the end of each cycle every signal whose
/// value changed is recorded into the trace. A 1-bit `clk` marker signal is
/// declared by the kernel itself and toggles every cycle.
class Simulation {
public:
    Simulation();

    /// Declare a named signal. Must happen before the first run() call.
    std::size_t add_signal(const std::string& name, unsigned width, std::uint8_t initial = 0);

    std::size_t signal(const std::string& name) const;
    bool has_signal(const std::string& name) const;

    void set(std::size_t sig, unsigned value);
    std::uint8_t get(std::size_t sig) const;
    unsigned width_of(std::size_t sig) const;

    /// Register a component to be ticked each cycle. `order` values must be
    /// unique; lower orders tick first.
    void register_component(Tickable& component, unsigned order);

    /// Advance exactly n cycles and return the accumulated trace.
    const Trace& run(Cycle n);

    const Trace& trace() const { return trace_; }
    Cycle now() const { return now_; }

private:
    struct Entry {
        Tickable* component;
        unsigned order;
    };

    std::vector<Entry> components_; // sorted by order
    std::vector<std::uint8_t> board_; // live values, indexed like trace signals
    std::vector<std::uint8_t> captured_; // last values written to the trace
    Trace trace_;
    Cycle now_ = 0;
    bool started_ = false;
    std::size_t clk_;
};

} // namespace parksim
