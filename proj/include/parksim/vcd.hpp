#pragma once

#include <string>
#include <string_view>

#include "parksim/sim.hpp"

namespace parksim {

/// Serialize a trace as a Value Change Dump. Signals named "a.b" are placed
/// in a child scope `a` as variable `b`; plain names live in the root scope.
/// Pure function: the same trace always yields the same bytes.
std::string emit_vcd(const Trace& trace, std::string_view timescale = "1 ns");

} // namespace parksim
