#pragma once

#include <cstdint>

namespace lln {

// All simulation time is integer microseconds since simulation start.
// Protocol constants are expressed in ticks of this clock so that runs
// are bit-reproducible across hosts.
using SimTime = std::int64_t;

constexpr SimTime kMicrosecond = 1;
constexpr SimTime kMillisecond = 1000;
constexpr SimTime kSecond = 1000000;

constexpr SimTime ms(std::int64_t v) { return v * kMillisecond; }
constexpr SimTime seconds(std::int64_t v) { return v * kSecond; }

} // namespace lln
