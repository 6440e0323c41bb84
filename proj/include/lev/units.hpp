#pragma once

namespace lev {

// Canonical internal units are hours and bits/hour. Interfaces that quote
// bits/sec convert exactly at the boundary.
inline constexpr double kSecondsPerHour = 3600.0;

constexpr double bits_per_sec(double v) { return v * kSecondsPerHour; }
constexpr double hours_from_seconds(double s) { return s / kSecondsPerHour; }
constexpr double seconds_from_hours(double h) { return h * kSecondsPerHour; }

// Human speech output asymptote, ~20 bits/sec, expressed in bits/hour.
inline constexpr double kDefaultRhoInMax = 20.0 * kSecondsPerHour;

}  // namespace lev
