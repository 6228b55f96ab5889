// Integer-nanosecond simulated time. No floating point in the clock so
// event ordering and replay are exact.
#ifndef PACKSIM_TIME_HPP
#define PACKSIM_TIME_HPP

#include <cstdint>
#include <compare>

namespace packsim {

struct SimTime {
    int64_t ns = 0;

    constexpr auto operator<=>(const SimTime&) const = default;

    constexpr SimTime operator+(SimTime o) const { return {ns + o.ns}; }
    constexpr SimTime operator-(SimTime o) const { return {ns - o.ns}; }
    SimTime& operator+=(SimTime o) { ns += o.ns; return *this; }

    constexpr double sec() const { return double(ns) * 1e-9; }
};

constexpr SimTime t_zero{0};
constexpr SimTime t_never{INT64_MAX};

constexpr SimTime nanos(int64_t v)  { return {v}; }
constexpr SimTime micros(int64_t v) { return {v * 1000}; }
constexpr SimTime millis(int64_t v) { return {v * 1000000}; }
constexpr SimTime seconds(double v) { return {int64_t(v * 1e9 + (v >= 0 ? 0.5 : -0.5))}; }

constexpr SimTime scale(SimTime t, double k) { return {int64_t(double(t.ns) * k + 0.5)}; }

} // namespace packsim

#endif
