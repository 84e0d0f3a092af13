#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace coexsim {

// Simulation clock value in integer nanoseconds. Integer ticks keep duty-cycle
// edges, TTI boundaries and the 4 us symbol grid exact.
class SimTime {
 public:
  constexpr SimTime() = default;

  static constexpr SimTime from_ns(std::int64_t ns) {
    SimTime t;
    t.ns_ = ns;
    return t;
  }
  static SimTime from_seconds(double s) { return from_ns(std::llround(s * 1e9)); }
  static SimTime from_ms(double ms) { return from_ns(std::llround(ms * 1e6)); }
  static SimTime from_us(double us) { return from_ns(std::llround(us * 1e3)); }

  constexpr std::int64_t ns() const { return ns_; }
  constexpr double seconds() const { return static_cast<double>(ns_) * 1e-9; }

  constexpr SimTime& operator+=(SimTime o) {
    ns_ += o.ns_;
    return *this;
  }
  constexpr SimTime& operator-=(SimTime o) {
    ns_ -= o.ns_;
    return *this;
  }
  friend constexpr SimTime operator+(SimTime a, SimTime b) { return from_ns(a.ns_ + b.ns_); }
  friend constexpr SimTime operator-(SimTime a, SimTime b) { return from_ns(a.ns_ - b.ns_); }
  friend constexpr SimTime operator*(SimTime a, std::int64_t k) { return from_ns(a.ns_ * k); }
  friend constexpr SimTime operator*(std::int64_t k, SimTime a) { return from_ns(a.ns_ * k); }
  // Whole multiples of b contained in a.
  friend constexpr std::int64_t operator/(SimTime a, SimTime b) { return a.ns_ / b.ns_; }
  friend constexpr SimTime operator%(SimTime a, SimTime b) {
    std::int64_t r = a.ns_ % b.ns_;
    return from_ns(r < 0 ? r + b.ns_ : r);
  }

  constexpr auto operator<=>(const SimTime&) const = default;

 private:
  std::int64_t ns_ = 0;
};

// Largest multiple of `step` (measured from `origin`) not after t.
constexpr SimTime floor_to_grid(SimTime t, SimTime origin, SimTime step) {
  const SimTime rel = t - origin;
  return t - rel % step;
}

// Smallest multiple of `step` (measured from `origin`) not before t.
constexpr SimTime ceil_to_grid(SimTime t, SimTime origin, SimTime step) {
  SimTime f = floor_to_grid(t, origin, step);
  return f < t ? f + step : f;
}

}  // namespace coexsim
