#pragma once

#include <vector>

namespace artiplan {

/// Degrees, canonical range [0, 360).
using Angle = int;

/// Folds an arbitrary degree value into [0, 360).
constexpr Angle normalize_angle(int raw) {
    int m = raw % 360;
    return m < 0 ? m + 360 : m;
}

/// The admissible angle set generated from granularity: closure of 0 under
/// repeated +granularity modulo 360, sorted ascending.
std::vector<Angle> angles_for_granularity(int granularity);

/// True when a rotation from `from` to `to` is one granularity step,
/// wraparound across 0/360 included. Equivalent to
/// |to - from| being granularity or 360 - granularity.
constexpr bool one_step_apart(int granularity, Angle to, Angle from) {
    if (to == from) {
        return false;
    }
    const int d = normalize_angle(to - from);
    return d == granularity || d == 360 - granularity;
}

} // namespace artiplan
