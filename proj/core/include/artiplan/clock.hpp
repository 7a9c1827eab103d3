#pragma once

#include <chrono>

namespace artiplan {

/// Monotonic time source in seconds, injectable so tests and reports can run
/// against a simulated clock.
class Clock {
public:
    virtual ~Clock() = default;
    virtual double now() const = 0;
};

class SteadyClock final : public Clock {
public:
    double now() const override {
        using namespace std::chrono;
        return duration<double>(steady_clock::now().time_since_epoch()).count();
    }
};

/// Deterministic clock for tests: advances only when told to.
class FakeClock final : public Clock {
public:
    double now() const override { return t_; }
    void advance(double seconds) { t_ += seconds; }
    void set(double seconds) { t_ = seconds; }

private:
    double t_ = 0.0;
};

Clock& steady_clock_instance();

} // namespace artiplan
