#include "artiplan/clock.hpp"

namespace artiplan {

Clock& steady_clock_instance() {
    static SteadyClock clock;
    return clock;
}

} // namespace artiplan
