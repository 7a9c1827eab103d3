#include "artiplan/angle.hpp"

#include <algorithm>

namespace artiplan {

std::vector<Angle> angles_for_granularity(int granularity) {
    std::vector<Angle> out;
    if (granularity <= 0) {
        return out;
    }
    int a = 0;
    do {
        out.push_back(a);
        a = normalize_angle(a + granularity);
    } while (a != 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace artiplan
