#include "artiplan/plan.hpp"

namespace artiplan {

bool plan_well_formed(const Plan& plan) {
    for (size_t i = 0; i < plan.size(); ++i) {
        if (plan[i].timestep != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

} // namespace artiplan
