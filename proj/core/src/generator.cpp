#include "artiplan/generator.hpp"

#include <random>
#include <stdexcept>

namespace artiplan {

namespace {

// Unbiased draw from [0, n) on top of the engine's raw output; the standard
// distributions are not bit-identical across library implementations.
int uniform_below(std::mt19937_64& rng, int n) {
    const std::uint64_t bound = ~0ULL - ~0ULL % static_cast<std::uint64_t>(n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= bound);
    return static_cast<int>(x % static_cast<std::uint64_t>(n));
}

} // namespace

std::vector<Instance> gen_instances(std::uint64_t seed, int links, int orientations,
                                    int count, const GenOptions& opts) {
    if (links < 2) {
        throw std::invalid_argument("at least two links are required");
    }
    if (orientations < 1 || 360 % orientations != 0) {
        throw std::invalid_argument("orientations must divide 360");
    }
    const int granularity = 360 / orientations;
    const Topology topo = opts.scenario == Encoding::Sas
                              ? Topology::sas_chain(links, granularity)
                              : Topology::extended_chain(links, granularity, {1, 2});
    const size_t n = topo.elements().size();

    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::vector<Angle> initial(n);
        std::vector<Angle> target(n);
        for (;;) {
            for (size_t k = 0; k < n; ++k) {
                initial[k] = uniform_below(rng, orientations) * granularity;
                target[k] = uniform_below(rng, orientations) * granularity;
            }
            if (!opts.reject_trivial || initial != target) {
                break;
            }
        }
        std::vector<std::pair<int, Angle>> goals;
        for (size_t k = 0; k < n; ++k) {
            goals.emplace_back(topo.elements()[k], target[k]);
        }
        out.push_back(make_instance(topo, State::from_angles(topo, initial), goals));
    }
    return out;
}

} // namespace artiplan
