#include "oracles.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "artiplan/macro.hpp"
#include "artiplan/transition_sas.hpp"
#include "artiplan/transition_saes.hpp"

namespace artiplan::testsupport {

std::vector<std::pair<GroundAction, State>> successors(const State& s,
                                                       const Topology& topo,
                                                       Encoding encoding) {
    std::vector<std::pair<GroundAction, State>> out;
    switch (encoding) {
    case Encoding::Sas:
        for (const SasAction& a : applicable_sas(s, topo)) {
            out.emplace_back(to_ground(a, 0), apply_sas(s, topo, a));
        }
        break;
    case Encoding::Saes:
        for (const SaesAction& a : applicable_saes(s, topo)) {
            out.emplace_back(to_ground(a, 0), apply_saes(s, topo, a));
        }
        break;
    case Encoding::Maes:
        for (const GroundAction& a : applicable_macro(s, topo)) {
            out.emplace_back(a, apply_macro(s, topo, a));
        }
        break;
    }
    return out;
}

int bfs_distance(const Instance& inst, Encoding encoding, int depth_cap) {
    const Topology topo = inst.topology();
    const State initial = inst.initial_state();
    if (inst.goal_satisfied(initial)) {
        return 0;
    }
    std::unordered_set<State, StateHash> seen;
    std::deque<std::pair<State, int>> queue;
    seen.insert(initial);
    queue.emplace_back(initial, 0);
    while (!queue.empty()) {
        auto [s, d] = std::move(queue.front());
        queue.pop_front();
        if (d >= depth_cap) {
            continue;
        }
        for (auto& [action, next] : successors(s, topo, encoding)) {
            (void)action;
            if (!seen.insert(next).second) {
                continue;
            }
            if (inst.goal_satisfied(next)) {
                return d + 1;
            }
            queue.emplace_back(std::move(next), d + 1);
        }
    }
    return -1;
}

std::vector<State> reachable_states(const State& initial, const Topology& topo,
                                    Encoding encoding, int max_depth) {
    std::unordered_set<State, StateHash> seen;
    std::vector<State> out;
    std::deque<std::pair<State, int>> queue;
    seen.insert(initial);
    out.push_back(initial);
    queue.emplace_back(initial, 0);
    while (!queue.empty()) {
        auto [s, d] = std::move(queue.front());
        queue.pop_front();
        if (d >= max_depth) {
            continue;
        }
        for (auto& [action, next] : successors(s, topo, encoding)) {
            (void)action;
            if (seen.insert(next).second) {
                out.push_back(next);
                queue.emplace_back(std::move(next), d + 1);
            }
        }
    }
    return out;
}

State random_walk(State s, const Topology& topo, Encoding encoding,
                  std::mt19937_64& rng, int steps) {
    for (int i = 0; i < steps; ++i) {
        auto succ = successors(s, topo, encoding);
        if (succ.empty()) {
            break;
        }
        s = succ[rng() % succ.size()].second;
    }
    return s;
}

std::string fixture_path(const std::string& name) {
    return std::string(ARTIPLAN_FIXTURE_DIR) + "/" + name;
}

std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) {
        throw std::runtime_error("missing fixture " + name);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace artiplan::testsupport
