#pragma once

#include <random>
#include <utility>
#include <vector>

#include "artiplan/instance_io.hpp"
#include "artiplan/plan.hpp"
#include "artiplan/state.hpp"

namespace artiplan::testsupport {

/// Successors under the given encoding's transition semantics, in canonical
/// order, as (ground action, next state) pairs.
std::vector<std::pair<GroundAction, State>> successors(const State& s,
                                                       const Topology& topo,
                                                       Encoding encoding);

/// Shortest plan length by breadth-first search over the full state graph;
/// -1 when no goal state is reachable. Independent of the solver's
/// iterative-deepening machinery.
int bfs_distance(const Instance& inst, Encoding encoding, int depth_cap = 64);

/// Every state reachable within the given depth, initial state included.
std::vector<State> reachable_states(const State& initial, const Topology& topo,
                                    Encoding encoding, int max_depth);

/// A state reached by a uniformly random applicable-action walk.
State random_walk(State s, const Topology& topo, Encoding encoding,
                  std::mt19937_64& rng, int steps);

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);

} // namespace artiplan::testsupport
