#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artiplan/plan.hpp"
#include "artiplan/state.hpp"
#include "artiplan/topology.hpp"

namespace artiplan {

struct SourcePos {
    int line = 1;
    int col = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& msg)
        : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                             std::to_string(pos.col) + ": " + msg),
          pos_(pos) {}

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

/// One ground fact as read from an instance file, intervals already expanded.
struct Fact {
    std::string pred;
    std::vector<int> args;
    SourcePos pos{};

    bool operator==(const Fact& o) const { return pred == o.pred && args == o.args; }
};

std::string to_string(const Fact& f);

/// A parsed problem instance. Facts are kept verbatim (expanded but in input
/// order) so the consistency checks can report on exactly what was written;
/// the typed views below interpret them and may throw on malformed content
/// that only the consistency module is meant to tolerate.
struct Instance {
    /// Input shape: Saes for files with link/connected facts, Sas otherwise.
    Encoding scenario = Encoding::Sas;
    int granularity = 0;
    std::optional<int> horizon_limit; // #const timemax, advisory only

    /// Explicit time(...) declarations; absent means time steps are
    /// synthesized (every t >= 0 is declared).
    struct TimeInterval {
        int lo = 0;
        std::optional<int> hi; // nullopt: runs to the horizon constant
        bool operator==(const TimeInterval&) const = default;
    };
    std::optional<std::vector<TimeInterval>> times;

    std::vector<Fact> facts;

    bool time_declared(int t) const;

    std::vector<int> declared(std::string_view pred) const; // sorted, unique single-arg values
    std::vector<JointId> joints() const { return declared("joint"); }
    std::vector<LinkId> links() const { return declared("link"); }
    std::vector<GripperId> grippers() const { return declared("gripper"); }
    std::vector<Angle> declared_angles() const { return declared("angle"); }
    std::vector<std::pair<int, Angle>> goals() const;

    Topology topology() const;
    State initial_state() const;
    bool goal_satisfied(const State& s) const;

    bool operator==(const Instance& o) const;
};

/// Parses the fact-syntax instance format: `pred(args).` facts with `a..b`
/// inclusive intervals, `% ...` line comments and `#const` directives.
/// Throws ParseError with a source position on any malformed input.
Instance parse_instance(std::string_view text);

/// Canonical text form: directives first, then facts sorted by predicate
/// name and arguments. parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& inst);

/// Builds an instance from typed parts (used for replanning snapshots and
/// generated benchmark instances).
Instance make_instance(const Topology& topology, const State& initial,
                       const std::vector<std::pair<int, Angle>>& goals);

/// Plan text: one atom per line, the timestep as last argument. Chain-model
/// changeAngle plans print 1-based steps, the extended models 0-based;
/// parsing re-bases to 0 either way.
Plan parse_plan(std::string_view text);
std::string serialize_plan(const Plan& plan);

} // namespace artiplan
