#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "artiplan/generator.hpp"
#include "artiplan/instance_io.hpp"

namespace artiplan {

/// Penalised average runtime: the elapsed time when solved within the limit,
/// ten times the limit otherwise. Throws if elapsed exceeds the limit.
double par10(std::optional<double> elapsed_s, double limit_s);

struct BenchConfig {
    int links_from = 4;
    int links_to = 12;
    std::vector<int> orientations = {4, 6, 8, 12};
    int per_cell = 5;
    double timeout_s = 300.0;
    std::vector<Encoding> encodings = {Encoding::Sas, Encoding::Saes, Encoding::Maes};
    std::uint64_t seed = 1;
    int workers = 1;
    bool reject_trivial = false;
    int max_horizon = 64;
};

struct InstanceRecord {
    int index = 0;
    enum class Outcome { Solved, Timeout, Unsat } outcome = Outcome::Timeout;
    double elapsed_s = 0.0;
    int plan_length = -1;

    bool solved() const { return outcome == Outcome::Solved; }
};

struct CellReport {
    int links = 0;
    int orientations = 0;
    Encoding encoding = Encoding::Sas;
    std::vector<InstanceRecord> instances;

    double coverage() const; // percent solved
};

/// Mean penalised runtime over the cell's raw records.
double cell_par10(const CellReport& cell, double limit_s);

struct BenchReport {
    BenchConfig config;
    std::vector<CellReport> cells;

    const CellReport* cell(int links, int orientations, Encoding e) const;
};

/// Pluggable per-instance run so tests can script outcomes; the default
/// runner calls solve() under the wall clock.
using SolveRunner =
    std::function<InstanceRecord(const Instance&, Encoding, const BenchConfig&, int index)>;

SolveRunner default_runner();

/// Generates the seeded instance grid and runs every encoding on it. Both
/// gripper models share one extended instance set per cell; the chain model
/// gets its own shape. Instances run concurrently up to `workers`.
BenchReport run_bench(const BenchConfig& config, const SolveRunner& runner = default_runner());

/// Text table grouped by orientation count, one row per link count, with
/// PAR10 and coverage columns per encoding; unsolved cells print "--".
std::string format_table(const BenchReport& report);

/// Machine-readable form with the raw per-instance records.
std::string report_to_json(const BenchReport& report);

} // namespace artiplan
