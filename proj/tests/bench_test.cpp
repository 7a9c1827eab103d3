#include <doctest.h>

#include "artiplan/bench.hpp"
#include "artiplan/consistency.hpp"
#include "support/oracles.hpp"

#include <json.hpp>

using namespace artiplan;

TEST_CASE("penalised runtime scoring") {
    CHECK(par10(std::nullopt, 300.0) == doctest::Approx(3000.0));
    CHECK(par10(2.0, 300.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(par10(301.0, 300.0), std::invalid_argument);

    CellReport cell;
    cell.instances.push_back({0, InstanceRecord::Outcome::Solved, 2.0, 3});
    cell.instances.push_back({1, InstanceRecord::Outcome::Timeout, 300.0, -1});
    CHECK(cell_par10(cell, 300.0) == doctest::Approx(1501.0));
    CHECK(cell.coverage() == doctest::Approx(50.0));
}

TEST_CASE("instance generation is seeded and reproducible") {
    GenOptions opts;
    opts.scenario = Encoding::Saes;
    const auto a = gen_instances(42, 5, 4, 5, opts);
    const auto b = gen_instances(42, 5, 4, 5, opts);
    REQUIRE(a.size() == 5);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(check(a[i]).empty());
        for (const auto& e : a[i].initial_state().angles) {
            CHECK((e.degrees == 0 || e.degrees == 90 || e.degrees == 180 ||
                   e.degrees == 270));
        }
    }
    const auto c = gen_instances(43, 5, 4, 5, opts);
    CHECK(a.front() != c.front());
}

TEST_CASE("trivially satisfied goals can be rejected") {
    GenOptions opts;
    opts.scenario = Encoding::Sas;
    opts.reject_trivial = true;
    for (const Instance& inst : gen_instances(7, 2, 4, 40, opts)) {
        CHECK(!inst.goal_satisfied(inst.initial_state()));
    }
}

namespace {

// Scripted outcomes: deterministic pretend-times keyed by instance index.
SolveRunner scripted_runner() {
    return [](const Instance&, Encoding e, const BenchConfig&, int index) {
        InstanceRecord r;
        r.index = index;
        if (e == Encoding::Saes && index == 1) {
            r.outcome = InstanceRecord::Outcome::Timeout;
            r.elapsed_s = 300.0;
            return r;
        }
        r.outcome = InstanceRecord::Outcome::Solved;
        r.elapsed_s = 0.5 * (index + 1) + (e == Encoding::Maes ? 0.25 : 0.0);
        r.plan_length = index + 2;
        return r;
    };
}

BenchConfig small_config() {
    BenchConfig cfg;
    cfg.links_from = 4;
    cfg.links_to = 5;
    cfg.orientations = {4};
    cfg.per_cell = 2;
    cfg.timeout_s = 300.0;
    cfg.encodings = {Encoding::Sas, Encoding::Saes, Encoding::Maes};
    cfg.seed = 9;
    return cfg;
}

} // namespace

TEST_CASE("reports are identical across runs and worker counts") {
    BenchConfig cfg = small_config();
    const BenchReport one = run_bench(cfg, scripted_runner());
    const std::string json_one = report_to_json(one);
    CHECK(report_to_json(run_bench(cfg, scripted_runner())) == json_one);
    cfg.workers = 4;
    const std::string json_many = report_to_json(run_bench(cfg, scripted_runner()));
    // worker count is part of the config block; the cells must agree
    const auto a = nlohmann::json::parse(json_one);
    const auto b = nlohmann::json::parse(json_many);
    CHECK(a["cells"] == b["cells"]);
}

TEST_CASE("aggregates recompute exactly from the raw records") {
    const BenchReport report = run_bench(small_config(), scripted_runner());
    const auto j = nlohmann::json::parse(report_to_json(report));
    for (const auto& cell : j["cells"]) {
        double sum = 0.0;
        int solved = 0;
        for (const auto& rec : cell["instances"]) {
            if (rec["outcome"] == "solved") {
                ++solved;
                sum += rec["elapsed_s"].get<double>();
            } else {
                sum += 10.0 * report.config.timeout_s;
            }
        }
        const double n = cell["instances"].size();
        CHECK(cell["coverage"].get<double>() == doctest::Approx(100.0 * solved / n));
        CHECK(cell["par10_mean"].get<double>() == doctest::Approx(sum / n));
    }
}

TEST_CASE("the table groups by orientation count with one row per link count") {
    const std::string table = format_table(run_bench(small_config(), scripted_runner()));
    CHECK(doctest::Contains("Number of allowed orientations: 4")(table));
    CHECK(doctest::Contains("PAR10/SAS")(table));
    CHECK(doctest::Contains("Cov/MAES")(table));
    CHECK(doctest::Contains("1500.25")(table)); // saes cell with the scripted timeout
    CHECK(doctest::Contains("--")(table) == false);
}

TEST_CASE("a zero-second limit forces full timeout cells") {
    BenchConfig cfg = small_config();
    cfg.links_to = 4;
    cfg.per_cell = 1;
    cfg.timeout_s = 0.0;
    const BenchReport report = run_bench(cfg); // real runner, skips solving
    for (const CellReport& cell : report.cells) {
        CHECK(cell.coverage() == doctest::Approx(0.0));
        CHECK(cell_par10(cell, cfg.timeout_s) == doctest::Approx(10.0 * cfg.timeout_s));
    }
    const std::string table = format_table(report);
    CHECK(doctest::Contains("--")(table)); // unsolved coverage cells print --
}
