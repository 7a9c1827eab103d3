#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "artiplan/bench.hpp"
#include "artiplan/consistency.hpp"
#include "artiplan/generator.hpp"
#include "artiplan/instance_io.hpp"
#include "artiplan/macro.hpp"
#include "artiplan/planner.hpp"
#include "artiplan/render.hpp"
#include "artiplan/validator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseError = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitUnsat = 4;
constexpr int kExitTimeout = 5;
constexpr int kExitInvalidPlan = 6;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    if (!std::filesystem::exists(path)) {
        throw CliError{kExitNoInput, "file not found: " + path};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError{kExitNoInput, "cannot open: " + path};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

artiplan::Instance load_instance(const std::string& path) {
    try {
        return artiplan::parse_instance(read_file(path));
    } catch (const artiplan::ParseError& e) {
        throw CliError{kExitParseError, path + ": " + e.what()};
    }
}

artiplan::Plan load_plan(const std::string& path) {
    try {
        return artiplan::parse_plan(read_file(path));
    } catch (const artiplan::ParseError& e) {
        throw CliError{kExitParseError, path + ": " + e.what()};
    }
}

artiplan::Encoding parse_encoding(const std::string& s) {
    auto e = artiplan::encoding_from_string(s);
    if (!e) {
        throw CliError{kExitUsage, "unknown encoding: " + s};
    }
    return *e;
}

void require_consistent(const artiplan::Instance& inst) {
    const auto violations = artiplan::check(inst);
    if (!violations.empty()) {
        std::string msg;
        for (const auto& v : violations) {
            msg += to_string(v) + "\n";
        }
        msg.pop_back();
        throw CliError{kExitInconsistent, msg};
    }
}

std::pair<int, int> parse_links_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CliError{kExitUsage, "cannot parse links range: " + s};
    }
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
    if (!path) {
        std::cout << content;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
        throw CliError{kExitNoInput, "cannot write: " + *path};
    }
    out << content;
}

int run(int argc, char** argv) {
    CLI::App app{"planner, validator and benchmark harness for articulated-object "
                 "manipulation"};
    app.set_version_flag("--version", "artiplan 0.1.0");
    app.set_config("--config");
    app.require_subcommand(1);

    // check
    auto* cmd_check = app.add_subcommand("check", "run the consistency checks");
    std::string check_file;
    cmd_check->add_option("instance", check_file, "instance file")->required();

    // plan
    auto* cmd_plan = app.add_subcommand("plan", "compute a shortest plan");
    std::string plan_file;
    std::string plan_encoding = "sas";
    int plan_max_horizon = 64;
    double plan_timeout = 0.0;
    bool plan_mixed = false;
    std::optional<std::string> plan_out;
    cmd_plan->add_option("instance", plan_file, "instance file")->required();
    cmd_plan->add_option("--encoding", plan_encoding, "sas, saes or maes")->required();
    cmd_plan->add_option("--max-horizon", plan_max_horizon, "largest plan length tried");
    cmd_plan->add_option("--timeout", plan_timeout, "time budget in seconds (0: none)");
    cmd_plan->add_flag("--mixed", plan_mixed,
                       "maes only: keep the elementary operators in the action set");
    cmd_plan->add_option("--out", plan_out, "write the plan to a file instead of stdout");

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "replay a plan against an instance");
    std::string val_instance, val_plan;
    std::string val_encoding = "sas";
    bool val_json = false;
    bool val_mixed = false;
    cmd_validate->add_option("instance", val_instance, "instance file")->required();
    cmd_validate->add_option("plan", val_plan, "plan file")->required();
    cmd_validate->add_option("--encoding", val_encoding, "sas, saes or maes")->required();
    cmd_validate->add_flag("--json", val_json, "machine-readable report");
    cmd_validate->add_flag("--mixed", val_mixed, "accept elementary operators in maes plans");

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "generate random instances");
    std::string gen_scenario = "sas";
    int gen_links = 5;
    int gen_orientations = 4;
    int gen_count = 1;
    std::uint64_t gen_seed = 1;
    bool gen_reject_trivial = false;
    std::optional<std::string> gen_out_dir;
    cmd_gen->add_option("--scenario", gen_scenario, "sas or saes instance shape");
    cmd_gen->add_option("--links", gen_links, "number of links");
    cmd_gen->add_option("--orientations", gen_orientations, "allowed orientations");
    cmd_gen->add_option("--count", gen_count, "instances to generate");
    cmd_gen->add_option("--seed", gen_seed, "random seed");
    cmd_gen->add_flag("--reject-trivial", gen_reject_trivial,
                      "redraw goals equal to the initial configuration");
    cmd_gen->add_option("--out-dir", gen_out_dir, "write one .lp file per instance");

    // bench
    auto* cmd_bench = app.add_subcommand("bench", "coverage / PAR10 benchmark grid");
    std::string bench_links = "4..12";
    std::vector<int> bench_orientations = {4, 6, 8, 12};
    int bench_per_cell = 5;
    double bench_timeout = 300.0;
    std::vector<std::string> bench_encodings = {"sas", "saes", "maes"};
    std::uint64_t bench_seed = 1;
    int bench_workers = 1;
    bool bench_reject_trivial = false;
    int bench_max_horizon = 64;
    std::optional<std::string> bench_out;
    cmd_bench->add_option("--links", bench_links, "link range, e.g. 4..12");
    cmd_bench->add_option("--orientations", bench_orientations, "orientation counts")
        ->delimiter(',');
    cmd_bench->add_option("--per-cell", bench_per_cell, "instances per grid cell");
    cmd_bench->add_option("--timeout", bench_timeout, "per-instance limit in seconds");
    cmd_bench->add_option("--encodings", bench_encodings, "encodings to run")
        ->delimiter(',');
    cmd_bench->add_option("--seed", bench_seed, "random seed");
    cmd_bench->add_option("--workers", bench_workers, "parallel solver workers");
    cmd_bench->add_flag("--reject-trivial", bench_reject_trivial,
                        "redraw goals equal to the initial configuration");
    cmd_bench->add_option("--max-horizon", bench_max_horizon, "largest plan length tried");
    cmd_bench->add_option("--out", bench_out, "write the JSON report here");

    // render
    auto* cmd_render = app.add_subcommand("render", "draw the initial configuration as SVG");
    std::string render_file;
    int render_width = 400;
    int render_height = 400;
    double render_stroke = 4.0;
    std::optional<std::string> render_out;
    cmd_render->add_option("instance", render_file, "instance file")->required();
    cmd_render->add_option("--width", render_width, "canvas width");
    cmd_render->add_option("--height", render_height, "canvas height");
    cmd_render->add_option("--stroke", render_stroke, "stroke width");
    cmd_render->add_option("--out", render_out, "write the SVG to a file");

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "expand a macro plan to elementary actions");
    std::string expand_file;
    cmd_expand->add_option("plan", expand_file, "macro plan file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (cmd_check->parsed()) {
        const auto inst = load_instance(check_file);
        const auto violations = artiplan::check(inst);
        for (const auto& v : violations) {
            std::cout << to_string(v) << "\n";
        }
        return violations.empty() ? kExitOk : kExitInconsistent;
    }

    if (cmd_plan->parsed()) {
        const auto inst = load_instance(plan_file);
        require_consistent(inst);
        const auto encoding = parse_encoding(plan_encoding);
        artiplan::SolveOptions opts;
        opts.max_horizon = plan_max_horizon;
        opts.time_budget_s = plan_timeout;
        opts.mixed = plan_mixed;
        const auto result = artiplan::solve(inst, encoding, opts);
        std::cerr << "expanded " << result.stats.expanded << " states in "
                  << result.stats.elapsed_s << " s\n";
        switch (result.outcome) {
        case artiplan::SolveResult::Outcome::FoundPlan:
            write_output(plan_out, artiplan::serialize_plan(*result.plan));
            return kExitOk;
        case artiplan::SolveResult::Outcome::UnsatWithinLimit:
            std::cerr << "no plan within horizon " << plan_max_horizon << "\n";
            return kExitUnsat;
        case artiplan::SolveResult::Outcome::Timeout:
            std::cerr << "time budget exhausted at horizon "
                      << result.stats.horizon_reached << "\n";
            return kExitTimeout;
        }
    }

    if (cmd_validate->parsed()) {
        const auto inst = load_instance(val_instance);
        const auto plan = load_plan(val_plan);
        const auto encoding = parse_encoding(val_encoding);
        const auto report = artiplan::validate(inst, plan, encoding, val_mixed);
        if (val_json) {
            nlohmann::json j;
            j["valid"] = report.valid();
            if (!report.valid()) {
                j["failing_step"] = *report.failing_step;
                j["reason"] = report.reason;
            }
            j["steps"] = plan.size();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << to_string(report) << "\n";
        }
        return report.valid() ? kExitOk : kExitInvalidPlan;
    }

    if (cmd_gen->parsed()) {
        artiplan::GenOptions opts;
        const auto scenario = parse_encoding(gen_scenario);
        opts.scenario = scenario == artiplan::Encoding::Sas ? artiplan::Encoding::Sas
                                                            : artiplan::Encoding::Saes;
        opts.reject_trivial = gen_reject_trivial;
        const auto instances =
            artiplan::gen_instances(gen_seed, gen_links, gen_orientations, gen_count, opts);
        if (!gen_out_dir && instances.size() > 1) {
            throw CliError{kExitUsage, "--out-dir is required when --count exceeds 1"};
        }
        if (!gen_out_dir) {
            std::cout << artiplan::serialize_instance(instances.front());
            return kExitOk;
        }
        std::filesystem::create_directories(*gen_out_dir);
        for (size_t i = 0; i < instances.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "instance_%03zu.lp", i);
            write_output(*gen_out_dir + "/" + name,
                         artiplan::serialize_instance(instances[i]));
        }
        return kExitOk;
    }

    if (cmd_bench->parsed()) {
        artiplan::BenchConfig cfg;
        const auto [from, to] = parse_links_range(bench_links);
        cfg.links_from = from;
        cfg.links_to = to;
        cfg.orientations = bench_orientations;
        cfg.per_cell = bench_per_cell;
        cfg.timeout_s = bench_timeout;
        cfg.encodings.clear();
        for (const auto& e : bench_encodings) {
            cfg.encodings.push_back(parse_encoding(e));
        }
        cfg.seed = bench_seed;
        cfg.workers = bench_workers;
        cfg.reject_trivial = bench_reject_trivial;
        cfg.max_horizon = bench_max_horizon;
        const auto report = artiplan::run_bench(cfg);
        std::cout << artiplan::format_table(report);
        if (bench_out) {
            write_output(bench_out, artiplan::report_to_json(report));
        }
        return kExitOk;
    }

    if (cmd_render->parsed()) {
        const auto inst = load_instance(render_file);
        artiplan::RenderSpec spec;
        spec.width = render_width;
        spec.height = render_height;
        spec.stroke_width = render_stroke;
        write_output(render_out,
                     artiplan::render_config(inst.initial_state(), inst.topology(), spec));
        return kExitOk;
    }

    if (cmd_expand->parsed()) {
        const auto plan = load_plan(expand_file);
        try {
            std::cout << artiplan::serialize_plan(artiplan::expand(plan));
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitParseError, e.what()};
        }
        return kExitOk;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << e.message << "\n";
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
}
