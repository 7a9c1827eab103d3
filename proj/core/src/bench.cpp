#include "artiplan/bench.hpp"

#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "artiplan/clock.hpp"
#include "artiplan/planner.hpp"

namespace artiplan {

double par10(std::optional<double> elapsed_s, double limit_s) {
    if (!elapsed_s) {
        return 10.0 * limit_s;
    }
    if (*elapsed_s > limit_s) {
        throw std::invalid_argument("elapsed time exceeds the limit");
    }
    return *elapsed_s;
}

double CellReport::coverage() const {
    if (instances.empty()) {
        return 0.0;
    }
    size_t solved = 0;
    for (const InstanceRecord& r : instances) {
        solved += r.solved() ? 1 : 0;
    }
    return 100.0 * static_cast<double>(solved) / static_cast<double>(instances.size());
}

double cell_par10(const CellReport& cell, double limit_s) {
    if (cell.instances.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (const InstanceRecord& r : cell.instances) {
        sum += r.solved() ? par10(r.elapsed_s, limit_s) : par10(std::nullopt, limit_s);
    }
    return sum / static_cast<double>(cell.instances.size());
}

const CellReport* BenchReport::cell(int links, int orientations, Encoding e) const {
    for (const CellReport& c : cells) {
        if (c.links == links && c.orientations == orientations && c.encoding == e) {
            return &c;
        }
    }
    return nullptr;
}

SolveRunner default_runner() {
    return [](const Instance& inst, Encoding e, const BenchConfig& cfg, int index) {
        InstanceRecord r;
        r.index = index;
        if (cfg.timeout_s <= 0.0) {
            r.outcome = InstanceRecord::Outcome::Timeout;
            return r;
        }
        SolveOptions opts;
        opts.time_budget_s = cfg.timeout_s;
        opts.max_horizon = cfg.max_horizon;
        const Clock& clock = steady_clock_instance();
        const double t0 = clock.now();
        SolveResult res = solve(inst, e, opts);
        r.elapsed_s = clock.now() - t0;
        if (res.found() && r.elapsed_s <= cfg.timeout_s) {
            r.outcome = InstanceRecord::Outcome::Solved;
            r.plan_length = static_cast<int>(res.plan->size());
        } else if (res.outcome == SolveResult::Outcome::UnsatWithinLimit &&
                   r.elapsed_s <= cfg.timeout_s) {
            r.outcome = InstanceRecord::Outcome::Unsat;
        } else {
            r.outcome = InstanceRecord::Outcome::Timeout;
            r.elapsed_s = cfg.timeout_s;
        }
        return r;
    };
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, int links, int orientations, bool extended) {
    std::uint64_t x = seed;
    x ^= static_cast<std::uint64_t>(links) * 0x9e3779b97f4a7c15ULL;
    x ^= static_cast<std::uint64_t>(orientations) * 0xc2b2ae3d27d4eb4fULL;
    x ^= extended ? 0x165667b19e3779f9ULL : 0;
    x ^= x >> 31;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
}

std::string outcome_name(InstanceRecord::Outcome o) {
    switch (o) {
    case InstanceRecord::Outcome::Solved:
        return "solved";
    case InstanceRecord::Outcome::Timeout:
        return "timeout";
    case InstanceRecord::Outcome::Unsat:
        return "unsat";
    }
    return "?";
}

} // namespace

BenchReport run_bench(const BenchConfig& config, const SolveRunner& runner) {
    BenchReport report;
    report.config = config;

    struct Task {
        size_t cell = 0;
        int index = 0;
        size_t instance_set = 0;
        Encoding encoding = Encoding::Sas;
    };
    std::vector<std::vector<Instance>> instance_sets;
    std::vector<Task> tasks;

    for (int orientations : config.orientations) {
        for (int links = config.links_from; links <= config.links_to; ++links) {
            GenOptions gen_opts;
            gen_opts.reject_trivial = config.reject_trivial;
            int sas_set = -1;
            int ext_set = -1;
            for (Encoding e : config.encodings) {
                const bool extended = is_extended(e);
                int& set_idx = extended ? ext_set : sas_set;
                if (set_idx < 0) {
                    gen_opts.scenario = extended ? Encoding::Saes : Encoding::Sas;
                    instance_sets.push_back(
                        gen_instances(mix_seed(config.seed, links, orientations, extended),
                                      links, orientations, config.per_cell, gen_opts));
                    set_idx = static_cast<int>(instance_sets.size() - 1);
                }
                CellReport cell;
                cell.links = links;
                cell.orientations = orientations;
                cell.encoding = e;
                cell.instances.resize(static_cast<size_t>(config.per_cell));
                report.cells.push_back(std::move(cell));
                for (int i = 0; i < config.per_cell; ++i) {
                    tasks.push_back(Task{report.cells.size() - 1, i,
                                         static_cast<size_t>(set_idx), e});
                }
            }
        }
    }

    const int workers = std::max(1, config.workers);
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            const Task& t = tasks[i];
            const Instance& inst = instance_sets[t.instance_set][static_cast<size_t>(t.index)];
            report.cells[t.cell].instances[static_cast<size_t>(t.index)] =
                runner(inst, t.encoding, config, t.index);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }
    return report;
}

namespace {

std::string fmt(double v, int precision) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << v;
    return os.str();
}

} // namespace

std::string format_table(const BenchReport& report) {
    std::ostringstream out;
    const auto& cfg = report.config;
    const int w = 10;
    for (int orientations : cfg.orientations) {
        out << "Number of allowed orientations: " << orientations << "\n";
        out << std::left << std::setw(w) << "links";
        for (const Encoding e : cfg.encodings) {
            std::string name = to_string(e);
            for (char& c : name) {
                c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            }
            out << std::setw(w) << ("PAR10/" + name);
        }
        for (const Encoding e : cfg.encodings) {
            std::string name = to_string(e);
            for (char& c : name) {
                c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            }
            out << std::setw(w) << ("Cov/" + name);
        }
        out << "\n";
        for (int links = cfg.links_from; links <= cfg.links_to; ++links) {
            out << std::setw(w) << links;
            for (const Encoding e : cfg.encodings) {
                const CellReport* c = report.cell(links, orientations, e);
                out << std::setw(w) << (c ? fmt(cell_par10(*c, cfg.timeout_s), 2) : "--");
            }
            for (const Encoding e : cfg.encodings) {
                const CellReport* c = report.cell(links, orientations, e);
                const double cov = c ? c->coverage() : 0.0;
                out << std::setw(w) << (cov > 0.0 ? fmt(cov, 1) : "--");
            }
            out << "\n";
        }
        out << "\n";
    }
    return out.str();
}

std::string report_to_json(const BenchReport& report) {
    nlohmann::json j;
    const auto& cfg = report.config;
    std::vector<std::string> encodings;
    for (Encoding e : cfg.encodings) {
        encodings.push_back(to_string(e));
    }
    j["config"] = {
        {"links_from", cfg.links_from},   {"links_to", cfg.links_to},
        {"orientations", cfg.orientations}, {"per_cell", cfg.per_cell},
        {"timeout_s", cfg.timeout_s},     {"encodings", encodings},
        {"seed", cfg.seed},               {"workers", cfg.workers},
        {"reject_trivial", cfg.reject_trivial}, {"max_horizon", cfg.max_horizon},
    };
    j["cells"] = nlohmann::json::array();
    for (const CellReport& c : report.cells) {
        nlohmann::json cell;
        cell["links"] = c.links;
        cell["orientations"] = c.orientations;
        cell["encoding"] = to_string(c.encoding);
        cell["coverage"] = c.coverage();
        cell["par10_mean"] = cell_par10(c, cfg.timeout_s);
        cell["instances"] = nlohmann::json::array();
        for (const InstanceRecord& r : c.instances) {
            cell["instances"].push_back({{"index", r.index},
                                         {"outcome", outcome_name(r.outcome)},
                                         {"elapsed_s", r.elapsed_s},
                                         {"plan_length", r.plan_length}});
        }
        j["cells"].push_back(std::move(cell));
    }
    return j.dump(2) + "\n";
}

} // namespace artiplan
