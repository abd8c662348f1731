#include <CLI11.hpp>

#include "grsim/aggregate.hpp"
#include "grsim/complexity.hpp"
#include "grsim/debruijn.hpp"
#include "grsim/error.hpp"
#include "grsim/global_rule.hpp"
#include "grsim/labels.hpp"
#include "grsim/sweep.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace grsim;

namespace {

struct app_config {
    int width = 26;
    int steps = 60;
    int init_count = 100;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    bool strict_conflicts = false;
    std::string thresholds_path;
    std::string labels_path;
};

labeled_rules load_labels(const app_config& config) {
    if (config.labels_path.empty()) {
        return labeled_rules::builtin();
    }
    return labeled_rules::load(config.labels_path);
}

std::vector<configuration> experiment_inits(const app_config& config) {
    int order = 1;
    long long span = 3;
    while (span < config.width) {
        span *= 3;
        ++order;
    }
    return debruijn_inits(3, order, config.init_count, config.width);
}

// Loads the thresholds file when one is configured, otherwise calibrates
// in-process on the configured grid dimensions.
thresholds load_thresholds(const app_config& config) {
    if (!config.thresholds_path.empty()) {
        return thresholds::load(config.thresholds_path);
    }
    return calibrate(load_labels(config), config.width, config.steps, experiment_inits(config));
}

// --grs accepts "2-11", "1,5,36983" or "sample:SEED:COUNT".
std::vector<std::uint32_t> parse_gr_spec(const std::string& spec) {
    std::set<std::uint32_t> indices;
    auto add_checked = [&](long long value) {
        if (value < 1 || value > static_cast<long long>(mixed_assignment_total)) {
            throw data_error("GR index out of range [1,531441]: " + std::to_string(value));
        }
        indices.insert(static_cast<std::uint32_t>(value));
    };
    if (spec.starts_with("sample:")) {
        unsigned long seed = 0;
        long long count = 0;
        if (std::sscanf(spec.c_str(), "sample:%lu:%lld", &seed, &count) != 2 || count < 1) {
            throw data_error("malformed sample spec (want sample:SEED:COUNT): " + spec);
        }
        if (count > static_cast<long long>(mixed_assignment_total)) {
            throw data_error("sample count exceeds the GR space: " + std::to_string(count));
        }
        std::mt19937 rng(static_cast<std::uint32_t>(seed));
        std::uniform_int_distribution<std::uint32_t> pick(1, mixed_assignment_total);
        while (indices.size() < static_cast<std::size_t>(count)) {
            indices.insert(pick(rng));
        }
    } else if (spec.find('-') != std::string::npos) {
        long long lo = 0;
        long long hi = 0;
        if (std::sscanf(spec.c_str(), "%lld-%lld", &lo, &hi) != 2 || lo > hi) {
            throw data_error("malformed GR range (want LO-HI): " + spec);
        }
        for (long long v = lo; v <= hi; ++v) {
            add_checked(v);
        }
    } else {
        std::size_t pos = 0;
        while (pos < spec.size()) {
            std::size_t comma = spec.find(',', pos);
            std::string item = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
            try {
                if (item.empty()) {
                    throw std::invalid_argument("empty item");
                }
                std::size_t used = 0;
                long long value = std::stoll(item, &used);
                if (used != item.size()) {
                    throw std::invalid_argument("trailing characters");
                }
                add_checked(value);
            } catch (const data_error&) {
                throw;
            } catch (const std::exception&) {
                throw data_error("malformed GR list: " + spec);
            }
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
    }
    if (indices.empty()) {
        throw data_error("GR spec selects nothing: " + spec);
    }
    return {indices.begin(), indices.end()};
}

void echo_config(const app_config& config, const std::string& command, const std::string& extra,
                 const std::string& dir) {
    std::ofstream out(fs::path(dir) / "config.txt");
    if (!out) {
        throw io_error("cannot write config echo in " + dir);
    }
    out << "command=" << command << "\n"
        << "width=" << config.width << "\n"
        << "steps=" << config.steps << "\n"
        << "inits=" << config.init_count << "\n"
        << "jobs=" << config.jobs << "\n"
        << "strict=" << (config.strict_conflicts ? 1 : 0) << "\n"
        << "thresholds=" << (config.thresholds_path.empty() ? "<calibrated>" : config.thresholds_path)
        << "\n"
        << "labels=" << (config.labels_path.empty() ? "<builtin>" : config.labels_path) << "\n";
    if (!extra.empty()) {
        out << extra;
    }
}

void print_record(const run_record& record) {
    std::cout << "gr_index,eps,eps_prime,init_index,score,class,conflict\n"
              << format_record(record) << "\n";
}

configuration nth_init(const app_config& config, int init_index) {
    if (init_index < 1) {
        throw data_error("init index must be >= 1, got " + std::to_string(init_index));
    }
    app_config nth = config;
    nth.init_count = init_index;
    return experiment_inits(nth).back();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interacting elementary cellular automata under 3-color global rules:\n"
                 "single runs, compression-based classification, parameter sweeps and\n"
                 "heat-map aggregation."};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand name
    app.set_config("--config", "", "flat key=value configuration file");

    app_config config;
    app.add_option("--width", config.width, "row width")->capture_default_str();
    app.add_option("--steps", config.steps, "time steps per run")->capture_default_str();
    app.add_option("--inits", config.init_count, "number of de Bruijn initial conditions")
        ->capture_default_str();
    app.add_option("--jobs", config.jobs, "worker threads for sweep")->capture_default_str();
    app.add_flag("--strict", config.strict_conflicts,
                 "reject shared-triplet conflicts instead of flagging them");
    app.add_option("--thresholds", config.thresholds_path,
                   "thresholds file (calibrated on the fly when omitted)");
    app.add_option("--labels", config.labels_path, "rule class label file (builtin when omitted)");

    auto* cmd_rules = app.add_subcommand("rules", "list the 88 representatives with class labels");

    auto* cmd_step = app.add_subcommand("step", "evolve one ECA and render the grid");
    int step_rule = 0;
    std::string step_init;
    std::string step_render;
    cmd_step->add_option("--rule", step_rule, "ECA rule number")->required();
    cmd_step->add_option("--init", step_init, "initial row as digits, e.g. 0001000")->required();
    cmd_step->add_option("--render", step_render, "also write <stem>.txt and <stem>.ppm");

    auto* cmd_compose = app.add_subcommand("compose", "print a composed global rule table");
    int compose_eps = 0;
    int compose_eps_prime = 0;
    std::uint32_t compose_gr = 1;
    cmd_compose->add_option("--eps", compose_eps, "rule on alphabet {0,1}")->required();
    cmd_compose->add_option("--eps-prime", compose_eps_prime, "rule on alphabet {0,2}")->required();
    cmd_compose->add_option("--gr", compose_gr, "mixed assignment index 1..531441")->required();

    auto* cmd_run = app.add_subcommand("run", "one interacting execution");
    int run_eps = 0;
    int run_eps_prime = 0;
    std::uint32_t run_gr = 1;
    int run_init_index = 1;
    cmd_run->add_option("--eps", run_eps)->required();
    cmd_run->add_option("--eps-prime", run_eps_prime)->required();
    cmd_run->add_option("--gr", run_gr)->required();
    cmd_run->add_option("--init-index", run_init_index, "1-based de Bruijn input index")
        ->capture_default_str();

    auto* cmd_isolated = app.add_subcommand("isolated", "baseline run without interaction");
    int isolated_rule = 0;
    int isolated_init_index = 1;
    cmd_isolated->add_option("--rule", isolated_rule)->required();
    cmd_isolated->add_option("--init-index", isolated_init_index)->capture_default_str();

    auto* cmd_debruijn = app.add_subcommand("debruijn", "dump de Bruijn initial conditions");
    int de_order = 3;
    int de_alphabet = 3;
    int de_count = 100;
    int de_width = 26;
    cmd_debruijn->add_option("--order", de_order)->capture_default_str();
    cmd_debruijn->add_option("--alphabet", de_alphabet)->capture_default_str();
    cmd_debruijn->add_option("--count", de_count)->capture_default_str();
    cmd_debruijn->add_option("--width", de_width)->capture_default_str();

    auto* cmd_calibrate = app.add_subcommand("calibrate", "train class thresholds");
    std::string calibrate_out;
    cmd_calibrate->add_option("--out", calibrate_out, "thresholds output file")->required();

    auto* cmd_sweep = app.add_subcommand("sweep", "run the experiment matrix");
    std::string sweep_grs;
    std::string sweep_out;
    bool sweep_resume = false;
    cmd_sweep->add_option("--grs", sweep_grs, "LIST, LO-HI or sample:SEED:COUNT")->required();
    cmd_sweep->add_option("--out", sweep_out, "output directory")->required();
    cmd_sweep->add_flag("--resume", sweep_resume, "continue into a directory with shards");

    auto* cmd_aggregate = app.add_subcommand("aggregate", "heat maps from sweep shards");
    std::string agg_in;
    std::string agg_csv;
    std::string agg_svg;
    cmd_aggregate->add_option("--in", agg_in, "sweep output directory")->required();
    cmd_aggregate->add_option("--out-csv", agg_csv, "heat-map CSV path")->required();
    cmd_aggregate->add_option("--out-svg", agg_svg, "heat-map SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    if (config.jobs < 1) {
        config.jobs = 1;
    }

    try {
        if (*cmd_rules) {
            auto labels = load_labels(config);
            for (int rep : representatives()) {
                std::cout << rep << ',' << labels.class_of(rep) << "\n";
            }
        } else if (*cmd_step) {
            auto rule = eca_rule::from_number(step_rule);
            auto init = configuration::from_digits(step_init);
            auto grid = evolve(rule, init, config.steps);
            for (int t = 0; t < grid.rows(); ++t) {
                auto row = grid.row(t);
                for (symbol s : row) {
                    std::cout << static_cast<char>('0' + s);
                }
                std::cout << "\n";
            }
            if (!step_render.empty()) {
                render_grid(grid, step_render);
            }
        } else if (*cmd_compose) {
            auto gr = compose(eca_rule::from_number(compose_eps),
                              eca_rule::from_number(compose_eps_prime),
                              mixed_assignment::from_index(compose_gr), config.strict_conflicts);
            std::cout << gr.table_string() << "\n"
                      << "conflict=" << (gr.conflict ? 1 : 0) << "\n";
        } else if (*cmd_run) {
            auto th = load_thresholds(config);
            auto record = run_one(eca_rule::from_number(run_eps),
                                  eca_rule::from_number(run_eps_prime),
                                  mixed_assignment::from_index(run_gr),
                                  nth_init(config, run_init_index), run_init_index, config.steps,
                                  th, config.strict_conflicts);
            print_record(record);
        } else if (*cmd_isolated) {
            auto th = load_thresholds(config);
            auto record = run_isolated(eca_rule::from_number(isolated_rule),
                                       nth_init(config, isolated_init_index),
                                       isolated_init_index, config.steps, th);
            print_record(record);
        } else if (*cmd_debruijn) {
            auto inits = debruijn_inits(de_alphabet, de_order, de_count, de_width);
            for (const auto& init : inits) {
                std::cout << init.to_digits() << "\n";
            }
        } else if (*cmd_calibrate) {
            auto th = calibrate(load_labels(config), config.width, config.steps,
                                experiment_inits(config));
            th.save(calibrate_out);
            std::cout << th.to_text();
        } else if (*cmd_sweep) {
            auto plan = sweep_plan::with_defaults(parse_gr_spec(sweep_grs));
            plan.init_count = config.init_count;
            plan.width = config.width;
            plan.steps = config.steps;
            plan.strict_conflicts = config.strict_conflicts;

            if (!sweep_resume && fs::is_directory(sweep_out)) {
                for (std::uint32_t index : plan.gr_indices) {
                    auto existing = fs::path(sweep_out) / shard_filename(index);
                    if (fs::exists(existing)) {
                        throw data_error("output directory already holds " +
                                         existing.filename().string() +
                                         "; pass --resume to continue into it");
                    }
                }
            }
            auto th = load_thresholds(config);
            auto summary = execute(plan, th, sweep_out, config.jobs);
            std::string extra = "grs=" + sweep_grs + "\n";
            echo_config(config, "sweep", extra, sweep_out);
            th.save((fs::path(sweep_out) / "thresholds.txt").string());
            std::cout << summary.to_text();
        } else if (*cmd_aggregate) {
            auto labels = load_labels(config);
            auto records = read_all_shards(agg_in);
            auto maps = build_heatmaps(records, labels);
            write_heatmap_csv(maps, agg_csv);
            write_heatmap_svg(maps, agg_svg);
            std::cout << "records=" << maps.total_records() << "\n";
            for (int c = 1; c <= 4; ++c) {
                std::cout << "class_" << c << "_records=" << maps.class_total(c) << "\n";
            }
            std::cout << "unassigned=" << maps.unassigned << "\n";
        }
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
