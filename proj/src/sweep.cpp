#include "grsim/sweep.hpp"

#include "grsim/debruijn.hpp"
#include "grsim/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace grsim {

sweep_plan sweep_plan::with_defaults(std::vector<std::uint32_t> gr_indices) {
    sweep_plan plan;
    plan.gr_indices = std::move(gr_indices);
    plan.pairs = pair_enumeration();
    return plan;
}

void sweep_plan::validate() const {
    if (gr_indices.empty()) {
        throw data_error("sweep plan has no global rule indices");
    }
    for (std::uint32_t index : gr_indices) {
        if (index < 1 || index > mixed_assignment_total) {
            throw data_error("sweep plan GR index out of range: " + std::to_string(index));
        }
    }
    if (pairs.empty()) {
        throw data_error("sweep plan has no rule pairs");
    }
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a > 255 || b < 0 || b > 255) {
            throw data_error("sweep plan rule out of range in pair (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
        }
    }
    if (init_count < 1) {
        throw data_error("sweep plan needs init_count >= 1");
    }
    if (width < 1 || steps < 0) {
        throw data_error("sweep plan needs width >= 1 and steps >= 0");
    }
}

run_record run_one(const eca_rule& eps, const eca_rule& eps_prime, const mixed_assignment& mixed,
                   const configuration& init, int init_index, int steps, const thresholds& th,
                   bool strict) {
    run_record record;
    record.gr_index = mixed.index();
    record.eps = eps.number;
    record.eps_prime = eps_prime.number;
    record.init_index = init_index;

    global_rule gr = compose(eps, eps_prime, mixed);
    record.conflict = gr.conflict;
    if (gr.conflict && strict) {
        return record; // recorded error outcome: class stays unassigned
    }
    auto grid = evolve(gr, init, steps);
    auto score = score_grid(grid);
    record.normalized = score.normalized;
    record.assigned_class = classify(score, th);
    return record;
}

run_record run_isolated(const eca_rule& rule, const configuration& init, int init_index,
                        int steps, const thresholds& th) {
    run_record record;
    record.gr_index = 0;
    record.eps = rule.number;
    record.eps_prime = rule.number;
    record.init_index = init_index;

    auto grid = evolve(rule, project_to_binary(init), steps);
    auto score = score_grid(grid);
    record.normalized = score.normalized;
    record.assigned_class = classify(score, th);
    return record;
}

std::vector<run_record> compute_shard(const sweep_plan& plan, std::uint32_t gr_index,
                                      const std::vector<configuration>& inits,
                                      const thresholds& th) {
    auto mixed = mixed_assignment::from_index(gr_index);
    std::vector<run_record> records;
    records.reserve(plan.pairs.size() * inits.size());
    for (const auto& [a, b] : plan.pairs) {
        eca_rule eps = eca_rule::from_number(a);
        eca_rule eps_prime = eca_rule::from_number(b);
        global_rule gr = compose(eps, eps_prime, mixed);
        for (std::size_t i = 0; i < inits.size(); ++i) {
            run_record record;
            record.gr_index = gr_index;
            record.eps = a;
            record.eps_prime = b;
            record.init_index = static_cast<int>(i) + 1;
            record.conflict = gr.conflict;
            if (gr.conflict && plan.strict_conflicts) {
                records.push_back(record);
                continue;
            }
            auto score = score_grid(evolve(gr, inits[i], plan.steps));
            record.normalized = score.normalized;
            record.assigned_class = classify(score, th);
            records.push_back(record);
        }
    }
    return records;
}

std::string shard_filename(std::uint32_t gr_index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "shard_%07u.csv", gr_index);
    return buf;
}

namespace {

constexpr const char* shard_header = "gr_index,eps,eps_prime,init_index,score,class,conflict";
constexpr const char* done_marker = "#done";

} // namespace

std::string format_record(const run_record& record) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%u,%d,%d,%d,%lld,%d,%d", record.gr_index, record.eps,
                  record.eps_prime, record.init_index,
                  static_cast<long long>(record.normalized), record.assigned_class,
                  record.conflict ? 1 : 0);
    return buf;
}

bool shard_complete(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        return false;
    }
    std::string line;
    std::string last;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            last = line;
        }
    }
    return last == done_marker;
}

std::vector<run_record> read_shard(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open shard: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw data_error("shard is empty: " + path);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != shard_header) {
        throw data_error("shard has unexpected header: " + path);
    }
    std::vector<run_record> records;
    bool done = false;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line == done_marker) {
            done = true;
            continue;
        }
        run_record record;
        long long normalized = 0;
        int conflict = 0;
        if (std::sscanf(line.c_str(), "%u,%d,%d,%d,%lld,%d,%d", &record.gr_index, &record.eps,
                        &record.eps_prime, &record.init_index, &normalized,
                        &record.assigned_class, &conflict) != 7) {
            throw data_error(path + ":" + std::to_string(lineno) + ": malformed record '" +
                             line + "'");
        }
        record.normalized = normalized;
        record.conflict = conflict != 0;
        records.push_back(record);
    }
    if (!done) {
        throw data_error("shard lacks completion marker: " + path);
    }
    return records;
}

std::vector<run_record> read_all_shards(const std::string& dir) {
    if (!fs::is_directory(dir)) {
        throw io_error("not a directory: " + dir);
    }
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.starts_with("shard_") && name.ends_with(".csv")) {
            paths.push_back(entry.path().string());
        }
    }
    std::sort(paths.begin(), paths.end());
    std::vector<run_record> records;
    for (const auto& path : paths) {
        if (!shard_complete(path)) {
            continue; // partial shard from an interrupted run
        }
        auto shard = read_shard(path);
        records.insert(records.end(), shard.begin(), shard.end());
    }
    return records;
}

std::string sweep_summary::to_text() const {
    char buf[320];
    std::snprintf(buf, sizeof(buf),
                  "shards_total=%llu\nshards_written=%llu\nshards_skipped=%llu\n"
                  "records=%llu\nconflicts=%llu\nskipped_strict=%llu\nwall_seconds=%.3f\n",
                  static_cast<unsigned long long>(shards_total),
                  static_cast<unsigned long long>(shards_written),
                  static_cast<unsigned long long>(shards_skipped),
                  static_cast<unsigned long long>(records),
                  static_cast<unsigned long long>(conflicts),
                  static_cast<unsigned long long>(skipped_strict), wall_seconds);
    return buf;
}

void sweep_summary::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write summary: " + path);
    }
    out << to_text();
    if (!out) {
        throw io_error("error while writing summary: " + path);
    }
}

sweep_summary execute(const sweep_plan& plan, const thresholds& th, const std::string& output_dir,
                      int worker_count) {
    plan.validate();
    if (worker_count < 1) {
        throw data_error("worker count must be >= 1, got " + std::to_string(worker_count));
    }
    std::error_code ec;
    fs::create_directories(output_dir, ec);
    if (ec || !fs::is_directory(output_dir)) {
        throw io_error("cannot create output directory: " + output_dir);
    }

    const auto started = std::chrono::steady_clock::now();

    // Order of the de Bruijn cache: 3^k must cover the requested width.
    int order = 1;
    std::uint64_t span = 3;
    while (span < static_cast<std::uint64_t>(plan.width)) {
        span *= 3;
        ++order;
    }
    const auto inits = debruijn_inits(3, order, plan.init_count, plan.width);

    struct worker_tally {
        std::uint64_t shards_written = 0;
        std::uint64_t shards_skipped = 0;
        std::uint64_t records = 0;
        std::uint64_t conflicts = 0;
        std::uint64_t skipped_strict = 0;
        std::string error;
    };
    std::vector<worker_tally> tallies(static_cast<std::size_t>(worker_count));
    std::atomic<std::size_t> next{0};

    auto work = [&](worker_tally& tally) {
        try {
            while (true) {
                std::size_t slot = next.fetch_add(1);
                if (slot >= plan.gr_indices.size()) {
                    return;
                }
                std::uint32_t gr_index = plan.gr_indices[slot];
                fs::path path = fs::path(output_dir) / shard_filename(gr_index);
                if (shard_complete(path.string())) {
                    tally.shards_skipped += 1;
                    continue;
                }
                auto records = compute_shard(plan, gr_index, inits, th);
                std::ofstream out(path, std::ios::trunc);
                if (!out) {
                    throw io_error("cannot write shard: " + path.string());
                }
                out << shard_header << '\n';
                for (const auto& record : records) {
                    out << format_record(record) << '\n';
                    tally.conflicts += record.conflict ? 1 : 0;
                    tally.skipped_strict += (record.conflict && record.assigned_class == 0) ? 1 : 0;
                }
                out << done_marker << '\n';
                out.flush();
                if (!out) {
                    throw io_error("error while writing shard: " + path.string());
                }
                tally.shards_written += 1;
                tally.records += records.size();
            }
        } catch (const std::exception& e) {
            tally.error = e.what();
        }
    };

    if (worker_count == 1) {
        work(tallies[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(worker_count));
        for (int w = 0; w < worker_count; ++w) {
            workers.emplace_back(work, std::ref(tallies[static_cast<std::size_t>(w)]));
        }
        for (auto& worker : workers) {
            worker.join();
        }
    }

    sweep_summary summary;
    summary.shards_total = plan.gr_indices.size();
    for (const auto& tally : tallies) {
        if (!tally.error.empty()) {
            throw io_error("sweep worker failed: " + tally.error);
        }
        summary.shards_written += tally.shards_written;
        summary.shards_skipped += tally.shards_skipped;
        summary.records += tally.records;
        summary.conflicts += tally.conflicts;
        summary.skipped_strict += tally.skipped_strict;
    }
    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    summary.save((fs::path(output_dir) / "summary.txt").string());
    return summary;
}

} // namespace grsim
