#pragma once

#include "grsim/complexity.hpp"
#include "grsim/global_rule.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grsim {

// The experiment matrix: which global rules to run over which rule pairs and
// how many de Bruijn initial conditions.
struct sweep_plan {
    std::vector<std::uint32_t> gr_indices;       // 1..531441
    std::vector<std::pair<int, int>> pairs;      // defaults to pair_enumeration()
    int init_count = 100;
    int width = 26;
    int steps = 60;
    bool strict_conflicts = false;

    static sweep_plan with_defaults(std::vector<std::uint32_t> gr_indices);
    void validate() const;
};

// One complexity value per execution. gr_index 0 marks isolated baselines.
// A strict-mode conflict leaves assigned_class 0 and runs nothing.
struct run_record {
    std::uint32_t gr_index = 0;
    int eps = 0;
    int eps_prime = 0;
    int init_index = 0; // 1-based position in the de Bruijn enumeration
    std::int64_t normalized = 0;
    int assigned_class = 0;
    bool conflict = false;

    bool operator==(const run_record&) const = default;
};

run_record run_one(const eca_rule& eps, const eca_rule& eps_prime, const mixed_assignment& mixed,
                   const configuration& init, int init_index, int steps, const thresholds& th,
                   bool strict = false);

// Baseline without interaction: the init is projected onto {0,1} first.
run_record run_isolated(const eca_rule& rule, const configuration& init, int init_index,
                        int steps, const thresholds& th);

// All records for one global rule, pairs in plan order x init index ascending.
std::vector<run_record> compute_shard(const sweep_plan& plan, std::uint32_t gr_index,
                                      const std::vector<configuration>& inits,
                                      const thresholds& th);

struct sweep_summary {
    std::uint64_t shards_total = 0;
    std::uint64_t shards_written = 0;
    std::uint64_t shards_skipped = 0; // already complete on disk
    std::uint64_t records = 0;        // newly written records
    std::uint64_t conflicts = 0;
    std::uint64_t skipped_strict = 0; // conflicted executions suppressed by strict mode
    double wall_seconds = 0.0;

    std::string to_text() const;
    void save(const std::string& path) const;
};

// Runs the plan with `worker_count` threads, one shard file per global rule
// under output_dir. Shards that already carry the completion marker are
// skipped, so an interrupted sweep can be re-run. Output bytes do not depend
// on worker_count or scheduling.
sweep_summary execute(const sweep_plan& plan, const thresholds& th, const std::string& output_dir,
                      int worker_count);

// Shard file layout: CSV header, records in canonical order, final "#done".
std::string shard_filename(std::uint32_t gr_index);
std::string format_record(const run_record& record);
bool shard_complete(const std::string& path);
std::vector<run_record> read_shard(const std::string& path);

// All records of every complete shard in a directory, shards in ascending
// gr_index order.
std::vector<run_record> read_all_shards(const std::string& dir);

} // namespace grsim
