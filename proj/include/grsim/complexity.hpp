#pragma once

#include "grsim/eca.hpp"
#include "grsim/labels.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace grsim {

// Compression value of one spacetime grid, normalized against the all-zero
// string of equal length.
struct class_score {
    std::int64_t raw_bytes = 0;
    std::int64_t baseline_bytes = 0;
    std::int64_t normalized = 0;
    int assigned_class = 0; // 1..4, 0 = unassigned
};

// Row-major ASCII digits, one character per cell, no separators.
std::string serialize_grid(const evolution_grid& grid);

// Compressed size of the serialized grid minus the compressed size of the
// all-'0' string of equal length. Class is left unassigned.
class_score score_grid(const evolution_grid& grid);

// Compressed size of a string of `length` ASCII zeros (cached).
std::int64_t baseline_compressed_size(std::size_t length);

// Class cut values calibrated on a labeled rule set.
struct thresholds {
    std::array<int, 4> class_order{};  // classes by ascending calibration mean
    std::array<double, 3> cuts{};      // strictly increasing
    std::string provenance;

    std::string to_text() const;
    static thresholds from_text(const std::string& text);
    void save(const std::string& path) const;
    static thresholds load(const std::string& path);

    bool operator==(const thresholds&) const = default;
};

// Interval lookup; a score sitting exactly on a cut goes to the lower class.
int classify(const class_score& score, const thresholds& th);

// Runs every labeled rule in isolation over `inits` (projected to {0,1}),
// averages the normalized scores per rule, orders the four class means and
// places each cut at the midpoint between adjacent means. Equal adjacent
// means or a class without rules raise data_error.
thresholds calibrate(const labeled_rules& labels, int width, int steps,
                     const std::vector<configuration>& inits);

// Finite surrogate of the limsup complexity measure: the largest per-point
// mean over a ladder of (width, steps) evaluations, each fed de Bruijn
// initial conditions of the matching width.
struct ladder_point {
    int width = 0;
    int steps = 0;
    double mean_normalized = 0.0;
};
struct asymptotic_result {
    std::vector<ladder_point> points;
    double max_normalized = 0.0;
};
using grid_source = std::function<evolution_grid(const configuration& init, int steps)>;

asymptotic_result asymptotic_score(const grid_source& run,
                                   const std::vector<std::pair<int, int>>& ladder,
                                   int init_count = 1);

} // namespace grsim
