#pragma once

#include "grsim/labels.hpp"
#include "grsim/sweep.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace grsim {

// Four 4x4 matrices of counts, one per output class; rows are class(eps),
// columns are class(eps_prime). Percentages are conditioned on the output
// class, so every nonempty matrix sums to 100.
struct heatmap_set {
    std::array<std::array<std::array<std::uint64_t, 4>, 4>, 4> counts{};
    std::uint64_t unassigned = 0; // strict-mode conflict records, no class

    void add(const run_record& record, const labeled_rules& labels);
    void merge(const heatmap_set& other);

    std::uint64_t class_total(int output_class) const;
    bool class_empty(int output_class) const { return class_total(output_class) == 0; }
    double percent(int output_class, int eps_class, int eps_prime_class) const;
    std::uint64_t total_records() const;
};

heatmap_set build_heatmaps(const std::vector<run_record>& records, const labeled_rules& labels);

// Writes path_stem.txt (digit rows) and path_stem.ppm (plain P3 pixmap,
// 0 white / 1 black / 2 mid-gray, one pixel per cell).
void render_grid(const evolution_grid& grid, const std::string& path_stem);

// 64 rows of "class,row,col,percent,count"; empty classes are flagged in a
// comment line.
void write_heatmap_csv(const heatmap_set& maps, const std::string& path);

// Standalone SVG, four panels, cell intensity proportional to percent.
// Byte-deterministic for identical inputs.
void write_heatmap_svg(const heatmap_set& maps, const std::string& path);

} // namespace grsim
