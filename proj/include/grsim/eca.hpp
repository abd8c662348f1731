#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grsim {

using symbol = std::uint8_t;

// Elementary CA rule in Wolfram numbering. table[k] is the output for the
// neighborhood (left, center, right) read as the binary number k = 4l+2c+r.
struct eca_rule {
    int number = 0;
    std::array<symbol, 8> table{};

    static eca_rule from_number(int number);
};

// Fixed-width cyclic row of symbols in {0,1,2}.
struct configuration {
    std::vector<symbol> cells;

    int width() const { return static_cast<int>(cells.size()); }

    static configuration from_digits(std::string_view digits);
    std::string to_digits() const;

    bool operator==(const configuration&) const = default;
};

// Spacetime output of a run: steps+1 rows including the initial row, row-major.
struct evolution_grid {
    int width = 0;
    int steps = 0;
    std::vector<symbol> cells; // (steps + 1) * width

    int rows() const { return steps + 1; }
    std::span<const symbol> row(int t) const {
        return {cells.data() + static_cast<std::size_t>(t) * width,
                static_cast<std::size_t>(width)};
    }
    std::span<symbol> row(int t) {
        return {cells.data() + static_cast<std::size_t>(t) * width,
                static_cast<std::size_t>(width)};
    }
};

// One synchronous update with cyclic boundaries. Input symbols must be in {0,1}.
configuration step(const eca_rule& rule, const configuration& config);

// steps applications of the rule; row 0 of the result is the initial row.
evolution_grid evolve(const eca_rule& rule, const configuration& init, int steps);

// Rule symmetries: left/right neighbor exchange and 0/1 exchange.
int reflect_rule(int number);
int complement_rule(int number);

// The orbit {id, reflect, complement, reflect∘complement} of a rule, sorted.
std::vector<int> symmetry_orbit(int number);

// Minimal rule number of each symmetry orbit, ascending. Exactly 88 entries.
const std::vector<int>& representatives();

// Minimal element of the rule's orbit.
int representative_of(int number);

// Map symbols outside {0,1} to 0 (isolated-baseline projection).
configuration project_to_binary(const configuration& config);

} // namespace grsim
