#include "grsim/eca.hpp"

#include "grsim/error.hpp"

#include <algorithm>
#include <set>

namespace grsim {

eca_rule eca_rule::from_number(int number) {
    if (number < 0 || number > 255) {
        throw data_error("ECA rule number out of range [0,255]: " + std::to_string(number));
    }
    eca_rule rule;
    rule.number = number;
    for (int k = 0; k < 8; ++k) {
        rule.table[static_cast<std::size_t>(k)] = static_cast<symbol>((number >> k) & 1);
    }
    return rule;
}

configuration configuration::from_digits(std::string_view digits) {
    configuration config;
    config.cells.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch > '2') {
            throw data_error(std::string("configuration digit outside {0,1,2}: '") + ch + "'");
        }
        config.cells.push_back(static_cast<symbol>(ch - '0'));
    }
    return config;
}

std::string configuration::to_digits() const {
    std::string out;
    out.reserve(cells.size());
    for (symbol s : cells) {
        out.push_back(static_cast<char>('0' + s));
    }
    return out;
}

namespace {

void require_binary(const configuration& config) {
    for (symbol s : config.cells) {
        if (s > 1) {
            throw data_error("row symbol outside {0,1}: " + std::to_string(int(s)));
        }
    }
}

// One cyclic update of `in` into `out`, both of width w. Caller validates symbols.
void step_row(const std::array<symbol, 8>& table, const symbol* in, symbol* out, int w) {
    symbol left = in[w - 1];
    symbol center = in[0];
    for (int n = 0; n < w; ++n) {
        symbol right = in[n + 1 == w ? 0 : n + 1];
        out[n] = table[static_cast<std::size_t>(4 * left + 2 * center + right)];
        left = center;
        center = right;
    }
}

} // namespace

configuration step(const eca_rule& rule, const configuration& config) {
    if (config.width() == 0) {
        throw data_error("cannot step an empty configuration");
    }
    require_binary(config);
    configuration next;
    next.cells.resize(config.cells.size());
    step_row(rule.table, config.cells.data(), next.cells.data(), config.width());
    return next;
}

evolution_grid evolve(const eca_rule& rule, const configuration& init, int steps) {
    if (steps < 0) {
        throw data_error("negative step count: " + std::to_string(steps));
    }
    if (init.width() == 0) {
        throw data_error("cannot evolve an empty configuration");
    }
    require_binary(init);
    evolution_grid grid;
    grid.width = init.width();
    grid.steps = steps;
    grid.cells.resize(static_cast<std::size_t>(steps + 1) * grid.width);
    std::copy(init.cells.begin(), init.cells.end(), grid.cells.begin());
    for (int t = 0; t < steps; ++t) {
        step_row(rule.table, grid.row(t).data(), grid.row(t + 1).data(), grid.width);
    }
    return grid;
}

namespace {

int checked(int number) {
    if (number < 0 || number > 255) {
        throw data_error("ECA rule number out of range [0,255]: " + std::to_string(number));
    }
    return number;
}

} // namespace

int reflect_rule(int number) {
    checked(number);
    int out = 0;
    for (int k = 0; k < 8; ++k) {
        int mirrored = ((k & 1) << 2) | (k & 2) | ((k >> 2) & 1); // swap left/right bits
        if ((number >> mirrored) & 1) {
            out |= 1 << k;
        }
    }
    return out;
}

int complement_rule(int number) {
    checked(number);
    int out = 0;
    for (int k = 0; k < 8; ++k) {
        if (((number >> (7 - k)) & 1) == 0) {
            out |= 1 << k;
        }
    }
    return out;
}

std::vector<int> symmetry_orbit(int number) {
    checked(number);
    std::set<int> orbit{number, reflect_rule(number), complement_rule(number),
                        reflect_rule(complement_rule(number))};
    return {orbit.begin(), orbit.end()};
}

int representative_of(int number) {
    auto orbit = symmetry_orbit(number);
    return orbit.front();
}

const std::vector<int>& representatives() {
    static const std::vector<int> reps = [] {
        std::set<int> minima;
        for (int n = 0; n < 256; ++n) {
            minima.insert(representative_of(n));
        }
        return std::vector<int>(minima.begin(), minima.end());
    }();
    return reps;
}

configuration project_to_binary(const configuration& config) {
    configuration out = config;
    for (symbol& s : out.cells) {
        if (s > 1) {
            s = 0;
        }
    }
    return out;
}

} // namespace grsim
