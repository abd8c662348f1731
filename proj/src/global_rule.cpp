#include "grsim/global_rule.hpp"

#include "grsim/error.hpp"

#include <algorithm>

namespace grsim {

const std::array<std::array<symbol, 3>, mixed_triplet_count>& mixed_triplets() {
    static const std::array<std::array<symbol, 3>, mixed_triplet_count> triplets{{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0},
        {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1},
    }};
    return triplets;
}

mixed_assignment mixed_assignment::from_index(std::uint32_t index) {
    if (index < 1 || index > mixed_assignment_total) {
        throw data_error("mixed assignment index out of range [1," +
                         std::to_string(mixed_assignment_total) + "]: " + std::to_string(index));
    }
    mixed_assignment mixed;
    std::uint32_t rest = index - 1;
    for (int j = 11; j >= 0; --j) {
        mixed.digits[static_cast<std::size_t>(j)] = static_cast<symbol>(rest % 3);
        rest /= 3;
    }
    return mixed;
}

std::uint32_t mixed_assignment::index() const {
    std::uint32_t value = 0;
    for (symbol d : digits) {
        value = value * 3 + d;
    }
    return value + 1;
}

namespace {

constexpr int code_of(symbol p, symbol q, symbol r) {
    return 9 * p + 3 * q + r;
}

} // namespace

global_rule compose(const eca_rule& eps, const eca_rule& eps_prime,
                    const mixed_assignment& mixed, bool strict) {
    global_rule gr;
    gr.eps = eps;
    gr.eps_prime = eps_prime;
    gr.mixed = mixed;

    // Pure-{0,1} neighborhoods carry eps verbatim; this also writes (0,0,0).
    for (int k = 0; k < 8; ++k) {
        symbol p = static_cast<symbol>((k >> 2) & 1);
        symbol q = static_cast<symbol>((k >> 1) & 1);
        symbol r = static_cast<symbol>(k & 1);
        gr.table[static_cast<std::size_t>(code_of(p, q, r))] = eps.table[static_cast<std::size_t>(k)];
    }

    // Pure-{0,2} neighborhoods carry eps_prime recolored, except the shared
    // zero triplet which eps already settled when its output is nonzero.
    const symbol eps_zero = eps.table[0];
    const symbol eps_prime_zero = eps_prime.table[0];
    for (int k = 0; k < 8; ++k) {
        symbol p = static_cast<symbol>(((k >> 2) & 1) * 2);
        symbol q = static_cast<symbol>(((k >> 1) & 1) * 2);
        symbol r = static_cast<symbol>((k & 1) * 2);
        symbol out = static_cast<symbol>(eps_prime.table[static_cast<std::size_t>(k)] * 2);
        if (k == 0) {
            if (eps_zero == 0) {
                gr.table[0] = out;
            }
            continue;
        }
        gr.table[static_cast<std::size_t>(code_of(p, q, r))] = out;
    }
    gr.conflict = (eps_zero == 1 && eps_prime_zero == 1);
    if (gr.conflict && strict) {
        throw data_error("global rule conflict: eps " + std::to_string(eps.number) +
                         " and eps' " + std::to_string(eps_prime.number) +
                         " disagree on the zero triplet");
    }

    for (std::size_t j = 0; j < mixed_triplet_count; ++j) {
        const auto& t = mixed_triplets()[j];
        gr.table[static_cast<std::size_t>(code_of(t[0], t[1], t[2]))] = mixed.digits[j];
    }
    return gr;
}

std::string global_rule::table_string() const {
    std::string out;
    out.reserve(27);
    for (symbol s : table) {
        out.push_back(static_cast<char>('0' + s));
    }
    return out;
}

namespace {

void require_ternary(const configuration& config) {
    for (symbol s : config.cells) {
        if (s > 2) {
            throw data_error("row symbol outside {0,1,2}: " + std::to_string(int(s)));
        }
    }
}

void global_step_row(const std::array<symbol, 27>& table, const symbol* in, symbol* out, int w) {
    symbol left = in[w - 1];
    symbol center = in[0];
    for (int n = 0; n < w; ++n) {
        symbol right = in[n + 1 == w ? 0 : n + 1];
        out[n] = table[static_cast<std::size_t>(9 * left + 3 * center + right)];
        left = center;
        center = right;
    }
}

} // namespace

configuration global_step(const global_rule& gr, const configuration& config) {
    if (config.width() == 0) {
        throw data_error("cannot step an empty configuration");
    }
    require_ternary(config);
    configuration next;
    next.cells.resize(config.cells.size());
    global_step_row(gr.table, config.cells.data(), next.cells.data(), config.width());
    return next;
}

evolution_grid evolve(const global_rule& gr, const configuration& init, int steps) {
    if (steps < 0) {
        throw data_error("negative step count: " + std::to_string(steps));
    }
    if (init.width() == 0) {
        throw data_error("cannot evolve an empty configuration");
    }
    require_ternary(init);
    evolution_grid grid;
    grid.width = init.width();
    grid.steps = steps;
    grid.cells.resize(static_cast<std::size_t>(steps + 1) * grid.width);
    std::copy(init.cells.begin(), init.cells.end(), grid.cells.begin());
    for (int t = 0; t < steps; ++t) {
        global_step_row(gr.table, grid.row(t).data(), grid.row(t + 1).data(), grid.width);
    }
    return grid;
}

namespace {

configuration recolor(const configuration& config, symbol from, symbol to) {
    configuration out;
    out.cells.reserve(config.cells.size());
    for (symbol s : config.cells) {
        if (s == from) {
            out.cells.push_back(to);
        } else if (s == 0) {
            out.cells.push_back(0);
        } else {
            throw data_error("recolor input symbol outside {0," + std::to_string(int(from)) +
                             "}: " + std::to_string(int(s)));
        }
    }
    return out;
}

} // namespace

configuration recolor_02_to_01(const configuration& config) {
    return recolor(config, 2, 1);
}

configuration recolor_01_to_02(const configuration& config) {
    return recolor(config, 1, 2);
}

const std::vector<std::pair<int, int>>& pair_enumeration() {
    static const std::vector<std::pair<int, int>> pairs = [] {
        const auto& reps = representatives();
        std::vector<std::pair<int, int>> out;
        out.reserve(reps.size() * (reps.size() + 1) / 2);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            for (std::size_t j = i; j < reps.size(); ++j) {
                out.emplace_back(reps[i], reps[j]);
            }
        }
        return out;
    }();
    return pairs;
}

} // namespace grsim
