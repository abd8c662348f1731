#pragma once

#include "grsim/eca.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grsim {

inline constexpr int mixed_triplet_count = 12;
inline constexpr std::uint32_t mixed_assignment_total = 531441; // 3^12

// The 12 neighborhoods containing both a 1 and a 2. Position j binds
// assignment digit j to this triplet; the order is fixed.
const std::array<std::array<symbol, 3>, mixed_triplet_count>& mixed_triplets();

// 12 base-3 digits assigned to the mixed neighborhoods. Tuples are counted
// in lexicographic order starting at index 1 (all-zero digits).
struct mixed_assignment {
    std::array<symbol, 12> digits{};

    static mixed_assignment from_index(std::uint32_t index); // 1..531441
    std::uint32_t index() const;

    bool operator==(const mixed_assignment&) const = default;
};

// 3-color radius-1 rule extending eps on {0,1} and eps_prime on {0,2}.
// table[9p+3q+r] is the output for neighborhood (p,q,r) over {0,1,2}.
// conflict is set when eps and the recolored eps_prime disagree on (0,0,0);
// the table then carries eps's output.
struct global_rule {
    eca_rule eps;
    eca_rule eps_prime;
    mixed_assignment mixed;
    std::array<symbol, 27> table{};
    bool conflict = false;

    std::string table_string() const; // 27 digits, neighborhood code ascending
};

// strict turns a shared-triplet conflict into a data_error.
global_rule compose(const eca_rule& eps, const eca_rule& eps_prime,
                    const mixed_assignment& mixed, bool strict = false);

configuration global_step(const global_rule& gr, const configuration& config);
evolution_grid evolve(const global_rule& gr, const configuration& init, int steps);

// Substitution 2<->1 with 0 fixed, in both directions.
configuration recolor_02_to_01(const configuration& config);
configuration recolor_01_to_02(const configuration& config);

// All unordered pairs (a,b), a <= b, of the 88 representatives in
// lexicographic order. Exactly 3916 entries.
const std::vector<std::pair<int, int>>& pair_enumeration();

} // namespace grsim
