#pragma once

#include "grsim/eca.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace grsim {

// Cyclic sequence of length n^k over {0..n-1} in which every k-word occurs
// exactly once as a cyclic substring.
struct debruijn_sequence {
    int alphabet = 0; // n
    int order = 0;    // k
    std::vector<symbol> symbols;

    bool operator==(const debruijn_sequence&) const = default;
};

// Emits B(k,n) sequences whose linearization starts with the all-zero k-word,
// in ascending lexicographic order, until `limit` sequences were emitted or
// the callback returns false. Returns the number of sequences emitted.
std::uint64_t for_each_debruijn(int alphabet, int order, std::uint64_t limit,
                                const std::function<bool(const debruijn_sequence&)>& fn);

// The `count` lexicographically smallest sequences; throws data_error when
// the enumeration holds fewer than `count`.
std::vector<debruijn_sequence> enumerate_debruijn(int alphabet, int order, int count);

// Brute-force check that every k-word over the alphabet occurs exactly once
// cyclically. Oracle for the enumerator; also rejects wrong lengths.
bool verify_debruijn(const std::vector<symbol>& candidate, int alphabet, int order);

// First `width` symbols of the linearization, as a cyclic configuration.
configuration initial_condition(const debruijn_sequence& seq, int width);

// The standard experiment inputs: prefixes of the first `count` B(order,alphabet)
// sequences, each truncated to `width`.
std::vector<configuration> debruijn_inits(int alphabet, int order, int count, int width);

} // namespace grsim
