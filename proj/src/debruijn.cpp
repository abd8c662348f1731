#include "grsim/debruijn.hpp"

#include "grsim/error.hpp"

#include <cstddef>
#include <string>

namespace grsim {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

void check_params(int alphabet, int order) {
    if (alphabet < 2 || alphabet > 255) {
        throw data_error("de Bruijn alphabet size must be in [2,255], got " +
                         std::to_string(alphabet));
    }
    if (order < 1) {
        throw data_error("de Bruijn order must be >= 1, got " + std::to_string(order));
    }
    // the DFS recursion is one frame per sequence position
    if (pow_u64(static_cast<std::uint64_t>(alphabet), order) > (1u << 15)) {
        throw data_error("de Bruijn word space too large: " + std::to_string(alphabet) + "^" +
                         std::to_string(order));
    }
}

// Depth-first enumeration over the de Bruijn graph: placing a symbol at
// position i consumes the k-word ending there. Smallest symbol first, so
// complete sequences come out in lexicographic order.
class enumerator {
public:
    enumerator(int alphabet, int order, std::uint64_t limit,
               const std::function<bool(const debruijn_sequence&)>& fn)
        : n_(alphabet),
          k_(order),
          length_(pow_u64(static_cast<std::uint64_t>(alphabet), order)),
          suffix_modulus_(length_ / static_cast<std::uint64_t>(alphabet)),
          limit_(limit),
          fn_(fn),
          used_(length_, false),
          seq_(length_, 0) {}

    std::uint64_t run() {
        if (limit_ == 0) {
            return 0;
        }
        // Anchor: the all-zero k-word occupies positions 0..k-1.
        used_[0] = true;
        extend(static_cast<std::uint64_t>(k_), 0);
        return emitted_;
    }

private:
    // suffix encodes the last k-1 placed symbols; placing c at pos consumes
    // the k-word suffix*n + c, which ends at pos.
    bool extend(std::uint64_t pos, std::uint64_t suffix) {
        if (pos == length_) {
            return close_cycle();
        }
        for (symbol c = 0; c < n_; ++c) {
            std::uint64_t word = suffix * static_cast<std::uint64_t>(n_) + c;
            if (used_[word]) {
                continue;
            }
            used_[word] = true;
            seq_[pos] = c;
            bool keep_going = extend(pos + 1, word % suffix_modulus_);
            used_[word] = false;
            if (!keep_going) {
                return false;
            }
        }
        return true;
    }

    bool close_cycle() {
        // The k-1 wrap-around words run over the tail and the zero prefix.
        std::vector<std::uint64_t> wrapped;
        wrapped.reserve(static_cast<std::size_t>(k_ - 1));
        bool ok = true;
        for (int j = 1; j < k_ && ok; ++j) {
            std::uint64_t word = 0;
            for (int t = 0; t < k_; ++t) {
                std::uint64_t idx = (length_ - static_cast<std::uint64_t>(k_ - j) +
                                     static_cast<std::uint64_t>(t)) %
                                    length_;
                word = word * n_ + seq_[idx];
            }
            if (used_[word]) {
                ok = false;
            } else {
                used_[word] = true;
                wrapped.push_back(word);
            }
        }
        bool keep_going = true;
        if (ok) {
            debruijn_sequence out;
            out.alphabet = n_;
            out.order = k_;
            out.symbols = seq_;
            ++emitted_;
            keep_going = fn_(out) && emitted_ < limit_;
        }
        for (std::uint64_t word : wrapped) {
            used_[word] = false;
        }
        return keep_going;
    }

    int n_;
    int k_;
    std::uint64_t length_;
    std::uint64_t suffix_modulus_;
    std::uint64_t limit_;
    const std::function<bool(const debruijn_sequence&)>& fn_;
    std::vector<char> used_;
    std::vector<symbol> seq_;
    std::uint64_t emitted_ = 0;
};

} // namespace

std::uint64_t for_each_debruijn(int alphabet, int order, std::uint64_t limit,
                                const std::function<bool(const debruijn_sequence&)>& fn) {
    check_params(alphabet, order);
    enumerator e(alphabet, order, limit, fn);
    return e.run();
}

std::vector<debruijn_sequence> enumerate_debruijn(int alphabet, int order, int count) {
    if (count < 1) {
        throw data_error("de Bruijn sequence count must be >= 1, got " + std::to_string(count));
    }
    std::vector<debruijn_sequence> out;
    out.reserve(static_cast<std::size_t>(count));
    for_each_debruijn(alphabet, order, static_cast<std::uint64_t>(count),
                      [&](const debruijn_sequence& seq) {
                          out.push_back(seq);
                          return true;
                      });
    if (out.size() != static_cast<std::size_t>(count)) {
        throw data_error("de Bruijn enumeration exhausted: requested " + std::to_string(count) +
                         " B(" + std::to_string(order) + "," + std::to_string(alphabet) +
                         ") sequences, only " + std::to_string(out.size()) + " exist");
    }
    return out;
}

bool verify_debruijn(const std::vector<symbol>& candidate, int alphabet, int order) {
    check_params(alphabet, order);
    const std::uint64_t length = pow_u64(static_cast<std::uint64_t>(alphabet), order);
    if (candidate.size() != length) {
        return false;
    }
    for (symbol s : candidate) {
        if (s >= alphabet) {
            return false;
        }
    }
    std::vector<char> seen(length, false);
    for (std::uint64_t i = 0; i < length; ++i) {
        std::uint64_t word = 0;
        for (int t = 0; t < order; ++t) {
            word = word * alphabet + candidate[(i + static_cast<std::uint64_t>(t)) % length];
        }
        if (seen[word]) {
            return false;
        }
        seen[word] = true;
    }
    return true;
}

configuration initial_condition(const debruijn_sequence& seq, int width) {
    if (width < 1 || static_cast<std::size_t>(width) > seq.symbols.size()) {
        throw data_error("initial condition width out of range [1," +
                         std::to_string(seq.symbols.size()) + "]: " + std::to_string(width));
    }
    configuration config;
    config.cells.assign(seq.symbols.begin(), seq.symbols.begin() + width);
    return config;
}

std::vector<configuration> debruijn_inits(int alphabet, int order, int count, int width) {
    auto sequences = enumerate_debruijn(alphabet, order, count);
    std::vector<configuration> inits;
    inits.reserve(sequences.size());
    for (const auto& seq : sequences) {
        inits.push_back(initial_condition(seq, width));
    }
    return inits;
}

} // namespace grsim
