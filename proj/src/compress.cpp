#include "grsim/compress.hpp"

#include <algorithm>
#include <array>

namespace grsim {

namespace {

constexpr int min_match = 3;
constexpr int max_match = 258;
constexpr int window_size = 32768;
constexpr int max_chain = 64;    // candidates examined per match search
constexpr int nice_length = 128; // stop searching once a match is this long
constexpr int hash_bits = 12;
constexpr int hash_size = 1 << hash_bits;

constexpr std::array<int, 29> length_base = {3,  4,  5,  6,  7,  8,  9,  10, 11,  13,
                                             15, 17, 19, 23, 27, 31, 35,  43, 51,  59,
                                             67, 83, 99, 115, 131, 163, 195, 227, 258};
constexpr std::array<int, 29> length_extra = {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2,
                                              2, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 0};

constexpr std::array<int, 30> dist_base = {1,    2,    3,    4,    5,    7,     9,    13,
                                           17,   25,   33,   49,   65,   97,    129,  193,
                                           257,  385,  513,  769,  1025, 1537,  2049, 3073,
                                           4097, 6145, 8193, 12289, 16385, 24577};
constexpr std::array<int, 30> dist_extra = {0, 0, 0, 0, 1, 1, 2, 2, 3, 3, 4,  4,  5,  5,  6,
                                            6, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 12, 13, 13};

std::uint32_t reverse_bits(std::uint32_t code, int bits) {
    std::uint32_t out = 0;
    for (int i = 0; i < bits; ++i) {
        out = (out << 1) | ((code >> i) & 1);
    }
    return out;
}

// Precomputed fixed-Huffman codes (already bit-reversed for LSB-first output)
// and match-to-code lookup tables.
struct tables {
    std::array<std::uint16_t, 288> lit_code{};
    std::array<std::uint8_t, 288> lit_bits{};
    std::array<std::uint16_t, 30> dist_code{};
    std::array<std::uint8_t, 259> length_slot{};
    std::array<std::uint8_t, 256> dist_slot_small{}; // dist 1..256
    std::array<std::uint8_t, 256> dist_slot_large{}; // (dist-1)>>7 for dist 257..32768

    tables() {
        for (int v = 0; v < 288; ++v) {
            int code, bits;
            if (v <= 143) {
                code = 0x30 + v;
                bits = 8;
            } else if (v <= 255) {
                code = 0x190 + (v - 144);
                bits = 9;
            } else if (v <= 279) {
                code = v - 256;
                bits = 7;
            } else {
                code = 0xC0 + (v - 280);
                bits = 8;
            }
            lit_code[static_cast<std::size_t>(v)] =
                static_cast<std::uint16_t>(reverse_bits(static_cast<std::uint32_t>(code), bits));
            lit_bits[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(bits);
        }
        for (int c = 0; c < 30; ++c) {
            dist_code[static_cast<std::size_t>(c)] =
                static_cast<std::uint16_t>(reverse_bits(static_cast<std::uint32_t>(c), 5));
        }
        for (int c = 0; c < 28; ++c) {
            int last = std::min(length_base[static_cast<std::size_t>(c) + 1] - 1, 257);
            for (int l = length_base[static_cast<std::size_t>(c)]; l <= last; ++l) {
                length_slot[static_cast<std::size_t>(l)] = static_cast<std::uint8_t>(c);
            }
        }
        length_slot[258] = 28;
        for (int d = 1; d <= 256; ++d) {
            int c = 0;
            while (c + 1 < 30 && dist_base[static_cast<std::size_t>(c) + 1] <= d) {
                ++c;
            }
            dist_slot_small[static_cast<std::size_t>(d - 1)] = static_cast<std::uint8_t>(c);
        }
        for (int slot = 0; slot < 256; ++slot) {
            int d = slot * 128 + 1; // smallest distance with (d-1)>>7 == slot
            int c = 0;
            while (c + 1 < 30 && dist_base[static_cast<std::size_t>(c) + 1] <= d) {
                ++c;
            }
            dist_slot_large[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(c);
        }
    }
};

const tables& fixed_tables() {
    static const tables t;
    return t;
}

class bit_writer {
public:
    explicit bit_writer(std::vector<std::uint8_t>& out) : out_(out) {}

    void put(std::uint32_t value, int bits) {
        acc_ |= static_cast<std::uint64_t>(value) << filled_;
        filled_ += bits;
        while (filled_ >= 8) {
            out_.push_back(static_cast<std::uint8_t>(acc_ & 0xFF));
            acc_ >>= 8;
            filled_ -= 8;
        }
    }

    void flush() {
        if (filled_ > 0) {
            out_.push_back(static_cast<std::uint8_t>(acc_ & 0xFF));
            acc_ = 0;
            filled_ = 0;
        }
    }

private:
    std::vector<std::uint8_t>& out_;
    std::uint64_t acc_ = 0;
    int filled_ = 0;
};

inline std::uint32_t hash3(const unsigned char* p) {
    return ((static_cast<std::uint32_t>(p[0]) << 10) ^ (static_cast<std::uint32_t>(p[1]) << 5) ^
            p[2]) &
           (hash_size - 1);
}

void deflate_into(std::string_view input, std::vector<std::uint8_t>& out) {
    const auto& t = fixed_tables();
    const auto* in = reinterpret_cast<const unsigned char*>(input.data());
    const std::size_t n = input.size();

    out.clear();
    bit_writer bits(out);
    bits.put(1, 1); // BFINAL
    bits.put(1, 2); // BTYPE = fixed Huffman

    thread_local std::vector<std::int32_t> head;
    thread_local std::vector<std::int32_t> prev;
    head.assign(hash_size, -1);
    prev.assign(n, -1);

    auto emit_literal = [&](unsigned char c) {
        bits.put(t.lit_code[c], t.lit_bits[c]);
    };
    auto emit_match = [&](int length, int distance) {
        int lc = t.length_slot[static_cast<std::size_t>(length)];
        bits.put(t.lit_code[static_cast<std::size_t>(257 + lc)],
                 t.lit_bits[static_cast<std::size_t>(257 + lc)]);
        if (length_extra[static_cast<std::size_t>(lc)] > 0) {
            bits.put(static_cast<std::uint32_t>(length - length_base[static_cast<std::size_t>(lc)]),
                     length_extra[static_cast<std::size_t>(lc)]);
        }
        int dc = distance <= 256
                     ? t.dist_slot_small[static_cast<std::size_t>(distance - 1)]
                     : t.dist_slot_large[static_cast<std::size_t>((distance - 1) >> 7)];
        bits.put(t.dist_code[static_cast<std::size_t>(dc)], 5);
        if (dist_extra[static_cast<std::size_t>(dc)] > 0) {
            bits.put(static_cast<std::uint32_t>(distance - dist_base[static_cast<std::size_t>(dc)]),
                     dist_extra[static_cast<std::size_t>(dc)]);
        }
    };
    auto insert = [&](std::size_t pos) {
        if (pos + min_match <= n) {
            std::uint32_t h = hash3(in + pos);
            prev[pos] = head[h];
            head[h] = static_cast<std::int32_t>(pos);
        }
    };

    std::size_t i = 0;
    while (i < n) {
        int best_len = 0;
        int best_dist = 0;
        if (i + min_match <= n) {
            const int max_len = static_cast<int>(std::min<std::size_t>(max_match, n - i));
            std::int32_t cand = head[hash3(in + i)];
            int chain = max_chain;
            while (cand >= 0 && i - static_cast<std::size_t>(cand) <= window_size &&
                   chain-- > 0) {
                const unsigned char* a = in + cand;
                const unsigned char* b = in + i;
                if (best_len == 0 || a[best_len] == b[best_len]) {
                    int len = 0;
                    while (len < max_len && a[len] == b[len]) {
                        ++len;
                    }
                    if (len > best_len) {
                        best_len = len;
                        best_dist = static_cast<int>(i - static_cast<std::size_t>(cand));
                        if (len >= nice_length || len == max_len) {
                            break;
                        }
                    }
                }
                cand = prev[static_cast<std::size_t>(cand)];
            }
        }
        if (best_len >= min_match) {
            emit_match(best_len, best_dist);
            for (int j = 0; j < best_len; ++j) {
                insert(i + static_cast<std::size_t>(j));
            }
            i += static_cast<std::size_t>(best_len);
        } else {
            emit_literal(in[i]);
            insert(i);
            ++i;
        }
    }

    bits.put(t.lit_code[256], t.lit_bits[256]); // end of block
    bits.flush();
}

} // namespace

std::vector<std::uint8_t> deflate_fixed(std::string_view input) {
    std::vector<std::uint8_t> out;
    deflate_into(input, out);
    return out;
}

std::size_t deflate_fixed_size(std::string_view input) {
    thread_local std::vector<std::uint8_t> scratch;
    deflate_into(input, scratch);
    return scratch.size();
}

} // namespace grsim
