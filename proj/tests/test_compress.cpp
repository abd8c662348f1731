#include <doctest.h>

#include "grsim/compress.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#ifdef GRSIM_HAVE_ZLIB
#include <zlib.h>
#endif

using namespace grsim;

namespace {

// Minimal RFC 1951 decoder for fixed-Huffman streams. Written directly from
// the format tables; shares nothing with the encoder.
struct inflate_oracle {
    const std::vector<std::uint8_t>& data;
    std::size_t bit_pos = 0;

    explicit inflate_oracle(const std::vector<std::uint8_t>& stream) : data(stream) {}

    int next_bit() {
        REQUIRE(bit_pos < data.size() * 8);
        int bit = (data[bit_pos >> 3] >> (bit_pos & 7)) & 1;
        ++bit_pos;
        return bit;
    }

    // non-Huffman fields are LSB-first
    std::uint32_t bits(int n) {
        std::uint32_t v = 0;
        for (int i = 0; i < n; ++i) {
            v |= static_cast<std::uint32_t>(next_bit()) << i;
        }
        return v;
    }

    // Huffman codes arrive MSB-first
    int litlen_symbol() {
        int code = 0;
        for (int i = 0; i < 7; ++i) {
            code = (code << 1) | next_bit();
        }
        if (code <= 0x17) {
            return 256 + code;
        }
        code = (code << 1) | next_bit(); // 8 bits
        if (code >= 0x30 && code <= 0xBF) {
            return code - 0x30;
        }
        if (code >= 0xC0 && code <= 0xC7) {
            return 280 + (code - 0xC0);
        }
        code = (code << 1) | next_bit(); // 9 bits
        REQUIRE(code >= 0x190);
        REQUIRE(code <= 0x1FF);
        return 144 + (code - 0x190);
    }

    std::string run() {
        REQUIRE(bits(1) == 1); // single final block
        REQUIRE(bits(2) == 1); // fixed Huffman
        static const int lbase[29] = {3,  4,  5,  6,  7,  8,  9,  10, 11,  13, 15, 17, 19, 23, 27,
                                      31, 35, 43, 51, 59, 67, 83, 99, 115, 131, 163, 195, 227, 258};
        static const int lextra[29] = {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2,
                                       2, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 0};
        static const int dbase[30] = {1,    2,    3,    4,    5,    7,    9,    13,   17,   25,
                                      33,   49,   65,   97,   129,  193,  257,  385,  513,  769,
                                      1025, 1537, 2049, 3073, 4097, 6145, 8193, 12289, 16385, 24577};
        static const int dextra[30] = {0, 0, 0, 0, 1, 1, 2, 2, 3, 3, 4,  4,  5,  5,  6,
                                       6, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 12, 13, 13};
        std::string out;
        while (true) {
            int sym = litlen_symbol();
            if (sym == 256) {
                break;
            }
            if (sym < 256) {
                out.push_back(static_cast<char>(sym));
                continue;
            }
            REQUIRE(sym <= 285);
            int length = lbase[sym - 257] + static_cast<int>(bits(lextra[sym - 257]));
            int dcode = 0;
            for (int i = 0; i < 5; ++i) {
                dcode = (dcode << 1) | next_bit();
            }
            REQUIRE(dcode < 30);
            int distance = dbase[dcode] + static_cast<int>(bits(dextra[dcode]));
            REQUIRE(distance <= static_cast<int>(out.size()));
            std::size_t from = out.size() - static_cast<std::size_t>(distance);
            for (int i = 0; i < length; ++i) {
                out.push_back(out[from + static_cast<std::size_t>(i)]);
            }
        }
        return out;
    }
};

std::string roundtrip(const std::string& input) {
    auto stream = deflate_fixed(input);
    inflate_oracle oracle(stream);
    return oracle.run();
}

#ifdef GRSIM_HAVE_ZLIB
std::string zlib_inflate_raw(const std::vector<std::uint8_t>& stream, std::size_t expected) {
    std::string out(expected + 16, '\0');
    z_stream zs{};
    REQUIRE(inflateInit2(&zs, -15) == Z_OK); // raw deflate, no zlib header
    zs.next_in = const_cast<Bytef*>(stream.data());
    zs.avail_in = static_cast<uInt>(stream.size());
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    REQUIRE(rc == Z_STREAM_END);
    out.resize(zs.total_out);
    inflateEnd(&zs);
    return out;
}
#endif

} // namespace

TEST_SUITE_BEGIN("compress");

TEST_CASE("deterministic output") {
    std::string input = "0120120120210210012012002121";
    CHECK(deflate_fixed(input) == deflate_fixed(input));
    CHECK(deflate_fixed_size(input) == deflate_fixed(input).size());
}

TEST_CASE("empty input is a bare block") {
    auto stream = deflate_fixed("");
    CHECK(stream.size() == 2); // 3 header bits + 7-bit end marker
    CHECK(roundtrip("").empty());
}

TEST_CASE("roundtrip through an independent decoder") {
    CHECK(roundtrip("a") == "a");
    CHECK(roundtrip("aaaaaaaa") == "aaaaaaaa");
    CHECK(roundtrip(std::string(2000, '0')) == std::string(2000, '0'));

    std::string overlap = "01";
    for (int i = 0; i < 300; ++i) {
        overlap += overlap.substr(overlap.size() - 2);
    }
    CHECK(roundtrip(overlap) == overlap);

    // matches across every distance bucket
    for (int gap : {10, 100, 200, 300, 600, 1200, 3000, 9000, 20000, 32700}) {
        std::string far = "ABCDEFGHIJKLMNOP" + std::string(static_cast<std::size_t>(gap), 'x') +
                          "ABCDEFGHIJKLMNOP";
        CHECK(roundtrip(far) == far);
    }

    std::mt19937 rng(29);
    std::uniform_int_distribution<int> trit('0', '2');
    std::uniform_int_distribution<int> any(0, 255);
    std::uniform_int_distribution<int> len(1, 4000);
    for (int trial = 0; trial < 30; ++trial) {
        std::string digits;
        int digits_len = len(rng);
        for (int i = 0; i < digits_len; ++i) {
            digits.push_back(static_cast<char>(trit(rng)));
        }
        CHECK(roundtrip(digits) == digits);

        std::string raw;
        int raw_len = len(rng);
        for (int i = 0; i < raw_len; ++i) {
            raw.push_back(static_cast<char>(any(rng)));
        }
        CHECK(roundtrip(raw) == raw);
    }
}

#ifdef GRSIM_HAVE_ZLIB
TEST_CASE("zlib accepts the stream as raw deflate") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> trit('0', '2');
    for (int trial = 0; trial < 10; ++trial) {
        std::string input;
        for (int i = 0; i < 1586; ++i) {
            input.push_back(static_cast<char>(trit(rng)));
        }
        CHECK(zlib_inflate_raw(deflate_fixed(input), input.size()) == input);
    }
    CHECK(zlib_inflate_raw(deflate_fixed(std::string(5000, '0')), 5000) ==
          std::string(5000, '0'));
}
#endif

TEST_CASE("compressed size tracks redundancy") {
    std::string zeros(1586, '0');
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> trit('0', '2');
    std::string noise;
    for (int i = 0; i < 1586; ++i) {
        noise.push_back(static_cast<char>(trit(rng)));
    }
    CHECK(deflate_fixed_size(zeros) < deflate_fixed_size(noise));
    // worst case stays within the fixed-Huffman literal bound
    CHECK(deflate_fixed_size(noise) <= noise.size() * 9 / 8 + 8);
}

TEST_SUITE_END();
