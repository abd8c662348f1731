#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace grsim {

// Deterministic LZ77 + fixed-Huffman deflate stream (RFC 1951, BTYPE=01
// throughout). Matcher parameters are compile-time constants, so identical
// input produces identical bytes on every platform and build. The byte count
// of this stream is the project's compression score unit.
std::vector<std::uint8_t> deflate_fixed(std::string_view input);

// Length of deflate_fixed(input) without copying the stream out.
std::size_t deflate_fixed_size(std::string_view input);

} // namespace grsim
