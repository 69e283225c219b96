#pragma once

#include "narayana/bitstream.hpp"
#include "narayana/sequences.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace narayana {

// Narayana universal code.
//
// Bit i of a codeword (i <= d, J(d) <= n < J(d + 1)) marks J(i) in the greedy
// decomposition of n; bit d + 1 is an extra 1, so every codeword ends in the
// only adjacent pair of ones it contains.

Codeword encode(Integer n);

// Throws MalformedCodeword unless the codeword ends in "11" with no earlier
// adjacent ones and its sum fits in Integer. Ones closer than the canonical
// gap are summed as written.
Integer decode(const Codeword& cw);

// largest_j_index_leq(n) + 2, without building the codeword.
std::size_t codeword_length(Integer n);

enum class StreamMode {
    Strict,     // residue after the last codeword must be < 8 zero bits
    Permissive, // residue without a delimiter is ignored
};

// Codewords back to back, zero-padded to a byte boundary.
BitBuffer encode_stream(std::span<const Integer> values);

std::vector<Integer> decode_stream(const BitBuffer& buffer, StreamMode mode = StreamMode::Strict);

// One delimited stretch of a damaged stream: [begin, end) ending in "11".
// `value` is empty when the stretch could not be decoded and was skipped.
struct StreamSegment {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::optional<Integer> value;
};

struct LenientDecode {
    std::vector<StreamSegment> segments;
    std::size_t residue_begin = 0; // bits from here to the end hold no delimiter
    bool residue_has_ones = false;

    [[nodiscard]] std::vector<Integer> values() const;
};

// Never throws on content: undecodable stretches are skipped to the next
// delimiter. `from` starts the scan at a given bit.
LenientDecode decode_stream_lenient(const BitBuffer& buffer, std::size_t from = 0);

// Narayana value of bits [begin, end), or nullopt if they are not a valid
// codeword.
std::optional<Integer> try_decode(const BitBuffer& buffer, std::size_t begin, std::size_t end);

// One past the first "11" at or after `from`, or nullopt if the padded extent
// holds none.
std::optional<std::size_t> find_delimiter_end(const BitBuffer& buffer, std::size_t from);

// Baselines ---------------------------------------------------------------

// Fibonacci terms 1, 2, 3, 5, ... that fit in Integer.
std::span<const Integer> fibonacci_series();

// Zeckendorf over Fibonacci terms, terminal 1 appended.
Codeword fibonacci_encode(Integer n);
Integer fibonacci_decode(const Codeword& cw);
std::size_t fibonacci_length(Integer n);

// floor(log2 n) zeros, then n in binary, most significant bit first.
Codeword elias_gamma_encode(Integer n);
Integer elias_gamma_decode(const Codeword& cw);
std::size_t elias_gamma_length(Integer n);

enum class Code { Narayana, Fibonacci, EliasGamma };

inline constexpr Code kAllCodes[] = {Code::Narayana, Code::Fibonacci, Code::EliasGamma};

std::string_view code_name(Code code);
// Accepts "narayana", "fibonacci", "elias-gamma".
std::optional<Code> parse_code(std::string_view name);

Codeword encode(Code code, Integer n);
Integer decode(Code code, const Codeword& cw);
std::size_t code_length(Code code, Integer n);

BitBuffer encode_stream(Code code, std::span<const Integer> values);
std::vector<Integer> decode_stream(Code code, const BitBuffer& buffer, StreamMode mode = StreamMode::Strict);

} // namespace narayana
