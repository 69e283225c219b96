#include "narayana/codec.hpp"

#include "narayana/error.hpp"
#include "narayana/zeckendorf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace narayana {

namespace {

void require_positive(Integer n)
{
    if (n < 1) throw std::invalid_argument("universal codes take n >= 1, got " + std::to_string(n));
}

// Shared structure check for the two "ends in 11" codes.
void check_terminated(const Codeword& cw, std::string_view code)
{
    const std::size_t size = cw.size();
    if (size < 2 || !cw[size - 1] || !cw[size - 2]) {
        throw MalformedCodeword(std::string(code) + " codeword must end in 11");
    }
    for (std::size_t i = 0; i + 2 < size; ++i) {
        if (cw[i] && cw[i + 1]) {
            throw MalformedCodeword(std::string(code) + " codeword has adjacent ones at bit " + std::to_string(i) +
                                    " before its terminator");
        }
    }
}

Integer sum_marked_terms(const Codeword& cw, std::span<const Integer> terms, std::string_view code)
{
    const std::size_t data_bits = cw.size() - 1;
    if (data_bits > terms.size()) {
        throw MalformedCodeword(std::string(code) + " codeword of " + std::to_string(cw.size()) +
                                " bits exceeds the supported value range");
    }
    Integer sum = 0;
    for (std::size_t i = 0; i < data_bits; ++i) {
        if (cw[i] && __builtin_add_overflow(sum, terms[i], &sum)) {
            throw MalformedCodeword(std::string(code) + " codeword value exceeds 2^63 - 1");
        }
    }
    return sum;
}

Codeword slice(const BitBuffer& buffer, std::size_t begin, std::size_t end)
{
    std::vector<bool> bits;
    bits.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) bits.push_back(buffer.bit(i));
    return Codeword(std::move(bits));
}

void check_residue(const BitBuffer& buffer, std::size_t from, StreamMode mode)
{
    if (mode != StreamMode::Strict) return;
    BitCursor cursor(buffer, from);
    if (!cursor.rest_is_zero()) {
        throw TrailingGarbage("stream has non-zero bits after the last codeword, starting at bit " +
                              std::to_string(from));
    }
    if (cursor.remaining() >= 8) {
        throw TrailingGarbage("stream has " + std::to_string(cursor.remaining()) + " padding bits");
    }
}

template <typename DecodeFn>
std::vector<Integer> decode_delimited(const BitBuffer& buffer, StreamMode mode, DecodeFn decode_one)
{
    std::vector<Integer> out;
    std::size_t pos = 0;
    while (auto end = find_delimiter_end(buffer, pos)) {
        out.push_back(decode_one(slice(buffer, pos, *end)));
        pos = *end;
    }
    check_residue(buffer, pos, mode);
    return out;
}

} // namespace

Codeword encode(Integer n)
{
    require_positive(n);
    const auto d = decompose(n);
    std::vector<bool> bits(d.indices.back() + 2, false);
    for (auto i : d.indices) bits[i] = true;
    bits.back() = true;
    return Codeword(std::move(bits));
}

Integer decode(const Codeword& cw)
{
    check_terminated(cw, "narayana");
    return sum_marked_terms(cw, j_series(), "narayana");
}

std::size_t codeword_length(Integer n)
{
    require_positive(n);
    return largest_j_index_leq(n) + 2;
}

BitBuffer encode_stream(std::span<const Integer> values) { return encode_stream(Code::Narayana, values); }

std::vector<Integer> decode_stream(const BitBuffer& buffer, StreamMode mode)
{
    return decode_stream(Code::Narayana, buffer, mode);
}

std::optional<std::size_t> find_delimiter_end(const BitBuffer& buffer, std::size_t from)
{
    const std::size_t end = buffer.padded_bit_length();
    bool previous = false;
    for (std::size_t i = from; i < end; ++i) {
        const bool current = buffer.bit(i);
        if (previous && current) return i + 1;
        previous = current;
    }
    return std::nullopt;
}

std::optional<Integer> try_decode(const BitBuffer& buffer, std::size_t begin, std::size_t end)
{
    try {
        return decode(slice(buffer, begin, end));
    } catch (const MalformedCodeword&) {
        return std::nullopt;
    }
}

std::vector<Integer> LenientDecode::values() const
{
    std::vector<Integer> out;
    out.reserve(segments.size());
    for (const auto& s : segments) {
        if (s.value) out.push_back(*s.value);
    }
    return out;
}

LenientDecode decode_stream_lenient(const BitBuffer& buffer, std::size_t from)
{
    LenientDecode result;
    std::size_t pos = from;
    while (auto end = find_delimiter_end(buffer, pos)) {
        result.segments.push_back({pos, *end, try_decode(buffer, pos, *end)});
        pos = *end;
    }
    result.residue_begin = pos;
    result.residue_has_ones = !BitCursor(buffer, pos).rest_is_zero();
    return result;
}

// Fibonacci ---------------------------------------------------------------

std::span<const Integer> fibonacci_series()
{
    static const std::vector<Integer> table = [] {
        std::vector<Integer> f{1, 2};
        for (;;) {
            Integer next = 0;
            if (__builtin_add_overflow(f[f.size() - 1], f[f.size() - 2], &next)) break;
            f.push_back(next);
        }
        return f;
    }();
    return table;
}

namespace {

std::size_t largest_fibonacci_index_leq(Integer n)
{
    const auto f = fibonacci_series();
    const auto it = std::upper_bound(f.begin(), f.end(), n);
    return static_cast<std::size_t>(it - f.begin()) - 1;
}

} // namespace

Codeword fibonacci_encode(Integer n)
{
    require_positive(n);
    const auto f = fibonacci_series();
    std::size_t index = largest_fibonacci_index_leq(n);
    std::vector<bool> bits(index + 2, false);
    bits.back() = true;
    Integer remainder = n;
    for (std::size_t i = index + 1; i-- > 0 && remainder > 0;) {
        if (f[i] <= remainder) {
            bits[i] = true;
            remainder -= f[i];
        }
    }
    return Codeword(std::move(bits));
}

Integer fibonacci_decode(const Codeword& cw)
{
    check_terminated(cw, "fibonacci");
    return sum_marked_terms(cw, fibonacci_series(), "fibonacci");
}

std::size_t fibonacci_length(Integer n)
{
    require_positive(n);
    return largest_fibonacci_index_leq(n) + 2;
}

// Elias gamma -------------------------------------------------------------

namespace {

std::size_t binary_width(Integer n) { return static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(n))); }

// Reads one gamma codeword. Returns nullopt if the stream ends first.
std::optional<Integer> read_gamma(BitCursor& cursor)
{
    std::size_t zeros = 0;
    while (!cursor.at_end() && !cursor.peek()) {
        cursor.read();
        ++zeros;
    }
    if (cursor.remaining() < zeros + 1) return std::nullopt;
    if (zeros > 62) throw MalformedCodeword("elias-gamma codeword exceeds 2^63 - 1");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i <= zeros; ++i) value = (value << 1) | (cursor.read() ? 1U : 0U);
    return static_cast<Integer>(value);
}

} // namespace

Codeword elias_gamma_encode(Integer n)
{
    require_positive(n);
    const std::size_t width = binary_width(n);
    std::vector<bool> bits(width - 1, false);
    for (std::size_t i = width; i-- > 0;) bits.push_back(((static_cast<std::uint64_t>(n) >> i) & 1U) != 0);
    return Codeword(std::move(bits));
}

Integer elias_gamma_decode(const Codeword& cw)
{
    std::size_t zeros = 0;
    while (zeros < cw.size() && !cw[zeros]) ++zeros;
    if (zeros == cw.size()) throw MalformedCodeword("elias-gamma codeword has no leading one");
    if (cw.size() != 2 * zeros + 1) {
        throw MalformedCodeword("elias-gamma codeword with " + std::to_string(zeros) + " leading zeros must have " +
                                std::to_string(2 * zeros + 1) + " bits, has " + std::to_string(cw.size()));
    }
    if (zeros > 62) throw MalformedCodeword("elias-gamma codeword exceeds 2^63 - 1");
    std::uint64_t value = 0;
    for (std::size_t i = zeros; i < cw.size(); ++i) value = (value << 1) | (cw[i] ? 1U : 0U);
    return static_cast<Integer>(value);
}

std::size_t elias_gamma_length(Integer n)
{
    require_positive(n);
    return 2 * binary_width(n) - 1;
}

// Dispatch ----------------------------------------------------------------

std::string_view code_name(Code code)
{
    switch (code) {
    case Code::Narayana: return "narayana";
    case Code::Fibonacci: return "fibonacci";
    case Code::EliasGamma: return "elias-gamma";
    }
    return "unknown";
}

std::optional<Code> parse_code(std::string_view name)
{
    for (auto c : kAllCodes) {
        if (code_name(c) == name) return c;
    }
    return std::nullopt;
}

Codeword encode(Code code, Integer n)
{
    switch (code) {
    case Code::Narayana: return encode(n);
    case Code::Fibonacci: return fibonacci_encode(n);
    case Code::EliasGamma: return elias_gamma_encode(n);
    }
    throw std::invalid_argument("unknown code");
}

Integer decode(Code code, const Codeword& cw)
{
    switch (code) {
    case Code::Narayana: return decode(cw);
    case Code::Fibonacci: return fibonacci_decode(cw);
    case Code::EliasGamma: return elias_gamma_decode(cw);
    }
    throw std::invalid_argument("unknown code");
}

std::size_t code_length(Code code, Integer n)
{
    switch (code) {
    case Code::Narayana: return codeword_length(n);
    case Code::Fibonacci: return fibonacci_length(n);
    case Code::EliasGamma: return elias_gamma_length(n);
    }
    throw std::invalid_argument("unknown code");
}

BitBuffer encode_stream(Code code, std::span<const Integer> values)
{
    BitBuffer buffer;
    for (auto v : values) buffer.append(encode(code, v));
    return buffer;
}

std::vector<Integer> decode_stream(Code code, const BitBuffer& buffer, StreamMode mode)
{
    switch (code) {
    case Code::Narayana: return decode_delimited(buffer, mode, [](const Codeword& cw) { return decode(cw); });
    case Code::Fibonacci:
        return decode_delimited(buffer, mode, [](const Codeword& cw) { return fibonacci_decode(cw); });
    case Code::EliasGamma: {
        std::vector<Integer> out;
        BitCursor cursor(buffer);
        std::size_t start = 0;
        while (!cursor.at_end()) {
            start = cursor.position();
            auto v = read_gamma(cursor);
            if (!v) break;
            out.push_back(*v);
            start = cursor.position();
        }
        check_residue(buffer, start, mode);
        return out;
    }
    }
    throw std::invalid_argument("unknown code");
}

} // namespace narayana
