#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace narayana {

/// A bit string, bit 0 first. Used for single codewords of every code.
class Codeword {
public:
    Codeword() = default;
    explicit Codeword(std::vector<bool> bits) : bits_(std::move(bits)) {}

    // Throws std::invalid_argument on characters other than '0' and '1'.
    static Codeword from_string(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }
    [[nodiscard]] bool operator[](std::size_t i) const { return bits_[i]; }
    [[nodiscard]] const std::vector<bool>& bits() const noexcept { return bits_; }
    [[nodiscard]] std::string to_string() const;

    void push_back(bool bit) { bits_.push_back(bit); }

    bool operator==(const Codeword&) const = default;

private:
    std::vector<bool> bits_;
};

/// Packed bits, most significant bit of each byte first.
///
/// Invariant: bits at positions >= bit_length() inside the last byte are 0.
class BitBuffer {
public:
    BitBuffer() = default;

    // Throws std::invalid_argument if bit_length does not fit the bytes or the
    // padding bits are not zero.
    BitBuffer(std::vector<std::uint8_t> bytes, std::size_t bit_length);

    // Every bit of every byte counts, as when reading a file.
    static BitBuffer from_bytes(std::vector<std::uint8_t> bytes);

    [[nodiscard]] std::size_t bit_length() const noexcept { return bit_length_; }
    [[nodiscard]] std::size_t padded_bit_length() const noexcept { return bytes_.size() * 8; }
    [[nodiscard]] std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
    [[nodiscard]] bool empty() const noexcept { return bit_length_ == 0; }

    // Reads any position below padded_bit_length().
    [[nodiscard]] bool bit(std::size_t i) const { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1U; }

    void push_back(bool bit);
    void append(const Codeword& cw);

    // Copy with position i inverted; i may address a padding bit. The copy's
    // bit_length grows to cover i.
    [[nodiscard]] BitBuffer with_flipped(std::size_t i) const;

    bool operator==(const BitBuffer&) const = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bit_length_ = 0;
};

/// Single-reader position over a BitBuffer's padded extent.
class BitCursor {
public:
    explicit BitCursor(const BitBuffer& buffer, std::size_t position = 0) : buffer_(&buffer), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }
    [[nodiscard]] std::size_t end() const noexcept { return buffer_->padded_bit_length(); }
    [[nodiscard]] bool at_end() const noexcept { return position_ >= end(); }
    [[nodiscard]] std::size_t remaining() const noexcept { return at_end() ? 0 : end() - position_; }

    [[nodiscard]] bool peek() const { return buffer_->bit(position_); }
    bool read() { return buffer_->bit(position_++); }
    void seek(std::size_t position) { position_ = position; }

    // True if every bit from the position to the end is zero.
    [[nodiscard]] bool rest_is_zero() const;

private:
    const BitBuffer* buffer_;
    std::size_t position_;
};

} // namespace narayana
