#include "narayana/bitstream.hpp"

#include <stdexcept>

namespace narayana {

Codeword Codeword::from_string(std::string_view text)
{
    std::vector<bool> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("codeword text may only contain '0' and '1'");
        }
        bits.push_back(c == '1');
    }
    return Codeword(std::move(bits));
}

std::string Codeword::to_string() const
{
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

BitBuffer::BitBuffer(std::vector<std::uint8_t> bytes, std::size_t bit_length)
    : bytes_(std::move(bytes)), bit_length_(bit_length)
{
    if (bit_length_ > bytes_.size() * 8 || bytes_.size() != (bit_length_ + 7) / 8) {
        throw std::invalid_argument("bit length does not match byte count");
    }
    for (std::size_t i = bit_length_; i < padded_bit_length(); ++i) {
        if (bit(i)) throw std::invalid_argument("padding bits must be zero");
    }
}

BitBuffer BitBuffer::from_bytes(std::vector<std::uint8_t> bytes)
{
    const std::size_t bits = bytes.size() * 8;
    return BitBuffer(std::move(bytes), bits);
}

void BitBuffer::push_back(bool b)
{
    if ((bit_length_ & 7) == 0) bytes_.push_back(0);
    if (b) bytes_.back() |= static_cast<std::uint8_t>(0x80U >> (bit_length_ & 7));
    ++bit_length_;
}

void BitBuffer::append(const Codeword& cw)
{
    for (bool b : cw.bits()) push_back(b);
}

BitBuffer BitBuffer::with_flipped(std::size_t i) const
{
    BitBuffer copy = *this;
    while (copy.padded_bit_length() <= i) copy.bytes_.push_back(0);
    copy.bytes_[i >> 3] ^= static_cast<std::uint8_t>(0x80U >> (i & 7));
    if (copy.bit_length_ <= i) copy.bit_length_ = i + 1;
    return copy;
}

bool BitCursor::rest_is_zero() const
{
    for (std::size_t i = position_; i < end(); ++i) {
        if (buffer_->bit(i)) return false;
    }
    return true;
}

} // namespace narayana
