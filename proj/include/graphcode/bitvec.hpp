#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphcode/errors.hpp"

namespace graphcode {

/// Bit-packed vector over GF(2). Length is in logical bits; padding bits in
/// the last word are kept at zero so whole-word operations stay valid.
class BitVector {
public:
    static constexpr std::size_t word_bits = 64;

    BitVector() : length_(0) {}

    explicit BitVector(std::size_t length)
        : length_(length), words_((length + word_bits - 1) / word_bits, 0u) {}

    /// Parse from a '0'/'1' string, e.g. "110".
    static BitVector parse(const std::string& text) {
        BitVector v(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') {
                v.set(i, true);
            } else if (text[i] != '0') {
                throw format_error("BitVector: expected '0' or '1', got '" +
                                   std::string(1, text[i]) + "'");
            }
        }
        return v;
    }

    std::size_t size() const { return length_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }

    void set(std::size_t i, bool value) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i % word_bits);
        if (value) {
            words_[i / word_bits] |= mask;
        } else {
            words_[i / word_bits] &= ~mask;
        }
    }

    void flip(std::size_t i) { set(i, !get(i)); }

    std::size_t popcount() const {
        std::size_t total = 0;
        for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    BitVector& operator^=(const BitVector& other) {
        if (other.length_ != length_) throw parameter_error("BitVector: length mismatch in xor");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    BitVector operator^(const BitVector& other) const {
        BitVector result = *this;
        result ^= other;
        return result;
    }

    bool operator==(const BitVector& other) const {
        return length_ == other.length_ && words_ == other.words_;
    }
    bool operator!=(const BitVector& other) const { return !(*this == other); }

    /// GF(2) inner product with another vector of the same length.
    bool dot(const BitVector& other) const {
        if (other.length_ != length_) throw parameter_error("BitVector: length mismatch in dot");
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
        return std::popcount(acc) & 1u;
    }

    std::string to_string() const {
        std::string s(length_, '0');
        for (std::size_t i = 0; i < length_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check_index(std::size_t i) const {
        if (i >= length_) throw parameter_error("BitVector: index out of range");
    }

    std::size_t length_;
    std::vector<std::uint64_t> words_;
};

} // namespace graphcode
