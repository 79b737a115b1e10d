#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace oisa {

// A finite bit sequence; position 0 is read first.
class BitString {
public:
    BitString() = default;

    static BitString from_string(std::string_view s) {
        BitString b;
        b.bits_.reserve(s.size());
        for (char c : s) {
            if (c == '0')
                b.bits_.push_back(false);
            else if (c == '1')
                b.bits_.push_back(true);
            else
                throw input_error("BitString: character must be 0 or 1");
        }
        return b;
    }

    void push_back(bool b) { bits_.push_back(b); }

    void append(const BitString& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }

    // MSB-first fixed-width field.
    void append_uint(std::uint64_t v, int width) {
        if (width < 0 || width > 64) throw input_error("BitString: bad field width");
        if (width < 64 && (v >> width) != 0) throw input_error("BitString: value does not fit field");
        for (int i = width - 1; i >= 0; --i) bits_.push_back((v >> i) & 1u);
    }

    bool operator[](std::size_t i) const { return bits_[i]; }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (bool b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    bool operator==(const BitString&) const = default;

private:
    std::vector<bool> bits_;
};

// Self-delimited integer code (Elias-delta over n+1 so that 0 is encodable):
// unary length of the length, the length, then the value with its leading 1 implicit.
// Code length is floor(log2(n+1)) + 2*floor(log2(floor(log2(n+1))+1)) + 1 bits.
inline BitString encode_self_delimited(std::uint64_t n) {
    std::uint64_t m = n + 1; // m >= 1; overflow of n = 2^64-1 is out of scope
    int len = std::bit_width(m);
    int lenlen = std::bit_width(static_cast<unsigned>(len));
    BitString out;
    for (int i = 0; i < lenlen - 1; ++i) out.push_back(false);
    out.append_uint(static_cast<std::uint64_t>(len), lenlen);
    if (len > 1) out.append_uint(m & ((std::uint64_t{1} << (len - 1)) - 1), len - 1);
    return out;
}

struct Decoded {
    std::uint64_t value = 0;
    std::size_t consumed = 0;
};

inline Decoded decode_self_delimited(const BitString& bits, std::size_t pos = 0) {
    std::size_t p = pos;
    int zeros = 0;
    while (true) {
        if (p >= bits.size()) throw decode_error("self-delimited code truncated in unary part", p);
        if (bits[p]) break;
        ++p;
        if (++zeros > 64) throw decode_error("self-delimited code has runaway unary part", p);
    }
    // p points at the leading 1 of the length field, which has zeros+1 bits total.
    std::uint64_t len = 1;
    ++p;
    for (int i = 0; i < zeros; ++i) {
        if (p >= bits.size()) throw decode_error("self-delimited code truncated in length field", p);
        len = (len << 1) | static_cast<std::uint64_t>(bits[p]);
        ++p;
    }
    if (len == 0 || len > 64) throw decode_error("self-delimited code has bad length field", p);
    std::uint64_t m = 1;
    for (std::uint64_t i = 0; i + 1 < len; ++i) {
        if (p >= bits.size()) throw decode_error("self-delimited code truncated in value field", p);
        m = (m << 1) | static_cast<std::uint64_t>(bits[p]);
        ++p;
    }
    return Decoded{m - 1, p - pos};
}

} // namespace oisa
