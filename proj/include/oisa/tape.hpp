#pragma once

#include <cstdint>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace oisa {

// Read-once advice source. The oracle provides a finite prefix of a conceptually
// infinite tape; reads past the provided content return 0 and still count.
class AdviceTape {
public:
    AdviceTape() = default;
    explicit AdviceTape(BitString content) : content_(std::move(content)) {}

    int read_bit() {
        int b = cursor_ < content_.size() ? (content_[cursor_] ? 1 : 0) : 0;
        ++cursor_;
        bits_read_ = cursor_;
        return b;
    }

    // MSB-first fixed-width field.
    std::uint64_t read_uint(int width) {
        if (width < 0 || width > 64) throw input_error("AdviceTape: bad field width");
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | static_cast<std::uint64_t>(read_bit());
        return v;
    }

    std::uint64_t read_self_delimited() {
        int zeros = 0;
        while (read_bit() == 0) {
            // Past-end reads return 0 forever; a genuine code never has this many.
            if (++zeros > 64) throw decode_error("tape does not hold a self-delimited code", cursor_);
        }
        std::uint64_t len = 1;
        for (int i = 0; i < zeros; ++i) len = (len << 1) | static_cast<std::uint64_t>(read_bit());
        if (len > 64) throw decode_error("tape holds a bad length field", cursor_);
        std::uint64_t m = 1;
        for (std::uint64_t i = 0; i + 1 < len; ++i) m = (m << 1) | static_cast<std::uint64_t>(read_bit());
        return m - 1;
    }

    std::size_t bits_read() const { return bits_read_; }
    std::size_t position() const { return cursor_; }
    std::size_t length() const { return content_.size(); }

private:
    BitString content_;
    std::size_t cursor_ = 0;
    std::size_t bits_read_ = 0;
};

inline AdviceTape compose_advice(const std::vector<BitString>& parts) {
    BitString all;
    for (const auto& p : parts) all.append(p);
    return AdviceTape(std::move(all));
}

} // namespace oisa
