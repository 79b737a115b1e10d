#include <catch2/catch_amalgamated.hpp>

#include <oisa/bits.hpp>
#include <oisa/tape.hpp>

using namespace oisa;

TEST_CASE("self-delimited code round-trips the small anchors") {
    auto enc0 = encode_self_delimited(0);
    CHECK(enc0.to_string() == "1");
    CHECK(decode_self_delimited(enc0).value == 0);

    auto enc42 = encode_self_delimited(42);
    auto dec = decode_self_delimited(enc42);
    CHECK(dec.value == 42);
    CHECK(dec.consumed == enc42.size());
    // floor(log2(43)) + 2*floor(log2(floor(log2(43))+1)) + 2 = 6 + 2*2 + 2
    CHECK(enc42.size() <= 6 + 2 * 3 + 2);
}

TEST_CASE("self-delimited code round-trips a 16-bit sweep") {
    for (std::uint64_t n = 0; n < (1u << 12); ++n) {
        auto enc = encode_self_delimited(n);
        auto dec = decode_self_delimited(enc);
        REQUIRE(dec.value == n);
        REQUIRE(dec.consumed == enc.size());
    }
}

TEST_CASE("codes decode at any offset and reject malformed prefixes") {
    BitString joined;
    joined.append(encode_self_delimited(7));
    joined.append(encode_self_delimited(100000));
    auto first = decode_self_delimited(joined, 0);
    CHECK(first.value == 7);
    auto second = decode_self_delimited(joined, first.consumed);
    CHECK(second.value == 100000);
    CHECK(first.consumed + second.consumed == joined.size());

    CHECK_THROWS_AS(decode_self_delimited(BitString::from_string("000"), 0), decode_error);
    CHECK_THROWS_AS(decode_self_delimited(BitString(), 0), decode_error);
}

TEST_CASE("tape reads past the content return zeros and still count") {
    AdviceTape tape(BitString::from_string("10"));
    CHECK(tape.read_bit() == 1);
    CHECK(tape.read_bit() == 0);
    for (int i = 0; i < 5; ++i) CHECK(tape.read_bit() == 0);
    CHECK(tape.bits_read() == 7);
}

TEST_CASE("composed advice is read back part by part") {
    auto tape = compose_advice({encode_self_delimited(3), BitString::from_string("101")});
    CHECK(tape.read_self_delimited() == 3);
    CHECK(tape.read_bit() == 1);
    CHECK(tape.read_bit() == 0);
    CHECK(tape.read_bit() == 1);
    CHECK(tape.bits_read() == encode_self_delimited(3).size() + 3);

    auto empty = compose_advice({BitString(), BitString()});
    CHECK(empty.length() == 0);
    CHECK(empty.read_bit() == 0);
}

TEST_CASE("fixed-width tape fields are MSB first") {
    AdviceTape tape(BitString::from_string("10110"));
    CHECK(tape.read_uint(5) == 0b10110);
    AdviceTape zero_width(BitString{});
    CHECK(zero_width.read_uint(0) == 0);
    CHECK(zero_width.bits_read() == 0);
}
