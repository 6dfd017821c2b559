#include <doctest.h>

#include "sdc/alphabet.hpp"

using namespace sdc;

namespace {

// (c0 + c1 x)(d0 + d1 x) with x^2 = sq0 + sq1 x, computed on coefficient pairs.
std::uint8_t poly_mul(std::uint8_t a, std::uint8_t b, int sq0, int sq1) {
    const int c0 = a & 1, c1 = a >> 1, d0 = b & 1, d1 = b >> 1;
    const int top = c1 & d1;
    const int r0 = (c0 & d0) ^ (top & sq0);
    const int r1 = (c0 & d1) ^ (c1 & d0) ^ (top & sq1);
    return static_cast<std::uint8_t>(r0 | (r1 << 1));
}

}  // namespace

TEST_CASE("multiplication tables follow the defining relations") {
    for (std::uint8_t a = 0; a < 4; ++a)
        for (std::uint8_t b = 0; b < 4; ++b) {
            CHECK(tables(Alphabet::F2U).mul[a][b] == poly_mul(a, b, 0, 0));
            CHECK(tables(Alphabet::F4).mul[a][b] == poly_mul(a, b, 1, 1));
            CHECK(tables(Alphabet::F4).add[a][b] == (a ^ b));
        }
    CHECK(tables(Alphabet::F2).mul[1][1] == 1);
    CHECK(tables(Alphabet::F2).add[1][1] == 0);
}

TEST_CASE("u squares to zero and w squares to 1 + w") {
    const RingElement u(Alphabet::F2U, 2), w(Alphabet::F4, 2);
    CHECK((u * u).sym() == 0);
    CHECK((w * w).sym() == 3);
    CHECK((w * w * w).sym() == 1);
}

TEST_CASE("F4 is a field") {
    for (std::uint8_t a = 1; a < 4; ++a) {
        int inverses = 0;
        for (std::uint8_t b = 1; b < 4; ++b) inverses += tables(Alphabet::F4).mul[a][b] == 1;
        CHECK(inverses == 1);
    }
}

TEST_CASE("gray images of every symbol") {
    using A = std::array<std::uint8_t, 2>;
    CHECK(gray(Alphabet::F2U, 0) == A{0, 0});
    CHECK(gray(Alphabet::F2U, 1) == A{0, 1});
    CHECK(gray(Alphabet::F2U, 2) == A{1, 1});
    CHECK(gray(Alphabet::F2U, 3) == A{1, 0});
    CHECK(gray(Alphabet::F4, 0) == A{0, 0});
    CHECK(gray(Alphabet::F4, 1) == A{1, 1});
    CHECK(gray(Alphabet::F4, 2) == A{1, 0});
    CHECK(gray(Alphabet::F4, 3) == A{0, 1});
    CHECK_THROWS_AS(gray(Alphabet::F2, 1), std::invalid_argument);
}

TEST_CASE("lee weights") {
    CHECK(lee_weight(RingElement(Alphabet::F2U, 2)) == 2);
    CHECK(lee_weight(RingElement(Alphabet::F2U, 3)) == 1);
    CHECK(lee_weight(RingElement(Alphabet::F4, 1)) == 2);
    CHECK(lee_weight(RingElement(Alphabet::F4, 3)) == 1);
    CHECK(lee_weight(RingElement(Alphabet::F2, 1)) == 1);
}

TEST_CASE("gray map is additive") {
    for (auto al : {Alphabet::F2U, Alphabet::F4})
        for (std::uint8_t a = 0; a < 4; ++a)
            for (std::uint8_t b = 0; b < 4; ++b) {
                const auto ga = gray(al, a), gb = gray(al, b), gs = gray(al, a ^ b);
                CHECK(gs[0] == (ga[0] ^ gb[0]));
                CHECK(gs[1] == (ga[1] ^ gb[1]));
            }
}

TEST_CASE("element construction validates range") {
    CHECK_THROWS_AS(RingElement(Alphabet::F2, 2), std::invalid_argument);
    CHECK_THROWS_AS(RingElement(Alphabet::F4, 4), std::invalid_argument);
    CHECK_THROWS_AS(RingElement(Alphabet::F2, 1) + RingElement(Alphabet::F4, 1), AlphabetMismatch);
}

TEST_CASE("parse and format vectors") {
    const auto v = parse_vector("(3122 3333)", Alphabet::F4);
    CHECK(v.size() == 8);
    CHECK(v.syms[0] == 3);
    CHECK(format_vector(v) == "31223333");
    CHECK_THROWS_AS(parse_vector("0120", Alphabet::F2), std::invalid_argument);
    CHECK_THROWS_AS(parse_vector("01x0", Alphabet::F4), std::invalid_argument);
    CHECK(parse_alphabet("f2u") == Alphabet::F2U);
    CHECK_THROWS_AS(parse_alphabet("gf4"), std::invalid_argument);
}

TEST_CASE("inner product") {
    const auto x = parse_vector("11", Alphabet::F2);
    CHECK(inner_product(x, x) == 0);
    const auto w = parse_vector("2", Alphabet::F4);
    CHECK(inner_product(w, w) == 3);
}
