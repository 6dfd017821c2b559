#include <doctest.h>

#include "sdc/ringmat.hpp"
#include "common/support.hpp"

using namespace sdc;
using sdc::testing::random_matrix;
using sdc::testing::random_vector;

namespace {

RingMatrix naive_product(const RingMatrix& a, const RingMatrix& b) {
    RingMatrix c(a.alphabet(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RingElement acc(a.alphabet(), 0);
            for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
            c(i, j) = acc.sym();
        }
    return c;
}

}  // namespace

TEST_CASE("matmul agrees with element-wise evaluation") {
    std::mt19937_64 rng(7);
    for (auto al : {Alphabet::F2, Alphabet::F2U, Alphabet::F4})
        for (int t = 0; t < 20; ++t) {
            const auto a = random_matrix(rng, al, 5, 7);
            const auto b = random_matrix(rng, al, 7, 4);
            CHECK(a * b == naive_product(a, b));
            const auto c = random_matrix(rng, al, 6, 7);
            CHECK(mul_transposed(a, c) == a * transpose(c));
        }
}

TEST_CASE("shape and alphabet checks") {
    const RingMatrix a(Alphabet::F2, 2, 3), b(Alphabet::F2, 2, 3), c(Alphabet::F4, 3, 2);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a * c, AlphabetMismatch);
    CHECK_NOTHROW(a + b);
    CHECK_THROWS_AS(RingMatrix(Alphabet::F2, 2, 2, {0, 1, 2, 0}), std::invalid_argument);
}

TEST_CASE("identity and zero predicates") {
    CHECK(is_identity(RingMatrix::identity(Alphabet::F4, 5)));
    CHECK(is_zero(RingMatrix(Alphabet::F4, 3, 3)));
    CHECK_FALSE(is_identity(RingMatrix(Alphabet::F4, 3, 3)));
    CHECK_FALSE(is_identity(RingMatrix::identity(Alphabet::F2, 3) + RingMatrix::identity(Alphabet::F2, 3)));
}

TEST_CASE("circulant rows shift right") {
    const auto m = circulant(parse_vector("1203", Alphabet::F4));
    CHECK(m.row_vector(0) == parse_vector("1203", Alphabet::F4));
    CHECK(m.row_vector(1) == parse_vector("3120", Alphabet::F4));
    CHECK(m.row_vector(3) == parse_vector("2031", Alphabet::F4));
}

TEST_CASE("circulants over a commutative alphabet commute") {
    std::mt19937_64 rng(11);
    for (auto al : {Alphabet::F2, Alphabet::F2U, Alphabet::F4}) {
        const auto a = circulant(random_vector(rng, al, 6));
        const auto b = circulant(random_vector(rng, al, 6));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("star is right multiplication by the shift permutation") {
    std::mt19937_64 rng(3);
    for (std::size_t n : {2u, 3u, 5u, 7u}) {
        const auto a = random_matrix(rng, Alphabet::F2U, n, n);
        CHECK(star(a) == a * shift_perm(Alphabet::F2U, n));
    }
    const auto p = shift_perm(Alphabet::F2, 3);
    CHECK(p(0, 1) == 1);
    CHECK(p(2, 0) == 1);
    CHECK(p == circulant(parse_vector("010", Alphabet::F2)));
}

TEST_CASE("block circulant and kronecker") {
    std::mt19937_64 rng(5);
    const auto a = random_matrix(rng, Alphabet::F4, 2, 2);
    const auto b = random_matrix(rng, Alphabet::F4, 2, 2);
    const auto c = random_matrix(rng, Alphabet::F4, 2, 2);
    const auto m = block_circulant({a, b, c});
    CHECK(m.block(0, 2, 2, 2) == b);
    CHECK(m.block(2, 0, 2, 2) == c);
    CHECK(m.block(4, 4, 2, 2) == a);
    CHECK(m == assemble({{a, b, c}, {c, a, b}, {b, c, a}}));

    const auto j = exchange(Alphabet::F4, 2);
    const auto k = kronecker(j, a);
    CHECK(is_zero(k.block(0, 0, 2, 2)));
    CHECK(k.block(0, 2, 2, 2) == a);
    CHECK(j * j == RingMatrix::identity(Alphabet::F4, 2));
}

TEST_CASE("block and set_block round trip") {
    std::mt19937_64 rng(9);
    auto m = random_matrix(rng, Alphabet::F2U, 6, 6);
    const auto b = m.block(1, 2, 3, 4);
    RingMatrix z(Alphabet::F2U, 6, 6);
    z.set_block(1, 2, b);
    CHECK(z.block(1, 2, 3, 4) == b);
    CHECK_THROWS_AS(m.block(4, 4, 3, 3), std::out_of_range);
}
