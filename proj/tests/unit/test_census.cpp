#include <doctest.h>

#include "common/support.hpp"
#include "sdc/census.hpp"
#include "sdc/constructions.hpp"

using namespace sdc;

TEST_CASE("census of the [8,4,4] code") {
    const auto e = BinaryCode::from_generator(BinaryMatrix::from_strings({"11110000", "11001100", "10101010", "11111111"}));
    CensusOptions opt;
    opt.max_weight = 4;
    const auto c = low_weight_census(e, opt);
    CHECK(c.counts == std::vector<std::uint64_t>{1, 0, 0, 0, 14});
    CHECK(c.min_nonzero_weight() == 4);
    CHECK(min_distance(e, 4).distance == 4);
    CHECK_THROWS_AS(min_distance(e, 2), CensusError);
}

TEST_CASE("census of two repetition codes") {
    const auto c = BinaryCode::from_generator(BinaryMatrix::from_strings({"1100", "0011"}));
    CHECK(min_distance(c, 2).distance == 2);
}

TEST_CASE("census matches full enumeration on random self-dual codes") {
    std::mt19937_64 rng(47);
    for (auto al : {Alphabet::F2, Alphabet::F2U, Alphabet::F4}) {
        for (int t = 0; t < 8; ++t) {
            const auto code = sdc::testing::random_composite_self_dual(rng, al);
            REQUIRE(code.is_self_dual());
            const auto full = full_weight_distribution(code);
            for (int w : {0, 3, 6, static_cast<int>(code.length())}) {
                CensusOptions opt;
                opt.max_weight = w;
                for (bool par : {false, true}) {
                    opt.parallel = par;
                    const auto c = low_weight_census(code, opt);
                    CAPTURE(w);
                    CAPTURE(par);
                    for (int i = 0; i <= w; ++i) CHECK(c.count(i) == full[i]);
                }
            }
        }
    }
}

TEST_CASE("serial reference and kernel agree on a length 80 code") {
    const auto code = BinaryCode::from_generator(
        gray_lift(generator_matrix(ConstructionId::Omega20_1, parse_vector("31223333300320201200", Alphabet::F4))));
    CensusOptions opt;
    opt.max_weight = 14;
    const auto a = low_weight_census_serial(code, opt);
    opt.parallel = true;
    const auto b = low_weight_census(code, opt);
    CHECK(a.counts == b.counts);
    CHECK(a.nodes == b.nodes);
    CHECK(a.nodes == census_cost(40, 14));
    CHECK(b.count(14) == 2100);
}

TEST_CASE("early abort on a low-weight word") {
    const auto code = BinaryCode::from_generator(
        gray_lift(generator_matrix(ConstructionId::Omega20_1, parse_vector("31223333300320201200", Alphabet::F4))));
    CensusOptions opt;
    opt.max_weight = 15;
    opt.abort_below = 16;
    CHECK(low_weight_census(code, opt).aborted);
    opt.abort_below = 14;
    CHECK_FALSE(low_weight_census(code, opt).aborted);
    opt.parallel = false;
    opt.abort_below = 16;
    CHECK(low_weight_census(code, opt).aborted);
}

TEST_CASE("census refusals") {
    const auto odd = BinaryCode::from_generator(BinaryMatrix::from_strings({"1000", "0100"}));
    CensusOptions opt;
    opt.max_weight = 2;
    CHECK_THROWS_AS(low_weight_census(odd, opt), CensusError);

    const auto e = BinaryCode::from_generator(BinaryMatrix::from_strings({"11110000", "11001100", "10101010", "11111111"}));
    opt.max_weight = 8;
    opt.budget = 3;
    CHECK_THROWS_AS(low_weight_census(e, opt), CensusError);
}

TEST_CASE("census cost counts binomial prefixes") {
    // t1 = 8, t2 = 7 over k = 40
    std::uint64_t expect = 0, term = 1;
    for (int d = 0; d <= 8; ++d) {
        expect += term * (d <= 7 ? 2 : 1);
        term = term * (40 - d) / (d + 1);
    }
    CHECK(census_cost(40, 16) == expect);
}
