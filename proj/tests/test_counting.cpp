#include <catch2/catch_amalgamated.hpp>

#include "skewdet/counting.hpp"

using namespace skewdet;

TEST_CASE("exact rank counts") {
    REQUIRE(rank_count(3, 0, 4) == 1);
    REQUIRE(rank_count(3, 0, 0) == 1);
    REQUIRE(rank_count(3, 2, 2) == 2);
    REQUIRE(rank_count(3, 2, 3) == 26);
    REQUIRE(rank_count(3, 2, 4) == 260);
    REQUIRE(rank_count(3, 4, 4) == 468);
    REQUIRE(rank_count(3, 2, 5) == 2420);
    REQUIRE(rank_count(3, 4, 5) == 56628);
    REQUIRE(rank_count(3, 2, 6) == 22022);
    REQUIRE(rank_count(3, 4, 6) == 5153148);
    REQUIRE(rank_count(5, 2, 3) == 124);
    REQUIRE(rank_count(5, 2, 4) == 3224);
}

TEST_CASE("odd or out-of-range ranks count zero") {
    REQUIRE(rank_count(3, 1, 4) == 0);
    REQUIRE(rank_count(3, 3, 5) == 0);
    REQUIRE(rank_count(3, 6, 4) == 0);
    REQUIRE(rank_count(3, -2, 4) == 0);
    REQUIRE(rank_count(3, 2, 1) == 0);
    REQUIRE_THROWS_AS(rank_count(3, 2, -1), std::invalid_argument);
}

TEST_CASE("rank counts partition the matrix space") {
    for (unsigned q : {3u, 5u, 7u, 9u})
        for (int m = 1; m <= 8; ++m) {
            BigInt sum = 0;
            for (int r2 = 0; r2 <= m; r2 += 2) sum += rank_count(q, r2, m);
            REQUIRE(sum == skew_space_size(q, m));
        }
}

TEST_CASE("bounded rank counts") {
    REQUIRE(bounded_rank_count(3, 0, 4) == 1);
    REQUIRE(bounded_rank_count(3, 1, 4) == 261);
    REQUIRE(bounded_rank_count(3, 2, 4) == 729);
    REQUIRE(bounded_rank_count(3, 1, 5) == 2421);
    REQUIRE(bounded_rank_count(3, 2, 6) == 5175171);
    REQUIRE_THROWS_AS(bounded_rank_count(3, 3, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(bounded_rank_count(3, -1, 4), std::invalid_argument);
}

TEST_CASE("code lengths") {
    REQUIRE(code_length(3, 1, 4) == 130);
    REQUIRE(code_length(3, 2, 4) == 364);
    REQUIRE(code_length(3, 1, 5) == 1210);
    REQUIRE(code_length(3, 2, 6) == 2587585);
    REQUIRE(code_length(5, 1, 4) == 806);
    REQUIRE_THROWS_AS(code_length(3, 0, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(code_length(3, 3, 5), std::invalid_argument);
}

TEST_CASE("gaussian binomials") {
    REQUIRE(gaussian_binomial(3, 4, 2) == 130);
    REQUIRE(gaussian_binomial(3, 5, 2) == 1210);
    REQUIRE(gaussian_binomial(3, 4, 0) == 1);
    REQUIRE(gaussian_binomial(3, 4, 4) == 1);
    REQUIRE(gaussian_binomial(3, 4, 1) == 40);
    REQUIRE(gaussian_binomial(3, 4, 5) == 0);
    REQUIRE(gaussian_binomial(3, 4, -1) == 0);
}

TEST_CASE("the t=1 code length is the line Grassmannian size") {
    for (unsigned q : {3u, 5u, 9u})
        for (int m = 2; m <= 8; ++m) REQUIRE(code_length(q, 1, m) == gaussian_binomial(q, m, 2));
}

TEST_CASE("count table bundles the census") {
    auto tb = count_table(3, 2, 4);
    REQUIRE(tb.q == 3);
    REQUIRE(tb.m == 4);
    REQUIRE(tb.t == 2);
    REQUIRE(tb.by_rank.size() == 3);
    REQUIRE(tb.by_rank.at(0) == 1);
    REQUIRE(tb.by_rank.at(2) == 260);
    REQUIRE(tb.by_rank.at(4) == 468);
    REQUIRE(tb.total == 729);
    REQUIRE(tb.length == 364);
}

TEST_CASE("exact division guards") {
    REQUIRE(exact_div(BigInt(84), BigInt(7)) == 12);
    REQUIRE_THROWS_AS(exact_div(BigInt(85), BigInt(7)), std::logic_error);
}

TEST_CASE("big powers") {
    REQUIRE(big_pow(3, 0) == 1);
    REQUIRE(big_pow(3, 15) == 14348907);
    REQUIRE(skew_space_size(3, 6) == 14348907);
    REQUIRE(skew_space_size(3, 1) == 1);
}
