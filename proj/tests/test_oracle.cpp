#include <catch2/catch_amalgamated.hpp>

#include "skewdet/oracle.hpp"

using namespace skewdet;

TEST_CASE("column-reduction rank agrees with the main path") {
    for (auto [p, k] : {std::pair<unsigned, unsigned>{3, 1}, {3, 2}}) {
        Field f(p, k);
        const int mmax = k == 1 ? 4 : 3;
        for (int m = 2; m <= mmax; ++m) {
            SkewRange range = enumerate_all(f, m);
            SkewMatrix a;
            std::vector<Elem> buf;
            bool all_equal = true;
            while (range.next(a)) {
                to_dense_into(f, a, buf);
                all_equal = all_equal && oracle::rank_by_columns(f, buf, m) == rank(f, a);
            }
            REQUIRE(all_equal);
        }
    }
}

TEST_CASE("full product trace agrees with the pairing shortcut") {
    Field f(3);
    SkewRange fr = enumerate_all(f, 3);
    SkewMatrix F, A;
    bool all_equal = true;
    while (fr.next(F)) {
        auto df = to_dense(f, F);
        SkewRange ar = enumerate_all(f, 3);
        while (ar.next(A))
            all_equal = all_equal && oracle::product_trace(f, df, to_dense(f, A), 3) == trace_pair(f, F, A);
    }
    REQUIRE(all_equal);
}

TEST_CASE("rank histograms match the counting formulas") {
    Field f3(3);
    auto h2 = oracle::rank_histogram(f3, 2);
    REQUIRE(h2 == std::map<int, std::uint64_t>{{0, 1}, {2, 2}});

    auto h4 = oracle::rank_histogram(f3, 4);
    REQUIRE(h4 == std::map<int, std::uint64_t>{{0, 1}, {2, 260}, {4, 468}});
    for (const auto& [r, c] : h4) REQUIRE(r % 2 == 0);

    Field f5(5);
    auto h53 = oracle::rank_histogram(f5, 3);
    REQUIRE(h53 == std::map<int, std::uint64_t>{{0, 1}, {2, 124}});

    Field f9(3, 2);
    auto h93 = oracle::rank_histogram(f9, 3);
    REQUIRE(h93.at(0) == 1);
    REQUIRE(BigInt(h93.at(2)) == rank_count(9, 2, 3));
}

TEST_CASE("worker count does not change any census") {
    Field f(3);
    REQUIRE(oracle::rank_histogram(f, 4, kDefaultEnumerationBudget, 3) ==
            oracle::rank_histogram(f, 4, kDefaultEnumerationBudget, 1));
    REQUIRE(oracle::support_table(f, 4, kDefaultEnumerationBudget, 4) ==
            oracle::support_table(f, 4, kDefaultEnumerationBudget, 1));
    CodeParams cp(f, 4, 1);
    auto g = generator_matrix(cp);
    REQUIRE(oracle::weight_enumerator(cp, g, kDefaultEnumerationBudget, 3) ==
            oracle::weight_enumerator(cp, g, kDefaultEnumerationBudget, 1));
}

TEST_CASE("support censuses match the recursion") {
    Field f(3);
    WeightTable wt(3);
    REQUIRE(oracle::support_count(f, 1, 1, 2) == 2);
    REQUIRE(oracle::support_count(f, 1, 1, 4) == 162);
    REQUIRE(oracle::support_count(f, 2, 1, 4) == 180);

    for (int m = 2; m <= 4; ++m) {
        auto tab = oracle::support_table(f, m);
        for (int k = 1; 2 * k <= m; ++k)
            for (int r = 1; 2 * r <= m; ++r)
                REQUIRE(BigInt(tab[std::size_t(k)][std::size_t(r)]) == wt.support_count(k, r, m));
    }
}

TEST_CASE("support census for GF(5)") {
    Field f(5);
    WeightTable wt(5);
    auto tab = oracle::support_table(f, 4);
    for (int k = 1; k <= 2; ++k)
        for (int r = 1; r <= 2; ++r)
            REQUIRE(BigInt(tab[std::size_t(k)][std::size_t(r)]) == wt.support_count(k, r, 4));
}

TEST_CASE("exhaustive weight enumerators match the formula path") {
    Field f(3);
    for (auto [m, t] : {std::pair<int, int>{2, 1}, {4, 1}, {4, 2}}) {
        CodeParams cp(f, m, t);
        auto g = generator_matrix(cp);
        auto census = oracle::weight_enumerator(cp, g);
        auto formula = weight_enumerator(cp);
        REQUIRE(census.size() == formula.size());
        for (const auto& [w, c] : census) {
            REQUIRE(formula.count(BigInt(w)) == 1);
            REQUIRE(formula.at(BigInt(w)) == c);
        }
    }
}

TEST_CASE("exhaustive weight enumerator for (3,5,1)", "[.slow]") {
    Field f(3);
    CodeParams cp(f, 5, 1);
    auto g = generator_matrix(cp);
    auto census = oracle::weight_enumerator(cp, g, kDefaultEnumerationBudget, 4);
    auto formula = weight_enumerator(cp);
    REQUIRE(census.size() == formula.size());
    for (const auto& [w, c] : census) REQUIRE(formula.at(BigInt(w)) == c);
}

TEST_CASE("minor vanishing characterizes the rank bound") {
    Field f(3);
    REQUIRE(oracle::rank_at_most_by_minors(f, SkewMatrix(4), 0));
    REQUIRE(oracle::rank_at_most_by_minors(f, SkewMatrix(4), 2));
    REQUIRE_FALSE(oracle::rank_at_most_by_minors(f, standard_form(4, 2), 1));
    REQUIRE(oracle::rank_at_most_by_minors(f, standard_form(4, 1), 1));

    for (int t = 0; t <= 1; ++t) {
        SkewRange range = enumerate_all(f, 3);
        SkewMatrix a;
        bool all_equal = true;
        while (range.next(a))
            all_equal = all_equal && oracle::rank_at_most_by_minors(f, a, t) == (rank(f, a) <= 2 * t);
        REQUIRE(all_equal);
    }

    for (int m : {5, 6})
        for (int half = 0; 2 * half <= m; ++half)
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                auto a = random_of_rank(f, m, half, seed);
                for (int t = 0; 2 * t <= m; ++t)
                    REQUIRE(oracle::rank_at_most_by_minors(f, a, t) == (half <= t));
            }

    REQUIRE_THROWS_AS(oracle::rank_at_most_by_minors(f, SkewMatrix(7), 1), std::invalid_argument);
    REQUIRE_THROWS_AS(oracle::rank_at_most_by_minors(f, SkewMatrix(4), -1), std::invalid_argument);
}

TEST_CASE("range splitting covers the space") {
    auto parts = oracle::split_range(10, 3);
    REQUIRE(parts.size() == 3);
    REQUIRE(parts[0] == std::pair<std::uint64_t, std::uint64_t>{0, 4});
    REQUIRE(parts[1] == std::pair<std::uint64_t, std::uint64_t>{4, 7});
    REQUIRE(parts[2] == std::pair<std::uint64_t, std::uint64_t>{7, 10});

    auto tight = oracle::split_range(2, 5);
    std::uint64_t covered = 0;
    for (auto [b, e] : tight) {
        REQUIRE(b == covered);
        covered = e;
    }
    REQUIRE(covered == 2);

    REQUIRE(oracle::split_range(7, 0).size() == 1);
}
