#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "skewdet/skew_matrix.hpp"

using namespace skewdet;

TEST_CASE("entry order is the fixed pair order") {
    REQUIRE(pair_count(1) == 0);
    REQUIRE(pair_count(2) == 1);
    REQUIRE(pair_count(4) == 6);
    REQUIRE(pair_count(6) == 15);
    // slots enumerate (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
    std::size_t slot = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) REQUIRE(entry_slot(4, i, j) == slot++);
    REQUIRE(slot == pair_count(4));
}

TEST_CASE("matrix constructors validate") {
    REQUIRE_THROWS_AS(SkewMatrix(0), std::invalid_argument);
    REQUIRE_THROWS_AS(SkewMatrix(-2), std::invalid_argument);
    REQUIRE_THROWS_AS(SkewMatrix(3, {1, 2}), std::invalid_argument);
    REQUIRE(SkewMatrix(3).entries.size() == 3);
}

TEST_CASE("elementary basis matrices") {
    Field f(3);
    auto a = elementary(4, 1, 2);
    REQUIRE(a.entries == std::vector<Elem>{1, 0, 0, 0, 0, 0});
    auto d = to_dense(f, a);
    REQUIRE(d[0 * 4 + 1] == 1);
    REQUIRE(d[1 * 4 + 0] == 2);  // -1
    REQUIRE(rank(f, a) == 2);
    REQUIRE_THROWS_AS(elementary(3, 2, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(elementary(3, 3, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(elementary(3, 0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(elementary(3, 1, 4), std::invalid_argument);
}

TEST_CASE("standard forms") {
    Field f(3);
    auto e2 = standard_form(4, 2);
    auto d = to_dense(f, e2);
    REQUIRE(d[0 * 4 + 1] == 1);
    REQUIRE(d[1 * 4 + 0] == 2);
    REQUIRE(d[2 * 4 + 3] == 1);
    REQUIRE(d[3 * 4 + 2] == 2);
    REQUIRE(d[0 * 4 + 2] == 0);
    REQUIRE(rank(f, e2) == 4);
    REQUIRE(standard_form(5, 0) == SkewMatrix(5));
    REQUIRE(rank(f, standard_form(3, 1)) == 2);
    REQUIRE(rank(f, standard_form(6, 3)) == 6);
    REQUIRE_THROWS_AS(standard_form(3, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(standard_form(4, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(standard_form(4, -1), std::invalid_argument);
}

TEST_CASE("dense round trip") {
    Field f(3);
    SkewRange range = enumerate_all(f, 3);
    SkewMatrix a;
    while (range.next(a)) REQUIRE(skew_from_dense(f, to_dense(f, a), 3) == a);
}

TEST_CASE("skew rank is even for every enumerated matrix") {
    for (unsigned q : {3u, 5u}) {
        Field f(q);
        for (int m = 2; m <= (q == 3 ? 4 : 3); ++m) {
            SkewRange range = enumerate_all(f, m);
            SkewMatrix a;
            bool all_even = true;
            while (range.next(a)) all_even = all_even && rank(f, a) % 2 == 0;
            REQUIRE(all_even);
        }
    }
}

TEST_CASE("rank of sampled fixed-rank matrices") {
    Field f(5);
    for (int k = 0; k <= 2; ++k)
        for (std::uint64_t seed = 1; seed <= 5; ++seed)
            REQUIRE(rank(f, random_of_rank(f, 5, k, seed)) == 2 * k);
    REQUIRE(random_of_rank(f, 5, 1, 9) == random_of_rank(f, 5, 1, 9));
    REQUIRE_THROWS_AS(random_of_rank(f, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("trace pairing basics") {
    Field f(3);
    auto e = elementary(2, 1, 2);
    // E * E = -I, so tr = -2 = 1 over GF(3)
    REQUIRE(trace_pair(f, e, e) == 1);
    SkewMatrix z(2);
    REQUIRE(trace_pair(f, z, e) == 0);
    REQUIRE_THROWS_AS(trace_pair(f, SkewMatrix(2), SkewMatrix(3)), std::invalid_argument);
}

TEST_CASE("trace shortcut equals the full product trace") {
    Field f(3);
    for (int m = 2; m <= 4; ++m) {
        const std::uint64_t total = checked_space_size(3, m, kDefaultEnumerationBudget);
        // exhaustive over all ordered pairs
        bool all_equal = true;
        SkewRange fr(f, m, 0, total);
        SkewMatrix F, A;
        std::vector<Elem> df, da;
        while (fr.next(F)) {
            to_dense_into(f, F, df);
            SkewRange ar(f, m, 0, total);
            while (ar.next(A)) {
                to_dense_into(f, A, da);
                Elem full = 0;
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        full = f.add(full, f.mul(df[std::size_t(i) * m + j], da[std::size_t(j) * m + i]));
                if (full != trace_pair(f, F, A)) all_equal = false;
            }
        }
        REQUIRE(all_equal);
    }
}

TEST_CASE("trace pairing is bilinear") {
    Field f(3, 2);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<unsigned> pick(0, f.q() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        SkewMatrix F(4), A(4), B(4), AB(4);
        for (auto& e : F.entries) e = Elem(pick(rng));
        for (auto& e : A.entries) e = Elem(pick(rng));
        for (auto& e : B.entries) e = Elem(pick(rng));
        for (std::size_t i = 0; i < AB.entries.size(); ++i)
            AB.entries[i] = f.add(A.entries[i], B.entries[i]);
        REQUIRE(trace_pair(f, F, AB) == f.add(trace_pair(f, F, A), trace_pair(f, F, B)));
    }
}

TEST_CASE("congruence normal form over the whole small space") {
    Field f(3);
    for (int m = 2; m <= 4; ++m) {
        SkewRange range = enumerate_all(f, m);
        SkewMatrix a;
        while (range.next(a)) {
            auto nf = congruence_normal_form(f, a);
            REQUIRE(2 * nf.half_rank == rank(f, a));
            REQUIRE(dense_row_rank(f, nf.transform, m, m) == m);
            auto lhs = dense_mul(f, nf.transform,
                                 dense_mul(f, to_dense(f, a), dense_transpose(nf.transform, m), m), m);
            REQUIRE(lhs == to_dense(f, standard_form(m, nf.half_rank)));
        }
    }
}

TEST_CASE("congruence normal form on sampled larger matrices") {
    for (auto [p, k] : {std::pair<unsigned, unsigned>{5, 1}, {3, 2}}) {
        Field f(p, k);
        for (int half = 0; half <= 2; ++half)
            for (std::uint64_t seed = 1; seed <= 4; ++seed) {
                auto a = random_of_rank(f, 5, half, seed);
                auto nf = congruence_normal_form(f, a);
                REQUIRE(nf.half_rank == half);
                auto lhs = dense_mul(
                    f, nf.transform,
                    dense_mul(f, to_dense(f, a), dense_transpose(nf.transform, 5), 5), 5);
                REQUIRE(lhs == to_dense(f, standard_form(5, half)));
            }
    }
}

TEST_CASE("enumeration follows the index order") {
    Field f(3);
    SkewRange range = enumerate_all(f, 2);
    SkewMatrix a;
    std::vector<Elem> seen;
    while (range.next(a)) seen.push_back(a.entries[0]);
    REQUIRE(seen == std::vector<Elem>{0, 1, 2});

    std::uint64_t idx = 0;
    SkewRange full(f, 4, 0, 729);
    while (full.next(a)) REQUIRE(skew_index(f, a) == idx++);
    REQUIRE(idx == 729);

    SkewRange part(f, 4, 100, 200);
    idx = 100;
    while (part.next(a)) {
        REQUIRE(skew_index(f, a) == idx);
        REQUIRE(a == skew_from_index(f, 4, idx));
        ++idx;
    }
    REQUIRE(idx == 200);
}

TEST_CASE("enumeration budget guards the space size") {
    Field f(3);
    REQUIRE(checked_space_size(3, 4, 729) == 729);
    REQUIRE_THROWS_AS(checked_space_size(3, 4, 728), std::runtime_error);
    REQUIRE_THROWS_AS(enumerate_all(f, 7), std::runtime_error);  // 3^21 > 2^31
    REQUIRE_THROWS_AS(skew_from_index(f, 2, 3), std::invalid_argument);
}

TEST_CASE("echelon basis tracks span dimension") {
    Field f(3);
    EchelonBasis basis(f, 3);
    REQUIRE(basis.insert({1, 2, 0}));
    REQUIRE_FALSE(basis.insert({2, 1, 0}));  // scalar multiple
    REQUIRE(basis.insert({0, 0, 1}));
    REQUIRE_FALSE(basis.insert({1, 2, 1}));  // sum of the first and third
    REQUIRE(basis.rank() == 2);
}

TEST_CASE("formatting helpers") {
    Field f(3);
    auto a = elementary(3, 1, 2);
    REQUIRE(format_entries(a) == "1 0 0");
    REQUIRE(format_dense(f, a) == "0 1 0\n2 0 0\n0 0 0\n");
}
