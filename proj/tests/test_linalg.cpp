#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace uddpir;
using namespace uddpir::testing;

TEST_CASE("rref examples") {
    Field f2 = Field::create(2, 1);

    RrefResult id = rref(identity(f2, 3));
    CHECK(id.rank == 3);
    CHECK(id.pivots == std::vector<int>{0, 1, 2});
    CHECK(id.matrix == identity(f2, 3));

    GfMatrix zero(f2, 2, 4);
    RrefResult z = rref(zero);
    CHECK(z.rank == 0);
    CHECK(z.pivots.empty());
    CHECK(z.matrix == zero);

    RrefResult ex = rref(example_matrix());
    CHECK(ex.rank == 2);
    CHECK(ex.pivots == std::vector<int>{0, 1});
}

TEST_CASE("rref is idempotent and leaves the input untouched") {
    std::mt19937 rng(7);
    for (Field f : {Field::create(2, 1), Field::create(3, 1), Field::create(2, 2)}) {
        for (int iter = 0; iter < 50; ++iter) {
            GfMatrix m = random_matrix(f, 1 + iter % 4, 1 + (iter * 3) % 6, rng);
            GfMatrix copy = m;
            RrefResult r1 = rref(m);
            CHECK(m == copy);
            RrefResult r2 = rref(r1.matrix);
            CHECK(r2.matrix == r1.matrix);
            CHECK(r2.rank == r1.rank);
        }
    }
}

TEST_CASE("span_contains examples") {
    GfMatrix g = example_matrix();
    GfVector e1 = unit_vector(g.field(), 2, 0);

    CHECK(span_contains(g, {1, 2}, e1));   // e_1 = col 2 + col 3
    CHECK_FALSE(span_contains(g, {1}, e1));  // column 2 is e_2

    GfVector zero{g.field(), {0, 0}};
    CHECK(span_contains(g, {}, zero));  // empty span contains zero

    CHECK_THROWS_AS(span_contains(g, {9}, e1), IndexOutOfRange);
}

TEST_CASE("span_contains matches the combination-enumeration oracle") {
    std::mt19937 rng(11);
    for (Field f : {Field::create(2, 1), Field::create(3, 1), Field::create(2, 2)}) {
        std::uniform_int_distribution<int> dist(0, f.q() - 1);
        for (int iter = 0; iter < 60; ++iter) {
            int k = 2 + iter % 2, n = 3 + iter % 4;
            GfMatrix m = random_matrix(f, k, n, rng);
            std::vector<int> cols;
            for (int c = 0; c < n && cols.size() < 4; ++c)
                if (rng() % 2) cols.push_back(c);
            GfVector target{f, {}};
            target.entries.resize(k);
            for (int i = 0; i < k; ++i) target.entries[i] = dist(rng);
            CHECK(span_contains(m, cols, target) ==
                  span_contains_bruteforce(m, cols, target));
        }
    }
}

TEST_CASE("row_combination examples") {
    GfMatrix g = example_matrix();
    Field f2 = g.field();

    auto [c1, w1] = row_combination(GfVector{f2, {1, 0}}, g);
    CHECK(c1.entries == std::vector<int>{1, 0, 1, 1});
    CHECK(w1 == 3);

    auto [c0, w0] = row_combination(GfVector{f2, {0, 0}}, g);
    CHECK(c0.entries == std::vector<int>{0, 0, 0, 0});
    CHECK(w0 == 0);

    auto [c11, w11] = row_combination(GfVector{f2, {1, 1}}, g);
    CHECK(c11.entries == std::vector<int>{1, 1, 0, 1});
    CHECK(w11 == 3);

    CHECK_THROWS_AS(row_combination(GfVector{f2, {1}}, g), DimensionMismatch);
}

TEST_CASE("weight equals distance to the zero vector") {
    std::mt19937 rng(13);
    Field f3 = Field::create(3, 1);
    std::uniform_int_distribution<int> dist(0, 2);
    for (int iter = 0; iter < 100; ++iter) {
        GfVector v{f3, std::vector<int>(6)};
        for (int& e : v.entries) e = dist(rng);
        int dist_to_zero = 0;
        for (int e : v.entries)
            if (f3.sub(e, 0) != 0) ++dist_to_zero;
        CHECK(v.weight() == dist_to_zero);
    }
}

TEST_CASE("canonical vector encoding round-trips") {
    for (int q : {2, 3, 4}) {
        for (int idx = 0; idx < q * q * q; ++idx)
            CHECK(vector_index(index_vector(idx, q, 3), q) == idx);
    }
    CHECK(vector_index({1, 0}, 2) == 1);
    CHECK(vector_index({0, 1}, 2) == 2);
    CHECK(vector_index({1, 1}, 2) == 3);
}
