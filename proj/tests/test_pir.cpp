#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "uddpir/codes.hpp"
#include "uddpir/pir.hpp"

using namespace uddpir;
using namespace uddpir::testing;

namespace {

std::vector<std::vector<int>> positions_of(const std::vector<RecoverySet>& sets) {
    std::vector<std::vector<int>> out;
    for (const auto& s : sets) out.push_back(s.positions);
    return out;
}

}  // namespace

TEST_CASE("minimal recovery sets of the running example") {
    GfMatrix g = example_matrix();

    CHECK(positions_of(minimal_recovery_sets(g, 0)) ==
          std::vector<std::vector<int>>{{0}, {3}, {1, 2}});
    CHECK(positions_of(minimal_recovery_sets(g, 1)) ==
          std::vector<std::vector<int>>{{1}, {0, 2}, {2, 3}});

    Field f2 = g.field();
    CHECK(positions_of(minimal_recovery_sets(identity(f2, 2), 0)) ==
          std::vector<std::vector<int>>{{0}});

    CHECK_THROWS_AS(minimal_recovery_sets(g, 5), IndexOutOfRange);
    GfMatrix deficient(f2, 2, 2, {1, 1, 1, 1});
    CHECK_THROWS_AS(minimal_recovery_sets(deficient, 0), RankDeficient);
}

TEST_CASE("recovery sets actually recover their symbol") {
    std::mt19937 rng(29);
    Field f2 = Field::create(2, 1);
    for (int iter = 0; iter < 30; ++iter) {
        GfMatrix g = random_full_rank_matrix(f2, 2 + iter % 2, 4 + iter % 4, rng);
        for (int j = 0; j < g.rows(); ++j) {
            GfVector ej = unit_vector(f2, g.rows(), j);
            for (const RecoverySet& rs : minimal_recovery_sets(g, j)) {
                CHECK(span_contains(g, rs.positions, ej));
                // minimality: dropping any position breaks the span
                for (size_t drop = 0; drop < rs.positions.size(); ++drop) {
                    std::vector<int> sub = rs.positions;
                    sub.erase(sub.begin() + drop);
                    CHECK_FALSE(span_contains(g, sub, ej));
                }
            }
        }
    }
}

TEST_CASE("max disjoint packing on the running example") {
    GfMatrix g = example_matrix();

    DisjointPacking p1 = max_disjoint_recovery_sets(g, 0);
    CHECK(p1.count == 3);
    CHECK(positions_of(p1.witness) ==
          std::vector<std::vector<int>>{{0}, {1, 2}, {3}});

    CHECK(max_disjoint_recovery_sets(g, 1).count == 2);
    CHECK(max_disjoint_recovery_sets(identity(g.field(), 2), 1).count == 1);
}

TEST_CASE("packing matches the exhaustive-family oracle") {
    std::mt19937 rng(31);
    Field f2 = Field::create(2, 1);
    for (int iter = 0; iter < 60; ++iter) {
        int k = 2 + iter % 2;
        int n = k + 1 + iter % (8 - k);
        GfMatrix g = random_full_rank_matrix(f2, k, n, rng);
        for (int j = 0; j < k; ++j)
            CHECK(max_disjoint_recovery_sets(g, j).count ==
                  max_packing_bruteforce(g, j));
    }
}

TEST_CASE("pir_level examples") {
    GfMatrix g = example_matrix();
    CHECK(pir_level(g) == std::vector<int>{3, 2});

    Field f2 = g.field();
    CHECK(pir_level(identity(f2, 3)) == std::vector<int>{1, 1, 1});

    GfMatrix twoone(f2, 2, 3, {1, 1, 0, 0, 0, 1});  // columns e1 e1 e2
    CHECK(pir_level(twoone) == std::vector<int>{2, 1});
}

TEST_CASE("appending a column never lowers the pir level") {
    std::mt19937 rng(37);
    Field f2 = Field::create(2, 1);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int iter = 0; iter < 30; ++iter) {
        int k = 2 + iter % 2;
        GfMatrix g = random_full_rank_matrix(f2, k, k + 2, rng);
        GfMatrix ext(f2, k, g.cols() + 1);
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < g.cols(); ++c) ext.set(r, c, g.at(r, c));
            ext.set(r, g.cols(), bit(rng));
        }
        std::vector<int> before = pir_level(g), after = pir_level(ext);
        for (int j = 0; j < k; ++j) CHECK(after[j] >= before[j]);
    }
}

TEST_CASE("verify_t_pir on the running example") {
    GfMatrix g = example_matrix();

    PirCertificate ok = verify_t_pir(g, {3, 2});
    CHECK(ok.satisfied);
    REQUIRE(ok.witnesses.size() == 2);
    CHECK(ok.witnesses[0].size() == 3);
    CHECK(ok.witnesses[1].size() == 2);
    for (size_t j = 0; j < ok.witnesses.size(); ++j) {
        GfVector ej = unit_vector(g.field(), 2, static_cast<int>(j));
        std::vector<bool> used(g.cols(), false);
        for (const RecoverySet& rs : ok.witnesses[j]) {
            CHECK(span_contains(g, rs.positions, ej));
            for (int p : rs.positions) {
                CHECK_FALSE(used[p]);  // pairwise disjoint
                used[p] = true;
            }
        }
    }

    PirCertificate bad = verify_t_pir(g, {3, 3});
    CHECK_FALSE(bad.satisfied);
    CHECK(bad.failing_symbol == 1);
    CHECK(bad.failing_maximum == 2);

    PirCertificate zero = verify_t_pir(g, {0, 0});
    CHECK(zero.satisfied);
    for (const auto& w : zero.witnesses) CHECK(w.empty());

    CHECK_THROWS_AS(verify_t_pir(g, {2, 3}), DemandNotSorted);
}

TEST_CASE("uniform demand matches the classical t-PIR check") {
    std::mt19937 rng(41);
    Field f2 = Field::create(2, 1);
    for (int iter = 0; iter < 20; ++iter) {
        int k = 2 + iter % 2;
        GfMatrix g = random_full_rank_matrix(f2, k, k + 3, rng);
        std::vector<int> level = pir_level(g);
        int t_classical = *std::min_element(level.begin(), level.end());
        for (int t = 0; t <= t_classical + 1; ++t) {
            bool expected = t <= t_classical;
            CHECK(verify_t_pir(g, std::vector<int>(k, t)).satisfied == expected);
        }
    }
}

TEST_CASE("separation dominates the pir level (distance bound)") {
    std::mt19937 rng(43);
    Field f2 = Field::create(2, 1);
    for (int iter = 0; iter < 40; ++iter) {
        int k = 2 + iter % 2;
        GfMatrix g = random_full_rank_matrix(f2, k, k + 2 + iter % 3, rng);
        SeparationVector s = separation_vector(LinearCode(g));
        std::vector<int> level = pir_level(g);
        for (int j = 0; j < k; ++j) CHECK(s[j] >= level[j]);
    }
}
