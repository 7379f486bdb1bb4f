// Shared fixtures and independent brute-force oracles for the test suites.
// The oracles deliberately avoid the library's algorithmic paths: plain
// enumeration only.

#ifndef UDDPIR_TESTS_HELPERS_HPP
#define UDDPIR_TESTS_HELPERS_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "uddpir/linalg.hpp"

namespace uddpir::testing {

// The running example: G = (1 0 1 1 / 0 1 1 0) over GF(2).
inline GfMatrix example_matrix() {
    return GfMatrix(Field::create(2, 1), 2, 4, {1, 0, 1, 1, 0, 1, 1, 0});
}

inline GfMatrix identity(const Field& f, int k) {
    GfMatrix g(f, k, k);
    for (int i = 0; i < k; ++i) g.set(i, i, 1);
    return g;
}

inline GfMatrix random_matrix(const Field& f, int k, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, f.q() - 1);
    GfMatrix g(f, k, n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) g.set(r, c, dist(rng));
    return g;
}

inline GfMatrix random_full_rank_matrix(const Field& f, int k, int n,
                                        std::mt19937& rng) {
    while (true) {
        GfMatrix g = random_matrix(f, k, n, rng);
        if (rank(g) == k) return g;
    }
}

// Oracle: target in span of selected columns, by enumerating all q^|S|
// linear combinations.
inline bool span_contains_bruteforce(const GfMatrix& m,
                                     const std::vector<int>& columns,
                                     const GfVector& target) {
    const Field& f = m.field();
    const int q = f.q();
    const int s = static_cast<int>(columns.size());
    long long total = 1;
    for (int i = 0; i < s; ++i) total *= q;
    for (long long combo = 0; combo < total; ++combo) {
        std::vector<int> acc(m.rows(), 0);
        long long c = combo;
        for (int j = 0; j < s; ++j) {
            int coef = static_cast<int>(c % q);
            c /= q;
            for (int i = 0; i < m.rows(); ++i)
                acc[i] = f.add(acc[i], f.mul(coef, m.at(i, columns[j])));
        }
        if (acc == target.entries) return true;
    }
    return false;
}

// Oracle for the separation vector straight from its definition: minimum
// distance between codeword pairs whose messages differ in position j.
inline std::vector<int> separation_bruteforce(const GfMatrix& g) {
    const Field& f = g.field();
    const int q = f.q();
    const int k = g.rows();
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= q;

    auto encode = [&](long long msg) {
        std::vector<int> a(k);
        for (int i = 0; i < k; ++i) {
            a[i] = static_cast<int>(msg % q);
            msg /= q;
        }
        std::vector<int> c(g.cols(), 0);
        for (int j = 0; j < g.cols(); ++j)
            for (int i = 0; i < k; ++i)
                c[j] = f.add(c[j], f.mul(a[i], g.at(i, j)));
        return std::make_pair(a, c);
    };

    std::vector<int> s(k, 1 << 30);
    for (long long x = 0; x < total; ++x)
        for (long long y = 0; y < total; ++y) {
            if (x == y) continue;
            auto [ax, cx] = encode(x);
            auto [ay, cy] = encode(y);
            int dist = 0;
            for (int j = 0; j < g.cols(); ++j)
                if (cx[j] != cy[j]) ++dist;
            for (int j = 0; j < k; ++j)
                if (ax[j] != ay[j]) s[j] = std::min(s[j], dist);
        }
    return s;
}

// Oracle for the maximum disjoint recovery-set packing: every subset of
// positions is tested for being a recovery set (via the combination
// enumeration above), then the best disjoint family is found by exhaustive
// recursion over available-position masks. n <= 8.
inline int max_packing_bruteforce(const GfMatrix& g, int symbol) {
    const int n = g.cols();
    GfVector ej = unit_vector(g.field(), g.rows(), symbol);
    std::vector<unsigned> recovery;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> cols;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) cols.push_back(i);
        if (span_contains_bruteforce(g, cols, ej)) recovery.push_back(mask);
    }
    std::map<unsigned, int> memo;
    auto best = [&](auto&& self, unsigned available) -> int {
        auto it = memo.find(available);
        if (it != memo.end()) return it->second;
        int b = 0;
        for (unsigned s : recovery)
            if ((s & ~available) == 0)
                b = std::max(b, 1 + self(self, available & ~s));
        memo[available] = b;
        return b;
    };
    return best(best, (1u << n) - 1u);
}

// Oracle for the hyperplane ILP: exhaustive enumeration of all nonnegative
// assignments with total at most `cap`. Returns the optimum or -1 when
// nothing within cap is feasible.
inline long long ilp_bruteforce(const std::vector<std::vector<int>>& rows,
                                const std::vector<int>& rhs, int num_vars,
                                int cap) {
    std::vector<int> assign(num_vars, 0);
    long long best = -1;
    auto recurse = [&](auto&& self, int v, int used) -> void {
        if (v == num_vars) {
            for (size_t r = 0; r < rows.size(); ++r) {
                int lhs = 0;
                for (int idx : rows[r]) lhs += assign[idx];
                if (lhs < rhs[r]) return;
            }
            if (best < 0 || used < best) best = used;
            return;
        }
        for (int val = 0; val + used <= cap; ++val) {
            assign[v] = val;
            self(self, v + 1, used + val);
        }
        assign[v] = 0;
    };
    recurse(recurse, 0, 0);
    return best;
}

}  // namespace uddpir::testing

#endif
