#include "uddpir/search.hpp"

#include <functional>
#include <numeric>

#include "uddpir/bounds.hpp"

namespace uddpir {

namespace {

// Enumerate nondecreasing multisets of size n over the nonzero column
// encodings 1..q^k-1, in lexicographic order, until `accept` returns true.
// Returns the first accepted matrix (the lexicographically smallest one).
std::optional<GfMatrix> first_accepted_multiset(
    const Field& f, int k, int n, bool require_full_rank, long long& examined,
    const std::function<bool(const GfMatrix&)>& accept) {
    const int q = f.q();
    int qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;

    std::vector<int> multiset(n);
    std::optional<GfMatrix> hit;
    auto recurse = [&](auto&& self, int pos, int low) -> bool {
        if (pos == n) {
            ++examined;
            GfMatrix g(f, k, n);
            for (int c = 0; c < n; ++c) {
                std::vector<int> col = index_vector(multiset[c], q, k);
                for (int i = 0; i < k; ++i) g.set(i, c, col[i]);
            }
            if (require_full_rank && rank(g) != k) return false;
            if (!accept(g)) return false;
            hit = std::move(g);
            return true;
        }
        for (int v = low; v <= qk - 1; ++v) {
            multiset[pos] = v;
            if (self(self, pos + 1, v)) return true;
        }
        return false;
    };
    if (n == 0) {
        ++examined;
        GfMatrix g(f, k, 0);
        if ((!require_full_rank || rank(g) == k) && accept(g)) hit = std::move(g);
    } else {
        recurse(recurse, 0, 1);
    }
    return hit;
}

}  // namespace

SearchResult shortest_udd_pir(const DemandVector& t, const Field& f, int n_max) {
    require_nonincreasing(t);
    const int k = static_cast<int>(t.size());
    const long long floor = griesmer_sum(t, f.q());
    if (n_max < floor)
        throw BoundBelowFloor("n_max is below the Griesmer floor " +
                              std::to_string(floor));

    SearchResult result{SearchResult::Status::none_within_bound};
    for (int n = static_cast<int>(floor); n <= n_max; ++n) {
        auto hit = first_accepted_multiset(
            f, k, n, /*require_full_rank=*/true, result.candidates_examined,
            [&](const GfMatrix& g) { return verify_t_pir(g, t).satisfied; });
        if (hit) {
            result.status = SearchResult::Status::found;
            result.length = n;
            result.witness = std::move(hit);
            return result;
        }
    }
    return result;
}

std::pair<int, GfMatrix> concatenation_baseline(const DemandVector& t,
                                                const Field& f) {
    require_nonincreasing(t);
    const int k = static_cast<int>(t.size());
    const int n = std::accumulate(t.begin(), t.end(), 0);
    GfMatrix g(f, k, n);
    int col = 0;
    for (int j = 0; j < k; ++j)
        for (int c = 0; c < t[j]; ++c, ++col) g.set(j, col, 1);
    return {n, g};
}

namespace {

// Weight-based separation s_j = min{ w(h^T G) : h_j != 0 }, valid for any
// matrix (no injectivity requirement), matching the generator-matrix form
// of the separation vector.
std::vector<int> weight_separation(const GfMatrix& g) {
    const int q = g.field().q();
    const int k = g.rows();
    int total = 1;
    for (int i = 0; i < k; ++i) total *= q;
    std::vector<int> s(k, g.cols() + 1);
    for (int idx = 1; idx < total; ++idx) {
        std::vector<int> h = index_vector(idx, q, k);
        int w = row_combination(GfVector{g.field(), h}, g).second;
        for (int j = 0; j < k; ++j)
            if (h[j] != 0) s[j] = std::min(s[j], w);
    }
    return s;
}

}  // namespace

int shortest_uep_bruteforce(const DemandVector& t, const Field& f, int n_max) {
    require_nonincreasing(t);
    const int k = static_cast<int>(t.size());
    long long examined = 0;
    for (int n = 0; n <= n_max; ++n) {
        auto hit = first_accepted_multiset(
            f, k, n, /*require_full_rank=*/false, examined,
            [&](const GfMatrix& g) {
                std::vector<int> s = weight_separation(g);
                for (int j = 0; j < k; ++j)
                    if (s[j] < t[j]) return false;
                return true;
            });
        if (hit) return n;
    }
    throw BoundExceeded("no UEP code of length <= " + std::to_string(n_max) +
                        " has the requested separation");
}

}  // namespace uddpir
