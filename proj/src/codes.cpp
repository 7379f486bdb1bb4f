#include "uddpir/codes.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace uddpir {

LinearCode::LinearCode(GfMatrix generator) : gen_(std::move(generator)) {
    if (rank(gen_) != gen_.rows())
        throw RankDeficient("generator matrix does not have full row rank");
}

namespace {

// Visit every nonzero message vector h in canonical index order together
// with its codeword h^T G.
void for_each_nonzero_codeword(
    const GfMatrix& g,
    const std::function<void(const std::vector<int>&, const GfVector&)>& fn) {
    const int q = g.field().q();
    const int k = g.rows();
    int total = 1;
    for (int i = 0; i < k; ++i) total *= q;
    for (int idx = 1; idx < total; ++idx) {
        std::vector<int> h = index_vector(idx, q, k);
        GfVector hv{g.field(), h};
        fn(h, row_combination(hv, g).first);
    }
}

}  // namespace

int min_distance(const LinearCode& code) {
    int best = std::numeric_limits<int>::max();
    for_each_nonzero_codeword(code.generator(),
                              [&](const std::vector<int>&, const GfVector& c) {
                                  best = std::min(best, c.weight());
                              });
    return best;
}

SeparationVector separation_vector(const LinearCode& code) {
    const int k = code.dimension();
    SeparationVector s(k, std::numeric_limits<int>::max());
    for_each_nonzero_codeword(code.generator(),
                              [&](const std::vector<int>& h, const GfVector& c) {
                                  int w = c.weight();
                                  for (int j = 0; j < k; ++j)
                                      if (h[j] != 0) s[j] = std::min(s[j], w);
                              });
    return s;
}

GfMatrix optimal_generator(const LinearCode& code) {
    const GfMatrix& g = code.generator();
    const int k = g.rows();
    const int n = g.cols();

    std::vector<GfVector> chosen;
    for (int step = 0; step < k; ++step) {
        // Minimum-weight codeword outside the span of the chosen rows;
        // lexicographically smallest codeword on ties.
        bool have = false;
        GfVector best{g.field(), {}};
        for_each_nonzero_codeword(g, [&](const std::vector<int>&,
                                         const GfVector& c) {
            if (have && (c.weight() > best.weight() ||
                         (c.weight() == best.weight() &&
                          !std::lexicographical_compare(c.entries.begin(),
                                                        c.entries.end(),
                                                        best.entries.begin(),
                                                        best.entries.end()))))
                return;
            GfMatrix stacked(g.field(), static_cast<int>(chosen.size()) + 1, n);
            for (size_t r = 0; r < chosen.size(); ++r)
                for (int j = 0; j < n; ++j)
                    stacked.set(static_cast<int>(r), j, chosen[r].entries[j]);
            for (int j = 0; j < n; ++j)
                stacked.set(static_cast<int>(chosen.size()), j, c.entries[j]);
            if (rank(stacked) != static_cast<int>(chosen.size()) + 1) return;
            best = c;
            have = true;
        });
        chosen.push_back(best);
    }

    // Greedy order gives nondecreasing separations; reverse for the
    // conventional nonincreasing presentation.
    GfMatrix out(g.field(), k, n);
    for (int r = 0; r < k; ++r)
        for (int j = 0; j < n; ++j) out.set(r, j, chosen[k - 1 - r].entries[j]);
    return out;
}

bool sorted_dominates(const SeparationVector& a, const SeparationVector& b) {
    if (a.size() != b.size())
        throw LengthMismatch("separation vectors differ in length");
    SeparationVector sa = a, sb = b;
    std::sort(sa.rbegin(), sa.rend());
    std::sort(sb.rbegin(), sb.rend());
    for (size_t i = 0; i < sa.size(); ++i)
        if (sa[i] < sb[i]) return false;
    return true;
}

}  // namespace uddpir
