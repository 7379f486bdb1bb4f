#include "uddpir/bounds.hpp"

#include <numeric>

namespace uddpir {

std::vector<ProjectivePoint> projective_points(int k, const Field& f) {
    const int q = f.q();
    std::vector<ProjectivePoint> points;
    for (int nu = 0; nu < k; ++nu) {
        // h = (0,...,0,1,tail) with the tail ranging over F_q^(k-1-nu)
        int tails = 1;
        for (int i = nu + 1; i < k; ++i) tails *= q;
        for (int t = 0; t < tails; ++t) {
            std::vector<int> h(k, 0);
            h[nu] = 1;
            std::vector<int> tail = index_vector(t, q, k - 1 - nu);
            for (int i = nu + 1; i < k; ++i) h[i] = tail[i - nu - 1];
            points.push_back({std::move(h), nu});
        }
    }
    return points;
}

long long griesmer_sum(const DemandVector& t, int q) {
    require_nonincreasing(t);
    long long sum = 0;
    long long denom = 1;
    for (size_t j = 0; j < t.size(); ++j) {
        sum += (t[j] + denom - 1) / denom;
        denom *= q;
    }
    return sum;
}

Rational fractional_bound(const DemandVector& t, int q) {
    require_nonincreasing(t);
    Rational sum(0);
    long long denom = 1;
    for (size_t j = 0; j < t.size(); ++j) {
        sum += Rational(t[j], denom);
        denom *= q;
    }
    return sum;
}

long long ColumnCounts::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0LL);
}

ColumnCounts column_counts(const GfMatrix& g) {
    const int q = g.field().q();
    int qk = 1;
    for (int i = 0; i < g.rows(); ++i) qk *= q;
    ColumnCounts cc{g.field(), g.rows(), std::vector<long long>(qk, 0)};
    for (int c = 0; c < g.cols(); ++c)
        ++cc.counts[vector_index(g.col(c).entries, q)];
    return cc;
}

int inner_product(const Field& f, const std::vector<int>& a,
                  const std::vector<int>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("inner product lengths");
    int acc = 0;
    for (size_t i = 0; i < a.size(); ++i)
        acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

std::vector<DemandViolation> check_demand_inequalities(const ColumnCounts& counts,
                                                       const DemandVector& t) {
    if (static_cast<int>(t.size()) != counts.k)
        throw LengthMismatch("demand length must equal k");
    const Field& f = counts.field;
    const int q = f.q();
    const int qk = static_cast<int>(counts.counts.size());

    std::vector<DemandViolation> violations;
    for (const ProjectivePoint& pt : projective_points(counts.k, f)) {
        long long outside = 0;
        for (int idx = 1; idx < qk; ++idx) {
            if (counts.counts[idx] == 0) continue;
            if (inner_product(f, index_vector(idx, q, counts.k), pt.h) != 0)
                outside += counts.counts[idx];
        }
        if (outside < t[pt.nu]) violations.push_back({pt, t[pt.nu] - outside});
    }
    return violations;
}

}  // namespace uddpir
