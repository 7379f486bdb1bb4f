#ifndef UDDPIR_BOUNDS_HPP
#define UDDPIR_BOUNDS_HPP

#include <boost/rational.hpp>
#include <vector>

#include "uddpir/linalg.hpp"
#include "uddpir/pir.hpp"

namespace uddpir {

using Rational = boost::rational<long long>;

/// Normalized hyperplane normal: first nonzero entry equals 1; `nu` is the
/// 0-based index of that entry.
struct ProjectivePoint {
    std::vector<int> h;
    int nu;
};

/// The (q^k - 1)/(q - 1) normalized nonzero vectors of F_q^k, enumerated
/// with nu ascending and the free tail in ascending canonical encoding.
std::vector<ProjectivePoint> projective_points(int k, const Field& f);

/// sum_j ceil(t_j / q^(j-1)), the Griesmer-type length bound.
long long griesmer_sum(const DemandVector& t, int q);

/// The exact rational sum_j t_j / q^(j-1).
Rational fractional_bound(const DemandVector& t, int q);

/// Column multiplicities of a matrix, keyed by the canonical encoding of
/// F_q^k; counts[0] is the zero-column count n_0, excluded from all
/// inequalities.
struct ColumnCounts {
    Field field;
    int k;
    std::vector<long long> counts;  // size q^k

    long long total() const;
    long long zero_columns() const { return counts[0]; }
};

ColumnCounts column_counts(const GfMatrix& g);

struct DemandViolation {
    ProjectivePoint point;
    long long deficit;  // rhs minus the columns outside the hyperplane
};

/// Evaluate, for every h in P_k, the hyperplane inequality
/// sum_{<i,h> != 0} n_i >= t_{nu(h)}. Empty result = pass.
std::vector<DemandViolation> check_demand_inequalities(const ColumnCounts& counts,
                                                       const DemandVector& t);

/// Inner product over GF(q).
int inner_product(const Field& f, const std::vector<int>& a,
                  const std::vector<int>& b);

}  // namespace uddpir

#endif
