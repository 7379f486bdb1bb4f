#ifndef UDDPIR_PIR_HPP
#define UDDPIR_PIR_HPP

#include <vector>

#include "uddpir/linalg.hpp"

namespace uddpir {

/// Positions (0-based) whose column span contains the unit vector of
/// `symbol`; recovery sets are the fundamental objects of PIR codes.
struct RecoverySet {
    int symbol;                  // 0-based data symbol index
    std::vector<int> positions;  // sorted 0-based positions
};

/// Nonincreasing per-symbol demand (t_1, ..., t_k).
using DemandVector = std::vector<int>;

void require_nonincreasing(const DemandVector& t);

/// All inclusion-minimal recovery sets for `symbol`, ordered by size then
/// lexicographically. A minimal set never needs more than k positions.
std::vector<RecoverySet> minimal_recovery_sets(const GfMatrix& g, int symbol);

struct DisjointPacking {
    int count;
    std::vector<RecoverySet> witness;  // pairwise disjoint, attains count
};

/// Exact maximum number of pairwise disjoint recovery sets for `symbol`,
/// with an attaining family. `target` >= 0 stops the search as soon as that
/// many sets are packed (enough for certification); target < 0 runs to
/// optimality.
DisjointPacking max_disjoint_recovery_sets(const GfMatrix& g, int symbol,
                                           int target = -1);

/// Per-symbol packing maxima, in data-symbol order (unsorted).
std::vector<int> pir_level(const GfMatrix& g);

struct PirCertificate {
    bool satisfied;
    // when satisfied: per symbol j, t_j pairwise disjoint recovery sets
    std::vector<std::vector<RecoverySet>> witnesses;
    // when refuted: first failing symbol and its exact packing maximum
    int failing_symbol = -1;
    int failing_maximum = -1;
};

/// Certify (or refute) that g generates a UDD T-PIR code: symbol j must
/// admit at least t_j mutually disjoint recovery sets. The demand must be
/// nonincreasing; for unsorted per-position demands apply an explicit
/// coordinate permutation first (verify_t_pir_positional).
PirCertificate verify_t_pir(const GfMatrix& g, const DemandVector& demand);

/// Same check for demands already mapped to data positions (no ordering
/// requirement).
PirCertificate verify_t_pir_positional(const GfMatrix& g,
                                       const std::vector<int>& demand);

}  // namespace uddpir

#endif
