#ifndef UDDPIR_SEARCH_HPP
#define UDDPIR_SEARCH_HPP

#include <optional>

#include "uddpir/codes.hpp"
#include "uddpir/pir.hpp"

namespace uddpir {

struct SearchResult {
    enum class Status { found, none_within_bound };
    Status status;
    int length = -1;
    std::optional<GfMatrix> witness;
    long long candidates_examined = 0;
};

/// Smallest length in [griesmer floor, n_max] admitting a full-row-rank
/// matrix that certifies as a UDD T-PIR code. Candidates are enumerated as
/// nondecreasing multisets of nonzero columns (column order and zero
/// columns are irrelevant); exhaustive within the bound, and the witness is
/// the lexicographically smallest accepting multiset.
SearchResult shortest_udd_pir(const DemandVector& t, const Field& f, int n_max);

/// Block-diagonal stack of repetition codes, block j of length t_j; the
/// trivial construction of total length sum(t_j).
std::pair<int, GfMatrix> concatenation_baseline(const DemandVector& t,
                                                const Field& f);

/// Smallest length <= n_max admitting a matrix with separation vector >= T
/// componentwise, by exhaustive multiset enumeration. Independent oracle
/// for the ILP optimum. Throws BoundExceeded when nothing fits.
int shortest_uep_bruteforce(const DemandVector& t, const Field& f, int n_max);

}  // namespace uddpir

#endif
