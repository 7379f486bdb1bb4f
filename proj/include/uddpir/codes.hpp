#ifndef UDDPIR_CODES_HPP
#define UDDPIR_CODES_HPP

#include <vector>

#include "uddpir/linalg.hpp"

namespace uddpir {

/// A linear code given by a full-row-rank generator matrix. The encoder is
/// a |-> a^T G, so rows index data symbols and columns index storage
/// positions.
class LinearCode {
public:
    explicit LinearCode(GfMatrix generator);

    const GfMatrix& generator() const { return gen_; }
    int dimension() const { return gen_.rows(); }
    int length() const { return gen_.cols(); }

private:
    GfMatrix gen_;
};

using SeparationVector = std::vector<int>;

/// Minimum Hamming distance = minimum weight over the q^k - 1 nonzero
/// codewords.
int min_distance(const LinearCode& code);

/// s_j = min{ w(h^T G) : h_j != 0 }, by full enumeration of nonzero h.
SeparationVector separation_vector(const LinearCode& code);

/// Greedy optimal generator matrix: rows picked by minimum weight outside
/// the span of the rows already chosen (lexicographically smallest codeword
/// on ties), then reversed so separation values come out nonincreasing.
/// The returned matrix generates the same code.
GfMatrix optimal_generator(const LinearCode& code);

/// Componentwise a >= b after sorting both nonincreasingly.
bool sorted_dominates(const SeparationVector& a, const SeparationVector& b);

}  // namespace uddpir

#endif
