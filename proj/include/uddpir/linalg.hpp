#ifndef UDDPIR_LINALG_HPP
#define UDDPIR_LINALG_HPP

#include <vector>

#include "uddpir/field.hpp"

namespace uddpir {

/// Vector over GF(q). Entries are canonical element values in [0, q).
struct GfVector {
    Field field;
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }
    int weight() const;

    bool operator==(const GfVector& o) const { return entries == o.entries; }
};

/// Dense k x n matrix over GF(q), row-major. Matrices are immutable values;
/// every operation returns a fresh result.
class GfMatrix {
public:
    GfMatrix(Field field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 1 || cols < 0) throw DimensionMismatch("bad matrix shape");
    }

    GfMatrix(Field field, int rows, int cols, std::vector<int> entries);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) { data_[static_cast<size_t>(r) * cols_ + c] = v; }

    GfVector row(int r) const;
    GfVector col(int c) const;

    bool operator==(const GfMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    Field field_;
    int rows_, cols_;
    std::vector<int> data_;
};

struct RrefResult {
    GfMatrix matrix;
    int rank;
    std::vector<int> pivots;  // 0-based column indices
};

/// Reduced row-echelon form over GF(q); the input is left untouched.
RrefResult rref(const GfMatrix& m);

int rank(const GfMatrix& m);

/// True iff `target` lies in the GF(q)-span of the selected columns of `m`.
/// `columns` holds 0-based indices. Throws IndexOutOfRange.
bool span_contains(const GfMatrix& m, const std::vector<int>& columns,
                   const GfVector& target);

/// h^T M and its Hamming weight. Throws DimensionMismatch.
std::pair<GfVector, int> row_combination(const GfVector& h, const GfMatrix& m);

GfVector unit_vector(const Field& f, int k, int j);

/// Canonical vector <-> integer encoding: index = sum v_j * q^j with the
/// first coordinate least significant. Used everywhere a deterministic
/// ordering of F_q^k is needed (column counts, ILP variables, search).
int vector_index(const std::vector<int>& v, int q);
std::vector<int> index_vector(int idx, int q, int k);

}  // namespace uddpir

#endif
