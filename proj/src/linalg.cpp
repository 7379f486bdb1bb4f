#include "uddpir/linalg.hpp"

#include <string>

namespace uddpir {

int GfVector::weight() const {
    int w = 0;
    for (int e : entries)
        if (e != 0) ++w;
    return w;
}

GfMatrix::GfMatrix(Field field, int rows, int cols, std::vector<int> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows < 1 || cols < 0 ||
        data_.size() != static_cast<size_t>(rows) * cols)
        throw DimensionMismatch("entry count does not match matrix shape");
    for (int e : data_)
        if (!field_.valid(e))
            throw Error("matrix entry " + std::to_string(e) +
                        " outside GF(" + std::to_string(field_.q()) + ")");
}

GfVector GfMatrix::row(int r) const {
    GfVector v{field_, std::vector<int>(cols_)};
    for (int c = 0; c < cols_; ++c) v.entries[c] = at(r, c);
    return v;
}

GfVector GfMatrix::col(int c) const {
    GfVector v{field_, std::vector<int>(rows_)};
    for (int r = 0; r < rows_; ++r) v.entries[r] = at(r, c);
    return v;
}

RrefResult rref(const GfMatrix& m) {
    const Field& f = m.field();
    GfMatrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < a.cols(); ++j) {
                int tmp = a.at(r, j);
                a.set(r, j, a.at(pr, j));
                a.set(pr, j, tmp);
            }
        int s = f.inv(a.at(r, c));
        for (int j = 0; j < a.cols(); ++j) a.set(r, j, f.mul(s, a.at(r, j)));
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            int factor = a.at(i, c);
            for (int j = 0; j < a.cols(); ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

int rank(const GfMatrix& m) { return rref(m).rank; }

bool span_contains(const GfMatrix& m, const std::vector<int>& columns,
                   const GfVector& target) {
    if (target.size() != m.rows())
        throw DimensionMismatch("target length must equal row count");
    for (int c : columns)
        if (c < 0 || c >= m.cols())
            throw IndexOutOfRange("column index " + std::to_string(c));

    // Eliminate [selected columns | target]; the target is in the span iff
    // appending it does not raise the rank.
    const int k = m.rows();
    const int s = static_cast<int>(columns.size());
    GfMatrix aug(m.field(), k, s + 1);
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < k; ++i) aug.set(i, j, m.at(i, columns[j]));
    for (int i = 0; i < k; ++i) aug.set(i, s, target.entries[i]);

    RrefResult red = rref(aug);
    return red.pivots.empty() || red.pivots.back() != s;
}

std::pair<GfVector, int> row_combination(const GfVector& h, const GfMatrix& m) {
    if (h.size() != m.rows())
        throw DimensionMismatch("coefficient vector length must equal row count");
    const Field& f = m.field();
    GfVector c{f, std::vector<int>(m.cols(), 0)};
    for (int j = 0; j < m.cols(); ++j) {
        int acc = 0;
        for (int i = 0; i < m.rows(); ++i)
            acc = f.add(acc, f.mul(h.entries[i], m.at(i, j)));
        c.entries[j] = acc;
    }
    return {c, c.weight()};
}

int vector_index(const std::vector<int>& v, int q) {
    int idx = 0;
    for (size_t j = v.size(); j-- > 0;) idx = idx * q + v[j];
    return idx;
}

std::vector<int> index_vector(int idx, int q, int k) {
    std::vector<int> v(k);
    for (int j = 0; j < k; ++j) {
        v[j] = idx % q;
        idx /= q;
    }
    return v;
}

GfVector unit_vector(const Field& f, int k, int j) {
    GfVector v{f, std::vector<int>(k, 0)};
    v.entries[j] = 1;
    return v;
}

}  // namespace uddpir
