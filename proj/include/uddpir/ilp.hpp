#ifndef UDDPIR_ILP_HPP
#define UDDPIR_ILP_HPP

#include <string>
#include <vector>

#include "uddpir/bounds.hpp"

namespace uddpir {

/// The hyperplane-covering integer program: minimize sum n_i over the
/// nonzero vectors i of F_q^k, subject to, for every normalized hyperplane
/// normal h, sum_{<i,h> != 0} n_i >= t_{nu(h)}.
struct IlpModel {
    Field field;
    int k;
    DemandVector demand;
    std::vector<int> variables;           // canonical encodings 1..q^k-1
    std::vector<ProjectivePoint> points;  // one constraint per point
    std::vector<std::vector<int>> rows;   // per point: variable positions with coefficient 1
    std::vector<int> rhs;                 // t_{nu(h)} per point
};

struct IlpSolution {
    std::vector<long long> assignment;  // per variable, n_0 implicitly 0
    long long objective;
    bool optimal;
    long long explored_nodes;
};

IlpModel build_model(const DemandVector& t, const Field& f);

/// Exact optimum mu(T) by depth-first branch-and-bound, with the
/// lexicographically smallest optimal assignment. Deterministic.
IlpSolution solve(const IlpModel& model);

/// Realize an assignment as the k x n matrix with n_i copies of column i,
/// columns in canonical order. Throws InfeasibleAssignment.
GfMatrix solution_to_matrix(const IlpSolution& sol, const IlpModel& model);

/// Textual LP-style dump, one constraint per line:
/// "n_<digits> + ... >= t".
std::string dump_model(const IlpModel& model);

}  // namespace uddpir

#endif
