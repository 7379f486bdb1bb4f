#include "uddpir/ilp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace uddpir {

IlpModel build_model(const DemandVector& t, const Field& f) {
    require_nonincreasing(t);
    const int k = static_cast<int>(t.size());
    if (k < 1) throw Error("demand vector must be nonempty");
    const int q = f.q();
    int qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;

    IlpModel model{f, k, t, {}, projective_points(k, f), {}, {}};
    model.variables.resize(qk - 1);
    std::iota(model.variables.begin(), model.variables.end(), 1);

    for (const ProjectivePoint& pt : model.points) {
        std::vector<int> row;
        for (int v = 0; v < qk - 1; ++v) {
            std::vector<int> vec = index_vector(model.variables[v], q, k);
            if (inner_product(f, vec, pt.h) != 0) row.push_back(v);
        }
        model.rows.push_back(std::move(row));
        model.rhs.push_back(t[pt.nu]);
    }
    return model;
}

namespace {

// Branch-and-bound state shared by both solver passes.
struct Solver {
    const IlpModel& model;
    std::vector<std::vector<int>> var_rows;  // constraint rows per variable
    long long coverage;                      // q^(k-1): rows any one unit can serve
    long long nodes = 0;

    explicit Solver(const IlpModel& m) : model(m), var_rows(m.variables.size()) {
        for (size_t r = 0; r < m.rows.size(); ++r)
            for (int v : m.rows[r]) var_rows[v].push_back(static_cast<int>(r));
        coverage = 1;
        for (int i = 0; i < m.k - 1; ++i) coverage *= m.field.q();
    }

    long long total_deficit(const std::vector<long long>& deficit) const {
        long long d = 0;
        for (long long x : deficit)
            if (x > 0) d += x;
        return d;
    }

    // In an optimal assignment, n_v never exceeds the largest outstanding
    // deficit among the constraints it serves: any excess could be removed
    // without breaking feasibility.
    long long value_cap(int v, const std::vector<long long>& deficit) const {
        long long cap = 0;
        for (int r : var_rows[v]) cap = std::max(cap, deficit[r]);
        return cap;
    }

    // Pass 1: optimum value. Descending values reach good incumbents early;
    // the averaging bound ceil(D / q^(k-1)) prunes (Proposition-1-style
    // double counting applied to the residual deficits).
    long long best;
    long long floor_bound;

    void minimize(size_t v, long long cur, std::vector<long long>& deficit) {
        ++nodes;
        if (best <= floor_bound) return;  // incumbent meets the proven floor
        long long d = total_deficit(deficit);
        if (cur + (d + coverage - 1) / coverage >= best) return;
        if (v == model.variables.size()) {
            if (d == 0) best = cur;
            return;
        }
        for (long long val = value_cap(static_cast<int>(v), deficit); val >= 0;
             --val) {
            for (int r : var_rows[v]) deficit[r] -= val;
            minimize(v + 1, cur + val, deficit);
            for (int r : var_rows[v]) deficit[r] += val;
        }
    }

    // Pass 2: lexicographically smallest assignment attaining the optimum.
    bool lex_assign(size_t v, long long cur, std::vector<long long>& deficit,
                    std::vector<long long>& out) {
        long long d = total_deficit(deficit);
        if (cur + (d + coverage - 1) / coverage > best) return false;
        if (v == model.variables.size()) return d == 0;
        for (long long val = 0; val <= value_cap(static_cast<int>(v), deficit);
             ++val) {
            out[v] = val;
            for (int r : var_rows[v]) deficit[r] -= val;
            if (lex_assign(v + 1, cur + val, deficit, out)) return true;
            for (int r : var_rows[v]) deficit[r] += val;
        }
        out[v] = 0;
        return false;
    }
};

}  // namespace

IlpSolution solve(const IlpModel& model) {
    Solver solver(model);

    // concatenation baseline (n_{e_j} = t_j) is always feasible
    solver.best = std::accumulate(model.demand.begin(), model.demand.end(), 0LL);
    solver.floor_bound = griesmer_sum(model.demand, model.field.q());

    std::vector<long long> deficit(model.rhs.begin(), model.rhs.end());
    solver.minimize(0, 0, deficit);

    IlpSolution sol;
    sol.objective = solver.best;
    sol.optimal = true;
    sol.assignment.assign(model.variables.size(), 0);
    std::fill(deficit.begin(), deficit.end(), 0);
    for (size_t r = 0; r < model.rhs.size(); ++r) deficit[r] = model.rhs[r];
    solver.lex_assign(0, 0, deficit, sol.assignment);
    sol.explored_nodes = solver.nodes;
    return sol;
}

GfMatrix solution_to_matrix(const IlpSolution& sol, const IlpModel& model) {
    if (sol.assignment.size() != model.variables.size())
        throw InfeasibleAssignment("assignment size does not match the model");
    for (size_t r = 0; r < model.rows.size(); ++r) {
        long long lhs = 0;
        for (int v : model.rows[r]) lhs += sol.assignment[v];
        if (lhs < model.rhs[r])
            throw InfeasibleAssignment("assignment violates a hyperplane constraint");
    }
    long long n = std::accumulate(sol.assignment.begin(), sol.assignment.end(), 0LL);
    GfMatrix g(model.field, model.k, static_cast<int>(n));
    int col = 0;
    const int q = model.field.q();
    for (size_t v = 0; v < model.variables.size(); ++v) {
        std::vector<int> vec = index_vector(model.variables[v], q, model.k);
        for (long long c = 0; c < sol.assignment[v]; ++c, ++col)
            for (int i = 0; i < model.k; ++i) g.set(i, col, vec[i]);
    }
    return g;
}

std::string dump_model(const IlpModel& model) {
    std::ostringstream os;
    const int q = model.field.q();
    for (size_t r = 0; r < model.rows.size(); ++r) {
        bool first = true;
        for (int v : model.rows[r]) {
            if (!first) os << " + ";
            first = false;
            os << "n_";
            for (int d : index_vector(model.variables[v], q, model.k)) os << d;
        }
        os << " >= " << model.rhs[r] << "\n";
    }
    return os.str();
}

}  // namespace uddpir
