#include "uddpir/pir.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>

namespace uddpir {

void require_nonincreasing(const DemandVector& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] < t[i + 1])
            throw DemandNotSorted("demand vector must be nonincreasing");
    for (int v : t)
        if (v < 0) throw DemandNotSorted("demands must be nonnegative");
}

namespace {

std::vector<int> mask_to_positions(std::uint32_t mask) {
    std::vector<int> pos;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) pos.push_back(i);
    return pos;
}

// Minimal recovery sets as bitmasks, ordered by popcount then by the
// lexicographic order of their position lists.
std::vector<std::uint32_t> minimal_recovery_masks(const GfMatrix& g, int symbol) {
    const int n = g.cols();
    const int k = g.rows();
    if (n > 31) throw Error("matrices longer than 31 columns are unsupported");
    GfVector ej = unit_vector(g.field(), k, symbol);

    std::vector<std::uint32_t> found;
    std::vector<int> combo;
    // combinations of [n] of size `size` in lexicographic order
    auto recurse = [&](auto&& self, int start, int size) -> void {
        if (static_cast<int>(combo.size()) == size) {
            std::uint32_t mask = 0;
            for (int p : combo) mask |= 1u << p;
            for (std::uint32_t f : found)
                if ((f & mask) == f) return;  // contains a smaller recovery set
            if (span_contains(g, combo, ej)) found.push_back(mask);
            return;
        }
        for (int p = start; p <= n - (size - static_cast<int>(combo.size())); ++p) {
            combo.push_back(p);
            self(self, p + 1, size);
            combo.pop_back();
        }
    };
    // a minimal spanning witness uses at most k independent columns
    for (int size = 1; size <= std::min(n, k); ++size) recurse(recurse, 0, size);
    return found;
}

struct Packer {
    const std::vector<std::uint32_t>& sets;
    int target;  // stop once this many sets are packed; <0 = run to optimality
    int best = 0;
    std::vector<std::uint32_t> best_family;
    std::vector<std::uint32_t> current;

    bool done() const { return target >= 0 && best >= target; }

    // Branch on the lowest free position: either one of the candidate sets
    // containing it joins the packing, or the position goes unused.
    void search(std::uint32_t available) {
        if (done()) return;
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_family = current;
            if (done()) return;
        }
        // optimistic bound: every remaining candidate could still fit
        int fits = 0;
        for (std::uint32_t s : sets)
            if ((s & ~available) == 0) ++fits;
        if (static_cast<int>(current.size()) + fits <= best) return;

        std::uint32_t pivot_candidates = 0;
        for (std::uint32_t s : sets)
            if ((s & ~available) == 0) pivot_candidates |= s;
        if (pivot_candidates == 0) return;
        std::uint32_t pivot = pivot_candidates & (~pivot_candidates + 1);  // lowest bit

        for (std::uint32_t s : sets) {
            if ((s & pivot) == 0 || (s & ~available) != 0) continue;
            current.push_back(s);
            search(available & ~s);
            current.pop_back();
            if (done()) return;
        }
        search(available & ~pivot);
    }
};

}  // namespace

std::vector<RecoverySet> minimal_recovery_sets(const GfMatrix& g, int symbol) {
    if (symbol < 0 || symbol >= g.rows())
        throw IndexOutOfRange("symbol index " + std::to_string(symbol));
    if (rank(g) != g.rows())
        throw RankDeficient("matrix does not have full row rank");
    std::vector<RecoverySet> out;
    for (std::uint32_t mask : minimal_recovery_masks(g, symbol))
        out.push_back({symbol, mask_to_positions(mask)});
    return out;
}

DisjointPacking max_disjoint_recovery_sets(const GfMatrix& g, int symbol,
                                           int target) {
    if (symbol < 0 || symbol >= g.rows())
        throw IndexOutOfRange("symbol index " + std::to_string(symbol));
    if (rank(g) != g.rows())
        throw RankDeficient("matrix does not have full row rank");
    // packing over minimal sets only: any disjoint family shrinks to a
    // disjoint family of minimal sets of the same size
    std::vector<std::uint32_t> sets = minimal_recovery_masks(g, symbol);
    Packer packer{sets, target};
    packer.search(g.cols() >= 31 ? 0x7fffffffu
                                 : ((1u << g.cols()) - 1u));
    DisjointPacking result{packer.best, {}};
    for (std::uint32_t mask : packer.best_family)
        result.witness.push_back({symbol, mask_to_positions(mask)});
    return result;
}

namespace {

// UDDPIR_THREADS caps internal parallelism; 0 or unset means auto.
int thread_cap() {
    const char* env = std::getenv("UDDPIR_THREADS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v < 0 ? 0 : v;
}

}  // namespace

std::vector<int> pir_level(const GfMatrix& g) {
    std::vector<int> level(g.rows());
    int cap = thread_cap();
    if (cap == 0) cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap > 1 && g.rows() > 1) {
        // per-symbol packings are independent; identical to sequential runs
        std::vector<std::future<int>> jobs;
        for (int j = 0; j < g.rows(); ++j)
            jobs.push_back(std::async(std::launch::async, [&g, j] {
                return max_disjoint_recovery_sets(g, j).count;
            }));
        for (int j = 0; j < g.rows(); ++j) level[j] = jobs[j].get();
    } else {
        for (int j = 0; j < g.rows(); ++j)
            level[j] = max_disjoint_recovery_sets(g, j).count;
    }
    return level;
}

PirCertificate verify_t_pir(const GfMatrix& g, const DemandVector& demand) {
    require_nonincreasing(demand);
    return verify_t_pir_positional(g, demand);
}

PirCertificate verify_t_pir_positional(const GfMatrix& g,
                                       const std::vector<int>& demand) {
    if (static_cast<int>(demand.size()) != g.rows())
        throw LengthMismatch("demand length must equal the code dimension");
    for (int v : demand)
        if (v < 0) throw DemandNotSorted("demands must be nonnegative");

    PirCertificate cert;
    cert.satisfied = true;
    cert.witnesses.resize(g.rows());
    for (int j = 0; j < g.rows(); ++j) {
        if (demand[j] == 0) continue;
        DisjointPacking packing = max_disjoint_recovery_sets(g, j, demand[j]);
        if (packing.count < demand[j]) {
            // refute with the exact maximum for the failing symbol
            cert.satisfied = false;
            cert.failing_symbol = j;
            cert.failing_maximum = max_disjoint_recovery_sets(g, j).count;
            cert.witnesses.clear();
            return cert;
        }
        cert.witnesses[j] = std::move(packing.witness);
    }
    return cert;
}

}  // namespace uddpir
