#include "uddpir/report.hpp"

#include <sstream>

#include "uddpir/codes.hpp"
#include "uddpir/io.hpp"

namespace uddpir {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

namespace {

Json matrix_json(const GfMatrix& g) {
    Json input;
    input["q"] = g.field().q();
    input["k"] = g.rows();
    input["n"] = g.cols();
    if (g.field().m() > 1) input["modulus"] = g.field().modulus();
    Json rows = Json::array();
    for (int r = 0; r < g.rows(); ++r) rows.push_back(g.row(r).entries);
    input["matrix"] = rows;
    return input;
}

Json recovery_set_json(const RecoverySet& rs) {
    Json j;
    j["symbol"] = rs.symbol + 1;
    Json pos = Json::array();
    for (int p : rs.positions) pos.push_back(p + 1);
    j["positions"] = pos;
    return j;
}

std::string vector_digits(const std::vector<int>& v) {
    std::string s;
    for (int d : v) s += std::to_string(d);
    return s;
}

Json bounds_json(const DemandVector& demand, int q,
                 std::optional<long long> mu) {
    Json b;
    b["griesmer_sum"] = griesmer_sum(demand, q);
    b["fractional"] = rational_to_string(fractional_bound(demand, q));
    if (mu) b["mu"] = *mu;
    return b;
}

}  // namespace

Json analyze_report(const GfMatrix& g, const std::optional<DemandVector>& demand,
                    const std::optional<std::vector<int>>& permutation) {
    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = "analyze";
    report["input"] = matrix_json(g);

    int r = rank(g);
    if (r != g.rows()) {
        report["error"] = "rank_deficient";
        report["rank"] = r;
        return report;
    }

    LinearCode code(g);
    report["min_distance"] = min_distance(code);
    report["separation_vector"] = separation_vector(code);
    report["pir_level"] = pir_level(g);

    Json verdicts;
    if (demand) {
        require_nonincreasing(*demand);
        report["demand"] = *demand;

        std::vector<int> positional = *demand;
        if (permutation) {
            if (permutation->size() != demand->size())
                throw LengthMismatch("permutation length must equal k");
            std::vector<bool> seen(g.rows(), false);
            for (size_t j = 0; j < permutation->size(); ++j) {
                int pos = (*permutation)[j];
                if (pos < 1 || pos > g.rows() || seen[pos - 1])
                    throw IndexOutOfRange("--permute must be a permutation of 1..k");
                seen[pos - 1] = true;
                positional[pos - 1] = (*demand)[j];
            }
            report["permutation"] = *permutation;
            report["positional_demand"] = positional;
        }

        PirCertificate cert = verify_t_pir_positional(g, positional);
        Json cj;
        cj["satisfied"] = cert.satisfied;
        if (cert.satisfied) {
            Json per_symbol = Json::array();
            for (const auto& sets : cert.witnesses) {
                Json family = Json::array();
                for (const RecoverySet& rs : sets)
                    family.push_back(recovery_set_json(rs));
                per_symbol.push_back(family);
            }
            cj["witnesses"] = per_symbol;
        } else {
            cj["failing_symbol"] = cert.failing_symbol + 1;
            cj["maximum"] = cert.failing_maximum;
        }
        report["certificate"] = cj;
        verdicts["demand_satisfied"] = cert.satisfied;
        long long mu = solve(build_model(*demand, g.field())).objective;
        report["bounds"] = bounds_json(*demand, g.field().q(), mu);
    }
    report["verdicts"] = verdicts;
    return report;
}

Json ilp_report(const IlpModel& model, const IlpSolution& sol,
                bool include_dump) {
    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = "ilp";
    report["q"] = model.field.q();
    report["demand"] = model.demand;
    report["mu"] = sol.objective;
    Json assignment = Json::array();
    for (size_t v = 0; v < model.variables.size(); ++v) {
        if (sol.assignment[v] == 0) continue;
        Json entry;
        entry["vector"] =
            vector_digits(index_vector(model.variables[v], model.field.q(), model.k));
        entry["count"] = sol.assignment[v];
        assignment.push_back(entry);
    }
    report["assignment"] = assignment;
    report["bounds"] = bounds_json(model.demand, model.field.q(), sol.objective);
    if (include_dump) report["model"] = dump_model(model);
    return report;
}

Json bound_report(const DemandVector& demand, int q) {
    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = "bound";
    report["q"] = q;
    report["demand"] = demand;
    report["bounds"] = bounds_json(demand, q, std::nullopt);
    return report;
}

Json search_report(const DemandVector& demand, const Field& f,
                   const std::string& mode, const SearchResult& result,
                   int baseline_length) {
    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = "search";
    report["q"] = f.q();
    report["demand"] = demand;
    report["mode"] = mode;
    report["baseline_length"] = baseline_length;
    report["candidates_examined"] = result.candidates_examined;
    if (result.status == SearchResult::Status::found) {
        report["status"] = "found";
        report["length"] = result.length;
        report["witness"] = write_matrix(*result.witness);
    } else {
        report["status"] = "none_within_bound";
    }
    report["bounds"] = bounds_json(demand, f.q(), std::nullopt);
    return report;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                    os);
    } else if (j.is_array()) {
        // short scalar arrays print inline, nested ones element by element
        bool scalar = true;
        for (const auto& e : j)
            if (!e.is_primitive()) scalar = false;
        if (scalar) {
            os << prefix << ":";
            for (const auto& e : j) os << " " << e.dump();
            os << "\n";
        } else {
            int i = 0;
            for (const auto& e : j)
                flatten(e, prefix + "[" + std::to_string(i++) + "]", os);
        }
    } else if (j.is_string()) {
        os << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

}  // namespace

std::string report_to_text(const Json& report) {
    std::ostringstream os;
    flatten(report, "", os);
    return os.str();
}

}  // namespace uddpir
