// uddpir: analyze, certify, bound, solve, and search linear UDD PIR codes.
//
// Exit codes: 0 = all requested verdicts pass, 1 = a certificate was
// refuted or no code was found within the bound, 2 = input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "uddpir/io.hpp"
#include "uddpir/report.hpp"

namespace {

using namespace uddpir;

DemandVector parse_demand(const std::string& spec) {
    DemandVector t;
    std::string token;
    std::istringstream ss(spec);
    while (std::getline(ss, token, ',')) {
        size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw ParseError("bad demand entry '" + token + "'");
        t.push_back(v);
    }
    if (t.empty()) throw ParseError("empty demand");
    return t;
}

std::vector<int> parse_permutation(const std::string& spec) {
    return parse_demand(spec);  // same comma-separated integer format
}

void emit(const Json& report, bool json_out, const std::string& out_path) {
    std::string text = json_out ? report.dump(2) + "\n" : report_to_text(report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open '" + out_path + "' for writing");
        out << text;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Linear UDD PIR code analysis, bounds, ILP, and search"};
    app.require_subcommand(1);

    std::string matrix_path, demand_spec, permute_spec, out_path, emit_path;
    std::string mode = "pir";
    int q = 2, n_max = 0;
    bool json_out = false, dump_model_flag = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json_out, "JSON report output");
        auto* text = cmd->add_flag("--text", "plain text report output (default)");
        (void)text;
    };

    CLI::App* analyze = app.add_subcommand("analyze", "analyze a matrix file");
    analyze->add_option("matrix", matrix_path, "matrix file")->required();
    analyze->add_option("--demand", demand_spec, "demand t1,...,tk (nonincreasing)");
    analyze->add_option("--permute", permute_spec,
                        "map sorted demands to data positions (1-based)");
    add_format(analyze);

    CLI::App* certify = app.add_subcommand("certify", "certify a demand vector");
    certify->add_option("matrix", matrix_path, "matrix file")->required();
    certify->add_option("--demand", demand_spec, "demand t1,...,tk")->required();
    certify->add_option("--permute", permute_spec,
                        "map sorted demands to data positions (1-based)");
    add_format(certify);

    CLI::App* ilp = app.add_subcommand("ilp", "solve the hyperplane ILP exactly");
    ilp->add_option("--q", q, "field order (prime power)")->required();
    ilp->add_option("--demand", demand_spec, "demand t1,...,tk")->required();
    ilp->add_option("--emit-matrix", emit_path, "write the realized UEP matrix");
    ilp->add_flag("--dump-model", dump_model_flag, "include the LP-style dump");
    add_format(ilp);

    CLI::App* bound = app.add_subcommand("bound", "Griesmer and fractional bounds");
    bound->add_option("--q", q, "field order (prime power)")->required();
    bound->add_option("--demand", demand_spec, "demand t1,...,tk")->required();
    add_format(bound);

    CLI::App* search = app.add_subcommand("search", "shortest-code search");
    search->add_option("--q", q, "field order (prime power)")->required();
    search->add_option("--demand", demand_spec, "demand t1,...,tk")->required();
    search->add_option("--nmax", n_max, "largest length to scan")->required();
    search->add_option("--mode", mode, "pir | uep")
        ->check(CLI::IsMember({"pir", "uep"}));
    search->add_option("--out", out_path, "write the report here instead of stdout");
    add_format(search);

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed() || certify->parsed()) {
        GfMatrix g = read_matrix_file(matrix_path);
        std::optional<DemandVector> demand;
        if (!demand_spec.empty()) demand = parse_demand(demand_spec);
        std::optional<std::vector<int>> permutation;
        if (!permute_spec.empty()) permutation = parse_permutation(permute_spec);
        Json report = analyze_report(g, demand, permutation);
        emit(report, json_out, "");
        if (report.contains("error")) return 2;
        if (demand && !report["verdicts"]["demand_satisfied"].get<bool>()) return 1;
        return 0;
    }

    if (ilp->parsed()) {
        Field f = Field::of_order(q);
        IlpModel model = build_model(parse_demand(demand_spec), f);
        IlpSolution sol = solve(model);
        if (!emit_path.empty())
            write_matrix_file(solution_to_matrix(sol, model), emit_path);
        emit(ilp_report(model, sol, dump_model_flag), json_out, "");
        return 0;
    }

    if (bound->parsed()) {
        DemandVector t = parse_demand(demand_spec);
        require_nonincreasing(t);
        emit(bound_report(t, Field::of_order(q).q()), json_out, "");
        return 0;
    }

    // search
    Field f = Field::of_order(q);
    DemandVector t = parse_demand(demand_spec);
    int baseline = concatenation_baseline(t, f).first;
    SearchResult result;
    if (mode == "pir") {
        result = shortest_udd_pir(t, f, n_max);
    } else {
        // UEP length from the exhaustive oracle; the witness is the ILP
        // realization, which attains the same length.
        IlpModel model = build_model(t, f);
        IlpSolution sol = solve(model);
        result.candidates_examined = sol.explored_nodes;
        try {
            result.length = shortest_uep_bruteforce(t, f, n_max);
            result.status = SearchResult::Status::found;
            result.witness = solution_to_matrix(sol, model);
            if (result.length != sol.objective)
                throw Error("UEP brute force disagrees with the ILP optimum");
        } catch (const BoundExceeded&) {
            result.status = SearchResult::Status::none_within_bound;
        }
    }
    emit(search_report(t, f, mode, result, baseline), json_out, out_path);
    if (result.status != SearchResult::Status::found) {
        std::cerr << "none <= " << n_max << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const uddpir::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
