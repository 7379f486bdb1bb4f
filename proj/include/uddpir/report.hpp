#ifndef UDDPIR_REPORT_HPP
#define UDDPIR_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "uddpir/bounds.hpp"
#include "uddpir/ilp.hpp"
#include "uddpir/search.hpp"

namespace uddpir {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

/// "a/b", or just "a" when the denominator is 1. No floating point.
std::string rational_to_string(const Rational& r);

/// Full analysis report for a matrix: distances, separation, PIR level,
/// and, when a demand is given, the certificate and the bound battery.
/// Positions and symbol indices in reports are 1-based.
/// `permutation`, when present, maps the sorted demand to data positions:
/// data symbol permutation[j] (1-based) gets demand t_j. Bounds are always
/// computed on the sorted demand.
Json analyze_report(const GfMatrix& g, const std::optional<DemandVector>& demand,
                    const std::optional<std::vector<int>>& permutation = {});

Json ilp_report(const IlpModel& model, const IlpSolution& sol, bool include_dump);

Json bound_report(const DemandVector& demand, int q);

Json search_report(const DemandVector& demand, const Field& f,
                   const std::string& mode, const SearchResult& result,
                   int baseline_length);

/// Render any report as plain text, one "key: value" line per leaf.
std::string report_to_text(const Json& report);

}  // namespace uddpir

#endif
