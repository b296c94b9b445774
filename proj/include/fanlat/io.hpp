#pragma once

// JSON fan files and command reports.
//
// Fan file:
//   { "rank": n, "rays": [[...], ...], "maximal_cones": [[...], ...],
//     "cones": [[...], ...] (optional), "metadata": { "name", "assert_complete", "trust" } }
// Ray entries may be JSON integers or decimal strings. Reports always write
// integers as decimal strings and carry "version": "fanlat-report/1".

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "fanlat/fan.hpp"
#include "fanlat/filtration.hpp"
#include "fanlat/lattices.hpp"
#include "fanlat/refine.hpp"

namespace fanlat {

using Json = nlohmann::json;

inline constexpr const char* kReportVersion = "fanlat-report/1";

// Throws ParseError for malformed documents (missing fields, wrong types,
// indices out of range, vectors of the wrong length) and FanError when the
// described fan violates the fan axioms.
Fan fan_from_json(const Json& doc, bool trust_override = false);
Json fan_to_json(const Fan& fan);
Fan read_fan_file(const std::string& path, bool trust_override = false);
void write_json_file(const std::string& path, const Json& doc);

Integer parse_integer(const Json& value);
IntVector parse_int_vector(const Json& value);
// "1,-2,3" -> (1,-2,3)
IntVector parse_int_list(const std::string& text);

Json to_json(const Integer& x);
Json to_json(std::span<const Integer> v);
Json to_json(const Sublattice& lattice);
Json depth_json(const std::optional<std::size_t>& depth);

Json new_report(const std::string& command, const Fan& fan);

Json validation_report(const Fan& fan);
Json relations_report(const Fan& fan);
Json classgroup_report(const Fan& fan);
Json filtration_report(const Fan& fan, const FiltrationProfile& profile);
Json generation_json(const GenerationReport& report);
// Full summary: ray lattice, relations, class group, completeness and
// per-policy filtration data; with both policies a discrepancy section.
Json summary_report(const Fan& fan, const std::vector<SupportPolicy>& policies);
Json localize_report(const Fan& fan, const QuotientFan& quotient);
Json decomposition_json(const Fan& fan, const Decomposition& d);
Json trace_json(const SubdivisionTrace& trace);
Json scan_json(const ConjectureScan& scan);

}  // namespace fanlat
