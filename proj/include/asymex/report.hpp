// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON and CSV renderings. JSON numbers are rounded to 12 significant digits
// and printed in shortest round-trip form; infinities are the string "inf".
// CSV numbers use %.12g. Vertex sets are sorted id lists (space separated in CSV).

#include <string>
#include <vector>

#include <json.hpp>

#include "asymex/decompose.hpp"
#include "asymex/expansion.hpp"
#include "asymex/homogeneity.hpp"
#include "asymex/operators.hpp"
#include "asymex/spectral.hpp"

namespace asymex {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "asymex.report/1";

Json json_number(double x);
double json_to_double(const Json& j);
Json to_json(const VertexSet& s);
Json to_json(const Ratio& r);
Json to_json(const std::optional<Ratio>& r);
Json to_json(const CheegerResult& r);
Json to_json(const ExpansionProfile& p);
Json to_json(const FolnerCertificate& c);
Json to_json(const FamilyCertificate& c);
Json to_json(const PoincareEstimate& e);
Json to_json(const Exhaustion& e, const std::vector<int>& indices);
Json to_json(const VerificationReport& r, const std::vector<int>& indices);
Json to_json(const std::vector<Violation>& v, const std::vector<int>& indices);
Json to_json(const ApproximationError& a);
Json to_json(const PropagationProfile& p, const std::vector<int>& indices);
Json to_json(const DichotomyReport& d);
Json to_json(const TransitiveReport& t, const std::vector<int>& indices);

/// Inverse of to_json(Exhaustion); `sizes` are the block sizes. Throws ParseError.
Exhaustion exhaustion_from_json(const Json& j, const std::vector<std::size_t>& sizes);

/// {"schema", "command", "config", "results"}.
Json make_report(const std::string& command, const Json& config, const Json& results);
std::string render_report(const Json& report);
/// Parses and checks the schema tag. Throws ParseError.
Json parse_report(const std::string& text);

std::string vertex_list(const VertexSet& s);
std::string profile_csv(const ExpansionProfile& p);
std::string spectrum_csv(const std::vector<double>& eigenvalues);
std::string certificate_csv(const FamilyCertificate& c, const std::vector<int>& indices);
std::string exhaustion_csv(const Exhaustion& e, const std::vector<int>& indices);
std::string propagation_csv(const PropagationProfile& p);
std::string nu_csv(const PropagationProfile& p, const std::vector<int>& indices);

}  // namespace asymex
