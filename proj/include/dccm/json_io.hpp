#pragma once

#include <string>

#include "json.hpp"

#include "dccm/axiom_report.hpp"
#include "dccm/contraction.hpp"
#include "dccm/solver.hpp"

namespace dccm {

using Json = nlohmann::json;

// Finite reals become JSON numbers (shortest round-trip form, lossless);
// non-finite values become the strings "inf", "-inf", "nan".
Json real_to_json(double v);
double real_from_json(const Json& j);

Json to_json(const VectorE& v);
Json to_json(const Violation& v, AxiomId axiom);
Json to_json(const AxiomReport& r);
Json to_json(const ContractionParams& p);
Json to_json(const ContractionEstimate& e);
Json to_json(const HypothesisReport& r);
Json to_json(const DecayAudit& d);

ContractionParams params_from_json(Family family, const Json& j);

// Canonical text form of a report: sorted keys, two-space indent, trailing
// newline. Byte-identical for identical reports.
std::string dump_report(const Json& report);

}  // namespace dccm
