#include "dccm/json_io.hpp"

#include <cmath>
#include <limits>

namespace dccm {

Json real_to_json(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double real_from_json(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    throw DomainError("expected a real number in report, got " + j.dump());
}

Json to_json(const VectorE& v) {
    Json out = Json::array();
    for (double c : v.coords()) out.push_back(real_to_json(c));
    return out;
}

Json to_json(const Violation& v, AxiomId axiom) {
    Json out;
    if (v.points.size() == 3) {
        out["x"] = v.points[0].literal();
        out["z"] = v.points[1].literal();
        out["y"] = v.points[2].literal();
    } else if (v.points.size() == 2) {
        out["x"] = v.points[0].literal();
        out["y"] = v.points[1].literal();
    } else {
        static constexpr const char* kNames[] = {"x", "y"};
        for (std::size_t i = 0; i < v.vectors.size() && i < 2; ++i) {
            out[kNames[i]] = to_json(v.vectors[i]);
        }
        if (axiom == AxiomId::C2 && v.scalars.size() == 2) {
            out["a"] = real_to_json(v.scalars[0]);
            out["b"] = real_to_json(v.scalars[1]);
        }
    }
    out["lhs"] = to_json(v.lhs);
    out["rhs"] = to_json(v.rhs);
    out["margin"] = real_to_json(v.margin);
    return out;
}

Json to_json(const AxiomReport& r) {
    Json violations = Json::array();
    for (const Violation& v : r.violations) violations.push_back(to_json(v, r.axiom));
    return Json{{"axiom", to_string(r.axiom)},
                {"checked", r.n_checked},
                {"verdict", to_string(r.verdict)},
                {"violations", std::move(violations)}};
}

Json to_json(const ContractionParams& p) {
    switch (p.family) {
        case Family::Banach: return {{"k", real_to_json(p.k)}};
        case Family::Kannan: return {{"a", real_to_json(p.a)}, {"b", real_to_json(p.b)}};
        case Family::Reich:
            return {{"a", real_to_json(p.a)}, {"b", real_to_json(p.b)}, {"c", real_to_json(p.c)}};
    }
    return Json::object();
}

ContractionParams params_from_json(Family family, const Json& j) {
    auto get = [&](const char* key) {
        if (!j.contains(key)) {
            throw DomainError(std::string("contraction params missing '") + key + "'");
        }
        return real_from_json(j.at(key));
    };
    switch (family) {
        case Family::Banach: return ContractionParams::banach(get("k"));
        case Family::Kannan: return ContractionParams::kannan(get("a"), get("b"));
        case Family::Reich: return ContractionParams::reich(get("a"), get("b"), get("c"));
    }
    throw DomainError("unknown family");
}

Json to_json(const ContractionEstimate& e) {
    Json out{{"family", to_string(e.params.family)},
             {"params", to_json(e.params)},
             {"feasible", e.feasible},
             {"n_pairs", e.n_pairs}};
    if (e.worst_pair) {
        out["worst_pair"] = {e.worst_pair->first.literal(), e.worst_pair->second.literal()};
    } else {
        out["worst_pair"] = nullptr;
    }
    return out;
}

Json to_json(const HypothesisReport& r) {
    Json series = Json::array();
    for (double s : r.s_series) series.push_back(real_to_json(s));
    return Json{{"theorem", to_string(r.theorem)},
                {"q_estimate", real_to_json(r.q_estimate)},
                {"q_threshold", real_to_json(r.q_threshold)},
                {"alpha_limit", real_to_json(r.alpha_limit)},
                {"beta_limit", real_to_json(r.beta_limit)},
                {"beta_limit_swapped", real_to_json(r.beta_limit_swapped)},
                {"beta_threshold", real_to_json(r.beta_threshold)},
                {"s_series", std::move(series)},
                {"series_cauchy", r.series_cauchy},
                {"stabilized", r.stabilized},
                {"verdict", to_string(r.verdict)}};
}

Json to_json(const DecayAudit& d) {
    return Json{{"verdict", d.pass ? "pass" : "fail"},
                {"rate", real_to_json(d.rate)},
                {"checked", d.n_checked},
                {"first_failure", d.first_failure ? Json(*d.first_failure) : Json(nullptr)}};
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace dccm
