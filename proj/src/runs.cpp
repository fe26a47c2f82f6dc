#include "dccm/runs.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <tuple>

#include "dccm/ordered_space.hpp"
#include "dccm/spaces.hpp"
#include "dccm/verification.hpp"

namespace dccm {

namespace {

constexpr std::uint64_t kConeStream = 7;

Json config_json(const RunConfig& cfg) {
    return Json{{"mode", cfg.exhaustive ? "exhaustive" : "random"},
                {"n_samples", cfg.n_samples},
                {"seed", cfg.seed},
                {"tol", real_to_json(cfg.tol)},
                {"max_iter", cfg.max_iter},
                {"grid_step", real_to_json(cfg.grid_step)},
                {"i_horizon", cfg.horizons.i_horizon},
                {"m_horizon", cfg.horizons.m_horizon},
                {"stab_window", cfg.horizons.stab_window},
                {"stab_tol", real_to_json(cfg.horizons.stab_tol)}};
}

Json points_json(const std::vector<Point>& pts) {
    Json out = Json::array();
    for (const Point& p : pts) out.push_back(p.literal());
    return out;
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

RunOutcome run_verify(const RunConfig& cfg) {
    const SpaceDef space = make_space(cfg.space);
    SampleMode mode = ExhaustiveGrid{};
    if (!cfg.exhaustive) mode = RandomSamples{cfg.n_samples, cfg.seed, false};

    std::vector<AxiomReport> reports;
    Sampler cone_sampler(derive_seed(cfg.seed, kConeStream));
    for (auto& r : verify_cone_axioms(space.target().cone(), cone_sampler,
                                      std::max<std::size_t>(cfg.n_samples, 1))) {
        reports.push_back(std::move(r));
    }
    for (auto& r : verify_dcm(space, mode)) reports.push_back(std::move(r));
    reports.push_back(verify_controlled(space, mode));
    reports.push_back(verify_cm(space, mode));

    RunOutcome out;
    Json list = Json::array();
    bool any_fail = false;
    for (const AxiomReport& r : reports) {
        Json j = to_json(r);
        const bool metric_axiom = r.axiom != AxiomId::C1 && r.axiom != AxiomId::C2 &&
                                  r.axiom != AxiomId::C3;
        if (!cfg.exhaustive && metric_axiom && r.verdict == Verdict::Fail) {
            Json shrunk = Json::array();
            for (const Violation& v : shrink_witness(r, space).violations) {
                shrunk.push_back(to_json(v, r.axiom));
            }
            j["shrunk_violations"] = std::move(shrunk);
        }
        any_fail = any_fail || r.verdict == Verdict::Fail;
        list.push_back(std::move(j));
    }
    out.report = Json{{"command", "verify"},
                      {"space", space.id()},
                      {"config", config_json(cfg)},
                      {"reports", std::move(list)},
                      {"verdict", any_fail ? "fail" : "pass"}};
    out.exit_code = any_fail ? kExitFinding : kExitOk;
    return out;
}

RunOutcome run_solve(const RunConfig& cfg) {
    const SpaceDef space = make_space(cfg.space);
    if (cfg.map.empty()) throw DomainError("solve needs a map id");
    const SelfMap map = make_map(cfg.map, space.domain());
    const Family family = parse_family(cfg.family);
    const Point x0 = cfg.x0 ? space.parse_point(*cfg.x0) : space.default_start();

    const auto pairs = sample_pairs(space, PairSpec{cfg.n_samples, cfg.seed, true});
    ContractionEstimate est;
    switch (family) {
        case Family::Banach: est = estimate_banach(space, map, pairs); break;
        case Family::Kannan: est = estimate_kannan(space, map, pairs, cfg.grid_step); break;
        case Family::Reich: est = estimate_reich(space, map, pairs, cfg.grid_step); break;
    }

    RunOutcome out;
    out.report = Json{{"command", "solve"},
                      {"space", space.id()},
                      {"map", map.id()},
                      {"family", to_string(family)},
                      {"x0", x0.literal()},
                      {"config", config_json(cfg)},
                      {"contraction", to_json(est)}};
    if (!est.feasible) {
        out.report["verdict"] = "infeasible";
        out.exit_code = kExitInfeasible;
        return out;
    }

    SolveConfig scfg{cfg.max_iter, cfg.tol, cfg.horizons};
    const SolveResult res = solve(space, map, x0, est.params, scfg);
    out.report["solve"] = Json{
        {"status", to_string(res.orbit.status)},
        {"iterations", res.iterations},
        {"fixed_point", res.fixed_point ? Json(res.fixed_point->literal()) : Json(nullptr)},
        {"residual", res.fixed_point ? real_to_json(res.residual) : Json(nullptr)},
        {"decay_audit", to_json(res.decay)},
        {"orbit_length", res.orbit.points.size()},
        {"audit_orbit", points_json(res.audit_orbit.points)}};
    out.report["hypothesis"] = to_json(res.hypothesis);
    const bool ok = res.orbit.status == OrbitStatus::Converged &&
                    res.hypothesis.verdict == Verdict::Pass;
    out.report["verdict"] = ok ? "pass" : "fail";
    out.exit_code = ok ? kExitOk : kExitFinding;
    return out;
}

RunOutcome run_hypotheses(const Json& solve_report, const HypothesisConfig& horizons,
                          const std::optional<std::string>& family_override,
                          const std::optional<ContractionParams>& params_override) {
    if (!solve_report.is_object() || solve_report.value("command", "") != "solve" ||
        !solve_report.contains("solve")) {
        throw DomainError("hypotheses needs a solve report that contains an orbit");
    }
    const SpaceDef space = make_space(solve_report.at("space").get<std::string>());
    const SelfMap map =
        make_map(solve_report.at("map").get<std::string>(), space.domain());
    const Family family =
        parse_family(family_override.value_or(solve_report.at("family").get<std::string>()));
    const ContractionParams params =
        params_override ? *params_override
                        : params_from_json(family, solve_report.at("contraction").at("params"));

    const auto& literals = solve_report.at("solve").at("audit_orbit");
    if (!literals.is_array() || literals.empty()) throw DomainError("empty orbit in report");
    const Point x0 = space.parse_point(literals.front().get<std::string>());
    Orbit orbit{x0, {x0}, {}, {}, OrbitStatus::MaxIter};
    for (std::size_t i = 1; i < literals.size(); ++i) {
        Point next = space.parse_point(literals[i].get<std::string>());
        VectorE step = space.p(orbit.points.back(), next);
        orbit.step_norms.push_back(space.target().norm(step));
        orbit.steps.push_back(std::move(step));
        orbit.points.push_back(next);
    }

    const HypothesisReport rep = check_hypothesis(space, orbit, params, horizons);
    RunOutcome out;
    out.report = Json{{"command", "hypotheses"},
                      {"space", space.id()},
                      {"map", map.id()},
                      {"family", to_string(params.family)},
                      {"params", to_json(params)},
                      {"hypothesis", to_json(rep)},
                      {"verdict", to_string(rep.verdict)}};
    out.exit_code = rep.verdict == Verdict::Pass ? kExitOk : kExitFinding;
    return out;
}

std::uint64_t content_hash(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string render_summary(const std::vector<std::string>& report_texts) {
    if (report_texts.empty()) throw DomainError("report needs at least one input");

    using Row = std::tuple<std::string, std::string, std::string, std::string, std::uint64_t,
                           std::string>;
    std::vector<Row> rows;
    std::set<std::uint64_t> seen;
    for (const std::string& text : report_texts) {
        const std::uint64_t h = content_hash(text);
        if (!seen.insert(h).second) continue;
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception& e) {
            throw DomainError(std::string("malformed report: ") + e.what());
        }
        if (!j.is_object() || !j.contains("command") || !j.contains("space")) {
            throw DomainError("malformed report: missing command or space");
        }
        const std::string command = j.at("command").get<std::string>();
        const std::string space = j.at("space").get<std::string>();
        const std::string map = j.value("map", "-");
        const std::string family = j.value("family", "-");

        std::string params = "-", q = "-", q_threshold = "-", residual = "-";
        const Json* p = nullptr;
        if (j.contains("contraction")) p = &j.at("contraction").at("params");
        if (j.contains("params")) p = &j.at("params");
        if (p) {
            std::string joined;
            for (auto it = p->begin(); it != p->end(); ++it) {
                if (!joined.empty()) joined += ";";
                joined += it.key() + "=" + format_real(real_from_json(*it));
            }
            params = joined;
        }
        if (j.contains("hypothesis")) {
            q = format_real(real_from_json(j.at("hypothesis").at("q_estimate")));
            q_threshold = format_real(real_from_json(j.at("hypothesis").at("q_threshold")));
        }
        if (j.contains("solve") && !j.at("solve").at("residual").is_null()) {
            residual = format_real(real_from_json(j.at("solve").at("residual")));
        }
        const std::string verdict = j.value("verdict", "-");
        rows.emplace_back(command, space, map, family, h,
                          params + "," + q + "," + q_threshold + "," + residual + "," + verdict);
    }
    std::sort(rows.begin(), rows.end());

    std::ostringstream out;
    out << "command,space,map,family,params,q_estimate,q_threshold,residual,verdict\n";
    for (const auto& [command, space, map, family, h, rest] : rows) {
        out << command << ',' << space << ',' << map << ',' << family << ',' << rest << '\n';
    }
    return out.str();
}

}  // namespace dccm
