#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dccm/contraction.hpp"
#include "dccm/json_io.hpp"
#include "dccm/solver.hpp"

namespace dccm {

// Exit-code contract shared by the CLI and the Python bindings.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFinding = 2;
inline constexpr int kExitInfeasible = 3;

struct RunConfig {
    std::string space;
    std::string map;
    std::string family = "banach";
    std::optional<std::string> x0;
    bool exhaustive = true;
    std::size_t n_samples = 10'000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::size_t max_iter = 10'000;
    double grid_step = kDefaultGridStep;
    HypothesisConfig horizons;
};

struct RunOutcome {
    Json report;
    int exit_code = kExitOk;
};

// Cone axioms of the target, DCM1-3, CCM3 and CM3. Exit 2 if any fails.
// In random mode the report also carries grid-shrunk witnesses.
RunOutcome run_verify(const RunConfig& cfg);

// Contraction estimate, then solve with the estimated constants. Exit 3 if
// the family is infeasible, 0 if the orbit converged and the hypothesis
// audit passed, 2 otherwise.
RunOutcome run_solve(const RunConfig& cfg);

// Hypothesis audit on the orbit stored in a solve report. Family and
// constants come from the report unless overridden.
RunOutcome run_hypotheses(const Json& solve_report, const HypothesisConfig& horizons,
                          const std::optional<std::string>& family_override = std::nullopt,
                          const std::optional<ContractionParams>& params_override = std::nullopt);

// One CSV row per distinct report (duplicates by content hash are dropped),
// sorted by command, space, map, family, then hash. Throws DomainError on
// input that is not a report produced by this tool.
std::string render_summary(const std::vector<std::string>& report_texts);

// 64-bit FNV-1a, used for report deduplication.
std::uint64_t content_hash(const std::string& text);

}  // namespace dccm
