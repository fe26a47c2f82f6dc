#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dccm/axiom_report.hpp"
#include "dccm/spaces.hpp"

namespace dccm {

// Every ordered pair / triple of the space's canonical grid.
struct ExhaustiveGrid {};

// n seeded random pairs and triples. With grid_support the points are drawn
// uniformly from the canonical grid instead of the space's own sampler.
struct RandomSamples {
    std::size_t n = 10'000;
    std::uint64_t seed = 0;
    bool grid_support = false;
};

using SampleMode = std::variant<ExhaustiveGrid, RandomSamples>;

// Random runs with no violations and fewer samples than this are reported
// as inconclusive rather than pass.
inline constexpr std::size_t kInconclusiveFloor = 1000;

// DCM1 (positivity, identity of indiscernibles), DCM2 (symmetry) on pairs,
// DCM3 p(x,y) ⪯ α(x,z)p(x,z) + β(z,y)p(z,y) on ordered triples (x, z, y).
// Returns the three reports in that order.
std::vector<AxiomReport> verify_dcm(const SpaceDef& s, const SampleMode& mode);

// CCM3: the DCM3 inequality with β replaced by α.
AxiomReport verify_controlled(const SpaceDef& s, const SampleMode& mode);

// CM3: the plain triangle inequality p(x,y) ⪯ p(x,z) + p(z,y).
AxiomReport verify_cm(const SpaceDef& s, const SampleMode& mode);

// Re-evaluates a violation from its stored points. Returns the fresh
// violation (margin recomputed) or nothing when it no longer reproduces.
// Only meaningful for metric axioms (DCM1-3, CCM3, CM3).
std::optional<Violation> replay_violation(const SpaceDef& s, AxiomId axiom,
                                          const std::vector<Point>& points);

// Moves every witness coordinate onto the nearest canonical-grid value that
// keeps the violation alive, repeating until no coordinate moves.
// Witnesses already on the grid are left alone. Duplicates produced by the
// shrinking are merged. Deterministic.
AxiomReport shrink_witness(const AxiomReport& report, const SpaceDef& s);

}  // namespace dccm
