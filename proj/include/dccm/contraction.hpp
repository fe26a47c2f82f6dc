#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dccm/spaces.hpp"

namespace dccm {

enum class Family { Banach, Kannan, Reich };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

// Constants of the three contraction conditions:
//   Banach  p(Tx,Ty) ⪯ k p(x,y)
//   Kannan  p(Tx,Ty) ⪯ a p(x,Tx) + b p(y,Ty)
//   Reich   p(Tx,Ty) ⪯ a p(x,Tx) + b p(y,Ty) + c p(x,y)
// Unused constants stay 0.
struct ContractionParams {
    Family family = Family::Banach;
    double k = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    static ContractionParams banach(double k) { return {Family::Banach, k, 0, 0, 0}; }
    static ContractionParams kannan(double a, double b) { return {Family::Kannan, 0, a, b, 0}; }
    static ContractionParams reich(double a, double b, double c) {
        return {Family::Reich, 0, a, b, c};
    }

    // Per-step decay ratio of p(x_n, x_{n+1}): k, a/(1-b) or (a+c)/(1-b).
    double rate() const;

    // Standing assumptions: k in [0,1); a,b in [0,1) with a+b < 1;
    // a,b,c in [0,1) with a+b+c < 1. Throws DomainError otherwise.
    void validate() const;
};

using PointPair = std::pair<Point, Point>;

struct PairSpec {
    std::size_t n_random = 10'000;
    std::uint64_t seed = 0;
    bool include_grid = true;
};

// All ordered grid pairs (when requested) followed by n_random seeded pairs.
std::vector<PointPair> sample_pairs(const SpaceDef& s, const PairSpec& spec);

struct ContractionEstimate {
    ContractionParams params;
    bool feasible = false;
    // Banach: the pair attaining the largest ratio. Kannan/Reich: the pair
    // with the least slack when feasible, the refuting pair otherwise.
    std::optional<PointPair> worst_pair;
    std::size_t n_pairs = 0;
};

inline constexpr double kDefaultGridStep = 1.0 / 48.0;

// k̂ = max over pairs and coordinates of p(Tx,Ty)_i / p(x,y)_i with
// 0/0 -> 0 and positive/0 -> +inf. Feasible iff k̂ < 1.
ContractionEstimate estimate_banach(const SpaceDef& s, const SelfMap& T,
                                    std::span<const PointPair> pairs);

// Grid scans over {0, step, 2 step, ...}, visiting candidates by increasing
// sum of constants (ties: lexicographic), and return the first candidate
// satisfying the condition on every pair within the cone tolerance.
ContractionEstimate estimate_kannan(const SpaceDef& s, const SelfMap& T,
                                    std::span<const PointPair> pairs,
                                    double grid_step = kDefaultGridStep);
ContractionEstimate estimate_reich(const SpaceDef& s, const SelfMap& T,
                                   std::span<const PointPair> pairs,
                                   double grid_step = kDefaultGridStep);

// Pairs on which the condition given by params fails (beyond tolerance).
std::vector<PointPair> contraction_violations(const SpaceDef& s, const SelfMap& T,
                                              const ContractionParams& params,
                                              std::span<const PointPair> pairs);

}  // namespace dccm
