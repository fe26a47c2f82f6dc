#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dccm/axiom_report.hpp"
#include "dccm/contraction.hpp"
#include "dccm/spaces.hpp"

namespace dccm {

enum class OrbitStatus { Converged, MaxIter, Diverged };

std::string_view to_string(OrbitStatus s);

// Picard sequence x_n = T^n x0 with cached steps p(x_n, x_{n+1}).
struct Orbit {
    Point x0;
    std::vector<Point> points;
    std::vector<VectorE> steps;
    std::vector<double> step_norms;
    OrbitStatus status = OrbitStatus::MaxIter;

    std::size_t iterations() const { return steps.size(); }
};

// Iterates until two consecutive step norms fall below tol (or a step is
// exactly zero, i.e. a fixed point was hit), max_iter map applications have
// been made, or a step norm exceeds 1/tol.
Orbit picard_orbit(const SpaceDef& s, const SelfMap& T, const Point& x0, std::size_t max_iter,
                   double tol);

// Continues an orbit, without any stopping rule, until it holds at least
// n_points points. Status is kept.
Orbit extend_orbit(const SpaceDef& s, const SelfMap& T, Orbit orbit, std::size_t n_points);

struct HypothesisConfig {
    std::size_t i_horizon = 64;
    std::size_t m_horizon = 64;
    std::size_t stab_window = 8;
    double stab_tol = 1e-9;
};

struct HypothesisReport {
    Family theorem = Family::Banach;
    double q_estimate = 0.0;
    double q_threshold = 0.0;
    double alpha_limit = 0.0;
    // β limit in the orientation the theorem states: β(x_n, x) for Banach
    // and Kannan, β(x, x_n) for Reich. The other orientation is kept too.
    double beta_limit = 0.0;
    double beta_limit_swapped = 0.0;
    double beta_threshold = 0.0;
    std::vector<double> s_series;
    bool series_cauchy = false;
    bool stabilized = false;
    Verdict verdict = Verdict::Inconclusive;
};

// q_i(m) = α(x_{i+1},x_{i+2}) / α(x_i,x_{i+1}) · β(x_{i+1},x_m) for
// i < i_horizon, 1 <= m <= m_horizon. Q is the max over m of q at the last
// i; it counts as stabilized when, for every m, q moves by less than
// stab_tol over the last stab_window values of i. The α/β limits are read
// off the orbit tail against its last point. Requires at least
// max(i_horizon, m_horizon) + 2 orbit points.
HypothesisReport check_banach_hypothesis(const SpaceDef& s, const Orbit& orbit, double k,
                                         const HypothesisConfig& cfg = {});
HypothesisReport check_kannan_hypothesis(const SpaceDef& s, const Orbit& orbit, double a,
                                         double b, const HypothesisConfig& cfg = {});
HypothesisReport check_reich_hypothesis(const SpaceDef& s, const Orbit& orbit, double a,
                                        double b, double c, const HypothesisConfig& cfg = {});
HypothesisReport check_hypothesis(const SpaceDef& s, const Orbit& orbit,
                                  const ContractionParams& params,
                                  const HypothesisConfig& cfg = {});

struct DecayAudit {
    bool pass = true;
    double rate = 0.0;
    std::size_t n_checked = 0;
    std::optional<std::size_t> first_failure;
};

// Checks p(x_n, x_{n+1}) ⪯ r^n p(x_0, x_1) for every recorded step, with
// tolerance boundary_tol·(1 + r^n).
DecayAudit geometric_decay_audit(const SpaceDef& s, const Orbit& orbit, double r);

struct PartialSums {
    std::vector<double> sums;
    bool cauchy = false;
};

// S_r = Σ_{i=0}^{r} (Π_{j=0}^{i} β(x_j, x_m)) α(x_i, x_{i+1}) rate^i for
// r = 0 .. m-1. Cauchy when |S_R - S_{R-window}| < tol.
PartialSums partial_sums(const SpaceDef& s, const Orbit& orbit, double rate, std::size_t m,
                         std::size_t window = 8, double tol = 1e-9);

// d(n) = max_{n < m <= N} ‖p(x_n, x_m)‖ for n = 0 .. N (d(N) = 0).
std::vector<double> cauchy_witness(const SpaceDef& s, const Orbit& orbit, std::size_t N);

struct SolveConfig {
    std::size_t max_iter = 10'000;
    double tol = 1e-9;
    HypothesisConfig horizons;
};

struct SolveResult {
    Orbit orbit;        // stops at convergence
    Orbit audit_orbit;  // orbit continued to the audit horizons
    std::optional<Point> fixed_point;
    double residual = 0.0;  // ‖p(x̂, T x̂)‖
    std::size_t iterations = 0;
    DecayAudit decay;
    HypothesisReport hypothesis;
};

// Runs the orbit, then audits the decay bound and the theorem's hypotheses
// on the orbit continued to the audit horizons. A fixed point is only
// claimed for converged orbits; it is the last orbit point.
SolveResult solve(const SpaceDef& s, const SelfMap& T, const Point& x0,
                  const ContractionParams& params, const SolveConfig& cfg = {});

}  // namespace dccm
