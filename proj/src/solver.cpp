#include "dccm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dccm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Decay audits cover at least this many steps.
constexpr std::size_t kMinAuditSteps = 40;

double spread(const std::vector<double>& v, std::size_t from) {
    const auto [lo, hi] = std::minmax_element(v.begin() + std::ptrdiff_t(from), v.end());
    return *hi - *lo;
}

struct ThresholdSpec {
    Family theorem;
    double rate;
    double q_threshold;
    double beta_threshold;
};

HypothesisReport audit(const SpaceDef& s, const Orbit& orbit, const ThresholdSpec& spec,
                       const HypothesisConfig& cfg) {
    if (cfg.i_horizon < 1 || cfg.m_horizon < 1) throw DomainError("horizons must be >= 1");
    if (cfg.stab_window < 1 || cfg.stab_window > cfg.i_horizon) {
        throw DomainError("stab_window must lie in [1, i_horizon]");
    }
    const std::size_t needed = std::max(cfg.i_horizon, cfg.m_horizon) + 2;
    const auto& x = orbit.points;
    if (x.size() < needed) {
        throw DomainError("orbit has " + std::to_string(x.size()) + " points, hypothesis audit needs " +
                          std::to_string(needed));
    }

    HypothesisReport rep;
    rep.theorem = spec.theorem;
    rep.q_threshold = spec.q_threshold;
    rep.beta_threshold = spec.beta_threshold;

    const std::size_t first_stable_i = cfg.i_horizon - cfg.stab_window;
    bool q_stable = true;
    double q_max = -kInf;
    std::vector<double> q(cfg.i_horizon);
    for (std::size_t m = 1; m <= cfg.m_horizon; ++m) {
        for (std::size_t i = 0; i < cfg.i_horizon; ++i) {
            const double ratio = s.alpha(x[i + 1], x[i + 2]) / s.alpha(x[i], x[i + 1]);
            q[i] = ratio * s.beta(x[i + 1], x[m]);
        }
        q_max = std::max(q_max, q.back());
        if (!(spread(q, first_stable_i) < cfg.stab_tol)) q_stable = false;
    }
    rep.q_estimate = q_max;

    // Tail n = L-1-W .. L-2 against the last point, which stands in for the limit.
    const Point& limit = x.back();
    const std::size_t last = x.size() - 2;
    const std::size_t first = last + 1 - std::min(cfg.stab_window, last + 1);
    std::vector<double> alpha_tail, beta_printed, beta_swapped;
    for (std::size_t n = first; n <= last; ++n) {
        alpha_tail.push_back(s.alpha(limit, x[n]));
        const double forward = s.beta(x[n], limit);   // β(x_n, x)
        const double backward = s.beta(limit, x[n]);  // β(x, x_n)
        const bool reich = spec.theorem == Family::Reich;
        beta_printed.push_back(reich ? backward : forward);
        beta_swapped.push_back(reich ? forward : backward);
    }
    rep.alpha_limit = alpha_tail.back();
    rep.beta_limit = beta_printed.back();
    rep.beta_limit_swapped = beta_swapped.back();
    const bool tail_stable =
        spread(alpha_tail, 0) < cfg.stab_tol && spread(beta_printed, 0) < cfg.stab_tol;

    const PartialSums ps =
        partial_sums(s, orbit, spec.rate, cfg.m_horizon, cfg.stab_window, cfg.stab_tol);
    rep.s_series = ps.sums;
    rep.series_cauchy = ps.cauchy;
    rep.stabilized = q_stable && tail_stable;

    const bool holds = rep.q_estimate < rep.q_threshold && rep.beta_limit < rep.beta_threshold &&
                       std::isfinite(rep.alpha_limit) && std::isfinite(rep.beta_limit);
    if (rep.stabilized && rep.series_cauchy && holds) {
        rep.verdict = Verdict::Pass;
    } else if (rep.stabilized && !holds) {
        rep.verdict = Verdict::Fail;
    } else {
        rep.verdict = Verdict::Inconclusive;
    }
    return rep;
}

double reciprocal_or_inf(double num, double den) { return den == 0.0 ? kInf : num / den; }

}  // namespace

std::string_view to_string(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::Converged: return "converged";
        case OrbitStatus::MaxIter: return "max_iter";
        case OrbitStatus::Diverged: return "diverged";
    }
    return "?";
}

Orbit picard_orbit(const SpaceDef& s, const SelfMap& T, const Point& x0, std::size_t max_iter,
                   double tol) {
    if (max_iter < 1) throw DomainError("max_iter must be >= 1");
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
    if (T.domain() != s.domain()) {
        throw DomainError("map '" + T.id() + "' does not act on space '" + s.id() + "'");
    }
    Orbit orbit{x0, {x0}, {}, {}, OrbitStatus::MaxIter};
    std::size_t below = 0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        const Point& current = orbit.points.back();
        Point next = T(current);
        VectorE step = s.p(current, next);
        const double norm = s.target().norm(step);
        const bool exact = step.is_zero();
        orbit.points.push_back(next);
        orbit.steps.push_back(std::move(step));
        orbit.step_norms.push_back(norm);
        if (exact) {
            orbit.status = OrbitStatus::Converged;
            break;
        }
        below = norm < tol ? below + 1 : 0;
        if (below >= 2) {
            orbit.status = OrbitStatus::Converged;
            break;
        }
        if (norm > 1.0 / tol) {
            orbit.status = OrbitStatus::Diverged;
            break;
        }
    }
    return orbit;
}

Orbit extend_orbit(const SpaceDef& s, const SelfMap& T, Orbit orbit, std::size_t n_points) {
    while (orbit.points.size() < n_points) {
        const Point& current = orbit.points.back();
        Point next = T(current);
        VectorE step = s.p(current, next);
        orbit.step_norms.push_back(s.target().norm(step));
        orbit.steps.push_back(std::move(step));
        orbit.points.push_back(next);
    }
    return orbit;
}

HypothesisReport check_banach_hypothesis(const SpaceDef& s, const Orbit& orbit, double k,
                                         const HypothesisConfig& cfg) {
    return audit(s, orbit, {Family::Banach, k, reciprocal_or_inf(1.0, k), kInf}, cfg);
}

HypothesisReport check_kannan_hypothesis(const SpaceDef& s, const Orbit& orbit, double a,
                                         double b, const HypothesisConfig& cfg) {
    return audit(s, orbit,
                 {Family::Kannan, a / (1.0 - b), reciprocal_or_inf(1.0 - b, a),
                  reciprocal_or_inf(1.0, b)},
                 cfg);
}

HypothesisReport check_reich_hypothesis(const SpaceDef& s, const Orbit& orbit, double a,
                                        double b, double c, const HypothesisConfig& cfg) {
    return audit(s, orbit,
                 {Family::Reich, (a + c) / (1.0 - b), reciprocal_or_inf(1.0 - b, a + c),
                  reciprocal_or_inf(1.0, b)},
                 cfg);
}

HypothesisReport check_hypothesis(const SpaceDef& s, const Orbit& orbit,
                                  const ContractionParams& params, const HypothesisConfig& cfg) {
    switch (params.family) {
        case Family::Banach: return check_banach_hypothesis(s, orbit, params.k, cfg);
        case Family::Kannan: return check_kannan_hypothesis(s, orbit, params.a, params.b, cfg);
        case Family::Reich:
            return check_reich_hypothesis(s, orbit, params.a, params.b, params.c, cfg);
    }
    throw DomainError("unknown family");
}

DecayAudit geometric_decay_audit(const SpaceDef& s, const Orbit& orbit, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("decay rate must lie in [0, 1)");
    if (orbit.steps.empty()) throw DomainError("decay audit needs at least one step");
    const Cone& cone = s.target().cone();
    DecayAudit out;
    out.rate = r;
    const VectorE& first = orbit.steps.front();
    for (std::size_t n = 0; n < orbit.steps.size(); ++n) {
        const double rn = std::pow(r, double(n));
        const VectorE gap = rn * first - orbit.steps[n];
        ++out.n_checked;
        if (cone.exclusion_depth(gap) > cone.boundary_tol() * (1.0 + rn)) {
            out.pass = false;
            out.first_failure = n;
            break;
        }
    }
    return out;
}

PartialSums partial_sums(const SpaceDef& s, const Orbit& orbit, double rate, std::size_t m,
                         std::size_t window, double tol) {
    const auto& x = orbit.points;
    if (m < 1 || m >= x.size()) {
        throw DomainError("partial sums need 1 <= m < number of orbit points");
    }
    PartialSums out;
    double product = 1.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        product *= s.beta(x[i], x[m]);
        sum += product * s.alpha(x[i], x[i + 1]) * std::pow(rate, double(i));
        out.sums.push_back(sum);
    }
    const std::size_t r_last = out.sums.size() - 1;
    const std::size_t back = std::min(window, r_last);
    out.cauchy = std::abs(out.sums[r_last] - out.sums[r_last - back]) < tol;
    return out;
}

std::vector<double> cauchy_witness(const SpaceDef& s, const Orbit& orbit, std::size_t N) {
    const auto& x = orbit.points;
    if (N >= x.size()) throw DomainError("cauchy_witness: N exceeds the orbit");
    std::vector<double> d(N + 1, 0.0);
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t m = n + 1; m <= N; ++m) {
            d[n] = std::max(d[n], s.target().norm(s.p(x[n], x[m])));
        }
    }
    return d;
}

SolveResult solve(const SpaceDef& s, const SelfMap& T, const Point& x0,
                  const ContractionParams& params, const SolveConfig& cfg) {
    params.validate();
    Orbit orbit = picard_orbit(s, T, x0, cfg.max_iter, cfg.tol);
    SolveResult out{orbit, orbit, std::nullopt, 0.0, 0, {}, {}};
    out.iterations = out.orbit.iterations();

    const std::size_t audit_points =
        std::max({std::max(cfg.horizons.i_horizon, cfg.horizons.m_horizon) + 2,
                  kMinAuditSteps + 1, out.orbit.points.size()});
    out.audit_orbit = extend_orbit(s, T, out.orbit, audit_points);
    out.hypothesis = check_hypothesis(s, out.audit_orbit, params, cfg.horizons);
    out.decay = geometric_decay_audit(s, out.audit_orbit, params.rate());

    if (out.orbit.status == OrbitStatus::Converged) {
        const Point& candidate = out.orbit.points.back();
        out.fixed_point = candidate;
        out.residual = s.target().norm(s.p(candidate, T(candidate)));
    }
    return out;
}

}  // namespace dccm
