#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "dccm/solver.hpp"

using namespace dccm;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point H(double t) { return Point::cross(Axis::H, t); }
Point V(double t) { return Point::cross(Axis::V, t); }
Point I(double t) { return Point::interval(t); }

struct Case {
    SpaceDef s;
    SelfMap T;
};

Case halving() {
    SpaceDef s = make_cross_space(CrossControls::Unit);
    SelfMap T = make_map("halving", s.domain());
    return {std::move(s), std::move(T)};
}

Case quartering() {
    SpaceDef s = make_interval_space();
    SelfMap T = make_map("quartering", s.domain());
    return {std::move(s), std::move(T)};
}

Orbit long_orbit(const Case& r, const Point& x0, std::size_t n = 66) {
    return extend_orbit(r.s, r.T, picard_orbit(r.s, r.T, x0, 1, 1e-9), n);
}

}  // namespace

TEST(Picard, HalvingClosedForm) {
    const Case r = halving();
    const Orbit o = picard_orbit(r.s, r.T, H(1), 10000, 1e-9);
    EXPECT_EQ(o.status, OrbitStatus::Converged);
    EXPECT_LE(o.iterations(), 35u);
    for (std::size_t n = 0; n < o.points.size(); ++n) {
        EXPECT_EQ(o.points[n], H(std::ldexp(1.0, -int(n))));
    }
    EXPECT_EQ(o.steps.size(), o.step_norms.size());
}

TEST(Picard, QuarteringClosedForm) {
    const Case r = quartering();
    const Orbit o = picard_orbit(r.s, r.T, I(1), 10000, 1e-9);
    EXPECT_EQ(o.status, OrbitStatus::Converged);
    for (std::size_t n = 0; n < o.points.size(); ++n) {
        EXPECT_EQ(o.points[n].t(), std::ldexp(1.0, -2 * int(n)));
    }
}

TEST(Picard, IdentityConvergesImmediately) {
    const SpaceDef s = make_halfline_space();
    const SelfMap id = make_map("identity", s.domain());
    const Orbit o = picard_orbit(s, id, Point::half_line(2.5), 100, 1e-9);
    EXPECT_EQ(o.status, OrbitStatus::Converged);
    EXPECT_EQ(o.iterations(), 1u);
    EXPECT_EQ(o.step_norms[0], 0.0);
}

TEST(Picard, MaxIterAndErrors) {
    const Case r = halving();
    EXPECT_EQ(picard_orbit(r.s, r.T, H(1), 5, 1e-9).status, OrbitStatus::MaxIter);
    EXPECT_THROW(picard_orbit(r.s, r.T, H(1), 0, 1e-9), DomainError);
    EXPECT_THROW(picard_orbit(r.s, r.T, H(1), 10, 0.0), DomainError);
    const SpaceDef other = make_interval_space();
    EXPECT_THROW(picard_orbit(other, r.T, I(1), 10, 1e-9), DomainError);
}

TEST(Hypothesis, BanachHalving) {
    const Case r = halving();
    const auto rep = check_banach_hypothesis(r.s, long_orbit(r, H(1)), 0.5);
    EXPECT_EQ(rep.q_estimate, 1.0);
    EXPECT_EQ(rep.q_threshold, 2.0);
    EXPECT_EQ(rep.alpha_limit, 1.0);
    EXPECT_EQ(rep.beta_limit, 1.0);
    EXPECT_EQ(rep.beta_threshold, kInf);
    EXPECT_TRUE(rep.stabilized);
    EXPECT_EQ(rep.verdict, Verdict::Pass);
    EXPECT_NEAR(rep.s_series.back(), 2.0, 1e-9);
}

TEST(Hypothesis, BanachQuartering) {
    const Case r = quartering();
    const auto rep = check_banach_hypothesis(r.s, long_orbit(r, I(1)), 0.25);
    EXPECT_EQ(rep.q_estimate, 1.0);
    EXPECT_EQ(rep.q_threshold, 4.0);
    EXPECT_EQ(rep.verdict, Verdict::Pass);
}

TEST(Hypothesis, KannanQuartering) {
    const Case r = quartering();
    const auto rep = check_kannan_hypothesis(r.s, long_orbit(r, I(1)), 1.0 / 3, 1.0 / 3);
    EXPECT_EQ(rep.q_estimate, 1.0);
    EXPECT_DOUBLE_EQ(rep.q_threshold, 2.0);
    EXPECT_DOUBLE_EQ(rep.beta_threshold, 3.0);
    EXPECT_EQ(rep.beta_limit, 1.0);
    EXPECT_EQ(rep.verdict, Verdict::Pass);
}

TEST(Hypothesis, VacuousThresholds) {
    const Case r = quartering();
    const Orbit o = long_orbit(r, I(1));
    const auto k = check_kannan_hypothesis(r.s, o, 0.0, 0.5);
    EXPECT_EQ(k.q_threshold, kInf);
    EXPECT_EQ(k.beta_threshold, 2.0);
    EXPECT_EQ(check_kannan_hypothesis(r.s, o, 0.5, 0.0).beta_threshold, kInf);
    EXPECT_EQ(check_reich_hypothesis(r.s, o, 0.0, 0.5, 0.0).q_threshold, kInf);
}

TEST(Hypothesis, Reich) {
    const Case h = halving();
    const auto a = check_reich_hypothesis(h.s, long_orbit(h, H(1)), 0, 0, 0.5);
    EXPECT_EQ(a.q_estimate, 1.0);
    EXPECT_EQ(a.q_threshold, 2.0);
    EXPECT_EQ(a.verdict, Verdict::Pass);
    const Case q = quartering();
    const auto b = check_reich_hypothesis(q.s, long_orbit(q, I(1)), 1.0 / 3, 1.0 / 3, 0);
    EXPECT_DOUBLE_EQ(b.q_threshold, 2.0);
    EXPECT_EQ(b.verdict, Verdict::Pass);
}

TEST(Hypothesis, IndependentOfFeasibility) {
    // Kannan constants the halving map does not satisfy still get a report.
    const Case r = halving();
    const auto rep = check_kannan_hypothesis(r.s, long_orbit(r, H(1)), 0.3, 0.3);
    EXPECT_EQ(rep.q_estimate, 1.0);
}

TEST(Hypothesis, UnitControlsGiveQOne) {
    const Case r = quartering();
    for (double t : {1.0, 0.7, 0.1}) {
        EXPECT_EQ(check_banach_hypothesis(r.s, long_orbit(r, I(t)), 0.25).q_estimate, 1.0);
    }
}

TEST(Hypothesis, ShortOrbitThrows) {
    const Case r = halving();
    const Orbit o = long_orbit(r, H(1), 20);
    EXPECT_THROW(check_banach_hypothesis(r.s, o, 0.5), DomainError);
    HypothesisConfig small{16, 16, 4, 1e-9};
    EXPECT_NO_THROW(check_banach_hypothesis(r.s, o, 0.5, small));
}

TEST(Decay, HalvingRateHalf) {
    const Case r = halving();
    const auto d = geometric_decay_audit(r.s, long_orbit(r, H(1), 42), 0.5);
    EXPECT_TRUE(d.pass);
    EXPECT_EQ(d.n_checked, 41u);
}

TEST(Decay, HalvingRateQuarterFailsAtOne) {
    const Case r = halving();
    const auto d = geometric_decay_audit(r.s, long_orbit(r, H(1), 42), 0.25);
    EXPECT_FALSE(d.pass);
    ASSERT_TRUE(d.first_failure.has_value());
    EXPECT_EQ(*d.first_failure, 1u);
}

TEST(Decay, KannanQuartering) {
    const Case r = quartering();
    EXPECT_TRUE(geometric_decay_audit(r.s, long_orbit(r, I(1), 42),
                                      ContractionParams::kannan(1.0 / 3, 1.0 / 3).rate())
                    .pass);
}

TEST(Decay, ConstantMap) {
    const SpaceDef s = make_interval_space();
    const SelfMap c = make_map("const:0.5", s.domain());
    const Orbit o = extend_orbit(s, c, picard_orbit(s, c, I(1), 1, 1e-9), 10);
    for (double rate : {0.0, 0.3, 0.9}) EXPECT_TRUE(geometric_decay_audit(s, o, rate).pass);
    EXPECT_THROW(geometric_decay_audit(s, o, 1.0), DomainError);
}

TEST(PartialSums, GeometricSeries) {
    const Case r = halving();
    const Orbit o = long_orbit(r, H(1));
    const auto ps = partial_sums(r.s, o, 0.5, 64);
    ASSERT_EQ(ps.sums.size(), 64u);
    for (std::size_t i = 0; i < ps.sums.size(); ++i) {
        EXPECT_NEAR(ps.sums[i], 2.0 - std::ldexp(1.0, -int(i)), 1e-15);
    }
    EXPECT_TRUE(ps.cauchy);
}

TEST(PartialSums, RateZeroAndDivergent) {
    const Case r = halving();
    const Orbit o = long_orbit(r, H(1));
    const auto zero = partial_sums(r.s, o, 0.0, 20);
    for (double v : zero.sums) EXPECT_EQ(v, 1.0);
    EXPECT_FALSE(partial_sums(r.s, o, 1.0, 20).cauchy);
    EXPECT_FALSE(partial_sums(r.s, o, 1.5, 20).cauchy);
    EXPECT_THROW(partial_sums(r.s, o, 0.5, 0), DomainError);
    EXPECT_THROW(partial_sums(r.s, o, 0.5, o.points.size()), DomainError);
}

TEST(Cauchy, HalvingWitness) {
    const Case r = halving();
    const Orbit o = long_orbit(r, H(1), 40);
    const auto d = cauchy_witness(r.s, o, 30);
    ASSERT_EQ(d.size(), 31u);
    EXPECT_LT(d[25], 1e-6);
    EXPECT_EQ(d[30], 0.0);
    for (std::size_t n = 0; n < 30; ++n) EXPECT_LE(d[n], 4.0 / 3 * std::ldexp(1.0, -int(n)) + 1e-15);
    EXPECT_THROW(cauchy_witness(r.s, o, 40), DomainError);
}

TEST(Cauchy, ConstantOrbit) {
    const SpaceDef s = make_interval_space();
    const SelfMap c = make_map("const:0.5", s.domain());
    const Orbit o = extend_orbit(s, c, picard_orbit(s, c, I(1), 1, 1e-9), 10);
    const auto d = cauchy_witness(s, o, 9);
    for (std::size_t n = 1; n < d.size(); ++n) EXPECT_EQ(d[n], 0.0);
}

TEST(Solve, HalvingUniqueFixedPoint) {
    const Case r = halving();
    const auto params = ContractionParams::banach(0.5);
    std::vector<Point> fixed;
    for (const Point& x0 : {H(1), V(1), H(0.5)}) {
        const SolveResult res = solve(r.s, r.T, x0, params);
        ASSERT_TRUE(res.fixed_point.has_value());
        EXPECT_LE(res.iterations, 35u);
        EXPECT_LT(res.residual, 1e-9);
        EXPECT_TRUE(res.decay.pass);
        EXPECT_EQ(res.hypothesis.verdict, Verdict::Pass);
        fixed.push_back(*res.fixed_point);
    }
    for (const Point& a : fixed) {
        EXPECT_LT(r.s.target().norm(r.s.p(a, H(0))), 1e-8);
        for (const Point& b : fixed) EXPECT_LE(r.s.target().norm(r.s.p(a, b)), 10 * 1e-9);
    }
}

TEST(Solve, KannanQuartering) {
    const Case r = quartering();
    const SolveResult res = solve(r.s, r.T, I(1), ContractionParams::kannan(1.0 / 3, 1.0 / 3));
    ASSERT_TRUE(res.fixed_point.has_value());
    EXPECT_LT(res.residual, 1e-9);
    EXPECT_LT(res.fixed_point->t(), 1e-9);
    EXPECT_TRUE(res.decay.pass);
}

TEST(Solve, ResidualConsistencyAndTail) {
    const Case r = halving();
    const double tol = 1e-9;
    const SolveResult res = solve(r.s, r.T, H(1), ContractionParams::banach(0.5), {10000, tol, {}});
    ASSERT_EQ(res.orbit.status, OrbitStatus::Converged);
    EXPECT_LE(res.residual, (1 + 0.5) * tol);
    // Distances to the candidate shrink along the tail.
    const Point& xhat = *res.fixed_point;
    const auto& pts = res.orbit.points;
    for (std::size_t n = pts.size() - 8; n + 1 < pts.size(); ++n) {
        EXPECT_GE(r.s.target().norm(r.s.p(pts[n], xhat)),
                  r.s.target().norm(r.s.p(pts[n + 1], xhat)));
    }
    EXPECT_LT(r.s.target().norm(r.s.p(pts[pts.size() - 2], xhat)), 10 * tol);
}

TEST(Solve, NoClaimWithoutConvergence) {
    const Case r = halving();
    const SolveResult res = solve(r.s, r.T, H(1), ContractionParams::banach(0.5), {5, 1e-9, {}});
    EXPECT_EQ(res.orbit.status, OrbitStatus::MaxIter);
    EXPECT_FALSE(res.fixed_point.has_value());
    EXPECT_THROW(solve(r.s, r.T, H(1), ContractionParams::banach(1.0)), DomainError);
}
