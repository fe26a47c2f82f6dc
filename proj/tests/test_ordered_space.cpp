#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "dccm/ordered_space.hpp"

using namespace dccm;

namespace {

VectorE v2(double a, double b) { return VectorE({a, b}); }

// Brute-force inf of ‖x+y‖ over unit vectors of the 2-D orthant, angles on a fine grid.
double orthant_infimum_oracle(Norm norm) {
    const int steps = 720;
    double best = 1e300;
    auto unit = [&](double th) {
        double c = std::cos(th), s = std::sin(th);
        double n = norm == Norm::Max ? std::max(c, s) : std::hypot(c, s);
        return std::pair{c / n, s / n};
    };
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= steps; ++j) {
            auto [a, b] = unit(std::numbers::pi / 2 * i / steps);
            auto [c, d] = unit(std::numbers::pi / 2 * j / steps);
            double sx = a + c, sy = b + d;
            best = std::min(best, norm == Norm::Max ? std::max(sx, sy) : std::hypot(sx, sy));
        }
    }
    return best;
}

}  // namespace

TEST(Cone, OrthantMembership) {
    const Cone p = Cone::orthant(2);
    EXPECT_TRUE(p.contains(v2(0, 0)));
    EXPECT_TRUE(p.contains(v2(1, 0.5)));
    EXPECT_TRUE(p.contains(v2(-1e-13, 1)));
    EXPECT_FALSE(p.contains(v2(-1e-9, 1)));
    EXPECT_FALSE(p.interior_contains(v2(0, 1)));
    EXPECT_TRUE(p.interior_contains(v2(0.1, 1)));
}

TEST(Cone, DimensionMismatchThrows) {
    const Cone p = Cone::orthant(2);
    EXPECT_THROW(p.contains(VectorE({1.0, 2.0, 3.0})), DomainError);
    EXPECT_THROW(Cone::half_space(2, 2), DomainError);
}

TEST(Cone, NonFiniteVectorRejected) {
    EXPECT_THROW(VectorE({1.0, std::nan("")}), DomainError);
    EXPECT_THROW(VectorE({INFINITY}), DomainError);
}

TEST(Cone, AxiomsHoldForOrthantAndC1) {
    Sampler sampler(derive_seed(0, 7));
    for (const Cone& c : {Cone::orthant(2), Cone::orthant(5), Cone::c1_nonnegative(64)}) {
        const auto reports = verify_cone_axioms(c, sampler, 2000);
        ASSERT_EQ(reports.size(), 3u);
        for (const auto& r : reports) EXPECT_EQ(r.verdict, Verdict::Pass) << to_string(r.axiom);
    }
}

TEST(Cone, HalfSpaceFailsPointedness) {
    Sampler sampler(derive_seed(0, 7));
    const auto reports = verify_cone_axioms(Cone::half_space(2, 0), sampler, 2000);
    EXPECT_EQ(reports[0].verdict, Verdict::Pass);
    EXPECT_EQ(reports[1].verdict, Verdict::Pass);
    ASSERT_EQ(reports[2].axiom, AxiomId::C3);
    EXPECT_EQ(reports[2].verdict, Verdict::Fail);
    ASSERT_FALSE(reports[2].violations.empty());
    const auto& w = reports[2].violations.front().vectors.front();
    EXPECT_EQ(w, v2(0, 1));
}

TEST(Order, LeqAndLl) {
    const OrderedSpace e(Cone::orthant(2), Norm::Max);
    EXPECT_TRUE(e.leq(v2(1, 1), v2(1, 2)));
    EXPECT_FALSE(e.ll(v2(1, 1), v2(1, 2)));
    EXPECT_TRUE(e.ll(v2(1, 1), v2(2, 2)));
    EXPECT_FALSE(e.leq(v2(1, 3), v2(2, 2)));
    EXPECT_TRUE(order_leq(e, v2(0, 0), v2(0, 0)));
}

TEST(Order, PartialOrderProperties) {
    const OrderedSpace e(Cone::orthant(3), Norm::Euclidean);
    Sampler s(derive_seed(11, 7));
    auto draw = [&] { return VectorE({s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)}); };
    for (int i = 0; i < 2000; ++i) {
        const VectorE x = draw(), y = draw(), z = draw();
        EXPECT_TRUE(e.leq(x, x));
        if (e.leq(x, y) && e.leq(y, z)) EXPECT_TRUE(e.leq(x, z));
        if (e.leq(x, y)) {
            EXPECT_TRUE(e.leq(x + z, y + z));
            EXPECT_TRUE(e.leq(0.5 * x, 0.5 * y));
        }
        if (e.ll(x, y)) EXPECT_TRUE(e.leq(x, y));
    }
}

TEST(Order, C1SumNeedsC1Cone) {
    EXPECT_THROW(OrderedSpace(Cone::orthant(2), Norm::C1Sum), DomainError);
}

TEST(Normality, OrthantMaxNormMatchesOracle) {
    const double oracle = orthant_infimum_oracle(Norm::Max);
    EXPECT_NEAR(oracle, 1.0, 1e-12);
    Sampler s(derive_seed(0, 7));
    EXPECT_NEAR(normality_infimum(OrderedSpace(Cone::orthant(2), Norm::Max), s, 10000), oracle,
                1e-6);
}

TEST(Normality, OrthantEuclideanMatchesOracle) {
    const double oracle = orthant_infimum_oracle(Norm::Euclidean);
    EXPECT_NEAR(oracle, std::sqrt(2.0), 1e-9);
    Sampler s(derive_seed(0, 7));
    EXPECT_NEAR(normality_infimum(OrderedSpace(Cone::orthant(2), Norm::Euclidean), s, 10000),
                oracle, 1e-3);
}

TEST(Normality, ConstantEstimateIsOne) {
    for (Norm n : {Norm::Max, Norm::Euclidean}) {
        Sampler s(derive_seed(0, 7));
        EXPECT_NEAR(normal_constant_estimate(OrderedSpace(Cone::orthant(2), n), s, 10000), 1.0,
                    1e-9);
    }
}

TEST(Normality, ZeroSamplesThrows) {
    Sampler s(1);
    EXPECT_THROW(normality_infimum(OrderedSpace(Cone::orthant(2), Norm::Max), s, 0), DomainError);
}

TEST(NonNormal, FamilyNorms) {
    const std::size_t grid = 20001;
    const OrderedSpace e(Cone::c1_nonnegative(grid), Norm::C1Sum);
    for (int n : {10, 100}) {
        const auto [x, y] = make_nonnormal_family(n, grid);
        const VectorE vx = x.to_vector(), vy = y.to_vector();
        EXPECT_NEAR(e.norm(vx), 1.0, 1e-3) << n;
        EXPECT_NEAR(e.norm(vy), 1.0, 1e-3) << n;
        EXPECT_NEAR(e.norm(vx + vy), 2.0 / (n + 2), 1e-9) << n;
        EXPECT_TRUE(e.cone().contains(vx));
        EXPECT_TRUE(e.cone().contains(vy));
    }
}

TEST(NonNormal, DerivativesMatchFiniteDifferences) {
    const std::size_t grid = 4001;
    const auto [x, y] = make_nonnormal_family(7, grid);
    const double h = C1Grid::spacing(grid);
    for (std::size_t i = 1; i + 1 < grid; i += 97) {
        const double fd = (x.values[i + 1] - x.values[i - 1]) / (2 * h);
        EXPECT_NEAR(fd, x.deriv_values[i], 1e-4);
        EXPECT_NEAR(x.deriv_values[i], -y.deriv_values[i], 1e-15);
    }
}

TEST(NonNormal, InfimumDecreasesWithExtraPairs) {
    const std::size_t grid = 2001;
    const OrderedSpace e(Cone::c1_nonnegative(grid), Norm::C1Sum);
    double prev = 1e300;
    for (int n : {10, 100, 1000}) {
        const auto [x, y] = make_nonnormal_family(n, grid);
        std::vector<VectorPair> extra{{x.to_vector(), y.to_vector()}};
        Sampler s(derive_seed(0, 7));
        const double inf = normality_infimum(e, s, 200, extra);
        EXPECT_LT(inf, prev);
        prev = inf;
    }
}
