#include "dccm/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace dccm {

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kFourThirds = 4.0 / 3.0;
constexpr double kTwoThirds = 2.0 / 3.0;
constexpr int kUnitGridIntervals = 20;

OrderedSpace plane_orthant() { return OrderedSpace(Cone::orthant(2), Norm::Max); }

double unit_control(const Point&, const Point&) { return 1.0; }

}  // namespace

SpaceDef::SpaceDef(std::string id, PointKind domain, OrderedSpace target, MetricFn p,
                   ControlFn alpha, ControlFn beta, std::vector<Point> grid,
                   PointSampler sampler, Point default_start)
    : id_(std::move(id)),
      domain_(domain),
      target_(std::move(target)),
      p_(std::move(p)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      grid_(std::move(grid)),
      sampler_(std::move(sampler)),
      default_start_(default_start) {
    for (const Point& g : grid_) require_domain(g);
    require_domain(default_start_);
}

void SpaceDef::require_domain(const Point& x) const {
    if (x.kind() != domain_) {
        throw DomainError("point " + x.literal() + " of kind " + std::string(to_string(x.kind())) +
                          " is outside the " + std::string(to_string(domain_)) + " domain of '" +
                          id_ + "'");
    }
}

VectorE SpaceDef::p(const Point& x, const Point& y) const {
    require_domain(x);
    require_domain(y);
    return p_(x, y);
}

double SpaceDef::alpha(const Point& x, const Point& y) const {
    require_domain(x);
    require_domain(y);
    return alpha_(x, y);
}

double SpaceDef::beta(const Point& x, const Point& y) const {
    require_domain(x);
    require_domain(y);
    return beta_(x, y);
}

SpaceDef SpaceDef::with_beta_as_alpha() const {
    SpaceDef out = *this;
    out.beta_ = alpha_;
    return out;
}

SpaceDef SpaceDef::with_unit_controls() const {
    SpaceDef out = *this;
    out.alpha_ = unit_control;
    out.beta_ = unit_control;
    return out;
}

SpaceDef make_halfline_space() {
    auto p = [](const Point& a, const Point& b) -> VectorE {
        const double x = a.t();
        const double y = b.t();
        if (x == y) return {0.0, 0.0};
        if (x >= 1.0 && y < 1.0) return {1.0 / x, kThird};
        if (x < 1.0 && y >= 1.0) return {kThird, 1.0 / y};
        return {1.0, 1.0};
    };
    auto alpha = [](const Point& a, const Point& b) {
        return (a.t() >= 1.0 && b.t() >= 1.0) ? a.t() : 1.0;
    };
    auto beta = [](const Point& a, const Point& b) {
        return (a.t() < 1.0 && b.t() < 1.0) ? 1.0 : std::max(a.t(), b.t());
    };
    std::vector<Point> grid;
    for (double t : {0.0, 0.25, 0.5, 0.75, 0.9, 1.0, 1.5, 2.0, 3.0, 5.0}) {
        grid.push_back(Point::half_line(t));
    }
    // Half the mass below 1 and half on [1, 5], matching the case split.
    auto sampler = [](Sampler& s) {
        return Point::half_line(s.coin() ? s.uniform() : s.uniform(1.0, 5.0));
    };
    return SpaceDef("halfline", PointKind::HalfLine, plane_orthant(), p, alpha, beta,
                    std::move(grid), sampler, Point::half_line(1.0));
}

SpaceDef make_cross_space(CrossControls controls) {
    auto p = [](const Point& a, const Point& b) -> VectorE {
        if (a == b) return {0.0, 0.0};
        const bool a_on_h = a.axis() == Axis::H;
        const bool b_on_h = b.axis() == Axis::H;
        if (a_on_h && b_on_h) {
            const double d = std::abs(a.t() - b.t());
            return {kFourThirds * d, d};
        }
        if (!a_on_h && !b_on_h) {
            const double d = std::abs(a.t() - b.t());
            return {d, kTwoThirds * d};
        }
        const double x = a_on_h ? a.t() : b.t();
        const double y = a_on_h ? b.t() : a.t();
        return {kFourThirds * x + y, x + kTwoThirds * y};
    };

    std::vector<Point> grid;
    for (int i = 0; i <= kUnitGridIntervals; ++i) {
        grid.push_back(Point::cross(Axis::H, double(i) / kUnitGridIntervals));
    }
    for (int i = 1; i <= kUnitGridIntervals; ++i) {
        grid.push_back(Point::cross(Axis::V, double(i) / kUnitGridIntervals));
    }
    auto sampler = [](Sampler& s) {
        const Axis axis = s.coin() ? Axis::H : Axis::V;
        return Point::cross(axis, s.uniform());
    };

    if (controls == CrossControls::Unit) {
        return SpaceDef("cross-unit", PointKind::Cross, plane_orthant(), p, unit_control,
                        unit_control, std::move(grid), sampler,
                        Point::cross(Axis::H, 1.0));
    }
    auto alpha = [](const Point& a, const Point& b) {
        if (a.t() == 0.0 || b.t() == 0.0) return 1.0;
        return std::max(1.0 / a.t(), 1.0 / b.t());
    };
    auto beta = [](const Point& a, const Point& b) {
        if (a.t() == 0.0 || b.t() == 0.0) return 1.0;
        return 1.0 / a.t() + 1.0 / b.t();
    };
    return SpaceDef("cross", PointKind::Cross, plane_orthant(), p, alpha, beta, std::move(grid),
                    sampler, Point::cross(Axis::H, 1.0));
}

SpaceDef make_interval_space() {
    auto p = [](const Point& a, const Point& b) -> VectorE {
        const double d = std::abs(a.t() - b.t());
        return {d, d};
    };
    std::vector<Point> grid;
    for (int i = 0; i <= kUnitGridIntervals; ++i) {
        grid.push_back(Point::interval(double(i) / kUnitGridIntervals));
    }
    auto sampler = [](Sampler& s) { return Point::interval(s.uniform()); };
    return SpaceDef("interval", PointKind::Interval, plane_orthant(), p, unit_control,
                    unit_control, std::move(grid), sampler, Point::interval(1.0));
}

SpaceDef make_space(std::string_view id) {
    if (id == "halfline") return make_halfline_space();
    if (id == "cross") return make_cross_space(CrossControls::Reciprocal);
    if (id == "cross-unit") return make_cross_space(CrossControls::Unit);
    if (id == "interval") return make_interval_space();
    throw DomainError("unknown space id '" + std::string(id) + "'");
}

std::vector<std::string> space_ids() { return {"halfline", "cross", "cross-unit", "interval"}; }

Point SelfMap::apply(const Point& x) const {
    if (x.kind() != domain_) {
        throw DomainError("map '" + id_ + "' applied to a point outside its domain");
    }
    switch (kind_) {
        case MapKind::Halving: return x.with_t(x.t() / 2.0);
        case MapKind::Quartering: return x.with_t(x.t() / 4.0);
        case MapKind::Identity: return x;
        case MapKind::Constant: return *value_;
    }
    return x;
}

SelfMap make_map(std::string_view name, PointKind domain) {
    if (name == "halving") {
        if (domain != PointKind::Cross) {
            throw DomainError("map 'halving' is defined on the cross domain only");
        }
        return SelfMap("halving", MapKind::Halving, domain, std::nullopt);
    }
    if (name == "quartering") {
        if (domain != PointKind::Interval) {
            throw DomainError("map 'quartering' is defined on the interval domain only");
        }
        return SelfMap("quartering", MapKind::Quartering, domain, std::nullopt);
    }
    if (name == "identity") return SelfMap("identity", MapKind::Identity, domain, std::nullopt);
    constexpr std::string_view kConst = "const:";
    if (name.starts_with(kConst)) {
        const Point value = Point::parse(domain, name.substr(kConst.size()));
        return SelfMap("const:" + value.literal(), MapKind::Constant, domain, value);
    }
    throw DomainError("unknown map id '" + std::string(name) + "'");
}

}  // namespace dccm
