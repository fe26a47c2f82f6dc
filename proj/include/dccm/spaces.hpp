#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dccm/ordered_space.hpp"
#include "dccm/point.hpp"
#include "dccm/sampler.hpp"
#include "dccm/vector_e.hpp"

namespace dccm {

using MetricFn = std::function<VectorE(const Point&, const Point&)>;
using ControlFn = std::function<double(const Point&, const Point&)>;
using PointSampler = std::function<Point(Sampler&)>;

// A set X with an E-valued metric p and control functions alpha, beta.
// Evaluation is pure; a SpaceDef may be shared across threads.
class SpaceDef {
public:
    SpaceDef(std::string id, PointKind domain, OrderedSpace target, MetricFn p,
             ControlFn alpha, ControlFn beta, std::vector<Point> grid, PointSampler sampler,
             Point default_start);

    const std::string& id() const { return id_; }
    PointKind domain() const { return domain_; }
    const OrderedSpace& target() const { return target_; }
    // Canonical finite grid used by exhaustive audits.
    const std::vector<Point>& grid() const { return grid_; }
    const Point& default_start() const { return default_start_; }

    VectorE p(const Point& x, const Point& y) const;
    double alpha(const Point& x, const Point& y) const;
    double beta(const Point& x, const Point& y) const;

    Point sample(Sampler& sampler) const { return sampler_(sampler); }
    Point parse_point(std::string_view literal) const { return Point::parse(domain_, literal); }

    // Copy with both controls replaced by alpha (controlled-space view) or
    // by the constant 1 (plain cone-metric view).
    SpaceDef with_beta_as_alpha() const;
    SpaceDef with_unit_controls() const;

private:
    void require_domain(const Point& x) const;

    std::string id_;
    PointKind domain_;
    OrderedSpace target_;
    MetricFn p_;
    ControlFn alpha_;
    ControlFn beta_;
    std::vector<Point> grid_;
    PointSampler sampler_;
    Point default_start_;
};

inline VectorE metric_eval(const SpaceDef& s, const Point& x, const Point& y) {
    return s.p(x, y);
}
inline double alpha_eval(const SpaceDef& s, const Point& x, const Point& y) {
    return s.alpha(x, y);
}
inline double beta_eval(const SpaceDef& s, const Point& x, const Point& y) {
    return s.beta(x, y);
}

// X = R+ with the piecewise metric into (R^2, orthant):
//   p(x,y) = (0,0)        x = y
//            (1/x, 1/3)   x >= 1, y in [0,1)
//            (1/3, 1/y)   x in [0,1), y >= 1
//            (1,1)        otherwise
// alpha(x,y) = x if x,y >= 1 else 1;  beta(x,y) = 1 if x,y < 1 else max(x,y).
// Taken verbatim, asymmetric pieces included; the checker reports what fails.
SpaceDef make_halfline_space();

enum class CrossControls { Reciprocal, Unit };

// X = {(x,0)} ∪ {(0,x)}, x in [0,1], with
//   p((x,0),(y,0)) = (4/3|x-y|, |x-y|)
//   p((0,x),(0,y)) = (|x-y|, 2/3|x-y|)
//   p((x,0),(0,y)) = (4/3 x + y, x + 2/3 y)
// Reciprocal controls: alpha = max(1/s, 1/t), beta = 1/s + 1/t for nonzero
// coordinates s, t; both are 1 when either point is the origin.
SpaceDef make_cross_space(CrossControls controls);

// X = [0,1], p(x,y) = (|x-y|, |x-y|), alpha = beta = 1. A test bed for
// Kannan-type maps.
SpaceDef make_interval_space();

// Stable identifiers: halfline, cross, cross-unit, interval.
SpaceDef make_space(std::string_view id);
std::vector<std::string> space_ids();

enum class MapKind { Halving, Quartering, Identity, Constant };

class SelfMap {
public:
    const std::string& id() const { return id_; }
    MapKind kind() const { return kind_; }
    PointKind domain() const { return domain_; }

    Point apply(const Point& x) const;
    Point operator()(const Point& x) const { return apply(x); }

private:
    friend SelfMap make_map(std::string_view name, PointKind domain);
    SelfMap(std::string id, MapKind kind, PointKind domain, std::optional<Point> value)
        : id_(std::move(id)), kind_(kind), domain_(domain), value_(value) {}

    std::string id_;
    MapKind kind_;
    PointKind domain_;
    std::optional<Point> value_;
};

// halving (cross only): (x,0) -> (x/2,0), (0,y) -> (0,y/2)
// quartering (interval only): t -> t/4
// identity, const:<literal> on any domain.
SelfMap make_map(std::string_view name, PointKind domain);

}  // namespace dccm
