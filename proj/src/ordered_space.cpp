#include "dccm/ordered_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dccm {

namespace {

constexpr std::size_t kAnglesPerPlane = 64;

}  // namespace

Cone::Cone(Kind kind, std::vector<bool> constrained, std::size_t n_points, double tol)
    : kind_(kind), constrained_(std::move(constrained)), n_points_(n_points), tol_(tol) {
    if (!(tol_ >= 0.0) || !std::isfinite(tol_)) {
        throw DomainError("cone boundary tolerance must be finite and nonnegative");
    }
}

Cone Cone::orthant(std::size_t dim, double boundary_tol) {
    if (dim == 0) throw DomainError("orthant dimension must be positive");
    return Cone(Kind::Orthant, std::vector<bool>(dim, true), 0, boundary_tol);
}

Cone Cone::half_space(std::size_t dim, std::size_t constrained_coord, double boundary_tol) {
    if (constrained_coord >= dim) throw DomainError("constrained coordinate out of range");
    std::vector<bool> mask(dim, false);
    mask[constrained_coord] = true;
    return Cone(Kind::Orthant, std::move(mask), 0, boundary_tol);
}

Cone Cone::c1_nonnegative(std::size_t n_points, double boundary_tol) {
    if (n_points < 2) throw DomainError("C1 grid needs at least 2 points");
    return Cone(Kind::C1NonNegative, {}, n_points, boundary_tol);
}

std::size_t Cone::ambient_dim() const {
    return kind_ == Kind::Orthant ? constrained_.size() : 2 * n_points_;
}

void Cone::require_dim(const VectorE& v) const {
    if (v.dim() != ambient_dim()) {
        throw DomainError("vector of dimension " + std::to_string(v.dim()) +
                          " does not belong to a space of dimension " +
                          std::to_string(ambient_dim()));
    }
}

bool Cone::contains(const VectorE& v) const {
    require_dim(v);
    if (kind_ == Kind::Orthant) {
        for (std::size_t i = 0; i < v.dim(); ++i) {
            if (constrained_[i] && v[i] < -tol_) return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < n_points_; ++i) {
        if (v[i] < -tol_) return false;
    }
    return true;
}

bool Cone::interior_contains(const VectorE& v) const {
    require_dim(v);
    if (kind_ == Kind::Orthant) {
        for (std::size_t i = 0; i < v.dim(); ++i) {
            // An unconstrained coordinate never obstructs interiority.
            if (constrained_[i] && !(v[i] > tol_)) return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < n_points_; ++i) {
        if (!(v[i] > tol_)) return false;
    }
    return true;
}

std::vector<VectorE> Cone::canonical_members() const {
    std::vector<VectorE> out;
    if (kind_ == Kind::Orthant) {
        for (std::size_t i = 0; i < constrained_.size(); ++i) {
            std::vector<double> e(constrained_.size(), 0.0);
            e[i] = 1.0;
            out.emplace_back(std::move(e));
        }
        return out;
    }
    std::vector<double> one(2 * n_points_, 0.0);
    std::fill_n(one.begin(), n_points_, 1.0);
    out.emplace_back(std::move(one));
    return out;
}

double Cone::exclusion_depth(const VectorE& v) const {
    require_dim(v);
    double depth = -std::numeric_limits<double>::infinity();
    if (kind_ == Kind::Orthant) {
        for (std::size_t i = 0; i < v.dim(); ++i) {
            if (constrained_[i]) depth = std::max(depth, -v[i]);
        }
    } else {
        for (std::size_t i = 0; i < n_points_; ++i) depth = std::max(depth, -v[i]);
    }
    return depth;
}

VectorE Cone::sample_member(Sampler& sampler) const {
    if (kind_ == Kind::Orthant) {
        std::vector<double> v(constrained_.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = constrained_[i] ? sampler.uniform() : sampler.uniform(-1.0, 1.0);
        }
        return VectorE(std::move(v));
    }
    // a + b sin(wt + phi) with a >= |b| is nonnegative; w stays below pi so
    // that the sup of |f| is never dwarfed by the sup of |f'|.
    const double b = sampler.uniform(-1.0, 1.0);
    const double a = std::abs(b) + sampler.uniform();
    const double w = sampler.uniform(0.0, std::numbers::pi);
    const double phi = sampler.uniform(0.0, 2.0 * std::numbers::pi);
    const double h = C1Grid::spacing(n_points_);
    std::vector<double> v(2 * n_points_);
    for (std::size_t i = 0; i < n_points_; ++i) {
        const double t = double(i) * h;
        v[i] = a + b * std::sin(w * t + phi);
        v[n_points_ + i] = b * w * std::cos(w * t + phi);
    }
    return VectorE(std::move(v));
}

OrderedSpace::OrderedSpace(Cone cone, Norm norm) : cone_(std::move(cone)), norm_(norm) {
    if (norm_ == Norm::C1Sum && cone_.kind() != Cone::Kind::C1NonNegative) {
        throw DomainError("C1Sum norm requires the C1NonNegative sample layout");
    }
}

double OrderedSpace::norm(const VectorE& v) const {
    if (v.dim() != cone_.ambient_dim()) {
        throw DomainError("norm: dimension mismatch");
    }
    const auto& c = v.coords();
    switch (norm_) {
        case Norm::Max: {
            double m = 0.0;
            for (double x : c) m = std::max(m, std::abs(x));
            return m;
        }
        case Norm::Euclidean: {
            double s = 0.0;
            for (double x : c) s += x * x;
            return std::sqrt(s);
        }
        case Norm::C1Sum: {
            const std::size_t n = cone_.n_grid_points();
            double f = 0.0, df = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                f = std::max(f, std::abs(c[i]));
                df = std::max(df, std::abs(c[n + i]));
            }
            return f + df;
        }
    }
    return 0.0;
}

bool OrderedSpace::leq(const VectorE& x, const VectorE& y) const {
    require_same_dim(x, y);
    return cone_.contains(y - x);
}

bool OrderedSpace::ll(const VectorE& x, const VectorE& y) const {
    require_same_dim(x, y);
    return cone_.interior_contains(y - x);
}

std::vector<AxiomReport> verify_cone_axioms(const Cone& cone, Sampler& sampler, std::size_t n) {
    if (n == 0) throw DomainError("verify_cone_axioms: n must be at least 1");

    std::vector<VectorE> members = cone.canonical_members();
    for (std::size_t i = 0; i < n; ++i) members.push_back(cone.sample_member(sampler));

    const VectorE zero = VectorE::zeros(cone.ambient_dim());

    AxiomReport c1;
    c1.axiom = AxiomId::C1;
    c1.n_checked = members.size();
    const bool has_nonzero = std::any_of(members.begin(), members.end(), [&](const VectorE& v) {
        return cone.contains(v) && !v.is_zero();
    });
    if (!cone.contains(zero) || !has_nonzero) {
        Violation v;
        v.vectors = {zero};
        v.lhs = zero;
        v.rhs = zero;
        c1.violations.push_back(std::move(v));
    }

    AxiomReport c2;
    c2.axiom = AxiomId::C2;
    for (std::size_t i = 0; i < n; ++i) {
        const VectorE& x = members[sampler.index(members.size())];
        const VectorE& y = members[sampler.index(members.size())];
        const double a = sampler.uniform(0.0, 2.0);
        const double b = sampler.uniform(0.0, 2.0);
        const VectorE combo = a * x + b * y;
        ++c2.n_checked;
        if (!cone.contains(combo)) {
            Violation v;
            v.vectors = {x, y};
            v.scalars = {a, b};
            v.lhs = zero;
            v.rhs = combo;
            v.margin = cone.exclusion_depth(combo);
            c2.violations.push_back(std::move(v));
        }
    }

    AxiomReport c3;
    c3.axiom = AxiomId::C3;
    for (const VectorE& m : members) {
        if (m.is_zero() || !cone.contains(m)) continue;
        ++c3.n_checked;
        const VectorE neg = -m;
        if (cone.contains(neg)) {
            Violation v;
            v.vectors = {m};
            v.lhs = m;
            v.rhs = neg;
            double mag = 0.0;
            for (double x : m.coords()) mag = std::max(mag, std::abs(x));
            v.margin = mag;
            c3.violations.push_back(std::move(v));
        }
    }

    std::vector<AxiomReport> out{std::move(c1), std::move(c2), std::move(c3)};
    for (auto& r : out) {
        sort_violations(r.violations);
        r.verdict = r.violations.empty() ? Verdict::Pass : Verdict::Fail;
    }
    return out;
}

namespace {

std::vector<VectorE> unit_directions(const OrderedSpace& space) {
    const Cone& cone = space.cone();
    std::vector<VectorE> dirs = cone.canonical_members();
    if (cone.kind() == Cone::Kind::Orthant) {
        const std::size_t d = cone.ambient_dim();
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                for (std::size_t k = 1; k < kAnglesPerPlane; ++k) {
                    const double theta =
                        0.5 * std::numbers::pi * double(k) / double(kAnglesPerPlane);
                    std::vector<double> v(d, 0.0);
                    v[i] = std::cos(theta);
                    v[j] = std::sin(theta);
                    dirs.emplace_back(std::move(v));
                }
            }
        }
    }
    return dirs;
}

bool normalize(const OrderedSpace& space, VectorE& v) {
    const double nv = space.norm(v);
    if (!(nv > 0.0)) return false;
    v *= 1.0 / nv;
    return true;
}

}  // namespace

double normality_infimum(const OrderedSpace& space, Sampler& sampler, std::size_t n,
                         std::span<const VectorPair> extra_pairs) {
    if (n == 0) throw DomainError("normality_infimum: n must be at least 1");

    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](VectorE x, VectorE y) {
        if (!normalize(space, x) || !normalize(space, y)) return;
        best = std::min(best, space.norm(x + y));
    };

    std::vector<VectorE> dirs = unit_directions(space);
    for (auto& d : dirs) normalize(space, d);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        for (std::size_t j = i; j < dirs.size(); ++j) consider(dirs[i], dirs[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        VectorE x = space.cone().sample_member(sampler);
        VectorE y = space.cone().sample_member(sampler);
        consider(std::move(x), std::move(y));
    }
    for (const auto& [x, y] : extra_pairs) {
        if (space.cone().contains(x) && space.cone().contains(y)) consider(x, y);
    }
    if (!std::isfinite(best)) {
        throw DomainError("normality_infimum: no unit-normalizable cone members sampled");
    }
    return best;
}

double normal_constant_estimate(const OrderedSpace& space, Sampler& sampler, std::size_t n,
                                std::span<const VectorPair> extra_pairs) {
    if (n == 0) throw DomainError("normal_constant_estimate: n must be at least 1");
    const Cone& cone = space.cone();
    double best = 0.0;
    auto consider = [&](const VectorE& x, const VectorE& y) {
        const double ny = space.norm(y);
        if (!(ny > 0.0)) return;
        best = std::max(best, space.norm(x) / ny);
    };

    for (const VectorE& y : unit_directions(space)) consider(y, y);
    for (std::size_t i = 0; i < n; ++i) {
        const VectorE y = cone.sample_member(sampler);
        std::vector<double> x = y.coords();
        if (cone.kind() == Cone::Kind::Orthant) {
            for (double& c : x) c *= sampler.uniform();
        } else {
            const double lambda = sampler.uniform();
            for (double& c : x) c *= lambda;
        }
        consider(VectorE(std::move(x)), y);
    }
    for (const auto& [x, y] : extra_pairs) {
        if (cone.contains(x) && space.leq(x, y)) consider(x, y);
    }
    return best;
}

VectorE C1Grid::to_vector() const {
    std::vector<double> v;
    v.reserve(values.size() + deriv_values.size());
    v.insert(v.end(), values.begin(), values.end());
    v.insert(v.end(), deriv_values.begin(), deriv_values.end());
    return VectorE(std::move(v));
}

std::pair<C1Grid, C1Grid> make_nonnormal_family(int n, std::size_t n_points) {
    if (n < 1) throw DomainError("non-normal family index must be >= 1");
    if (n_points < 2) throw DomainError("C1 grid needs at least 2 points");
    const double scale = 1.0 / double(n + 2);
    const double h = C1Grid::spacing(n_points);
    C1Grid x{n_points, std::vector<double>(n_points), std::vector<double>(n_points)};
    C1Grid y = x;
    for (std::size_t i = 0; i < n_points; ++i) {
        const double nt = double(n) * double(i) * h;
        const double s = std::sin(nt);
        const double dc = double(n) * std::cos(nt) * scale;
        x.values[i] = (1.0 - s) * scale;
        y.values[i] = (1.0 + s) * scale;
        x.deriv_values[i] = -dc;
        y.deriv_values[i] = dc;
    }
    return {std::move(x), std::move(y)};
}

}  // namespace dccm
