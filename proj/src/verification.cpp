#include "dccm/verification.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace dccm {

namespace {

constexpr std::uint64_t kPairStream = 1;
constexpr std::uint64_t kTripleStream = 2;

bool is_pair_axiom(AxiomId a) { return a == AxiomId::DCM1 || a == AxiomId::DCM2; }

std::optional<Violation> check_pair(const SpaceDef& s, AxiomId axiom, const Point& x,
                                    const Point& y) {
    const Cone& cone = s.target().cone();
    const double tol = cone.boundary_tol();
    const VectorE pxy = s.p(x, y);
    const VectorE zero = VectorE::zeros(pxy.dim());
    Violation v;
    v.points = {x, y};
    if (axiom == AxiomId::DCM1) {
        if (x == y) {
            double mag = 0.0;
            for (double c : pxy.coords()) mag = std::max(mag, std::abs(c));
            if (mag <= tol) return std::nullopt;
            v.lhs = pxy;
            v.rhs = zero;
            v.margin = mag;
            return v;
        }
        if (!cone.contains(pxy)) {
            v.lhs = zero;
            v.rhs = pxy;
            v.margin = cone.exclusion_depth(pxy);
            return v;
        }
        if (pxy.is_zero()) {
            // Distinct points at distance zero: not an order failure.
            v.lhs = zero;
            v.rhs = zero;
            return v;
        }
        return std::nullopt;
    }
    const VectorE pyx = s.p(y, x);
    double worst = 0.0;
    for (std::size_t i = 0; i < pxy.dim(); ++i) worst = std::max(worst, std::abs(pxy[i] - pyx[i]));
    if (worst <= tol) return std::nullopt;
    v.lhs = pxy;
    v.rhs = pyx;
    v.margin = worst;
    return v;
}

std::optional<Violation> check_triple(const SpaceDef& s, AxiomId axiom, const Point& x,
                                      const Point& z, const Point& y) {
    double first = 1.0;
    double second = 1.0;
    switch (axiom) {
        case AxiomId::DCM3:
            first = s.alpha(x, z);
            second = s.beta(z, y);
            break;
        case AxiomId::CCM3:
            first = s.alpha(x, z);
            second = s.alpha(z, y);
            break;
        case AxiomId::CM3: break;
        default: throw DomainError("not a triangle-type axiom: " + std::string(to_string(axiom)));
    }
    VectorE lhs = s.p(x, y);
    VectorE rhs = first * s.p(x, z) + second * s.p(z, y);
    const Cone& cone = s.target().cone();
    const VectorE slack = rhs - lhs;
    if (cone.contains(slack)) return std::nullopt;
    Violation v;
    v.points = {x, z, y};
    v.margin = cone.exclusion_depth(slack);
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    return v;
}

Point draw(const SpaceDef& s, const RandomSamples& r, Sampler& sampler) {
    if (r.grid_support) return s.grid()[sampler.index(s.grid().size())];
    return s.sample(sampler);
}

Verdict finish(AxiomReport& report, const SampleMode& mode) {
    sort_violations(report.violations);
    if (!report.violations.empty()) return Verdict::Fail;
    if (const auto* r = std::get_if<RandomSamples>(&mode); r && r->n < kInconclusiveFloor) {
        return Verdict::Inconclusive;
    }
    return Verdict::Pass;
}

AxiomReport run_pairs(const SpaceDef& s, AxiomId axiom, const SampleMode& mode) {
    AxiomReport report;
    report.axiom = axiom;
    auto visit = [&](const Point& x, const Point& y) {
        ++report.n_checked;
        if (auto v = check_pair(s, axiom, x, y)) report.violations.push_back(std::move(*v));
    };
    if (std::holds_alternative<ExhaustiveGrid>(mode)) {
        for (const Point& x : s.grid()) {
            for (const Point& y : s.grid()) visit(x, y);
        }
    } else {
        const auto& r = std::get<RandomSamples>(mode);
        Sampler sampler(derive_seed(r.seed, kPairStream));
        for (std::size_t i = 0; i < r.n; ++i) {
            const Point x = draw(s, r, sampler);
            const Point y = draw(s, r, sampler);
            visit(x, y);
        }
    }
    report.verdict = finish(report, mode);
    return report;
}

AxiomReport run_triples(const SpaceDef& s, AxiomId axiom, const SampleMode& mode) {
    AxiomReport report;
    report.axiom = axiom;
    auto visit = [&](const Point& x, const Point& z, const Point& y) {
        ++report.n_checked;
        if (auto v = check_triple(s, axiom, x, z, y)) report.violations.push_back(std::move(*v));
    };
    if (std::holds_alternative<ExhaustiveGrid>(mode)) {
        const auto& g = s.grid();
        for (const Point& x : g) {
            for (const Point& z : g) {
                for (const Point& y : g) visit(x, z, y);
            }
        }
    } else {
        const auto& r = std::get<RandomSamples>(mode);
        Sampler sampler(derive_seed(r.seed, kTripleStream));
        for (std::size_t i = 0; i < r.n; ++i) {
            const Point x = draw(s, r, sampler);
            const Point z = draw(s, r, sampler);
            const Point y = draw(s, r, sampler);
            visit(x, z, y);
        }
    }
    report.verdict = finish(report, mode);
    return report;
}

// Distance used to rank grid candidates: along the arms for the cross.
double point_distance(const Point& a, const Point& b) {
    if (a.kind() == PointKind::Cross && a.axis() != b.axis()) return a.t() + b.t();
    return std::abs(a.t() - b.t());
}

}  // namespace

std::vector<AxiomReport> verify_dcm(const SpaceDef& s, const SampleMode& mode) {
    return {run_pairs(s, AxiomId::DCM1, mode), run_pairs(s, AxiomId::DCM2, mode),
            run_triples(s, AxiomId::DCM3, mode)};
}

AxiomReport verify_controlled(const SpaceDef& s, const SampleMode& mode) {
    return run_triples(s, AxiomId::CCM3, mode);
}

AxiomReport verify_cm(const SpaceDef& s, const SampleMode& mode) {
    return run_triples(s, AxiomId::CM3, mode);
}

std::optional<Violation> replay_violation(const SpaceDef& s, AxiomId axiom,
                                          const std::vector<Point>& points) {
    if (is_pair_axiom(axiom)) {
        if (points.size() != 2) throw DomainError("pair axiom witness needs 2 points");
        return check_pair(s, axiom, points[0], points[1]);
    }
    if (points.size() != 3) throw DomainError("triangle axiom witness needs 3 points");
    return check_triple(s, axiom, points[0], points[1], points[2]);
}

AxiomReport shrink_witness(const AxiomReport& report, const SpaceDef& s) {
    if (report.violations.empty()) return report;
    const auto& grid = s.grid();
    auto on_grid = [&](const Point& p) { return std::find(grid.begin(), grid.end(), p) != grid.end(); };

    AxiomReport out = report;
    out.violations.clear();
    for (const Violation& original : report.violations) {
        if (original.points.empty()) {
            out.violations.push_back(original);
            continue;
        }
        Violation current = original;
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t slot = 0; slot < current.points.size(); ++slot) {
                const Point here = current.points[slot];
                if (on_grid(here)) continue;
                std::vector<Point> candidates = grid;
                std::stable_sort(candidates.begin(), candidates.end(),
                                 [&](const Point& a, const Point& b) {
                                     return point_distance(a, here) < point_distance(b, here);
                                 });
                for (const Point& c : candidates) {
                    std::vector<Point> trial = current.points;
                    trial[slot] = c;
                    if (auto v = replay_violation(s, report.axiom, trial)) {
                        current = std::move(*v);
                        moved = true;
                        break;
                    }
                }
            }
        }
        const bool duplicate =
            std::any_of(out.violations.begin(), out.violations.end(),
                        [&](const Violation& v) { return v.points == current.points; });
        if (!duplicate) out.violations.push_back(std::move(current));
    }
    sort_violations(out.violations);
    out.verdict = Verdict::Fail;
    return out;
}

}  // namespace dccm
