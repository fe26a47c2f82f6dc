#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dccm/axiom_report.hpp"
#include "dccm/sampler.hpp"
#include "dccm/vector_e.hpp"

namespace dccm {

inline constexpr double kDefaultBoundaryTol = 1e-12;

// Membership oracle for a cone P in E. Two kinds are supported:
//
//   Orthant        coordinates flagged as constrained must be >= -tol.
//                  With every coordinate constrained this is the positive
//                  orthant; leaving some unconstrained gives a half-space,
//                  which is not a cone (P and -P share a line) and serves as
//                  a negative control for the axiom checker.
//   C1NonNegative  E is C^1[0,1] sampled on a uniform grid of n points. A
//                  vector stores n function values followed by n derivative
//                  values; membership only constrains the function values.
class Cone {
public:
    enum class Kind { Orthant, C1NonNegative };

    static Cone orthant(std::size_t dim, double boundary_tol = kDefaultBoundaryTol);
    static Cone half_space(std::size_t dim, std::size_t constrained_coord,
                           double boundary_tol = kDefaultBoundaryTol);
    static Cone c1_nonnegative(std::size_t n_points, double boundary_tol = kDefaultBoundaryTol);

    Kind kind() const { return kind_; }
    std::size_t ambient_dim() const;
    // Grid size for C1NonNegative; 0 for orthants.
    std::size_t n_grid_points() const { return n_points_; }
    double boundary_tol() const { return tol_; }

    bool contains(const VectorE& v) const;
    bool interior_contains(const VectorE& v) const;
    // Largest amount by which a constrained coordinate is negative; v is a
    // member iff this is <= boundary_tol.
    double exclusion_depth(const VectorE& v) const;

    // Deterministic nonzero members (basis directions for orthants, a
    // constant function for C1), tried before random samples.
    std::vector<VectorE> canonical_members() const;
    VectorE sample_member(Sampler& sampler) const;

private:
    Cone(Kind kind, std::vector<bool> constrained, std::size_t n_points, double tol);
    void require_dim(const VectorE& v) const;

    Kind kind_;
    std::vector<bool> constrained_;
    std::size_t n_points_ = 0;
    double tol_;
};

enum class Norm { Max, Euclidean, C1Sum };

// A cone together with the norm of E.
class OrderedSpace {
public:
    OrderedSpace(Cone cone, Norm norm);

    const Cone& cone() const { return cone_; }
    Norm norm_kind() const { return norm_; }
    double tol() const { return cone_.boundary_tol(); }

    double norm(const VectorE& v) const;

    bool leq(const VectorE& x, const VectorE& y) const;  // x ⪯ y
    bool ll(const VectorE& x, const VectorE& y) const;   // x ≪ y

private:
    Cone cone_;
    Norm norm_;
};

inline bool cone_contains(const Cone& c, const VectorE& v) { return c.contains(v); }
inline bool order_leq(const OrderedSpace& s, const VectorE& x, const VectorE& y) {
    return s.leq(x, y);
}
inline bool order_ll(const OrderedSpace& s, const VectorE& x, const VectorE& y) {
    return s.ll(x, y);
}

// Falsification of (C1) nonempty and nontrivial, (C2) closure under
// nonnegative combinations, (C3) P ∩ (-P) = {0}. One report per axiom.
std::vector<AxiomReport> verify_cone_axioms(const Cone& cone, Sampler& sampler, std::size_t n);

using VectorPair = std::pair<VectorE, VectorE>;

// Upper estimate of inf{‖x+y‖ : x, y ∈ P, ‖x‖ = ‖y‖ = 1}: the minimum over a
// deterministic direction grid, n seeded random pairs, and any caller
// supplied pairs (normalized before use). Zero-norm candidates are skipped.
double normality_infimum(const OrderedSpace& space, Sampler& sampler, std::size_t n,
                         std::span<const VectorPair> extra_pairs = {});

// Lower estimate of the normal constant M: max of ‖x‖/‖y‖ over sampled
// pairs with 0 ⪯ x ⪯ y, y ≠ 0, plus caller supplied pairs that satisfy
// the same order relation.
double normal_constant_estimate(const OrderedSpace& space, Sampler& sampler, std::size_t n,
                                std::span<const VectorPair> extra_pairs = {});

// Samples of a C^1 function on the uniform grid t_i = i / (n_points - 1),
// with derivative samples computed analytically.
struct C1Grid {
    std::size_t n_points = 0;
    std::vector<double> values;
    std::vector<double> deriv_values;

    VectorE to_vector() const;
    static double spacing(std::size_t n_points) { return 1.0 / double(n_points - 1); }
};

// x_n(t) = (1 - sin nt)/(n+2), y_n(t) = (1 + sin nt)/(n+2) on the grid;
// both have C1Sum norm 1 while x_n + y_n = 2/(n+2).
std::pair<C1Grid, C1Grid> make_nonnormal_family(int n, std::size_t n_points);

}  // namespace dccm
