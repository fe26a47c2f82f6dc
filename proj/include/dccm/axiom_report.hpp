#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dccm/point.hpp"
#include "dccm/vector_e.hpp"

namespace dccm {

enum class AxiomId { DCM1, DCM2, DCM3, CCM3, CM3, C1, C2, C3 };

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(AxiomId id);
std::string_view to_string(Verdict v);

// One concrete counterexample. Metric axioms fill `points` with the
// witness (x, y) or (x, z, y); cone axioms fill `vectors` with the sampled
// cone members and `scalars` with the combination coefficients.
struct Violation {
    std::vector<Point> points;
    std::vector<VectorE> vectors;
    std::vector<double> scalars;
    VectorE lhs;
    VectorE rhs;
    // max over coordinates of (lhs - rhs); positive for order failures.
    double margin = 0.0;
};

struct AxiomReport {
    AxiomId axiom = AxiomId::DCM1;
    std::size_t n_checked = 0;
    std::vector<Violation> violations;
    Verdict verdict = Verdict::Pass;
};

// Largest coordinate of lhs - rhs.
double order_margin(const VectorE& lhs, const VectorE& rhs);

// Sorts violations by decreasing margin, ties broken by the witness points
// (then vectors) in lexicographic order. Makes reports independent of the
// order in which samples were visited.
void sort_violations(std::vector<Violation>& violations);

}  // namespace dccm
