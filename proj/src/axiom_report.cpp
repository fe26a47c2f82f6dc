#include "dccm/axiom_report.hpp"

#include <algorithm>
#include <limits>

namespace dccm {

std::string_view to_string(AxiomId id) {
    switch (id) {
        case AxiomId::DCM1: return "DCM1";
        case AxiomId::DCM2: return "DCM2";
        case AxiomId::DCM3: return "DCM3";
        case AxiomId::CCM3: return "CCM3";
        case AxiomId::CM3: return "CM3";
        case AxiomId::C1: return "C1";
        case AxiomId::C2: return "C2";
        case AxiomId::C3: return "C3";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

double order_margin(const VectorE& lhs, const VectorE& rhs) {
    require_same_dim(lhs, rhs);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lhs.dim(); ++i) worst = std::max(worst, lhs[i] - rhs[i]);
    return worst;
}

void sort_violations(std::vector<Violation>& violations) {
    std::stable_sort(violations.begin(), violations.end(),
                     [](const Violation& a, const Violation& b) {
                         if (a.margin != b.margin) return a.margin > b.margin;
                         if (a.points != b.points) return a.points < b.points;
                         return std::lexicographical_compare(
                             a.vectors.begin(), a.vectors.end(), b.vectors.begin(),
                             b.vectors.end(), [](const VectorE& u, const VectorE& v) {
                                 return u.coords() < v.coords();
                             });
                     });
}

}  // namespace dccm
