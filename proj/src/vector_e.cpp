#include "dccm/vector_e.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dccm {

namespace {

void require_finite(const std::vector<double>& coords) {
    for (double c : coords) {
        if (!std::isfinite(c)) {
            throw DomainError("VectorE coordinates must be finite");
        }
    }
}

}  // namespace

VectorE::VectorE(std::vector<double> coords) : coords_(std::move(coords)) {
    require_finite(coords_);
}

VectorE::VectorE(std::initializer_list<double> coords) : coords_(coords) {
    require_finite(coords_);
}

VectorE VectorE::zeros(std::size_t dim) {
    return VectorE(std::vector<double>(dim, 0.0));
}

bool VectorE::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

VectorE& VectorE::operator+=(const VectorE& other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

VectorE& VectorE::operator-=(const VectorE& other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

VectorE& VectorE::operator*=(double s) {
    for (double& c : coords_) c *= s;
    return *this;
}

VectorE operator+(VectorE lhs, const VectorE& rhs) { return lhs += rhs; }
VectorE operator-(VectorE lhs, const VectorE& rhs) { return lhs -= rhs; }
VectorE operator-(VectorE v) { return v *= -1.0; }
VectorE operator*(double s, VectorE v) { return v *= s; }

void require_same_dim(const VectorE& x, const VectorE& y) {
    if (x.dim() != y.dim()) {
        throw DomainError("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                          std::to_string(y.dim()));
    }
}

std::string to_string(const VectorE& v) {
    std::string out = "(";
    char buf[32];
    for (std::size_t i = 0; i < v.dim(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", v[i]);
        if (i) out += ", ";
        out += buf;
    }
    return out + ")";
}

}  // namespace dccm
