#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dccm {

// Raised for inputs outside an operation's domain: dimension mismatches,
// points outside a space, malformed parameters.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Element of the finite-dimensional ordered vector space E.
class VectorE {
public:
    VectorE() = default;
    explicit VectorE(std::vector<double> coords);
    VectorE(std::initializer_list<double> coords);

    static VectorE zeros(std::size_t dim);

    std::size_t dim() const { return coords_.size(); }
    const std::vector<double>& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const;

    VectorE& operator+=(const VectorE& other);
    VectorE& operator-=(const VectorE& other);
    VectorE& operator*=(double s);

    friend bool operator==(const VectorE&, const VectorE&) = default;

private:
    std::vector<double> coords_;
};

VectorE operator+(VectorE lhs, const VectorE& rhs);
VectorE operator-(VectorE lhs, const VectorE& rhs);
VectorE operator-(VectorE v);
VectorE operator*(double s, VectorE v);

void require_same_dim(const VectorE& x, const VectorE& y);

std::string to_string(const VectorE& v);

}  // namespace dccm
