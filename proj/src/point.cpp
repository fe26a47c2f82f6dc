#include "dccm/point.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "dccm/vector_e.hpp"

namespace dccm {

namespace {

double parse_real(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw DomainError("malformed point coordinate '" + std::string(text) + "'");
    }
    return value;
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string_view to_string(PointKind kind) {
    switch (kind) {
        case PointKind::HalfLine: return "halfline";
        case PointKind::Cross: return "cross";
        case PointKind::Interval: return "interval";
    }
    return "?";
}

Point Point::half_line(double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw DomainError("half-line point must be a finite t >= 0, got " + format_real(t));
    }
    return Point(PointKind::HalfLine, Axis::H, t + 0.0);
}

Point Point::cross(Axis axis, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("cross point coordinate must lie in [0, 1], got " + format_real(t));
    }
    return Point(PointKind::Cross, t == 0.0 ? Axis::H : axis, t + 0.0);
}

Point Point::interval(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("interval point must lie in [0, 1], got " + format_real(t));
    }
    return Point(PointKind::Interval, Axis::H, t + 0.0);
}

Point Point::parse(PointKind kind, std::string_view literal) {
    switch (kind) {
        case PointKind::HalfLine: return half_line(parse_real(literal));
        case PointKind::Interval: return interval(parse_real(literal));
        case PointKind::Cross: {
            if (literal.size() < 3 || literal[1] != ':' ||
                (literal[0] != 'H' && literal[0] != 'V')) {
                throw DomainError("cross point literal must look like H:0.5 or V:0.25, got '" +
                                  std::string(literal) + "'");
            }
            return cross(literal[0] == 'H' ? Axis::H : Axis::V, parse_real(literal.substr(2)));
        }
    }
    throw DomainError("unknown point kind");
}

std::string Point::literal() const {
    if (kind_ == PointKind::Cross) {
        return std::string(axis_ == Axis::H ? "H:" : "V:") + format_real(t_);
    }
    return format_real(t_);
}

Point Point::with_t(double t) const {
    switch (kind_) {
        case PointKind::HalfLine: return half_line(t);
        case PointKind::Cross: return cross(axis_, t);
        case PointKind::Interval: return interval(t);
    }
    return *this;
}

}  // namespace dccm
