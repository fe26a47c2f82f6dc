#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dccm {

enum class PointKind : std::uint8_t { HalfLine, Cross, Interval };

// Horizontal (x, 0) or vertical (0, x) arm of the cross set.
enum class Axis : std::uint8_t { H, V };

std::string_view to_string(PointKind kind);

// A point of one of the shipped domains:
//   HalfLine  t >= 0
//   Cross     (t, 0) on H or (0, t) on V, t in [0, 1]
//   Interval  t in [0, 1]
// The cross origin is stored on H so that both spellings compare equal.
class Point {
public:
    static Point half_line(double t);
    static Point cross(Axis axis, double t);
    static Point interval(double t);

    // Parses "0.5" for half-line/interval and "H:0.5" / "V:0.25" for the
    // cross domain. Throws DomainError on malformed or out-of-range input.
    static Point parse(PointKind kind, std::string_view literal);

    PointKind kind() const { return kind_; }
    Axis axis() const { return axis_; }
    double t() const { return t_; }

    // Inverse of parse, 17 significant digits.
    std::string literal() const;

    // Same point, coordinate replaced (origin renormalized for Cross).
    Point with_t(double t) const;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    Point(PointKind kind, Axis axis, double t) : kind_(kind), axis_(axis), t_(t) {}

    PointKind kind_;
    Axis axis_;
    double t_;
};

}  // namespace dccm
