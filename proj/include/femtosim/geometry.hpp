#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace femtosim {

struct Point2D {
    double x = 0.0;  // meters
    double y = 0.0;  // meters
};

inline double distance(const Point2D& a, const Point2D& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Wraps an angle into [0, 2*pi).
inline double normalize_heading(double heading_rad) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double h = std::fmod(heading_rad, two_pi);
    if (h < 0.0) h += two_pi;
    // fmod of a value just below two_pi can round back up to two_pi
    if (h >= two_pi) h = 0.0;
    return h;
}

/// Constant-velocity straight-line motion: position(t) = origin + speed*(t - start_time)*u(heading).
struct Trajectory {
    Point2D origin;
    double heading_rad = 0.0;   // [0, 2*pi)
    double speed_mps = 1.0;     // > 0
    double start_time_s = 0.0;  // >= 0
};

inline Trajectory make_trajectory(Point2D origin, double heading_rad, double speed_mps,
                                  double start_time_s = 0.0) {
    if (!(speed_mps > 0.0) || !std::isfinite(speed_mps))
        throw std::domain_error("trajectory speed must be positive and finite");
    if (!std::isfinite(origin.x) || !std::isfinite(origin.y) || !std::isfinite(heading_rad))
        throw std::domain_error("trajectory origin/heading must be finite");
    if (start_time_s < 0.0) throw std::domain_error("trajectory start time must be >= 0");
    return Trajectory{origin, normalize_heading(heading_rad), speed_mps, start_time_s};
}

/// One pass of a trajectory through a circular coverage area.
/// chord_length always equals speed * (exit_time - entry_time); when the
/// trajectory starts inside the circle the entry is clamped to start_time and
/// the chord covers only the remaining part of the full geometric chord.
struct CoverageCrossing {
    double entry_time_s = 0.0;
    double exit_time_s = 0.0;
    double chord_offset_m = 0.0;  // perpendicular distance of the path from the center
    double chord_length_m = 0.0;  // distance traveled between entry and exit
};

/// Full chord cut by a line at perpendicular distance `offset` from the center
/// of a circle of radius `radius`: 2*sqrt(radius^2 - offset^2), or 0 beyond.
inline double chord_length(double offset_m, double radius_m) {
    if (offset_m < 0.0) throw std::domain_error("chord offset must be >= 0");
    if (!(radius_m > 0.0)) throw std::domain_error("radius must be > 0");
    if (offset_m >= radius_m) return 0.0;
    return 2.0 * std::sqrt(radius_m * radius_m - offset_m * offset_m);
}

/// Time spent covering a chord at constant speed.
inline double dwell_time(double chord_m, double speed_mps) {
    if (chord_m < 0.0) throw std::domain_error("chord must be >= 0");
    if (!(speed_mps > 0.0)) throw std::domain_error("speed must be > 0");
    return chord_m / speed_mps;
}

inline Point2D position_at(const Trajectory& t, double time_s) {
    if (time_s < t.start_time_s)
        throw std::domain_error("position requested before trajectory start");
    const double s = t.speed_mps * (time_s - t.start_time_s);
    return Point2D{t.origin.x + s * std::cos(t.heading_rad),
                   t.origin.y + s * std::sin(t.heading_rad)};
}

/// Entry/exit of the forward ray through a circle. Absent when the ray misses
/// the circle or already left it before start_time.
inline std::optional<CoverageCrossing> intersect(const Trajectory& t, const Point2D& center,
                                                 double radius_m) {
    if (!(radius_m > 0.0)) throw std::domain_error("radius must be > 0");
    const double ux = std::cos(t.heading_rad);
    const double uy = std::sin(t.heading_rad);
    const double rx = center.x - t.origin.x;
    const double ry = center.y - t.origin.y;
    // along-track distance to the closest approach and squared offset
    const double m = rx * ux + ry * uy;
    const double off_sq = rx * rx + ry * ry - m * m;
    const double r_sq = radius_m * radius_m;
    if (off_sq > r_sq) return std::nullopt;
    const double half = std::sqrt(std::max(r_sq - off_sq, 0.0));
    const double s_out = m + half;
    if (s_out < 0.0) return std::nullopt;  // circle entirely behind the start
    const double s_in = std::max(m - half, 0.0);
    CoverageCrossing c;
    c.entry_time_s = t.start_time_s + s_in / t.speed_mps;
    c.exit_time_s = t.start_time_s + s_out / t.speed_mps;
    c.chord_offset_m = std::sqrt(std::max(off_sq, 0.0));
    c.chord_length_m = s_out - s_in;
    return c;
}

}  // namespace femtosim
