#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Core>

namespace marsnav {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

constexpr double kPi = std::numbers::pi;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

/// Shortest signed angular difference a - b, wrapped to (-pi, pi].
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

inline Eigen::Matrix2d rot2(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    Eigen::Matrix2d r;
    r << c, -s, s, c;
    return r;
}

/// Planar rover pose. z, roll and pitch are derived from terrain contact,
/// never integrated; heading is kept wrapped to (-pi, pi].
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double heading = 0.0;
    double roll = 0.0;
    double pitch = 0.0;

    Vec2 position2() const { return {x, y}; }
};

}  // namespace marsnav
