#pragma once

#include <cmath>
#include <complex>

namespace gamma3 {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
    double x = 0.0, y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// 2x2 real matrix, row-major.
struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;

    static Mat2 identity() { return {}; }
    friend Vec2 operator*(const Mat2& m, Vec2 v) {
        return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
    }
    Mat2 mul(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 transpose() const { return {a, c, b, d}; }
    double det() const { return a * d - b * c; }
    Mat2 inverse() const {
        const double dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
    Mat2 scaled(double s) const { return {s * a, s * b, s * c, s * d}; }
};

/// Distance between two angles on the circle, in [0, pi].
inline double circle_dist(double a, double b) {
    return std::fabs(std::remainder(a - b, kTwoPi));
}

/// Normalizes an angle into [lo, lo + 2*pi).
inline double wrap_angle(double theta, double lo) {
    double w = std::fmod(theta - lo, kTwoPi);
    if (w < 0) w += kTwoPi;
    return lo + w;
}

inline double pow3d(int k) { return std::pow(3.0, k); }

}  // namespace gamma3
