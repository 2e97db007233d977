#pragma once

#include <array>
#include <cmath>

namespace orbavg {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline Vec3 unit(const Vec3& v) { return v / norm(v); }

/// Oriented angle from u to v as seen from w (u, v in the plane normal to w),
/// range (-pi, pi], right-hand rule.
inline double oriented_angle(const Vec3& w, const Vec3& u, const Vec3& v) {
    return std::atan2(dot(w, cross(u, v)) / norm(w), dot(u, v));
}

struct Mat3 {
    // row-major
    std::array<double, 9> a{1, 0, 0, 0, 1, 0, 0, 0, 1};

    double operator()(int i, int j) const { return a[3 * i + j]; }
    double& operator()(int i, int j) { return a[3 * i + j]; }

    Vec3 operator*(const Vec3& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }
};

/// Max-norm deviation of R^T R from the identity.
inline double orthogonality_defect(const Mat3& r) {
    Mat3 p = r.transposed() * r;
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::fabs(p(i, j) - (i == j ? 1.0 : 0.0)));
    return d;
}

inline double det(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace orbavg
