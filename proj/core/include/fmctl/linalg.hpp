#pragma once

#include <array>
#include <cmath>

namespace fmctl {

/// 3-component vector. Positions are meters, flux densities tesla.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// 3x3 matrix, row-major. Used for flux-density gradient tensors.
struct Mat3 {
    std::array<double, 9> a{};

    constexpr double& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
    constexpr double operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

    static constexpr Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }

    /// a b^T
    static constexpr Mat3 outer(const Vec3& u, const Vec3& v) {
        Mat3 m;
        m(0, 0) = u.x * v.x; m(0, 1) = u.x * v.y; m(0, 2) = u.x * v.z;
        m(1, 0) = u.y * v.x; m(1, 1) = u.y * v.y; m(1, 2) = u.y * v.z;
        m(2, 0) = u.z * v.x; m(2, 1) = u.z * v.y; m(2, 2) = u.z * v.z;
        return m;
    }

    constexpr Mat3 operator+(const Mat3& o) const {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) m.a[i] = a[i] + o.a[i];
        return m;
    }
    constexpr Mat3 operator-(const Mat3& o) const {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) m.a[i] = a[i] - o.a[i];
        return m;
    }
    constexpr Mat3 operator*(double s) const {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) m.a[i] = a[i] * s;
        return m;
    }
    constexpr Vec3 operator*(const Vec3& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a) m = std::max(m, std::abs(v));
        return m;
    }
};

constexpr Mat3 operator*(double s, const Mat3& m) { return m * s; }

}  // namespace fmctl
