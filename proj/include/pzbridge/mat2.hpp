#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace pzbridge {

/// 2-component column vector (acceleration in g, bridge voltages in V, ...).
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
    constexpr double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// 2x2 matrix, row-major.  Small enough that every operation is closed form.
struct Mat2 {
    double m00{0.0}, m01{0.0};
    double m10{0.0}, m11{0.0};

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 zero() { return {}; }

    constexpr Mat2 operator+(const Mat2& r) const {
        return {m00 + r.m00, m01 + r.m01, m10 + r.m10, m11 + r.m11};
    }
    constexpr Mat2 operator-(const Mat2& r) const {
        return {m00 - r.m00, m01 - r.m01, m10 - r.m10, m11 - r.m11};
    }
    constexpr Mat2 operator*(double s) const {
        return {m00 * s, m01 * s, m10 * s, m11 * s};
    }
    constexpr Vec2 operator*(const Vec2& v) const {
        return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
    }
    constexpr Mat2 operator*(const Mat2& r) const {
        return {m00 * r.m00 + m01 * r.m10, m00 * r.m01 + m01 * r.m11,
                m10 * r.m00 + m11 * r.m10, m10 * r.m01 + m11 * r.m11};
    }

    constexpr Mat2 transpose() const { return {m00, m10, m01, m11}; }
    constexpr double det() const { return m00 * m11 - m01 * m10; }
    constexpr double frobenius2() const {
        return m00 * m00 + m01 * m01 + m10 * m10 + m11 * m11;
    }
    double frobenius() const { return std::sqrt(frobenius2()); }

    double max_abs() const {
        double m = std::fabs(m00);
        m = std::max(m, std::fabs(m01));
        m = std::max(m, std::fabs(m10));
        return std::max(m, std::fabs(m11));
    }
};

constexpr Mat2 operator*(double s, const Mat2& m) { return m * s; }

class SingularMatrixError : public std::runtime_error {
  public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Closed-form adjugate inverse.  Throws when |det| falls at or below
/// `abs_det_floor` (default keeps only exact/denormal-level singularity out).
inline Mat2 inverse(const Mat2& m, double abs_det_floor = 1e-300) {
    const double d = m.det();
    if (!(std::fabs(d) > abs_det_floor)) {
        throw SingularMatrixError("2x2 matrix is singular (|det| = " +
                                  std::to_string(std::fabs(d)) + ")");
    }
    const double inv_d = 1.0 / d;
    return {m.m11 * inv_d, -m.m01 * inv_d, -m.m10 * inv_d, m.m00 * inv_d};
}

struct EigenPair {
    double lo;
    double hi;
};

/// Eigenvalues of a symmetric 2x2 matrix (the off-diagonal entries are
/// symmetrised before use).
inline EigenPair eigenvalues_symmetric(const Mat2& m) {
    const double b = 0.5 * (m.m01 + m.m10);
    const double mean = 0.5 * (m.m00 + m.m11);
    const double r = std::hypot(0.5 * (m.m00 - m.m11), b);
    return {mean - r, mean + r};
}

}  // namespace pzbridge
