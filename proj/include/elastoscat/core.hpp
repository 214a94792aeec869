// Small value types shared by every module: 2-vectors, 2x2 complex matrices,
// and the exception taxonomy.
#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace elast {

using cd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double euler_gamma = 0.57721566490153286061;

// Invalid user input or violated precondition (CLI maps these to exit 2).
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation failed to reach its accuracy/solvability contract (exit 3).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0.0, y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 b) const { return {x + b.x, y + b.y}; }
    constexpr Vec2 operator-(Vec2 b) const { return {x - b.x, y - b.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr double dot(Vec2 b) const { return x * b.x + y * b.y; }
    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    Vec2 normalized() const {
        double n = norm();
        return {x / n, y / n};
    }
    // rotation by +pi/2 (the paper's Q matrix applied to this vector)
    constexpr Vec2 perp() const { return {-y, x}; }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

// complex 2-vector
struct CVec2 {
    cd x{}, y{};

    constexpr CVec2() = default;
    constexpr CVec2(cd x_, cd y_) : x(x_), y(y_) {}

    CVec2 operator+(const CVec2& b) const { return {x + b.x, y + b.y}; }
    CVec2 operator-(const CVec2& b) const { return {x - b.x, y - b.y}; }
    CVec2 operator*(cd s) const { return {x * s, y * s}; }
    cd dot_real(Vec2 b) const { return x * b.x + y * b.y; }  // contract with a real vector
    double norm() const { return std::sqrt(std::norm(x) + std::norm(y)); }
};

inline CVec2 operator*(cd s, const CVec2& v) { return v * s; }

// 2x2 complex matrix, row-major
struct Mat2c {
    cd a{}, b{}, c{}, d{};  // [a b; c d]

    static Mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2c outer(Vec2 u, Vec2 v) {
        return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y};
    }
    // paper's Q = [[0,-1],[1,0]]
    static Mat2c rot90() { return {0.0, -1.0, 1.0, 0.0}; }

    Mat2c operator+(const Mat2c& m) const { return {a + m.a, b + m.b, c + m.c, d + m.d}; }
    Mat2c operator-(const Mat2c& m) const { return {a - m.a, b - m.b, c - m.c, d - m.d}; }
    Mat2c operator*(cd s) const { return {a * s, b * s, c * s, d * s}; }
    CVec2 operator*(const CVec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2c transpose() const { return {a, c, b, d}; }
    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)),
                        std::max(std::abs(c), std::abs(d)));
    }
};

inline Mat2c operator*(cd s, const Mat2c& m) { return m * s; }

}  // namespace elast
