// vec.hpp — small fixed-size vector and matrix types used throughout.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <ostream>

namespace curlwave {

using Complex = std::complex<double>;

template <typename T>
struct Vec3 {
    T x{}, y{}, z{};

    constexpr Vec3() = default;
    constexpr Vec3(T xx, T yy, T zz) : x(xx), y(yy), z(zz) {}

    constexpr Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

using Vec3d = Vec3<double>;
using CVec3 = Vec3<Complex>;

constexpr Vec3d operator*(double s, const Vec3d& a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3d operator*(const Vec3d& a, double s) { return s * a; }
constexpr Vec3d operator/(const Vec3d& a, double s) { return (1.0 / s) * a; }

inline CVec3 operator*(const Complex& s, const CVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline CVec3 operator*(double s, const CVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline CVec3 operator*(const Complex& s, const Vec3d& a) { return {s * a.x, s * a.y, s * a.z}; }

inline CVec3 complexify(const Vec3d& a) { return {Complex(a.x), Complex(a.y), Complex(a.z)}; }
inline Vec3d real_part(const CVec3& a) { return {a.x.real(), a.y.real(), a.z.real()}; }
inline Vec3d imag_part(const CVec3& a) { return {a.x.imag(), a.y.imag(), a.z.imag()}; }
inline CVec3 conj(const CVec3& a) { return {std::conj(a.x), std::conj(a.y), std::conj(a.z)}; }

constexpr double dot(const Vec3d& a, const Vec3d& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Bilinear (not Hermitian) product of a real and a complex vector.
inline Complex dot(const Vec3d& a, const CVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Hermitian inner product, conjugate-linear in the first argument.
inline Complex hdot(const CVec3& a, const CVec3& b) {
    return std::conj(a.x) * b.x + std::conj(a.y) * b.y + std::conj(a.z) * b.z;
}

constexpr Vec3d cross(const Vec3d& a, const Vec3d& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <typename T>
constexpr T component_sum(const Vec3<T>& a) {
    return a.x + a.y + a.z;
}

constexpr double norm2(const Vec3d& a) { return dot(a, a); }
inline double norm(const Vec3d& a) { return std::sqrt(norm2(a)); }

inline double norm2(const CVec3& a) { return std::norm(a.x) + std::norm(a.y) + std::norm(a.z); }
inline double norm(const CVec3& a) { return std::sqrt(norm2(a)); }

inline double max_abs(const Vec3d& a) {
    return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)});
}
inline double max_abs(const CVec3& a) {
    return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)});
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Vec3<T>& a) {
    return os << "(" << a.x << ", " << a.y << ", " << a.z << ")";
}

// Real 3x3 matrix stored by columns.
struct Mat3 {
    std::array<Vec3d, 3> cols{};

    static constexpr Mat3 identity() {
        return {{Vec3d{1, 0, 0}, Vec3d{0, 1, 0}, Vec3d{0, 0, 1}}};
    }
};

// Largest entry of |M^T M - I|; zero for an orthonormal column set.
inline double orthonormality_defect(const Mat3& m) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double g = dot(m.cols[std::size_t(i)], m.cols[std::size_t(j)]);
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

}  // namespace curlwave
