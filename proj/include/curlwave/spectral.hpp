// spectral.hpp — eigen-decomposition of the curl operator restricted to a
// single plane-wave subspace, and projection of amplitudes onto that basis.
//
// On V^w = { v e^{i w.x} : v in C^3 } the curl acts as multiplication by
// i [w]x, the cross-product matrix scaled by i. Its spectrum is the triple
// { 0, -|w|, +|w| }, recorded here through the scalars
//
//   lambda_1 = 0,   lambda_2 = i |w|,   lambda_3 = -i |w|,
//
// so that curl(v_d e^{i w.x}) = i lambda_d v_d e^{i w.x}. The stored
// eigenvectors are the closed forms
//
//   v_1 = w / |w|
//   r_w != 0:  v_d = -|w|^2 (1,1,1) + lambda_d r_w + s_w w        (d = 2,3)
//   r_w  = 0:  v_2 = ((1+i*s3)/2, (1-i*s3)/2, -1),  v_3 = conj(v_2)
//              for positive diagonal component; v_2 and v_3 swap roles on
//              the negative diagonal (s3 = sqrt(3)),
//
// together with a real orthonormal frame (eta_1, eta_2, eta_3) spanning the
// same directions. v_2 and v_3 are divergence-free (w . v_d = 0), which is
// what makes the time evolution conserve the divergence of both fields.
//
// The projection alpha of an amplitude a onto (v_1, v_2, v_3) is evaluated
// in closed form per branch; reconstruction a = sum_d alpha_d v_d is exact
// up to rounding.

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "curlwave/errors.hpp"
#include "curlwave/vec.hpp"
#include "curlwave/wavevector.hpp"

namespace curlwave {

struct EigenSystem {
    std::array<Complex, 3> lambda{};  // 0, i|w|, -i|w|
    std::array<CVec3, 3> v{};         // unnormalized eigenvectors, as above
    Mat3 frame{};                     // orthonormal columns eta_1..eta_3
};

struct ModalProjection {
    std::array<Complex, 3> alpha{};
};

struct ModeDecomposition {
    EigenSystem eig;
    ModalProjection proj;
};

// Amplitude of curl(v e^{i w.x}) divided by e^{i w.x}; equals i (w x v).
inline CVec3 curl_planewave(const WaveVector& w, const CVec3& v) {
    const Vec3d& k = w.components();
    const Complex i{0.0, 1.0};
    return {i * (k.y * v.z - k.z * v.y),
            i * (k.z * v.x - k.x * v.z),
            i * (k.x * v.y - k.y * v.x)};
}

inline std::array<Complex, 3> eigenvalues(const WaveVector& w) {
    const double n = w.norm();
    return {Complex{0.0, 0.0}, Complex{0.0, n}, Complex{0.0, -n}};
}

inline EigenSystem eigenvectors(const WaveVector& w) {
    if (w.is_zero())
        throw ZeroWaveVector("eigenvectors: |w| = 0 has no plane-wave eigenbasis");

    constexpr double s3 = std::numbers::sqrt3;
    const double n = w.norm();

    EigenSystem es;
    es.lambda = eigenvalues(w);
    es.v[0] = complexify(w.components() / n);

    if (w.branch() == Branch::Isotropic) {
        const bool positive = w.component_sum() > 0.0;
        const CVec3 vp{{0.5, s3 / 2}, {0.5, -s3 / 2}, {-1.0, 0.0}};
        es.v[1] = positive ? vp : conj(vp);
        es.v[2] = conj(es.v[1]);

        const double sign = positive ? 1.0 : -1.0;
        const double s6 = std::sqrt(6.0);
        es.frame.cols[0] = (sign / s3) * Vec3d{1, 1, 1};
        es.frame.cols[1] = Vec3d{1, 1, -2} / s6;
        es.frame.cols[2] = (sign / std::numbers::sqrt2) * Vec3d{-1, 1, 0};
    } else {
        const Vec3d& k = w.components();
        const Vec3d& r = w.cross_diagonal();
        const double s = w.component_sum();
        const double g = w.cross_diagonal_norm();

        // v_2 = -|w|^2 (1,1,1) + i|w| r_w + s_w w, split into re + i*im.
        const Vec3d re = s * k - (n * n) * Vec3d{1, 1, 1};
        const Vec3d im = n * r;
        es.v[1] = {Complex{re.x, im.x}, Complex{re.y, im.y}, Complex{re.z, im.z}};
        es.v[2] = conj(es.v[1]);

        es.frame.cols[0] = k / n;
        es.frame.cols[1] = re / (n * g);
        es.frame.cols[2] = r / g;
    }
    return es;
}

inline ModalProjection project(const WaveVector& w, const CVec3& a) {
    if (w.is_zero())
        throw ZeroWaveVector("project: |w| = 0 has no plane-wave eigenbasis");

    constexpr double s3 = std::numbers::sqrt3;
    const Complex sa = component_sum(a);
    ModalProjection p;

    if (w.branch() == Branch::Isotropic) {
        const Complex t2 = sa / 6.0 + Complex{0.0, s3 / 6.0} * (a.y - a.x) - 0.5 * a.z;
        const Complex t3 = sa / 6.0 + Complex{0.0, s3 / 6.0} * (a.x - a.y) - 0.5 * a.z;
        if (w.component_sum() > 0.0)
            p.alpha = {sa / s3, t2, t3};
        else
            p.alpha = {-sa / s3, t3, t2};
    } else {
        const double n = w.norm();
        const double s = w.component_sum();
        const double g2 = w.cross_diagonal_norm() * w.cross_diagonal_norm();
        const Complex wa = dot(w.components(), a);
        const Complex ra = dot(w.cross_diagonal(), a);

        const Complex even = wa * s / (2.0 * n * n * g2) - sa / (2.0 * g2);
        const Complex odd = Complex{0.0, 1.0} * ra / (2.0 * n * g2);
        p.alpha = {wa / n, even - odd, even + odd};
    }
    return p;
}

// Full decomposition a = sum_d alpha_d v_d, including the stationary DC
// convention: for w = 0 the basis is the standard one, all eigenvalues are
// zero, and alpha = a (the curl annihilates constants).
inline ModeDecomposition decompose_mode(const WaveVector& w, const CVec3& a) {
    if (w.is_zero()) {
        ModeDecomposition dc;
        dc.eig.lambda = {Complex{}, Complex{}, Complex{}};
        dc.eig.v = {CVec3{{1, 0}, {0, 0}, {0, 0}},
                    CVec3{{0, 0}, {1, 0}, {0, 0}},
                    CVec3{{0, 0}, {0, 0}, {1, 0}}};
        dc.eig.frame = Mat3::identity();
        dc.proj.alpha = {a.x, a.y, a.z};
        return dc;
    }
    return {eigenvectors(w), project(w, a)};
}

}  // namespace curlwave
