// fields.hpp — material parameters and the complex field packing
//
//   F = sqrt(mu) H + i sqrt(eps) E,
//
// which turns the two first-order evolution equations into a single one,
// dF/dt = i/sqrt(mu eps) * curl-symbol applied mode-wise. Both directions of
// the packing are lossless: H = Re(F)/sqrt(mu), E = Im(F)/sqrt(eps).

#pragma once

#include <cmath>
#include <utility>

#include "curlwave/errors.hpp"
#include "curlwave/vec.hpp"

namespace curlwave {

class Medium {
public:
    Medium(double mu, double eps) : mu_(mu), eps_(eps) {
        if (!(std::isfinite(mu) && std::isfinite(eps)) || mu <= 0.0 || eps <= 0.0)
            throw InvalidMedium("medium parameters must be finite and positive");
        sqrt_mu_ = std::sqrt(mu);
        sqrt_eps_ = std::sqrt(eps);
    }

    double mu() const { return mu_; }
    double eps() const { return eps_; }
    double sqrt_mu() const { return sqrt_mu_; }
    double sqrt_eps() const { return sqrt_eps_; }
    double wave_speed() const { return 1.0 / (sqrt_mu_ * sqrt_eps_); }

    bool operator==(const Medium&) const = default;

private:
    double mu_, eps_;
    double sqrt_mu_, sqrt_eps_;
};

// Real H/E amplitude pair for one plane-wave coefficient. Either (or both)
// may itself be complex when it comes from a Fourier transform of real
// fields, hence CVec3 on both sides.
struct FieldPair {
    CVec3 H{};
    CVec3 E{};
};

inline CVec3 pack_fields(const Medium& m, const CVec3& H, const CVec3& E) {
    const Complex i{0.0, 1.0};
    return m.sqrt_mu() * H + (i * m.sqrt_eps()) * E;
}

// Inverse of pack_fields for pointwise (real) fields: the real and
// imaginary parts of F are exactly sqrt(mu) H and sqrt(eps) E. Fourier
// coefficients of real fields are complex and must not be unpacked this
// way; mode splitting uses the conjugate-pair identity in ingest instead.
inline FieldPair unpack_fields(const Medium& m, const CVec3& F) {
    FieldPair f;
    f.H = complexify(real_part(F) / m.sqrt_mu());
    f.E = complexify(imag_part(F) / m.sqrt_eps());
    return f;
}

}  // namespace curlwave
