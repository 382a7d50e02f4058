// wavevector.hpp — spatial frequency of a plane-wave mode.
//
// For w = (wx, wy, wz), the derived scalars used by the eigenbasis are
//
//   |w|      Euclidean norm
//   s_w      wx + wy + wz                                  component_sum()
//   r_w      w x (1,1,1) = (wy - wz, wz - wx, wx - wy)     cross_diagonal()
//   gamma_w  |r_w| = sqrt(3 |w|^2 - s_w^2)                 cross_diagonal_norm()
//
// r_w vanishes exactly on the diagonal line wx = wy = wz. The branch tag
// records which eigenvector formulas stay well conditioned for this mode:
//
//   Zero       |w| = 0 (the DC mode, stationary under the curl)
//   Isotropic  r_w = 0 with |w| > 0 (diagonal line, special basis)
//   General    r_w != 0
//
// Modes constructed from lattice indices classify the branch exactly from
// the integers; raw-component construction falls back to the relative
// threshold |r_w| <= 1e-12 |w|.

#pragma once

#include <cmath>
#include <cstdint>

#include "curlwave/errors.hpp"
#include "curlwave/vec.hpp"

namespace curlwave {

enum class Branch : std::uint8_t { Zero, Isotropic, General };

inline constexpr double kIsotropicThreshold = 1e-12;

class WaveVector {
public:
    constexpr WaveVector() = default;  // the zero mode

    WaveVector(double wx, double wy, double wz) : w_{wx, wy, wz} {
        derive();
        if (norm_ == 0.0)
            branch_ = Branch::Zero;
        else
            branch_ = (gamma_ <= kIsotropicThreshold * norm_) ? Branch::Isotropic
                                                              : Branch::General;
    }

    // Mode w = 2 pi (j/bx, k/by, l/bz) of a periodic box. The isotropic line
    // is detected from the integers, immune to rounding in the components.
    static WaveVector from_lattice(int j, int k, int l, const Vec3d& periods) {
        if (!(periods.x > 0.0) || !(periods.y > 0.0) || !(periods.z > 0.0))
            throw std::invalid_argument("WaveVector::from_lattice: periods must be positive");
        constexpr double two_pi = 6.283185307179586476925286766559;
        WaveVector w;
        w.w_ = {two_pi * j / periods.x, two_pi * k / periods.y, two_pi * l / periods.z};
        w.derive();
        if (j == 0 && k == 0 && l == 0)
            w.branch_ = Branch::Zero;
        else if (j * periods.y * periods.z == k * periods.x * periods.z &&
                 k * periods.x * periods.z == l * periods.x * periods.y)
            w.branch_ = Branch::Isotropic;
        else
            w.branch_ = Branch::General;
        return w;
    }

    [[nodiscard]] double x() const { return w_.x; }
    [[nodiscard]] double y() const { return w_.y; }
    [[nodiscard]] double z() const { return w_.z; }
    [[nodiscard]] const Vec3d& components() const { return w_; }

    [[nodiscard]] double norm() const { return norm_; }
    [[nodiscard]] double component_sum() const { return sum_; }
    [[nodiscard]] const Vec3d& cross_diagonal() const { return rdiag_; }
    [[nodiscard]] double cross_diagonal_norm() const { return gamma_; }

    [[nodiscard]] Branch branch() const { return branch_; }
    [[nodiscard]] bool is_zero() const { return branch_ == Branch::Zero; }

    friend bool operator==(const WaveVector& a, const WaveVector& b) {
        return a.w_ == b.w_;
    }

private:
    void derive() {
        norm_ = curlwave::norm(w_);
        sum_ = curlwave::component_sum(w_);
        rdiag_ = {w_.y - w_.z, w_.z - w_.x, w_.x - w_.y};
        gamma_ = curlwave::norm(rdiag_);
    }

    Vec3d w_{};
    Vec3d rdiag_{};
    double norm_ = 0.0;
    double sum_ = 0.0;
    double gamma_ = 0.0;
    Branch branch_ = Branch::Zero;
};

}  // namespace curlwave
