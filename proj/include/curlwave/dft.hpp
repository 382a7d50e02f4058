// dft.hpp — 3D complex discrete Fourier transform on z-fastest arrays.
//
// Conventions match the Fourier-series form F(x_m) = sum_j a_j e^{i w_j.x_m}
// with x_m uniform on the period: analysis uses the negative-exponent
// transform divided by the total sample count, synthesis the positive
// exponent with no scaling, so analysis(synthesis(a)) = a.
//
// Power-of-two axis lengths run through iterative radix-2 Cooley-Tukey;
// other lengths fall back to a direct O(n^2) sum with a precomputed root
// table (axis lengths here are small, typically <= 64).

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "curlwave/vec.hpp"

namespace curlwave {
namespace dft_detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// roots[k] = e^{sign * 2 pi i k / n}, k in [0, n)
inline std::vector<Complex> root_table(std::size_t n, int sign) {
    std::vector<Complex> roots(n);
    const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k)
        roots[k] = {std::cos(step * static_cast<double>(k)), std::sin(step * static_cast<double>(k))};
    return roots;
}

inline void radix2(std::vector<Complex>& a, const std::vector<Complex>& roots) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t lo = 0; lo < n; lo += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[lo + k];
                const Complex v = a[lo + k + len / 2] * roots[k * stride];
                a[lo + k] = u + v;
                a[lo + k + len / 2] = u - v;
            }
        }
    }
}

inline void direct(std::vector<Complex>& a, const std::vector<Complex>& roots) {
    const std::size_t n = a.size();
    std::vector<Complex> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Complex s{};
        for (std::size_t m = 0; m < n; ++m) s += a[m] * roots[(j * m) % n];
        out[j] = s;
    }
    a = std::move(out);
}

// One axis of the 3D transform: `count` pencils of length n at `stride`,
// consecutive pencils offset per the caller's loop.
class AxisPlan {
public:
    AxisPlan(std::size_t n, int sign) : roots_(root_table(n, sign)), pow2_(is_pow2(n)) {}

    void run(std::vector<Complex>& scratch) const {
        if (pow2_)
            radix2(scratch, roots_);
        else
            direct(scratch, roots_);
    }

private:
    std::vector<Complex> roots_;
    bool pow2_;
};

inline void transform_axis(std::vector<Complex>& data, std::size_t n, std::size_t stride,
                           std::size_t blocks, std::size_t block_stride, std::size_t inner,
                           const AxisPlan& plan) {
    std::vector<Complex> pencil(n);
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t i = 0; i < inner; ++i) {
            const std::size_t base = b * block_stride + i;
            for (std::size_t k = 0; k < n; ++k) pencil[k] = data[base + k * stride];
            plan.run(pencil);
            for (std::size_t k = 0; k < n; ++k) data[base + k * stride] = pencil[k];
        }
    }
}

inline void transform_3d(std::vector<Complex>& data, std::size_t nx, std::size_t ny,
                         std::size_t nz, int sign) {
    const AxisPlan px(nx, sign), py(ny, sign), pz(nz, sign);
    // z axis: stride 1, one block per (x, y) row
    transform_axis(data, nz, 1, nx * ny, nz, 1, pz);
    // y axis: stride nz, blocks over x, inner over z
    transform_axis(data, ny, nz, nx, ny * nz, nz, py);
    // x axis: stride ny*nz, single block, inner over (y, z)
    transform_axis(data, nx, ny * nz, 1, 0, ny * nz, px);
}

}  // namespace dft_detail

// In-place analysis: data[m] -> coefficients a_j, divided by nx*ny*nz.
inline void fourier_analysis(std::vector<Complex>& data, std::size_t nx, std::size_t ny,
                             std::size_t nz) {
    dft_detail::transform_3d(data, nx, ny, nz, -1);
    const double scale = 1.0 / static_cast<double>(nx * ny * nz);
    for (Complex& c : data) c *= scale;
}

// In-place synthesis: coefficients a_j -> samples, unscaled.
inline void fourier_synthesis(std::vector<Complex>& data, std::size_t nx, std::size_t ny,
                              std::size_t nz) {
    dft_detail::transform_3d(data, nx, ny, nz, +1);
}

// Bin index <-> signed mode index on an n-point axis. Signed indices cover
// [-floor(n/2), ceil(n/2) - 1]; for even n the Nyquist bin is the negative
// end of that range.
inline int signed_index(int bin, int n) { return bin < (n + 1) / 2 ? bin : bin - n; }
inline int bin_index(int signed_idx, int n) { return signed_idx < 0 ? signed_idx + n : signed_idx; }
inline bool index_representable(int signed_idx, int n) {
    return signed_idx >= -(n / 2) && signed_idx <= (n + 1) / 2 - 1;
}

}  // namespace curlwave
