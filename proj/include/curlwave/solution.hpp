// solution.hpp — the analytic time evolution.
//
// A ModalSolution stores, per wavevector, the surviving eigen-components
// (lambda_d, alpha_d, v_d) of the packed field F = sqrt(mu) H + i sqrt(eps) E.
// Each component evolves by the unimodular phase e^{-t lambda_d c} with
// c = 1/sqrt(mu eps), so evaluation at any real t (including t < 0: the
// evolution is a group) is
//
//   F(t,x) = sum_w sum_d alpha_d v_d e^{i (w.x - Im(lambda_d) c t)}.
//
// Phases are computed as cos/sin of the accumulated angle rather than by
// exponentiating increments, so there is no drift for large |t|. Summation
// order is fixed (terms in build order, then d ascending) and points are
// independent, which keeps results bit-identical across thread counts.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "curlwave/errors.hpp"
#include "curlwave/fields.hpp"
#include "curlwave/spectral.hpp"
#include "curlwave/threading.hpp"
#include "curlwave/vec.hpp"
#include "curlwave/wavevector.hpp"

namespace curlwave {

// One Fourier coefficient of the packed field at t = 0.
struct Mode {
    WaveVector w;
    CVec3 a{};
};

// F sampled at one spacetime point.
struct ComplexFieldSample {
    CVec3 F{};
    Vec3d position{};
    double time = 0.0;
};

// Components with |alpha_d||v_d| below drop_tol * (largest such product in
// the whole solution) are omitted from the built solution.
inline constexpr double kDefaultDropTol = 1e-14;

struct ModalComponent {
    int d = 0;         // eigen index: 0 stationary, 1 and 2 helical
    Complex lambda{};  // purely imaginary; phase rate is Im(lambda) * c
    Complex alpha{};
    CVec3 v{};
};

struct SolutionTerm {
    WaveVector w;
    std::vector<ModalComponent> components;
};

struct ModalSolution {
    Medium medium{1.0, 1.0};
    Vec3d periods{1.0, 1.0, 1.0};
    std::vector<SolutionTerm> terms;

    bool empty() const { return terms.empty(); }
};

inline ModalSolution build_solution(const std::vector<Mode>& modes, const Medium& medium,
                                    const Vec3d& periods, double drop_tol = kDefaultDropTol) {
    if (!(periods.x > 0.0 && periods.y > 0.0 && periods.z > 0.0))
        throw std::invalid_argument("build_solution: periods must be positive");

    // Duplicate wavevectors would double-count amplitude; detect by sorting.
    {
        std::vector<std::size_t> order(modes.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto key = [&](std::size_t i) { return modes[i].w.components(); };
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
            const Vec3d a = key(i), b = key(j);
            if (a.x != b.x) return a.x < b.x;
            if (a.y != b.y) return a.y < b.y;
            return a.z < b.z;
        });
        for (std::size_t i = 1; i < order.size(); ++i)
            if (key(order[i - 1]) == key(order[i]))
                throw DuplicateWaveVector("build_solution: repeated wavevector; sum amplitudes first");
    }

    struct Raw {
        WaveVector w;
        ModeDecomposition dec;
        std::array<double, 3> mag;
    };
    std::vector<Raw> raw;
    raw.reserve(modes.size());
    double max_mag = 0.0;
    for (const Mode& m : modes) {
        Raw r{m.w, decompose_mode(m.w, m.a), {}};
        for (int d = 0; d < 3; ++d) {
            r.mag[d] = std::abs(r.dec.proj.alpha[d]) * norm(r.dec.eig.v[d]);
            max_mag = std::max(max_mag, r.mag[d]);
        }
        raw.push_back(std::move(r));
    }

    ModalSolution sol{medium, periods, {}};
    const double cutoff = drop_tol * max_mag;
    for (const Raw& r : raw) {
        SolutionTerm term{r.w, {}};
        for (int d = 0; d < 3; ++d) {
            if (r.mag[d] <= cutoff) continue;
            term.components.push_back(
                {d, r.dec.eig.lambda[d], r.dec.proj.alpha[d], r.dec.eig.v[d]});
        }
        if (!term.components.empty()) sol.terms.push_back(std::move(term));
    }
    return sol;
}

inline CVec3 evaluate_at(const ModalSolution& sol, double t, const Vec3d& p) {
    const double c = sol.medium.wave_speed();
    CVec3 F{};
    for (const SolutionTerm& term : sol.terms) {
        const double wx = dot(term.w.components(), p);
        for (const ModalComponent& mc : term.components) {
            const double theta = wx - mc.lambda.imag() * c * t;
            const Complex phase{std::cos(theta), std::sin(theta)};
            F += (mc.alpha * phase) * mc.v;
        }
    }
    return F;
}

inline std::vector<CVec3> evaluate(const ModalSolution& sol, double t,
                                   const std::vector<Vec3d>& points) {
    std::vector<CVec3> out(points.size());
    parallel_for(points.size(), [&](std::size_t i) { out[i] = evaluate_at(sol, t, points[i]); });
    return out;
}

inline ComplexFieldSample sample(const ModalSolution& sol, double t, const Vec3d& p) {
    return {evaluate_at(sol, t, p), p, t};
}

// F(t,.) - F(0,.). Stationary components cancel exactly and are skipped;
// the oscillatory factor e^{-i phi} - 1 is formed as (-2 sin^2(phi/2),
// -sin phi), which stays accurate when phi is tiny.
inline CVec3 evaluate_delta_at(const ModalSolution& sol, double t, const Vec3d& p) {
    const double c = sol.medium.wave_speed();
    CVec3 dF{};
    for (const SolutionTerm& term : sol.terms) {
        const double wx = dot(term.w.components(), p);
        const Complex spatial{std::cos(wx), std::sin(wx)};
        for (const ModalComponent& mc : term.components) {
            const double rate = mc.lambda.imag();
            if (rate == 0.0) continue;
            const double phi = rate * c * t;
            const double sh = std::sin(0.5 * phi);
            const Complex factor{-2.0 * sh * sh, -std::sin(phi)};
            dF += (mc.alpha * factor * spatial) * mc.v;
        }
    }
    return dF;
}

inline std::vector<CVec3> evaluate_delta(const ModalSolution& sol, double t,
                                         const std::vector<Vec3d>& points) {
    std::vector<CVec3> out(points.size());
    parallel_for(points.size(),
                 [&](std::size_t i) { out[i] = evaluate_delta_at(sol, t, points[i]); });
    return out;
}

// Per-wavevector amplitude at time t: a(t) = sum_d e^{-t lambda_d c} alpha_d v_d.
inline std::vector<Mode> evolve_modes(const ModalSolution& sol, double t) {
    const double c = sol.medium.wave_speed();
    std::vector<Mode> out;
    out.reserve(sol.terms.size());
    for (const SolutionTerm& term : sol.terms) {
        CVec3 a{};
        for (const ModalComponent& mc : term.components) {
            const double phi = -mc.lambda.imag() * c * t;
            const Complex phase{std::cos(phi), std::sin(phi)};
            a += (mc.alpha * phase) * mc.v;
        }
        out.push_back({term.w, a});
    }
    return out;
}

// Sum over modes of |a(t)|^2; constant in t because the eigenvectors of one
// wavevector are mutually orthogonal under the Hermitian inner product and
// the per-component phases are unimodular.
inline double modal_energy(const std::vector<Mode>& modes) {
    double e = 0.0;
    for (const Mode& m : modes) e += norm2(m.a);
    return e;
}

}  // namespace curlwave
