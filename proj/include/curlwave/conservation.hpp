// conservation.hpp — conservation-law diagnostics for modal solutions.
//
// Divergence: the Fourier coefficient of div H at w is proportional to
// w.(a(w) + conj(a(-w))) and of div E to w.(a(w) - conj(a(-w))). Helical
// components satisfy w.v_d = 0 and stationary ones never change, so the
// time delta of both divergences vanishes identically; what is reported is
// the floating-point residue, normalized by the largest |w||a(0,w)|.
//
// Energy: the modal sum |a(t)|^2 is exactly conserved (orthogonal
// eigenvectors, unimodular phases). The grid quadrature uses the rectangle
// rule on an evaluation grid fine enough to resolve twice the largest mode
// frequency per axis, where the rule integrates the squared fields exactly;
// nodes are offset off the sample lattice so the check is not tied to the
// synthesis points.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "curlwave/fields.hpp"
#include "curlwave/solution.hpp"
#include "curlwave/vec.hpp"

namespace curlwave {

struct ConservationReport {
    double modal_energy_t0 = 0.0;
    double modal_drift_rel = 0.0;   // max_t |e(t) - e(0)| / e(0)
    double grid_energy_t0 = 0.0;    // quadrature of mu|H|^2 + eps|E|^2
    double grid_drift_rel = 0.0;
    double div_h_max = 0.0;         // max_t relative spectral divergence delta
    double div_e_max = 0.0;
    int stationary_mode_count = 0;  // modes with a non-evolving component
    double stationary_amplitude = 0.0;
};

namespace conservation_detail {

struct KeyLess {
    bool operator()(const Vec3d& a, const Vec3d& b) const {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }
};

}  // namespace conservation_detail

// Relative spectral divergence deltas (H, E) between times t and 0.
inline std::pair<double, double> check_divergence(const ModalSolution& sol, double t) {
    const auto now = evolve_modes(sol, t);
    const auto t0 = evolve_modes(sol, 0.0);

    // s(w) = w . (a(t, w) - a(0, w)), keyed for the -w lookup.
    std::map<Vec3d, Complex, conservation_detail::KeyLess> s;
    double scale = 0.0;
    for (std::size_t i = 0; i < now.size(); ++i) {
        const Vec3d w = now[i].w.components();
        s[w] = dot(w, now[i].a - t0[i].a);
        scale = std::max(scale, norm(w) * norm(t0[i].a));
    }
    if (scale == 0.0) return {0.0, 0.0};

    double div_h = 0.0, div_e = 0.0;
    for (const auto& [w, sw] : s) {
        const auto mirror = s.find(-w);
        const Complex sm = mirror != s.end() ? mirror->second : Complex{};
        div_h = std::max(div_h, 0.5 * std::abs(sw - std::conj(sm)));
        div_e = std::max(div_e, 0.5 * std::abs(sw + std::conj(sm)));
    }
    return {div_h / scale, div_e / scale};
}

// Quadrature node count per axis: resolves the squared field spectrum
// (frequencies up to twice the field's) with a safety margin.
inline std::array<int, 3> quadrature_shape(const ModalSolution& sol) {
    const double two_pi = 2.0 * std::numbers::pi;
    Vec3d wmax{};
    for (const SolutionTerm& term : sol.terms) {
        wmax.x = std::max(wmax.x, std::abs(term.w.x()));
        wmax.y = std::max(wmax.y, std::abs(term.w.y()));
        wmax.z = std::max(wmax.z, std::abs(term.w.z()));
    }
    auto nodes = [&](double w, double b) {
        return 2 * static_cast<int>(std::ceil(w * b / two_pi)) + 3;
    };
    return {nodes(wmax.x, sol.periods.x), nodes(wmax.y, sol.periods.y),
            nodes(wmax.z, sol.periods.z)};
}

// Rectangle-rule integral of mu|H|^2 + eps|E|^2 over one period box, with
// nodes shifted off the synthesis lattice.
inline double grid_energy(const ModalSolution& sol, double t) {
    const std::array<int, 3> n = quadrature_shape(sol);
    const Vec3d off{0.371, 0.713, 0.137};  // cell fractions, any value works
    const double mu = sol.medium.mu();
    const double eps = sol.medium.eps();

    double sum = 0.0;
    for (int i = 0; i < n[0]; ++i)
        for (int j = 0; j < n[1]; ++j)
            for (int k = 0; k < n[2]; ++k) {
                const Vec3d p{sol.periods.x * (i + off.x) / n[0],
                              sol.periods.y * (j + off.y) / n[1],
                              sol.periods.z * (k + off.z) / n[2]};
                const FieldPair fp = unpack_fields(sol.medium, evaluate_at(sol, t, p));
                sum += mu * norm2(real_part(fp.H)) + eps * norm2(real_part(fp.E));
            }
    const double volume = sol.periods.x * sol.periods.y * sol.periods.z;
    return sum * volume / (double(n[0]) * double(n[1]) * double(n[2]));
}

inline ConservationReport check_energy(const ModalSolution& sol, const std::vector<double>& times,
                                       bool with_quadrature = true) {
    ConservationReport rep;

    rep.modal_energy_t0 = modal_energy(evolve_modes(sol, 0.0));
    for (double t : times) {
        const double e = modal_energy(evolve_modes(sol, t));
        if (rep.modal_energy_t0 > 0.0)
            rep.modal_drift_rel = std::max(rep.modal_drift_rel,
                                           std::abs(e - rep.modal_energy_t0) / rep.modal_energy_t0);
        const auto [dh, de] = check_divergence(sol, t);
        rep.div_h_max = std::max(rep.div_h_max, dh);
        rep.div_e_max = std::max(rep.div_e_max, de);
    }

    if (with_quadrature && !times.empty()) {
        rep.grid_energy_t0 = grid_energy(sol, times.front());
        for (double t : times) {
            const double e = grid_energy(sol, t);
            if (rep.grid_energy_t0 > 0.0)
                rep.grid_drift_rel = std::max(rep.grid_drift_rel,
                                              std::abs(e - rep.grid_energy_t0) / rep.grid_energy_t0);
        }
    }

    for (const SolutionTerm& term : sol.terms)
        for (const ModalComponent& mc : term.components)
            if (mc.lambda == Complex{}) {
                ++rep.stationary_mode_count;
                rep.stationary_amplitude =
                    std::max(rep.stationary_amplitude, std::abs(mc.alpha) * norm(mc.v));
            }
    return rep;
}

}  // namespace curlwave
