// ingest.hpp — conversion between sampled grids and Fourier mode lists.
//
// grid_to_modes packs the samples into F = sqrt(mu) H + i sqrt(eps) E and
// runs a full complex analysis transform (no conjugate symmetry is assumed:
// F is genuinely complex). modes_to_grid is the inverse synthesis;
// solution_to_grid synthesizes the time-evolved amplitudes of a solution.
//
// Round trips are exact (to rounding) for band-limited data whose signed
// mode indices avoid the even-axis Nyquist bin: on an n-point axis only
// indices in [-floor(n/2), ceil(n/2)-1] are representable, and the bin at
// +n/2 for even n is read back as -n/2.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "curlwave/dft.hpp"
#include "curlwave/errors.hpp"
#include "curlwave/fields.hpp"
#include "curlwave/grid.hpp"
#include "curlwave/solution.hpp"
#include "curlwave/vec.hpp"
#include "curlwave/wavevector.hpp"

namespace curlwave {

inline constexpr double kDefaultTruncTol = 1e-12;

// Signed lattice indices (j, k, l) with w = 2 pi (j/bx, k/by, l/bz), or
// OffLatticeMode if w is not a lattice point (integrality checked to 1e-9).
inline std::array<int, 3> lattice_indices(const WaveVector& w, const Vec3d& periods) {
    const double two_pi = 2.0 * std::numbers::pi;
    const std::array<double, 3> raw{w.x() * periods.x / two_pi, w.y() * periods.y / two_pi,
                                    w.z() * periods.z / two_pi};
    std::array<int, 3> idx{};
    for (std::size_t c = 0; c < 3; ++c) {
        const double rounded = std::round(raw[c]);
        if (std::abs(raw[c] - rounded) > 1e-9 * std::max(1.0, std::abs(rounded)))
            throw OffLatticeMode("wavevector is not on the mode lattice of the given periods");
        idx[c] = static_cast<int>(rounded);
    }
    return idx;
}

inline std::vector<Mode> grid_to_modes(const FieldGrid& grid, const Medium& medium,
                                       double trunc_tol = kDefaultTruncTol) {
    grid.validate();
    const GridShape& s = grid.shape;
    const std::size_t n = s.total();

    std::array<std::vector<Complex>, 3> comp;
    for (auto& c : comp) c.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const CVec3 F = pack_fields(medium, complexify(grid.H[m]), complexify(grid.E[m]));
        comp[0][m] = F.x;
        comp[1][m] = F.y;
        comp[2][m] = F.z;
    }
    for (auto& c : comp)
        fourier_analysis(c, static_cast<std::size_t>(s.nx), static_cast<std::size_t>(s.ny),
                         static_cast<std::size_t>(s.nz));

    double max_amp = 0.0;
    for (std::size_t m = 0; m < n; ++m)
        max_amp = std::max(max_amp, norm(CVec3{comp[0][m], comp[1][m], comp[2][m]}));

    std::vector<Mode> modes;
    const double cutoff = trunc_tol * max_amp;
    for (int i = 0; i < s.nx; ++i)
        for (int j = 0; j < s.ny; ++j)
            for (int k = 0; k < s.nz; ++k) {
                const std::size_t m = grid.index(i, j, k);
                const CVec3 a{comp[0][m], comp[1][m], comp[2][m]};
                if (norm(a) < cutoff || max_amp == 0.0) continue;
                modes.push_back({WaveVector::from_lattice(signed_index(i, s.nx),
                                                          signed_index(j, s.ny),
                                                          signed_index(k, s.nz), grid.periods),
                                 a});
            }
    return modes;
}

inline FieldGrid modes_to_grid(const std::vector<Mode>& modes, const GridShape& shape,
                               const Vec3d& periods, const Medium& medium) {
    FieldGrid grid = make_grid(shape, periods);
    const std::size_t n = shape.total();

    std::array<std::vector<Complex>, 3> comp;
    for (auto& c : comp) c.assign(n, Complex{});
    for (const Mode& mode : modes) {
        const std::array<int, 3> idx = lattice_indices(mode.w, periods);
        if (!index_representable(idx[0], shape.nx) || !index_representable(idx[1], shape.ny) ||
            !index_representable(idx[2], shape.nz))
            throw OffLatticeMode("mode index exceeds the grid's representable range");
        const std::size_t m = grid.index(bin_index(idx[0], shape.nx),
                                         bin_index(idx[1], shape.ny),
                                         bin_index(idx[2], shape.nz));
        comp[0][m] += mode.a.x;
        comp[1][m] += mode.a.y;
        comp[2][m] += mode.a.z;
    }
    for (auto& c : comp)
        fourier_synthesis(c, static_cast<std::size_t>(shape.nx),
                          static_cast<std::size_t>(shape.ny),
                          static_cast<std::size_t>(shape.nz));

    for (std::size_t m = 0; m < n; ++m) {
        const FieldPair fp = unpack_fields(medium, {comp[0][m], comp[1][m], comp[2][m]});
        grid.H[m] = real_part(fp.H);
        grid.E[m] = real_part(fp.E);
    }
    return grid;
}

// Grid samples of the solution's fields at time t.
inline FieldGrid solution_to_grid(const ModalSolution& sol, const GridShape& shape, double t) {
    return modes_to_grid(evolve_modes(sol, t), shape, sol.periods, sol.medium);
}

}  // namespace curlwave
