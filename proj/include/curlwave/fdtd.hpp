// fdtd.hpp — staggered-grid leapfrog integrator on a periodic box, used as
// an independent second-order reference for the analytic evolution.
//
// Standard component placement on cell (i, j, k) with spacings (dx, dy, dz):
//   Ex (i+1/2, j, k)   Ey (i, j+1/2, k)   Ez (i, j, k+1/2)
//   Hx (i, j+1/2, k+1/2)   Hy (i+1/2, j, k+1/2)   Hz (i+1/2, j+1/2, k)
// E lives at integer time steps, H half a step later. One step advances
// E by dt/eps * curl H, then H by -dt/mu * curl E, both with periodic
// wraparound. Initialization samples the analytic fields at the exact
// staggered positions and times, so no first-order start-up error pollutes
// order measurements.

#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "curlwave/errors.hpp"
#include "curlwave/fields.hpp"
#include "curlwave/grid.hpp"
#include "curlwave/solution.hpp"
#include "curlwave/threading.hpp"
#include "curlwave/vec.hpp"

namespace curlwave {

inline constexpr double kDefaultCourant = 0.5;

class FdtdState {
public:
    FdtdState(const GridShape& shape, const Vec3d& periods, const Medium& medium, double dt)
        : shape_(shape),
          periods_(periods),
          medium_(medium),
          dt_(dt),
          cell_{periods.x / shape.nx, periods.y / shape.ny, periods.z / shape.nz} {
        if (!shape.positive()) throw EmptyGrid("integrator grid has no cells");
        if (!(dt > 0.0) || !std::isfinite(dt))
            throw std::invalid_argument("time step must be positive and finite");
        const double rad = std::sqrt(1.0 / (cell_.x * cell_.x) + 1.0 / (cell_.y * cell_.y) +
                                     1.0 / (cell_.z * cell_.z));
        if (medium.wave_speed() * dt * rad > 1.0 + 1e-12)
            throw CflViolation("time step exceeds the stability bound for this grid");
        const std::size_t n = shape.total();
        for (auto* f : {&ex_, &ey_, &ez_, &hx_, &hy_, &hz_}) f->assign(n, 0.0);
    }

    const GridShape& shape() const { return shape_; }
    const Vec3d& periods() const { return periods_; }
    const Medium& medium() const { return medium_; }
    double dt() const { return dt_; }
    double time() const { return time_; }  // E fields' time; H sits at +dt/2
    const Vec3d& cell() const { return cell_; }

    double& ex(int i, int j, int k) { return ex_[idx(i, j, k)]; }
    double& ey(int i, int j, int k) { return ey_[idx(i, j, k)]; }
    double& ez(int i, int j, int k) { return ez_[idx(i, j, k)]; }
    double& hx(int i, int j, int k) { return hx_[idx(i, j, k)]; }
    double& hy(int i, int j, int k) { return hy_[idx(i, j, k)]; }
    double& hz(int i, int j, int k) { return hz_[idx(i, j, k)]; }

    // Positions of the staggered samples for component arrays.
    Vec3d pos_ex(int i, int j, int k) const { return pos(i + 0.5, j, k); }
    Vec3d pos_ey(int i, int j, int k) const { return pos(i, j + 0.5, k); }
    Vec3d pos_ez(int i, int j, int k) const { return pos(i, j, k + 0.5); }
    Vec3d pos_hx(int i, int j, int k) const { return pos(i, j + 0.5, k + 0.5); }
    Vec3d pos_hy(int i, int j, int k) const { return pos(i + 0.5, j, k + 0.5); }
    Vec3d pos_hz(int i, int j, int k) const { return pos(i + 0.5, j + 0.5, k); }

    void step() {
        const double ce = dt_ / medium_.eps();
        const double ch = dt_ / medium_.mu();
        const int nx = shape_.nx, ny = shape_.ny, nz = shape_.nz;
        const double rdx = 1.0 / cell_.x, rdy = 1.0 / cell_.y, rdz = 1.0 / cell_.z;

        parallel_for(static_cast<std::size_t>(nx), [&](std::size_t ii) {
            const int i = static_cast<int>(ii);
            for (int j = 0; j < ny; ++j)
                for (int k = 0; k < nz; ++k) {
                    const int jm = j ? j - 1 : ny - 1;
                    const int km = k ? k - 1 : nz - 1;
                    const int im = i ? i - 1 : nx - 1;
                    ex_[idx(i, j, k)] += ce * ((hz_[idx(i, j, k)] - hz_[idx(i, jm, k)]) * rdy -
                                               (hy_[idx(i, j, k)] - hy_[idx(i, j, km)]) * rdz);
                    ey_[idx(i, j, k)] += ce * ((hx_[idx(i, j, k)] - hx_[idx(i, j, km)]) * rdz -
                                               (hz_[idx(i, j, k)] - hz_[idx(im, j, k)]) * rdx);
                    ez_[idx(i, j, k)] += ce * ((hy_[idx(i, j, k)] - hy_[idx(im, j, k)]) * rdx -
                                               (hx_[idx(i, j, k)] - hx_[idx(i, jm, k)]) * rdy);
                }
        });
        parallel_for(static_cast<std::size_t>(nx), [&](std::size_t ii) {
            const int i = static_cast<int>(ii);
            for (int j = 0; j < ny; ++j)
                for (int k = 0; k < nz; ++k) {
                    const int jp = j + 1 < ny ? j + 1 : 0;
                    const int kp = k + 1 < nz ? k + 1 : 0;
                    const int ip = i + 1 < nx ? i + 1 : 0;
                    hx_[idx(i, j, k)] -= ch * ((ez_[idx(i, jp, k)] - ez_[idx(i, j, k)]) * rdy -
                                               (ey_[idx(i, j, kp)] - ey_[idx(i, j, k)]) * rdz);
                    hy_[idx(i, j, k)] -= ch * ((ex_[idx(i, j, kp)] - ex_[idx(i, j, k)]) * rdz -
                                               (ez_[idx(ip, j, k)] - ez_[idx(i, j, k)]) * rdx);
                    hz_[idx(i, j, k)] -= ch * ((ey_[idx(ip, j, k)] - ey_[idx(i, j, k)]) * rdx -
                                               (ex_[idx(i, jp, k)] - ex_[idx(i, j, k)]) * rdy);
                }
        });
        time_ += dt_;
    }

private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(shape_.ny) +
                static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(shape_.nz) +
               static_cast<std::size_t>(k);
    }
    Vec3d pos(double i, double j, double k) const {
        return {i * cell_.x, j * cell_.y, k * cell_.z};
    }

    GridShape shape_;
    Vec3d periods_;
    Medium medium_;
    double dt_;
    Vec3d cell_;
    double time_ = 0.0;

    std::vector<double> ex_, ey_, ez_, hx_, hy_, hz_;
};

// Fills a state from the analytic solution: E at t = 0, H at t = dt/2,
// every component at its own staggered position.
inline FdtdState fdtd_from_solution(const ModalSolution& sol, const GridShape& shape, double dt) {
    FdtdState st(shape, sol.periods, sol.medium, dt);
    const double th = 0.5 * dt;

    auto eval_h = [&](const Vec3d& p, double t) {
        return real_part(unpack_fields(sol.medium, evaluate_at(sol, t, p)).H);
    };
    auto eval_e = [&](const Vec3d& p, double t) {
        return real_part(unpack_fields(sol.medium, evaluate_at(sol, t, p)).E);
    };

    for (int i = 0; i < shape.nx; ++i)
        for (int j = 0; j < shape.ny; ++j)
            for (int k = 0; k < shape.nz; ++k) {
                st.ex(i, j, k) = eval_e(st.pos_ex(i, j, k), 0.0).x;
                st.ey(i, j, k) = eval_e(st.pos_ey(i, j, k), 0.0).y;
                st.ez(i, j, k) = eval_e(st.pos_ez(i, j, k), 0.0).z;
                st.hx(i, j, k) = eval_h(st.pos_hx(i, j, k), th).x;
                st.hy(i, j, k) = eval_h(st.pos_hy(i, j, k), th).y;
                st.hz(i, j, k) = eval_h(st.pos_hz(i, j, k), th).z;
            }
    return st;
}

// Root-mean-square error of all six component grids against the analytic
// fields at the state's own times (E at time(), H at time() + dt/2).
inline double fdtd_l2_error(FdtdState& st, const ModalSolution& sol) {
    const GridShape& shape = st.shape();
    const double te = st.time();
    const double th = st.time() + 0.5 * st.dt();

    double sum = 0.0;
    for (int i = 0; i < shape.nx; ++i)
        for (int j = 0; j < shape.ny; ++j)
            for (int k = 0; k < shape.nz; ++k) {
                const auto at = [&](const Vec3d& p, double t) {
                    return unpack_fields(sol.medium, evaluate_at(sol, t, p));
                };
                const double dex = st.ex(i, j, k) - real_part(at(st.pos_ex(i, j, k), te).E).x;
                const double dey = st.ey(i, j, k) - real_part(at(st.pos_ey(i, j, k), te).E).y;
                const double dez = st.ez(i, j, k) - real_part(at(st.pos_ez(i, j, k), te).E).z;
                const double dhx = st.hx(i, j, k) - real_part(at(st.pos_hx(i, j, k), th).H).x;
                const double dhy = st.hy(i, j, k) - real_part(at(st.pos_hy(i, j, k), th).H).y;
                const double dhz = st.hz(i, j, k) - real_part(at(st.pos_hz(i, j, k), th).H).z;
                sum += dex * dex + dey * dey + dez * dez + dhx * dhx + dhy * dhy + dhz * dhz;
            }
    return std::sqrt(sum / (6.0 * double(shape.total())));
}

struct ResolutionError {
    int resolution = 0;
    double h = 0.0;   // largest cell edge
    double error = 0.0;
};

// Runs the integrator from the solution's initial data at each resolution
// (cubic n^3 grids over the solution's box), with dt chosen so an integer
// number of steps lands exactly on t_final at the given Courant number.
inline std::vector<ResolutionError> fdtd_convergence(const ModalSolution& sol, double t_final,
                                                     const std::vector<int>& resolutions,
                                                     double courant = kDefaultCourant) {
    if (!(t_final >= 0.0)) throw std::invalid_argument("t_final must be nonnegative");
    std::vector<ResolutionError> out;
    for (int n : resolutions) {
        const GridShape shape{n, n, n};
        const Vec3d cell{sol.periods.x / n, sol.periods.y / n, sol.periods.z / n};
        const double rad = std::sqrt(1.0 / (cell.x * cell.x) + 1.0 / (cell.y * cell.y) +
                                     1.0 / (cell.z * cell.z));
        const double dt_max = courant / (sol.medium.wave_speed() * rad);

        if (t_final == 0.0) {
            FdtdState st = fdtd_from_solution(sol, shape, dt_max);
            out.push_back({n, std::max({cell.x, cell.y, cell.z}), fdtd_l2_error(st, sol)});
            continue;
        }
        const auto nsteps = static_cast<std::size_t>(std::ceil(t_final / dt_max));
        const double dt = t_final / double(nsteps);
        FdtdState st = fdtd_from_solution(sol, shape, dt);
        for (std::size_t s = 0; s < nsteps; ++s) st.step();
        out.push_back({n, std::max({cell.x, cell.y, cell.z}), fdtd_l2_error(st, sol)});
    }
    return out;
}

// Observed orders between consecutive refinements.
inline std::vector<double> observed_orders(const std::vector<ResolutionError>& runs) {
    std::vector<double> orders;
    for (std::size_t i = 1; i < runs.size(); ++i)
        orders.push_back(std::log(runs[i - 1].error / runs[i].error) /
                         std::log(runs[i - 1].h / runs[i].h));
    return orders;
}

}  // namespace curlwave
