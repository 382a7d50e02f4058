// grid.hpp — uniformly sampled real H/E fields on a periodic box.
//
// Sample (i, j, k) sits at ((i/nx) bx, (j/ny) by, (k/nz) bz); storage is
// z-fastest, matching the on-disk layout in grid_io.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "curlwave/errors.hpp"
#include "curlwave/vec.hpp"

namespace curlwave {

struct GridShape {
    int nx = 0, ny = 0, nz = 0;

    std::size_t total() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
               static_cast<std::size_t>(nz);
    }
    bool positive() const { return nx > 0 && ny > 0 && nz > 0; }

    bool operator==(const GridShape&) const = default;
};

struct FieldGrid {
    GridShape shape;
    Vec3d periods{1.0, 1.0, 1.0};
    std::vector<Vec3d> H, E;  // each shape.total() long

    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(shape.ny) +
                static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(shape.nz) +
               static_cast<std::size_t>(k);
    }

    Vec3d point(int i, int j, int k) const {
        return {periods.x * i / shape.nx, periods.y * j / shape.ny, periods.z * k / shape.nz};
    }

    void validate() const {
        if (!shape.positive() || shape.total() == 0) throw EmptyGrid("grid has no samples");
        if (!(periods.x > 0.0 && periods.y > 0.0 && periods.z > 0.0))
            throw std::invalid_argument("grid periods must be positive");
        if (H.size() != shape.total() || E.size() != shape.total())
            throw std::invalid_argument("grid sample arrays do not match shape");
        for (const auto* field : {&H, &E})
            for (const Vec3d& s : *field)
                if (!(std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.z)))
                    throw NonFiniteSample("grid contains a non-finite sample");
    }
};

inline FieldGrid make_grid(const GridShape& shape, const Vec3d& periods) {
    if (!shape.positive()) throw EmptyGrid("grid has no samples");
    if (!(periods.x > 0.0 && periods.y > 0.0 && periods.z > 0.0))
        throw std::invalid_argument("grid periods must be positive");
    FieldGrid g{shape, periods, {}, {}};
    g.H.assign(shape.total(), Vec3d{});
    g.E.assign(shape.total(), Vec3d{});
    return g;
}

}  // namespace curlwave
