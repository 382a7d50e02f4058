// grid_io.hpp — on-disk formats.
//
// Binary grid (little-endian, bit-exact):
//   "CWF1" | u32 nx ny nz | f64 bx by bz | f64 mu eps |
//   nx*ny*nz samples, z-fastest, each 6 f64: Hx Hy Hz Ex Ey Ez.
//
// Text mode list: '#' starts a comment anywhere on a line; header lines
// "periods bx by bz" and "medium mu eps" must precede the modes; each mode
// line is "j k l Re(ax) Im(ax) Re(ay) Im(ay) Re(az) Im(az)" with integer
// lattice indices.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "curlwave/errors.hpp"
#include "curlwave/fields.hpp"
#include "curlwave/grid.hpp"
#include "curlwave/ingest.hpp"
#include "curlwave/solution.hpp"

namespace curlwave {

static_assert(std::endian::native == std::endian::little,
              "grid files are little-endian; big-endian hosts need byte swaps");
static_assert(sizeof(double) == 8 && std::numeric_limits<double>::is_iec559,
              "grid files store IEEE-754 binary64 samples");

namespace io_detail {

inline void put_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
inline void put_f64(std::ostream& os, double v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
inline std::uint32_t get_u32(std::istream& is, const std::string& path) {
    std::uint32_t v;
    if (!is.read(reinterpret_cast<char*>(&v), sizeof v))
        throw FormatError(path + ": truncated header");
    return v;
}
inline double get_f64(std::istream& is, const std::string& path) {
    double v;
    if (!is.read(reinterpret_cast<char*>(&v), sizeof v))
        throw FormatError(path + ": truncated data");
    return v;
}

}  // namespace io_detail

inline void write_grid(const std::string& path, const FieldGrid& grid, const Medium& medium) {
    grid.validate();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);

    os.write("CWF1", 4);
    io_detail::put_u32(os, static_cast<std::uint32_t>(grid.shape.nx));
    io_detail::put_u32(os, static_cast<std::uint32_t>(grid.shape.ny));
    io_detail::put_u32(os, static_cast<std::uint32_t>(grid.shape.nz));
    for (double v : {grid.periods.x, grid.periods.y, grid.periods.z}) io_detail::put_f64(os, v);
    io_detail::put_f64(os, medium.mu());
    io_detail::put_f64(os, medium.eps());
    for (std::size_t m = 0; m < grid.shape.total(); ++m) {
        for (double v : {grid.H[m].x, grid.H[m].y, grid.H[m].z}) io_detail::put_f64(os, v);
        for (double v : {grid.E[m].x, grid.E[m].y, grid.E[m].z}) io_detail::put_f64(os, v);
    }
    if (!os) throw IoError("write failed: " + path);
}

struct GridFile {
    FieldGrid grid;
    Medium medium{1.0, 1.0};
};

inline GridFile read_grid(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for reading: " + path);

    char magic[4];
    if (!is.read(magic, 4) || std::string(magic, 4) != "CWF1")
        throw FormatError(path + ": bad magic, not a grid file");

    GridShape shape{static_cast<int>(io_detail::get_u32(is, path)),
                    static_cast<int>(io_detail::get_u32(is, path)),
                    static_cast<int>(io_detail::get_u32(is, path))};
    if (!shape.positive() || shape.total() > (std::size_t{1} << 31))
        throw FormatError(path + ": implausible grid shape");

    Vec3d periods{io_detail::get_f64(is, path), io_detail::get_f64(is, path),
                  io_detail::get_f64(is, path)};
    const double mu = io_detail::get_f64(is, path);
    const double eps = io_detail::get_f64(is, path);

    GridFile out{make_grid(shape, periods), Medium{1.0, 1.0}};
    try {
        out.medium = Medium{mu, eps};
    } catch (const InvalidMedium&) {
        throw FormatError(path + ": invalid medium parameters");
    }
    for (std::size_t m = 0; m < shape.total(); ++m) {
        out.grid.H[m] = {io_detail::get_f64(is, path), io_detail::get_f64(is, path),
                         io_detail::get_f64(is, path)};
        out.grid.E[m] = {io_detail::get_f64(is, path), io_detail::get_f64(is, path),
                         io_detail::get_f64(is, path)};
    }
    out.grid.validate();
    return out;
}

struct ModeListFile {
    Vec3d periods{1.0, 1.0, 1.0};
    Medium medium{1.0, 1.0};
    std::vector<Mode> modes;
};

// alphas, when given, are written one per mode as trailing comment columns.
inline void write_mode_list(const std::string& path, const Vec3d& periods, const Medium& medium,
                            const std::vector<Mode>& modes,
                            const std::vector<std::array<Complex, 3>>* alphas = nullptr) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path);
    os.precision(17);
    os << "# mode list: j k l Re(ax) Im(ax) Re(ay) Im(ay) Re(az) Im(az)\n";
    os << "periods " << periods.x << " " << periods.y << " " << periods.z << "\n";
    os << "medium " << medium.mu() << " " << medium.eps() << "\n";
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const Mode& m = modes[i];
        const std::array<int, 3> idx = lattice_indices(m.w, periods);
        os << idx[0] << " " << idx[1] << " " << idx[2];
        for (const Complex& c : {m.a.x, m.a.y, m.a.z})
            os << " " << c.real() << " " << c.imag();
        if (alphas) {
            os << "  #";
            for (const Complex& c : (*alphas)[i]) os << " " << c.real() << " " << c.imag();
        }
        os << "\n";
    }
    if (!os) throw IoError("write failed: " + path);
}

inline ModeListFile read_mode_list(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open for reading: " + path);

    std::optional<Vec3d> periods;
    std::optional<Medium> medium;
    std::vector<Mode> modes;

    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw FormatError(path + ":" + std::to_string(lineno) + ": " + what);
    };

    while (std::getline(is, line)) {
        ++lineno;
        if (const auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank

        if (first == "periods") {
            Vec3d p;
            if (!(ls >> p.x >> p.y >> p.z)) fail("expected: periods bx by bz");
            if (!(p.x > 0 && p.y > 0 && p.z > 0)) fail("periods must be positive");
            periods = p;
        } else if (first == "medium") {
            double mu, eps;
            if (!(ls >> mu >> eps)) fail("expected: medium mu eps");
            try {
                medium = Medium{mu, eps};
            } catch (const InvalidMedium&) {
                fail("medium parameters must be finite and positive");
            }
        } else {
            if (!periods) fail("mode line before the periods header");
            if (!medium) fail("mode line before the medium header");
            int j, k, l;
            std::istringstream head(first);
            if (!(head >> j) || !head.eof()) fail("lattice index is not an integer");
            if (!(ls >> k >> l)) fail("expected three integer lattice indices");
            double re[3], im[3];
            for (int c = 0; c < 3; ++c)
                if (!(ls >> re[c] >> im[c])) fail("expected six amplitude numbers");
            std::string extra;
            if (ls >> extra) fail("unexpected trailing token '" + extra + "'");
            modes.push_back({WaveVector::from_lattice(j, k, l, *periods),
                             CVec3{{re[0], im[0]}, {re[1], im[1]}, {re[2], im[2]}}});
        }
    }
    if (!periods) throw FormatError(path + ": missing periods header");
    if (!medium) throw FormatError(path + ": missing medium header");
    return {*periods, *medium, std::move(modes)};
}

}  // namespace curlwave
