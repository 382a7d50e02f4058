#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "curlwave/fields.hpp"
#include "curlwave/solution.hpp"
#include "testutil.hpp"

using namespace curlwave;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

double rel_err(const CVec3& got, const CVec3& want) {
    const double scale = std::max(max_abs(want), 1e-300);
    return max_abs(got - want) / scale;
}

// Equal-components traveling wave: H0 = cos(2pi(x+y+z)) (sqrt3, 0, -sqrt3),
// E0 = cos(2pi(x+y+z)) (1, -2, 1), unit medium. Two conjugate modes at +-w.
ModalSolution traveling_solution() {
    const CVec3 a{{kSqrt3 / 2, 0.5}, {0.0, -1.0}, {-kSqrt3 / 2, 0.5}};
    const std::vector<Mode> modes{{WaveVector{2 * kPi, 2 * kPi, 2 * kPi}, a},
                                  {WaveVector{-2 * kPi, -2 * kPi, -2 * kPi}, a}};
    return build_solution(modes, Medium{1, 1}, {1, 1, 1});
}

CVec3 traveling_expected(double t, const Vec3d& p) {
    const double phase = 2 * kPi * (p.x + p.y + p.z) - 2 * kSqrt3 * kPi * t;
    const double c = std::cos(phase);
    return {Complex{kSqrt3 * c, c}, Complex{0.0, -2.0 * c}, Complex{-kSqrt3 * c, c}};
}

// Mixed-frequency standing wave: single mode w = pi (1, 2, -3), a = (1,1,1),
// unit medium.
ModalSolution standing_solution() {
    const std::vector<Mode> modes{{WaveVector{kPi, 2 * kPi, -3 * kPi}, CVec3{{1, 0}, {1, 0}, {1, 0}}}};
    return build_solution(modes, Medium{1, 1}, {2, 1, 2});
}

CVec3 standing_expected(double t, const Vec3d& p) {
    const double wx = kPi * (p.x + 2 * p.y - 3 * p.z);
    const double wt = std::sqrt(14.0) * kPi * t;
    const Vec3d bracket =
        std::cos(wt) * Vec3d{1, 1, 1} - (std::sin(wt) / std::sqrt(14.0)) * Vec3d{5, -4, -1};
    const Complex spatial{std::cos(wx), std::sin(wx)};
    return {spatial * bracket.x, spatial * bracket.y, spatial * bracket.z};
}

}  // namespace

TEST_CASE("medium validation and wave speed", "[fields]") {
    const Medium m{4.0, 9.0};
    CHECK(m.wave_speed() == Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(m.sqrt_mu() == 2.0);
    CHECK(m.sqrt_eps() == 3.0);
    CHECK_THROWS_AS(Medium(0.0, 1.0), InvalidMedium);
    CHECK_THROWS_AS(Medium(1.0, -2.0), InvalidMedium);
    CHECK_THROWS_AS(Medium(std::nan(""), 1.0), InvalidMedium);
}

TEST_CASE("field packing", "[fields]") {
    const Medium unit{1, 1};
    CHECK(max_abs(pack_fields(unit, {{1, 0}, {0, 0}, {0, 0}}, {{0, 0}, {1, 0}, {0, 0}}) -
                  CVec3{{1, 0}, {0, 1}, {0, 0}}) == 0.0);

    const CVec3 packed = pack_fields(unit, complexify({kSqrt3, 0, -kSqrt3}), complexify({1, -2, 1}));
    CHECK(max_abs(packed - CVec3{{kSqrt3, 1}, {0, -2}, {-kSqrt3, 1}}) < 1e-15);

    const Medium m{4, 9};
    CHECK(max_abs(pack_fields(m, complexify({2, 0, 0}), complexify({0, 0, 3})) -
                  CVec3{{4, 0}, {0, 0}, {0, 9}}) == 0.0);
}

TEST_CASE("field unpacking inverts packing", "[fields]") {
    const Medium m{4, 9};
    const FieldPair fp = unpack_fields(m, {{4, 0}, {0, 0}, {0, 9}});
    CHECK(max_abs(fp.H - complexify({2, 0, 0})) == 0.0);
    CHECK(max_abs(fp.E - complexify({0, 0, 3})) == 0.0);

    auto rng = testutil::make_rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Medium med{testutil::log_uniform(rng, 0.1, 10.0),
                         testutil::log_uniform(rng, 0.1, 10.0)};
        const CVec3 H = complexify(testutil::random_unit(rng));
        const CVec3 E = complexify(testutil::random_unit(rng));
        const FieldPair back = unpack_fields(med, pack_fields(med, H, E));
        CHECK(max_abs(back.H - H) < 1e-15);
        CHECK(max_abs(back.E - E) < 1e-15);
    }
}

TEST_CASE("solution assembly", "[propagator]") {
    SECTION("conjugate mode pair keeps one helical direction each") {
        const ModalSolution sol = traveling_solution();
        REQUIRE(sol.terms.size() == 2);
        REQUIRE(sol.terms[0].components.size() == 1);
        REQUIRE(sol.terms[1].components.size() == 1);
        // +w keeps the first helical direction, -w the mirrored one; both
        // carry the same coefficient.
        CHECK(sol.terms[0].components[0].d == 1);
        CHECK(sol.terms[1].components[0].d == 2);
        const Complex expect{kSqrt3 / 2, -0.5};
        CHECK(std::abs(sol.terms[0].components[0].alpha - expect) < 1e-14);
        CHECK(std::abs(sol.terms[1].components[0].alpha - expect) < 1e-14);
    }
    SECTION("single mixed-frequency mode keeps both helical directions") {
        const ModalSolution sol = standing_solution();
        REQUIRE(sol.terms.size() == 1);
        REQUIRE(sol.terms[0].components.size() == 2);
        CHECK(sol.terms[0].components[0].d == 1);
        CHECK(sol.terms[0].components[1].d == 2);
    }
    SECTION("empty input evaluates to zero") {
        const ModalSolution sol = build_solution({}, Medium{1, 1}, {1, 1, 1});
        CHECK(sol.empty());
        CHECK(max_abs(evaluate_at(sol, 0.7, {0.1, 0.2, 0.3})) == 0.0);
    }
    SECTION("duplicate wavevectors rejected") {
        const std::vector<Mode> modes{{WaveVector{1, 0, 0}, CVec3{{1, 0}, {0, 0}, {0, 0}}},
                                      {WaveVector{0, 1, 0}, CVec3{{1, 0}, {0, 0}, {0, 0}}},
                                      {WaveVector{1, 0, 0}, CVec3{{0, 0}, {1, 0}, {0, 0}}}};
        CHECK_THROWS_AS(build_solution(modes, Medium{1, 1}, {1, 1, 1}), DuplicateWaveVector);
    }
    SECTION("negligible components dropped") {
        const std::vector<Mode> modes{
            {WaveVector{3, 0, 0}, CVec3{{0, 0}, {1, 0}, {0, 0}}},
            {WaveVector{0, 3, 0}, CVec3{{0, 0}, {0, 0}, {1e-20, 0}}}};
        const ModalSolution sol = build_solution(modes, Medium{1, 1}, {1, 1, 1});
        REQUIRE(sol.terms.size() == 1);
    }
}

TEST_CASE("time evolution matches the traveling-wave closed form", "[propagator]") {
    const ModalSolution sol = traveling_solution();
    auto rng = testutil::make_rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const double t = testutil::uniform(rng, -3.0, 3.0);
        const Vec3d p{testutil::uniform(rng, -1.0, 2.0), testutil::uniform(rng, -1.0, 2.0),
                      testutil::uniform(rng, -1.0, 2.0)};
        CHECK(max_abs(evaluate_at(sol, t, p) - traveling_expected(t, p)) < 1e-12);
    }
}

TEST_CASE("time evolution matches the standing-wave closed form", "[propagator]") {
    const ModalSolution sol = standing_solution();
    auto rng = testutil::make_rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const double t = testutil::uniform(rng, -3.0, 3.0);
        const Vec3d p{testutil::uniform(rng, -1.0, 2.0), testutil::uniform(rng, -1.0, 2.0),
                      testutil::uniform(rng, -1.0, 2.0)};
        CHECK(max_abs(evaluate_at(sol, t, p) - standing_expected(t, p)) < 1e-12);
    }
}

TEST_CASE("evaluation at t = 0 reproduces the input series", "[propagator][property]") {
    auto rng = testutil::make_rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec3d periods{testutil::uniform(rng, 0.5, 2.0), testutil::uniform(rng, 0.5, 2.0),
                            testutil::uniform(rng, 0.5, 2.0)};
        const auto modes = testutil::random_lattice_modes(rng, periods, 8, 3, true);
        const ModalSolution sol = build_solution(modes, Medium{1, 1}, periods);

        const Vec3d p{testutil::uniform(rng, 0.0, 1.0), testutil::uniform(rng, 0.0, 1.0),
                      testutil::uniform(rng, 0.0, 1.0)};
        CVec3 direct{};
        for (const Mode& m : modes) {
            const double wx = dot(m.w.components(), p);
            direct += Complex{std::cos(wx), std::sin(wx)} * m.a;
        }
        CHECK(rel_err(evaluate_at(sol, 0.0, p), direct) < 1e-12);
    }
}

TEST_CASE("field difference evaluation", "[propagator]") {
    const ModalSolution sol = traveling_solution();

    SECTION("vanishes at t = 0") {
        CHECK(max_abs(evaluate_delta_at(sol, 0.0, {0.3, -0.2, 0.9})) == 0.0);
    }
    SECTION("closed form at the origin") {
        for (double t : {0.05, 0.3, 1.7, -0.8}) {
            const CVec3 d = evaluate_delta_at(sol, t, {0, 0, 0});
            CHECK(d.x.real() ==
                  Approx(kSqrt3 * (std::cos(2 * kSqrt3 * kPi * t) - 1.0)).margin(1e-13));
        }
    }
    SECTION("equals evaluate(t) - evaluate(0)") {
        auto rng = testutil::make_rng(29);
        for (int trial = 0; trial < 50; ++trial) {
            const ModalSolution rs = testutil::random_solution(rng);
            const double t = testutil::uniform(rng, -5.0, 5.0);
            const Vec3d p{testutil::uniform(rng, 0.0, 1.0), testutil::uniform(rng, 0.0, 1.0),
                          testutil::uniform(rng, 0.0, 1.0)};
            const CVec3 want = evaluate_at(rs, t, p) - evaluate_at(rs, 0.0, p);
            CHECK(rel_err(evaluate_delta_at(rs, t, p), want) < 1e-12);
        }
    }
}

TEST_CASE("mode evolution", "[propagator]") {
    SECTION("identity at t = 0") {
        auto rng = testutil::make_rng(31);
        const Vec3d periods{1, 1, 1};
        const auto modes = testutil::random_lattice_modes(rng, periods, 8);
        const ModalSolution sol = build_solution(modes, Medium{1, 1}, periods);
        const auto out = evolve_modes(sol, 0.0);
        REQUIRE(out.size() == modes.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            CHECK(out[i].w == modes[i].w);
            CHECK(rel_err(out[i].a, modes[i].a) < 1e-13);
        }
    }
    SECTION("single helical component evolves by a pure phase") {
        const ModalSolution sol = traveling_solution();
        for (double t : {0.2, 1.0, 13.7}) {
            const auto out = evolve_modes(sol, t);
            const double phi = -2 * kSqrt3 * kPi * t;
            const Complex phase{std::cos(phi), std::sin(phi)};
            const CVec3 a0{{kSqrt3 / 2, 0.5}, {0.0, -1.0}, {-kSqrt3 / 2, 0.5}};
            CHECK(rel_err(out[0].a, phase * a0) < 1e-12);
        }
    }
}

TEST_CASE("composition of evolutions", "[propagator][property]") {
    auto rng = testutil::make_rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const Medium medium{testutil::log_uniform(rng, 0.25, 4.0),
                            testutil::log_uniform(rng, 0.25, 4.0)};
        const Vec3d periods{1, 1, 1};
        const auto modes = testutil::random_lattice_modes(rng, periods, 6);
        const ModalSolution sol = build_solution(modes, medium, periods);

        const double t1 = testutil::uniform(rng, -4.0, 4.0);
        const double t2 = testutil::uniform(rng, -4.0, 4.0);

        const ModalSolution mid = build_solution(evolve_modes(sol, t1), medium, periods);
        const auto two_step = evolve_modes(mid, t2);
        const auto one_step = evolve_modes(sol, t1 + t2);
        REQUIRE(two_step.size() == one_step.size());
        for (std::size_t i = 0; i < one_step.size(); ++i)
            CHECK(rel_err(two_step[i].a, one_step[i].a) < 1e-12);

        // Reversal: stepping back returns the initial amplitudes.
        const auto back = evolve_modes(mid, -t1);
        for (std::size_t i = 0; i < back.size(); ++i)
            CHECK(rel_err(back[i].a, modes[i].a) < 1e-12);
    }
}

TEST_CASE("superposition of solutions", "[propagator][property]") {
    auto rng = testutil::make_rng(41);
    const Vec3d periods{1, 1, 1};
    const auto base = testutil::random_lattice_modes(rng, periods, 7);
    std::vector<Mode> other = base;
    for (Mode& m : other) m.a = testutil::random_cvec(rng);

    const Complex c1 = testutil::random_complex(rng);
    const Complex c2 = testutil::random_complex(rng);
    std::vector<Mode> combined = base;
    for (std::size_t i = 0; i < combined.size(); ++i)
        combined[i].a = c1 * base[i].a + c2 * other[i].a;

    const Medium m{1, 1};
    const ModalSolution s1 = build_solution(base, m, periods);
    const ModalSolution s2 = build_solution(other, m, periods);
    const ModalSolution sc = build_solution(combined, m, periods);

    for (int trial = 0; trial < 50; ++trial) {
        const double t = testutil::uniform(rng, -2.0, 2.0);
        const Vec3d p{testutil::uniform(rng, 0.0, 1.0), testutil::uniform(rng, 0.0, 1.0),
                      testutil::uniform(rng, 0.0, 1.0)};
        const CVec3 want = c1 * evaluate_at(s1, t, p) + c2 * evaluate_at(s2, t, p);
        CHECK(rel_err(evaluate_at(sc, t, p), want) < 1e-12);
    }
}

TEST_CASE("spatial periodicity", "[propagator][property]") {
    auto rng = testutil::make_rng(43);
    const Vec3d periods{0.5, 1.25, 2.0};
    const ModalSolution sol = testutil::random_solution(rng, 8, periods);
    for (int trial = 0; trial < 50; ++trial) {
        const double t = testutil::uniform(rng, -2.0, 2.0);
        const Vec3d p{testutil::uniform(rng, 0.0, 1.0), testutil::uniform(rng, 0.0, 1.0),
                      testutil::uniform(rng, 0.0, 1.0)};
        const Vec3d q = p + periods;
        CHECK(rel_err(evaluate_at(sol, t, q), evaluate_at(sol, t, p)) < 1e-12);
    }
}

TEST_CASE("modal energy is constant in time", "[propagator][property]") {
    auto rng = testutil::make_rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const Medium medium{testutil::log_uniform(rng, 0.25, 4.0),
                            testutil::log_uniform(rng, 0.25, 4.0)};
        const ModalSolution sol =
            testutil::random_solution(rng, 8, {1, 1, 1}, medium);
        const double e0 = modal_energy(evolve_modes(sol, 0.0));
        for (double t : {0.37, 5.0, 250.0, 1000.0, -77.3}) {
            const double et = modal_energy(evolve_modes(sol, t));
            CHECK(std::abs(et - e0) <= 1e-12 * e0);
        }
    }
}

TEST_CASE("batch evaluation agrees with pointwise calls", "[propagator]") {
    auto rng = testutil::make_rng(53);
    const ModalSolution sol = testutil::random_solution(rng, 10);
    std::vector<Vec3d> points;
    for (int i = 0; i < 97; ++i)
        points.push_back({testutil::uniform(rng, 0.0, 1.0), testutil::uniform(rng, 0.0, 1.0),
                          testutil::uniform(rng, 0.0, 1.0)});

    set_thread_count(3);
    const auto batch = evaluate(sol, 0.8, points);
    const auto delta = evaluate_delta(sol, 0.8, points);
    set_thread_count(0);
    REQUIRE(batch.size() == points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        CHECK(max_abs(batch[i] - evaluate_at(sol, 0.8, points[i])) == 0.0);
        CHECK(max_abs(delta[i] - evaluate_delta_at(sol, 0.8, points[i])) == 0.0);
    }

    const ComplexFieldSample s = sample(sol, 0.8, points[0]);
    CHECK(max_abs(s.F - batch[0]) == 0.0);
    CHECK(s.time == 0.8);
}
