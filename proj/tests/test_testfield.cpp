#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cuspcollide/testfield.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace cuspcollide;

namespace {

// R2 low-discrepancy sequence: deterministic quasi-random points
struct QuasiRandom {
    double u = 0.0, v = 0.0;
    std::pair<double, double> next() {
        u = std::fmod(u + 0.7548776662466927, 1.0);
        v = std::fmod(v + 0.5698402909980532, 1.0);
        return {u, v};
    }
};

SolidProfile default_profile(double alpha = 1.0, double h = 0.05) {
    SolidProfile p;
    p.alpha = alpha;
    p.h = h;
    return p;
}

// profile satisfying the cutoff consistency condition, for extension tests
SolidProfile consistent_profile(double alpha = 1.0, double h = 0.01) {
    SolidProfile p{alpha, h, 0.2, 0.15};
    REQUIRE(p.cutoff_consistent());
    return p;
}

} // namespace

TEST_CASE("shape function endpoints and midpoint") {
    CHECK(shape_fn(0.0) == 0.0);
    CHECK(shape_fn(1.0) == 1.0);
    CHECK(shape_fn(0.5) == 0.5);
    CHECK(shape_fn_d1(0.0) == 0.0);
    CHECK(shape_fn_d1(1.0) == 0.0);
}

TEST_CASE("smoothstep blends are symmetric and C^order") {
    for (int order : {1, 2, 3}) {
        CHECK(smoothstep(0.0, order) == 0.0);
        CHECK(smoothstep(1.0, order) == 1.0);
        CHECK(smoothstep(0.5, order) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(smoothstep(-0.5, order) == 0.0);
        CHECK(smoothstep(1.5, order) == 1.0);
        CHECK(smoothstep_d1(1e-9, order) == doctest::Approx(0.0).epsilon(1e-6));
        // derivative formulas against central differences
        for (double u : {0.13, 0.42, 0.77}) {
            const double eps = 1e-6;
            const double fd1 = (smoothstep(u + eps, order) - smoothstep(u - eps, order)) / (2 * eps);
            CHECK(smoothstep_d1(u, order) == doctest::Approx(fd1).epsilon(1e-7));
            const double fd2 =
                (smoothstep_d1(u + eps, order) - smoothstep_d1(u - eps, order)) / (2 * eps);
            CHECK(smoothstep_d2(u, order) == doctest::Approx(fd2).epsilon(1e-6));
        }
    }
    // second derivative continuity at the ends for order >= 2
    CHECK(smoothstep_d2(1e-9, 2) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(smoothstep_d2(1.0 - 1e-9, 2) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("cutoff pair plateau and support") {
    const CutoffPair cut = make_cutoffs(0.5, 0.25);
    CHECK(cut.chi(0.3, 0.3) == 1.0);  // inside the inner box
    CHECK(cut.chi(1.2, 0.3) == 0.0);  // beyond the outer box
    CHECK(cut.chi(0.3, 1.2) == 0.0);  // too high
    // radial transition midpoint of [sqrt(2) r0, 2 r0]
    const double mid_r = 0.5 * (std::sqrt(2.0) * 0.5 + 1.0);
    CHECK(cut.chi(mid_r, 0.1) == doctest::Approx(0.5).epsilon(1e-12));
    // eta tube: 1 within d0/2 of the surface, 0 beyond d0, half way between
    CHECK(cut.eta_profile(0.0) == 1.0);
    CHECK(cut.eta_profile(0.124) == 1.0);
    CHECK(cut.eta_profile(0.26) == 0.0);
    CHECK(cut.eta_profile(0.75 * 0.25) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(make_cutoffs(0.2, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(make_cutoffs(0.5, 0.25, 4), std::invalid_argument);
}

TEST_CASE("stream values on wall, gap boundary and solid") {
    const TestField field(default_profile(1.0, 0.1));
    CHECK(field.stream(0.2, 0.0) == 0.0);
    // x3 = psi(0.2) = 0.14: full vertical flux, stream = r/2
    CHECK(field.stream(0.2, 0.14) == doctest::Approx(0.1).epsilon(1e-14));

    const TestField ext(consistent_profile(), FieldMode::Extended);
    const double psi = gap(ext.profile(), 0.05);
    CHECK(ext.stream(0.05, psi + 0.02) == doctest::Approx(0.025).epsilon(1e-14));
    CHECK(ext.stream(0.05, psi * 0.5) < 0.025);
}

TEST_CASE("cusp-only mode rejects points outside the gap") {
    const TestField field(default_profile(1.0, 0.1));
    CHECK_THROWS_AS(field.velocity(0.2, 0.15), std::invalid_argument);
    CHECK_THROWS_AS(field.velocity(0.6, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(field.velocity(-0.1, 0.05), std::invalid_argument);
    CHECK_NOTHROW(field.velocity(0.2, 0.14));
}

TEST_CASE("boundary adherence: e3 on the body, 0 on the wall") {
    for (FieldMode mode : {FieldMode::CuspOnly, FieldMode::Extended}) {
        const SolidProfile prof =
            mode == FieldMode::CuspOnly ? default_profile(0.5, 0.02) : consistent_profile(0.5);
        const TestField field(prof, mode);
        QuasiRandom qr;
        double worst_solid = 0.0, worst_wall = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const auto [u, v] = qr.next();
            const double r = u * prof.r0;
            const Velocity on_body = field.velocity(r, gap(prof, r));
            worst_solid = std::max({worst_solid, std::abs(on_body.w_r),
                                    std::abs(on_body.w_3 - 1.0)});
            const Velocity on_wall = field.velocity(v * prof.r0 * 0.999, 0.0);
            worst_wall = std::max({worst_wall, std::abs(on_wall.w_r), std::abs(on_wall.w_3)});
        }
        CHECK(worst_solid <= 1e-12);
        CHECK(worst_wall <= 1e-12);
    }
}

TEST_CASE("divergence vanishes at 1e4 quasi-random gap points") {
    for (double alpha : {0.25, 1.0}) {
        const SolidProfile prof = default_profile(alpha, 0.02);
        const TestField field(prof);
        QuasiRandom qr;
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const auto [u, v] = qr.next();
            const double r = u * prof.r0;
            const double x3 = v * gap(prof, r);
            const GradTensor g = field.gradient(r, x3);
            const double scale =
                std::abs(g.dr_wr) + std::abs(g.wr_over_r) + std::abs(g.d3_w3) + 1e-300;
            worst = std::max(worst, std::abs(g.divergence()) / scale);
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("divergence also vanishes across the blended extension") {
    const SolidProfile prof = consistent_profile();
    const TestField field(prof, FieldMode::Extended);
    QuasiRandom qr;
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto [u, v] = qr.next();
        const double r = u * 3.0 * prof.r0;
        const double x3 = v * 3.0 * prof.r0;
        if (field.on_solid(r, x3))
            continue;
        const GradTensor g = field.gradient(r, x3);
        const double scale =
            std::abs(g.dr_wr) + std::abs(g.wr_over_r) + std::abs(g.d3_w3) + 1e-300;
        worst = std::max(worst, std::abs(g.divergence()) / scale);
    }
    CHECK(worst <= 1e-12);
}

namespace {

// central-difference oracle: w_r = -d3 stream, w_3 = (1/r) dr (r stream)
Velocity fd_velocity_from_stream(const TestField& field, double r, double x3, double psi) {
    const double er = 1e-5 * std::max(r, 0.05);
    const double e3 = 1e-6 * psi;
    const double d3 = (field.stream(r, x3 + e3) - field.stream(r, x3 - e3)) / (2 * e3);
    const double num = (r + er) * field.stream(r + er, x3) - (r - er) * field.stream(r - er, x3);
    return Velocity{-d3, num / (2 * er * r)};
}

} // namespace

TEST_CASE("velocity equals the curl of the stream function") {
    for (double alpha : {0.3, 0.5, 1.0}) {
        const SolidProfile prof = default_profile(alpha, 0.03);
        const TestField field(prof);
        QuasiRandom qr;
        for (int i = 0; i < 300; ++i) {
            const auto [u, v] = qr.next();
            const double r = 0.05 + u * (prof.r0 - 0.06);
            const double psi = gap(prof, r);
            const double x3 = (0.1 + 0.8 * v) * psi;
            const Velocity fd = fd_velocity_from_stream(field, r, x3, psi);
            const Velocity an = field.velocity(r, x3);
            const double scale = std::max({std::abs(an.w_r), std::abs(an.w_3), 1e-3});
            CHECK(std::abs(an.w_r - fd.w_r) / scale <= 1e-6);
            CHECK(std::abs(an.w_3 - fd.w_3) / scale <= 1e-6);
        }
    }
}

TEST_CASE("gradient entries match finite differences of the velocity") {
    for (FieldMode mode : {FieldMode::CuspOnly, FieldMode::Extended}) {
        const SolidProfile prof =
            mode == FieldMode::CuspOnly ? default_profile(0.6, 0.03) : consistent_profile(0.6);
        const TestField field(prof, mode);
        QuasiRandom qr;
        int checked = 0;
        for (int i = 0; checked < 1000; ++i) {
            const auto [u, v] = qr.next();
            const double rmax = mode == FieldMode::CuspOnly ? prof.r0 - 0.06 : 3.0 * prof.r0;
            const double r = 0.05 + u * (rmax - 0.05);
            const double psi = gap(prof, r);
            const double x3 = (0.1 + 0.8 * v) * psi;
            const double er = 1e-5 * std::max(r, 0.05);
            const double e3 = 1e-6 * psi;
            if (mode == FieldMode::CuspOnly && (r + er > prof.r0))
                continue;
            ++checked;
            const Velocity vp = field.velocity(r + er, x3);
            const Velocity vm = field.velocity(r - er, x3);
            const Velocity up = field.velocity(r, x3 + e3);
            const Velocity um = field.velocity(r, x3 - e3);
            const Velocity v0 = field.velocity(r, x3);
            const GradTensor g = field.gradient(r, x3);
            const double scale = std::max({std::abs(g.dr_wr), std::abs(g.d3_wr),
                                           std::abs(g.wr_over_r), std::abs(g.dr_w3),
                                           std::abs(g.d3_w3), 1e-3});
            CHECK(std::abs(g.dr_wr - (vp.w_r - vm.w_r) / (2 * er)) / scale <= 1e-6);
            CHECK(std::abs(g.dr_w3 - (vp.w_3 - vm.w_3) / (2 * er)) / scale <= 1e-6);
            CHECK(std::abs(g.d3_wr - (up.w_r - um.w_r) / (2 * e3)) / scale <= 1e-6);
            CHECK(std::abs(g.d3_w3 - (up.w_3 - um.w_3) / (2 * e3)) / scale <= 1e-6);
            CHECK(std::abs(g.wr_over_r - v0.w_r / r) / scale <= 1e-6);
        }
    }
}

TEST_CASE("dh_velocity matches finite differences in h") {
    const double alpha = 0.8;
    QuasiRandom qr;
    for (int i = 0; i < 1000; ++i) {
        const auto [u, v] = qr.next();
        const double h = 0.02 + 0.05 * u;
        const SolidProfile prof = default_profile(alpha, h);
        const TestField field(prof);
        const double r = 0.04 + 0.4 * v;
        const double psi_small = gap(default_profile(alpha, h - 1e-6), r);
        const double x3 = 0.5 * psi_small; // inside the gap for both shifted profiles
        const double eps = 1e-6;
        const TestField fp(default_profile(alpha, h + eps));
        const TestField fm(default_profile(alpha, h - eps));
        const Velocity wp = fp.velocity(r, x3);
        const Velocity wm = fm.velocity(r, x3);
        const Velocity an = field.dh_velocity(r, x3);
        const double scale = std::max({std::abs(an.w_r), std::abs(an.w_3), 1e-3});
        CHECK(std::abs(an.w_r - (wp.w_r - wm.w_r) / (2 * eps)) / scale <= 1e-6);
        CHECK(std::abs(an.w_3 - (wp.w_3 - wm.w_3) / (2 * eps)) / scale <= 1e-6);
    }
}

TEST_CASE("dh_velocity vanishes on the solid and on the wall") {
    const TestField ext(consistent_profile(), FieldMode::Extended);
    const double psi = gap(ext.profile(), 0.1);
    const Velocity inside = ext.dh_velocity(0.1, psi + 0.05);
    CHECK(inside.w_r == 0.0);
    CHECK(inside.w_3 == 0.0);
    const Velocity wall = ext.dh_velocity(0.1, 0.0);
    CHECK(wall.w_r == 0.0);
    CHECK(wall.w_3 == 0.0);
}

TEST_CASE("gradient is zero on the solid interior; wr/r finite on the axis") {
    const TestField ext(consistent_profile(), FieldMode::Extended);
    const double psi = gap(ext.profile(), 0.1);
    const GradTensor g = ext.gradient(0.1, psi + 0.05);
    CHECK(g.frobenius() == 0.0);

    const TestField field(default_profile(0.5, 0.04));
    const GradTensor axis = field.gradient(0.0, 0.02);
    CHECK(std::isfinite(axis.wr_over_r));
    // limit along the axis: wr/r -> -Phi'(x3/h)/(2h)
    const double t = 0.02 / 0.04;
    CHECK(axis.wr_over_r == doctest::Approx(-shape_fn_d1(t) / (2 * 0.04)).epsilon(1e-12));
    const GradTensor near_axis = field.gradient(1e-7, 0.02);
    CHECK(near_axis.wr_over_r == doctest::Approx(axis.wr_over_r).epsilon(1e-5));
}

TEST_CASE("extension is continuous across the blend seams") {
    const SolidProfile prof = consistent_profile();
    const TestField field(prof, FieldMode::Extended);
    const double eps = 1e-9;
    // seams: start/end of the radial cutoff blend, the vertical blend,
    // and the eta tube edges crossed vertically
    for (double r_seam : {std::sqrt(2.0) * prof.r0, 2.0 * prof.r0}) {
        for (double x3 : {0.02, 0.1}) {
            const Velocity a = field.velocity(r_seam - eps, x3);
            const Velocity b = field.velocity(r_seam + eps, x3);
            CHECK(std::abs(a.w_r - b.w_r) <= 1e-6);
            CHECK(std::abs(a.w_3 - b.w_3) <= 1e-6);
        }
    }
    const double r = 2.5 * prof.r0; // far enough out that the tube sits above the wall
    const double psi = gap(prof, r);
    for (double below : {0.5 * prof.d0, prof.d0}) {
        const double x3 = psi - below;
        const Velocity a = field.velocity(r, x3 - eps);
        const Velocity b = field.velocity(r, x3 + eps);
        CHECK(std::abs(a.w_r - b.w_r) <= 1e-6);
        CHECK(std::abs(a.w_3 - b.w_3) <= 1e-6);
    }
    // crossing the body surface itself: velocity continuous, e3 on both sides
    const Velocity below_surface = field.velocity(0.1, gap(prof, 0.1) - 1e-12);
    CHECK(below_surface.w_r == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(below_surface.w_3 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("field magnitudes outside the gap patch are uniform in h") {
    // mirror of the exterior bound: sampled sups vary by < 5% over the sweep
    const std::vector<double> h_values{1e-4, 1e-3, 1e-2, 1e-1};
    std::vector<double> sup_w, sup_grad, sup_dh;
    for (double h : h_values) {
        SolidProfile prof;
        prof.alpha = 1.0;
        prof.h = h;
        const TestField field(prof, FieldMode::Extended);
        double sw = 0.0, sg = 0.0, sd = 0.0;
        // the grid must cover the moving tube layer for every h in the sweep
        const int nr = 200, n3 = 200;
        for (int i = 0; i <= nr; ++i) {
            const double r = 1.05 * prof.r0 + (2.4 * prof.r0 - 1.05 * prof.r0) * i / nr;
            for (int j = 0; j <= n3; ++j) {
                const double x3 = 3.2 * prof.r0 * j / n3;
                if (field.on_solid(r, x3))
                    continue;
                const Velocity v = field.velocity(r, x3);
                const Velocity dh = field.dh_velocity(r, x3);
                sw = std::max(sw, std::hypot(v.w_r, v.w_3));
                sg = std::max(sg, field.gradient(r, x3).frobenius());
                sd = std::max(sd, std::hypot(dh.w_r, dh.w_3));
            }
        }
        sup_w.push_back(sw);
        sup_grad.push_back(sg);
        sup_dh.push_back(sd);
    }
    auto spread = [](const std::vector<double>& v) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        return (*hi - *lo) / *hi;
    };
    CHECK(spread(sup_w) < 0.05);
    CHECK(spread(sup_grad) < 0.05);
    CHECK(spread(sup_dh) < 0.05);
}

TEST_CASE("frobenius norm conventions") {
    GradTensor g{1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK(g.frobenius() == doctest::Approx(std::sqrt(1. + 4. + 9. + 16. + 25.)).epsilon(1e-15));
    CHECK(g.sym_frobenius() ==
          doctest::Approx(std::sqrt(1. + 9. + 25. + 0.5 * (2. + 4.) * (2. + 4.))).epsilon(1e-15));
}
