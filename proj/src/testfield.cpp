#include "cuspcollide/testfield.hpp"

#include <cmath>
#include <stdexcept>

namespace cuspcollide {

double shape_fn(double t) { return t * t * (3.0 - 2.0 * t); }
double shape_fn_d1(double t) { return 6.0 * t * (1.0 - t); }
double shape_fn_d2(double t) { return 6.0 - 12.0 * t; }

double smoothstep(double u, int order) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    switch (order) {
    case 1: return u * u * (3.0 - 2.0 * u);
    case 2: return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
    case 3: return u * u * u * u * (35.0 + u * (-84.0 + u * (70.0 - 20.0 * u)));
    default: throw std::invalid_argument("smoothstep: order must be 1, 2 or 3");
    }
}

double smoothstep_d1(double u, int order) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    switch (order) {
    case 1: return 6.0 * u * (1.0 - u);
    case 2: return 30.0 * u * u * (1.0 + u * (-2.0 + u));
    case 3: return u * u * u * (140.0 + u * (-420.0 + u * (420.0 - 140.0 * u)));
    default: throw std::invalid_argument("smoothstep: order must be 1, 2 or 3");
    }
}

double smoothstep_d2(double u, int order) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    switch (order) {
    case 1: return 6.0 - 12.0 * u;
    case 2: return 60.0 * u * (1.0 + u * (-3.0 + 2.0 * u));
    case 3: return u * u * (420.0 + u * (-1680.0 + u * (2100.0 - 840.0 * u)));
    default: throw std::invalid_argument("smoothstep: order must be 1, 2 or 3");
    }
}

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
} // namespace

// Radial ramp: 1 for r <= sqrt(2) r0 (covers the corners of the inner box),
// 0 for r >= 2 r0 (inscribed circle of the outer box).
double CutoffPair::chi(double r, double x3) const {
    const double xr = 1.0 - smoothstep((r - kSqrt2 * r0) / ((2.0 - kSqrt2) * r0), order);
    const double x3f = 1.0 - smoothstep((x3 - r0) / r0, order);
    return xr * x3f;
}

double CutoffPair::chi_r(double r, double x3) const {
    const double w = (2.0 - kSqrt2) * r0;
    const double xr = -smoothstep_d1((r - kSqrt2 * r0) / w, order) / w;
    const double x3f = 1.0 - smoothstep((x3 - r0) / r0, order);
    return xr * x3f;
}

double CutoffPair::chi_3(double r, double x3) const {
    const double xr = 1.0 - smoothstep((r - kSqrt2 * r0) / ((2.0 - kSqrt2) * r0), order);
    return xr * (-smoothstep_d1((x3 - r0) / r0, order) / r0);
}

double CutoffPair::chi_rr(double r, double x3) const {
    const double w = (2.0 - kSqrt2) * r0;
    const double xr = smoothstep_d2((r - kSqrt2 * r0) / w, order) / (w * w);
    const double x3f = 1.0 - smoothstep((x3 - r0) / r0, order);
    return -xr * x3f;
}

double CutoffPair::chi_33(double r, double x3) const {
    const double xr = 1.0 - smoothstep((r - kSqrt2 * r0) / ((2.0 - kSqrt2) * r0), order);
    return xr * (-smoothstep_d2((x3 - r0) / r0, order) / (r0 * r0));
}

double CutoffPair::chi_r3(double r, double x3) const {
    const double w = (2.0 - kSqrt2) * r0;
    const double xr = -smoothstep_d1((r - kSqrt2 * r0) / w, order) / w;
    return xr * (-smoothstep_d1((x3 - r0) / r0, order) / r0);
}

double CutoffPair::eta_profile(double below) const {
    return 1.0 - smoothstep((below - 0.5 * d0) / (0.5 * d0), order);
}

double CutoffPair::eta_profile_d1(double below) const {
    const double w = 0.5 * d0;
    return -smoothstep_d1((below - w) / w, order) / w;
}

double CutoffPair::eta_profile_d2(double below) const {
    const double w = 0.5 * d0;
    return -smoothstep_d2((below - w) / w, order) / (w * w);
}

CutoffPair make_cutoffs(double r0, double d0, int order) {
    if (!(d0 > 0.0) || !(d0 < r0))
        throw std::invalid_argument("make_cutoffs: need 0 < d0 < r0");
    if (order < 1 || order > 3)
        throw std::invalid_argument("make_cutoffs: smoothness order must be 1, 2 or 3");
    return CutoffPair{r0, d0, order};
}

double GradTensor::frobenius() const {
    return std::sqrt(dr_wr * dr_wr + d3_wr * d3_wr + wr_over_r * wr_over_r + dr_w3 * dr_w3 +
                     d3_w3 * d3_w3);
}

double GradTensor::sym_frobenius() const {
    const double shear = d3_wr + dr_w3;
    return std::sqrt(dr_wr * dr_wr + wr_over_r * wr_over_r + d3_w3 * d3_w3 +
                     0.5 * shear * shear);
}

double GradTensor::divergence() const { return dr_wr + wr_over_r + d3_w3; }

TestField::TestField(SolidProfile profile, FieldMode mode, int smooth_order)
    : profile_(profile), mode_(mode), cutoffs_(make_cutoffs(profile.r0, profile.d0, smooth_order)),
      cutoff_consistent_(profile.cutoff_consistent()) {
    profile_.validate();
}

bool TestField::on_solid(double r, double x3) const { return x3 >= gap(profile_, r); }

void TestField::check_domain(double r, double x3) const {
    if (r < 0.0 || x3 < 0.0)
        throw std::invalid_argument("TestField: point outside the half space r, x3 >= 0");
    if (mode_ == FieldMode::CuspOnly) {
        if (r > profile_.r0 || x3 > gap(profile_, r))
            throw std::invalid_argument("TestField: point outside the gap in cusp-only mode");
    }
}

// B(r, x3) with stream = (r/2) B. In the gap (chi = 1) B reduces to
// Phi(x3/psi); on the solid side B = 1. Second derivatives in r appear only
// premultiplied by r, which keeps everything finite on the axis for
// alpha < 1 (r psi'' = alpha psi').
struct TestField::Blend {
    double B = 1.0;
    double B_r = 0.0, B_3 = 0.0;
    double B_33 = 0.0, B_r3 = 0.0, rB_rr = 0.0;
    double B_h = 0.0, B_rh = 0.0, B_3h = 0.0;
    bool solid = false;
};

TestField::Blend TestField::blend(double r, double x3) const {
    Blend out;
    const double psi = gap(profile_, r);
    if (x3 >= psi) {
        out.solid = true;
        return out; // constant vertical motion, all derivatives vanish
    }

    const double dpsi = gap_dr(profile_, r);
    const double rddpsi = profile_.alpha * dpsi; // r psi''(r)

    // gap-profile part G = Phi(t), t = x3/psi
    const double t = x3 / psi;
    const double P = shape_fn(t);
    const double dP = shape_fn_d1(t);
    const double ddP = shape_fn_d2(t);
    const double t_r = -t * dpsi / psi;
    const double t_3 = 1.0 / psi;
    const double t_h = -t / psi;
    const double rt_rr = t * (2.0 * r * dpsi * dpsi - rddpsi * psi) / (psi * psi);
    const double t_r3 = -dpsi / (psi * psi);
    const double t_rh = 2.0 * t * dpsi / (psi * psi);
    const double t_3h = -1.0 / (psi * psi);

    const double G = P;
    const double G_r = dP * t_r;
    const double G_3 = dP * t_3;
    const double G_33 = ddP * t_3 * t_3;
    const double G_r3 = ddP * t_r * t_3 + dP * t_r3;
    const double rG_rr = ddP * t_r * (r * t_r) + dP * rt_rr;
    const double G_h = dP * t_h;
    const double G_3h = ddP * t_3 * t_h + dP * t_3h;
    const double G_rh = ddP * t_r * t_h + dP * t_rh;

    if (mode_ == FieldMode::CuspOnly) {
        out.B = G;
        out.B_r = G_r;
        out.B_3 = G_3;
        out.B_33 = G_33;
        out.B_r3 = G_r3;
        out.rB_rr = rG_rr;
        out.B_h = G_h;
        out.B_3h = G_3h;
        out.B_rh = G_rh;
        return out;
    }

    // tube part: eta = F(psi - x3), translating rigidly with the body
    const double below = psi - x3;
    const double F = cutoffs_.eta_profile(below);
    const double F1 = cutoffs_.eta_profile_d1(below);
    const double F2 = cutoffs_.eta_profile_d2(below);
    const double e = F;
    const double e_r = F1 * dpsi;
    const double e_3 = -F1;
    const double e_33 = F2;
    const double e_r3 = -F2 * dpsi;
    const double re_rr = F2 * r * dpsi * dpsi + F1 * rddpsi;
    const double e_h = F1;
    const double e_3h = -F2;
    const double e_rh = F2 * dpsi;

    const double c = cutoffs_.chi(r, x3);
    const double c_r = cutoffs_.chi_r(r, x3);
    const double c_3 = cutoffs_.chi_3(r, x3);
    const double c_rr = cutoffs_.chi_rr(r, x3);
    const double c_33 = cutoffs_.chi_33(r, x3);
    const double c_r3 = cutoffs_.chi_r3(r, x3);

    // B = eta + chi (G - eta)
    out.B = e + c * (G - e);
    out.B_r = e_r + c_r * (G - e) + c * (G_r - e_r);
    out.B_3 = e_3 + c_3 * (G - e) + c * (G_3 - e_3);
    out.B_33 = e_33 + c_33 * (G - e) + 2.0 * c_3 * (G_3 - e_3) + c * (G_33 - e_33);
    out.B_r3 = e_r3 + c_r3 * (G - e) + c_r * (G_3 - e_3) + c_3 * (G_r - e_r) + c * (G_r3 - e_r3);
    out.rB_rr = re_rr + r * c_rr * (G - e) + 2.0 * c_r * r * (G_r - e_r) + c * (rG_rr - re_rr);
    out.B_h = e_h + c * (G_h - e_h);
    out.B_3h = e_3h + c_3 * (G_h - e_h) + c * (G_3h - e_3h);
    out.B_rh = e_rh + c_r * (G_h - e_h) + c * (G_rh - e_rh);
    return out;
}

double TestField::stream(double r, double x3) const {
    check_domain(r, x3);
    const Blend b = blend(r, x3);
    return 0.5 * r * b.B;
}

// w = curl(stream e_theta): w_r = -d3 stream, w_3 = (1/r) dr (r stream).
Velocity TestField::velocity(double r, double x3) const {
    check_domain(r, x3);
    const Blend b = blend(r, x3);
    if (b.solid) return Velocity{0.0, 1.0};
    return Velocity{-0.5 * r * b.B_3, b.B + 0.5 * r * b.B_r};
}

GradTensor TestField::gradient(double r, double x3) const {
    check_domain(r, x3);
    const Blend b = blend(r, x3);
    GradTensor g;
    if (b.solid) return g;
    g.dr_wr = -0.5 * b.B_3 - 0.5 * r * b.B_r3;
    g.d3_wr = -0.5 * r * b.B_33;
    g.wr_over_r = -0.5 * b.B_3;
    g.dr_w3 = 1.5 * b.B_r + 0.5 * b.rB_rr;
    g.d3_w3 = b.B_3 + 0.5 * r * b.B_r3;
    return g;
}

Velocity TestField::dh_velocity(double r, double x3) const {
    check_domain(r, x3);
    const Blend b = blend(r, x3);
    if (b.solid) return Velocity{0.0, 0.0};
    return Velocity{-0.5 * r * b.B_3h, b.B_h + 0.5 * r * b.B_rh};
}

} // namespace cuspcollide
