#pragma once

#include "cuspcollide/geometry.hpp"

namespace cuspcollide {

// Phi(t) = t^2 (3 - 2t): the unique cubic with Phi(0)=0, Phi(1)=1,
// Phi'(0)=Phi'(1)=0. Profile of the vertical blend across the gap.
double shape_fn(double t);
double shape_fn_d1(double t); // 6 t (1 - t)
double shape_fn_d2(double t); // 6 - 12 t

// Monotone ramp: 0 for u <= 0, 1 for u >= 1, C^order at the ends.
// order 1: 3u^2-2u^3, order 2: 10u^3-15u^4+6u^5, order 3: septic.
double smoothstep(double u, int order = 2);
double smoothstep_d1(double u, int order = 2);
double smoothstep_d2(double u, int order = 2);

// Cutoff pair used by the blended extension of the gap field.
//  chi: 1 on the cusp patch box, 0 beyond twice its extent, axisymmetric
//       product of a radial ramp on [sqrt(2) r0, 2 r0] and a vertical ramp
//       on [r0, 2 r0].
//  eta: profile of the tube around the body surface, expressed through the
//       vertical distance below it ("below" = psi(r) - x3): 1 within d0/2,
//       0 beyond d0. The tube translates rigidly with the body, which is
//       how the reference-neighborhood shift enters.
struct CutoffPair {
    double r0 = 0.5;
    double d0 = 0.25;
    int order = 2;

    double chi(double r, double x3) const;
    double chi_r(double r, double x3) const;
    double chi_3(double r, double x3) const;
    double chi_rr(double r, double x3) const;
    double chi_33(double r, double x3) const;
    double chi_r3(double r, double x3) const;

    double eta_profile(double below) const;
    double eta_profile_d1(double below) const;
    double eta_profile_d2(double below) const;
};

CutoffPair make_cutoffs(double r0, double d0, int order = 2);

struct Velocity {
    double w_r = 0.0;
    double w_3 = 0.0;
};

// The five nonzero cylindrical gradient entries of an axisymmetric field
// (w_r, 0, w_3). Frobenius norm of the full gradient is the plain sum of
// squares of the five entries; the symmetrized variant halves the shear
// pair, |D|^2 = dr_wr^2 + (wr/r)^2 + d3_w3^2 + (d3_wr + dr_w3)^2 / 2.
struct GradTensor {
    double dr_wr = 0.0;
    double d3_wr = 0.0;
    double wr_over_r = 0.0;
    double dr_w3 = 0.0;
    double d3_w3 = 0.0;

    double frobenius() const;
    double sym_frobenius() const;
    double divergence() const; // dr_wr + wr_over_r + d3_w3, identically 0
};

enum class FieldMode {
    CuspOnly, // Phi formula on the closed gap {r <= r0, 0 <= x3 <= psi(r)}
    Extended  // blended field on the whole half space x3 >= 0
};

// Divergence-free comparison field: equal to e3 on the body, 0 on the wall,
// built as the curl of (stream * e_theta). In the gap,
//   stream = (r/2) Phi(x3/psi(r)),
// and the extension blends this with the tube profile eta through chi.
// All derivatives are closed form; h enters only through psi.
//
// Immutable after construction; every evaluation is pure.
class TestField {
  public:
    explicit TestField(SolidProfile profile, FieldMode mode = FieldMode::CuspOnly,
                       int smooth_order = 2);

    const SolidProfile& profile() const { return profile_; }
    FieldMode mode() const { return mode_; }
    const CutoffPair& cutoffs() const { return cutoffs_; }
    bool cutoff_consistent() const { return cutoff_consistent_; }

    double stream(double r, double x3) const;
    Velocity velocity(double r, double x3) const;
    GradTensor gradient(double r, double x3) const;
    Velocity dh_velocity(double r, double x3) const;

    bool on_solid(double r, double x3) const; // x3 >= psi(r)

  private:
    struct Blend; // stream = (r/2) B; B plus the partials needed below

    Blend blend(double r, double x3) const;
    void check_domain(double r, double x3) const;

    SolidProfile profile_;
    FieldMode mode_;
    CutoffPair cutoffs_;
    bool cutoff_consistent_;
};

} // namespace cuspcollide
