#pragma once

namespace cuspcollide {

// Axisymmetric body-above-wall configuration near the contact axis.
// The lower surface of the body sits at x3 = h + r^(1+alpha); d0 is the
// clearance the body keeps from the container boundary away from the
// contact patch.
struct SolidProfile {
    double alpha = 1.0;   // surface regularity exponent, 0 < alpha <= 1
    double h     = 0.1;   // gap height on the axis, > 0
    double r0    = 0.5;   // radius of the cusp patch, > d0
    double d0    = 0.25;  // safety clearance, 0 < d0 < r0

    void validate() const;

    // h + r0^(1+alpha) <= d0 < r0. Advisory only: when it fails, the blended
    // extension may not vanish on the whole container boundary. Evaluation
    // is still well defined, so callers get a report rather than an error.
    bool cutoff_consistent() const;
};

// gap thickness psi(r) = h + r^(1+alpha), r >= 0
double gap(const SolidProfile& profile, double r);
// psi'(r) = (1+alpha) r^alpha
double gap_dr(const SolidProfile& profile, double r);

// The thin gap {0 <= r < r0, 0 <= x3 <= psi(r)} carrying the volume
// measure 2*pi*r dr dx3.
struct CuspRegion {
    SolidProfile profile;

    bool contains(double r, double x3) const;
};

inline CuspRegion cusp_region(const SolidProfile& profile) { return CuspRegion{profile}; }

} // namespace cuspcollide
