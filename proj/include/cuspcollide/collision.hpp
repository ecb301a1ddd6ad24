#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspcollide {

// Inputs of the contact budget. The estimate constant C0 is always an
// input: it collects the geometry- and exponent-dependent factors of the
// momentum estimates and is never derived numerically here.
struct CollisionBudget {
    double fluid_energy = 0.0; // integral of |m0|^2/(2 rho0) + rho0^gamma/(gamma-1)
    double m = 1.0;            // solid mass
    double V0 = 0.0;           // initial vertical speed
    double J0 = 0.0;           // axial moment of inertia
    double omega0 = 0.0;       // initial angular speed about the symmetry axis
    double g = 1.0;            // gravity (absorbed into C0 by the estimates)
    double C0 = 1.0;           // estimate constant
    double p = 2.0;
    double gamma = 3.0;

    void validate() const;
};

// E0 = fluid_energy + (m/2) V0^2 + (1/2) J0 omega0^2
double energy_budget(const CollisionBudget& budget);

struct FeasibilityReport {
    double E0 = 0.0;
    double K = 0.0; // C0 max(m^-1/2, m^-3/2) (1 + E0^(1/2 + 1/gamma + 1/p))
    bool collides = false;             // K < 1
    std::optional<double> time_bound;  // K/(1-K), only when collides
};

FeasibilityReport feasibility(const CollisionBudget& budget);

// Minimal-mass search. The initial speeds scale as V0 = v_coeff/sqrt(m),
// omega0 = w_coeff/sqrt(m), and j0 is the specific moment of inertia
// (inertia per unit mass), so E0 is independent of m and K(m) is strictly
// decreasing; bisection then brackets the unique K = 1 crossing.
struct MinMassQuery {
    double C0 = 1.0;
    double fluid_energy = 0.0;
    double v0_coeff = 0.0;
    double omega0_coeff = 0.0;
    double j0 = 0.0; // moment of inertia per unit mass
    double gamma = 3.0;
    double p = 2.0;
    double m_lo = 1e-3;
    double m_hi = 1e9;
    double rel_tol = 1e-10;
};

struct MinMassResult {
    double mass = 0.0;
    double E0 = 0.0;
    double K_at_mass = 0.0;
    // "light" when the threshold falls below unit mass (the m^-3/2 branch
    // of the max is active there), "heavy" otherwise, "bracket_lo" when
    // even the lower bracket end already satisfies K < 1
    std::string branch;
};

class BracketError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

MinMassResult min_mass(const MinMassQuery& query); // throws BracketError

// Quasi-static settling: hdot = -m g / D(h) with drag D(h) = c h^-sigma.
// Touchdown time is finite iff sigma < 1, T = c h0^(1-sigma)/(m g (1-sigma)).
struct FallParams {
    double m = 1.0;
    double g = 1.0;
    double c = 1.0;     // drag amplitude
    double sigma = 0.5; // drag growth exponent
    double h0 = 1.0;    // initial height

    void validate() const;
};

struct FallControl {
    double dt_frac = 0.02;      // per-step relative height decrement
    double floor_ratio = 1e-40; // touchdown declared at h <= floor_ratio * h0 (sigma < 1)
    double cutoff = 1e-12;      // integration stops here when sigma >= 1
    std::size_t max_steps = 2000000;
    std::size_t record_stride = 1; // trajectory keeps every k-th step
};

struct FallTrajectory {
    std::vector<double> t;
    std::vector<double> h;
    std::optional<double> touchdown; // empty when the gap never closes
};

// RK4 with steps limited to a fixed relative height decrement; for
// sigma < 1 the tail below the floor contributes at most
// (floor_ratio)^(1-sigma) of the total time, which the default floor keeps
// far below the 0.1% verification tolerance for sigma <= 0.9.
FallTrajectory fall_demo(const FallParams& params, const FallControl& control = {});

} // namespace cuspcollide
