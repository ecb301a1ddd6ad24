#include "cuspcollide/collision.hpp"

#include <algorithm>
#include <cmath>

namespace cuspcollide {

void CollisionBudget::validate() const {
    if (fluid_energy < 0.0)
        throw std::invalid_argument("CollisionBudget: fluid energy must be nonnegative");
    if (!(m > 0.0))
        throw std::invalid_argument("CollisionBudget: mass must be positive");
    if (J0 < 0.0)
        throw std::invalid_argument("CollisionBudget: moment of inertia must be nonnegative");
    if (!(g > 0.0))
        throw std::invalid_argument("CollisionBudget: gravity must be positive");
    if (!(C0 > 0.0))
        throw std::invalid_argument("CollisionBudget: estimate constant must be positive");
    if (!(p > 1.0))
        throw std::invalid_argument("CollisionBudget: p must exceed 1");
    if (!(gamma > 1.0))
        throw std::invalid_argument("CollisionBudget: gamma must exceed 1");
}

double energy_budget(const CollisionBudget& budget) {
    budget.validate();
    return budget.fluid_energy + 0.5 * budget.m * budget.V0 * budget.V0 +
           0.5 * budget.J0 * budget.omega0 * budget.omega0;
}

namespace {

double feasibility_value(double C0, double m, double E0, double gamma, double p) {
    const double mass_factor = std::max(std::pow(m, -0.5), std::pow(m, -1.5));
    const double expo = 0.5 + 1.0 / gamma + 1.0 / p;
    return C0 * mass_factor * (1.0 + std::pow(E0, expo));
}

} // namespace

FeasibilityReport feasibility(const CollisionBudget& budget) {
    FeasibilityReport report;
    report.E0 = energy_budget(budget);
    report.K = feasibility_value(budget.C0, budget.m, report.E0, budget.gamma, budget.p);
    report.collides = report.K < 1.0;
    if (report.collides)
        report.time_bound = report.K / (1.0 - report.K);
    return report;
}

MinMassResult min_mass(const MinMassQuery& query) {
    if (!(query.C0 > 0.0))
        throw std::invalid_argument("min_mass: estimate constant must be positive");
    if (query.fluid_energy < 0.0 || query.j0 < 0.0)
        throw std::invalid_argument("min_mass: energies must be nonnegative");
    if (!(query.gamma > 1.0) || !(query.p > 1.0))
        throw std::invalid_argument("min_mass: exponents must exceed 1");
    if (!(query.m_lo > 0.0) || !(query.m_hi > query.m_lo))
        throw std::invalid_argument("min_mass: bad bracket");

    // the coefficient scaling makes both kinetic terms mass independent
    const double E0 = query.fluid_energy + 0.5 * query.v0_coeff * query.v0_coeff +
                      0.5 * query.j0 * query.omega0_coeff * query.omega0_coeff;
    auto K = [&](double m) { return feasibility_value(query.C0, m, E0, query.gamma, query.p); };

    MinMassResult result;
    result.E0 = E0;

    if (K(query.m_lo) < 1.0) {
        result.mass = query.m_lo;
        result.K_at_mass = K(query.m_lo);
        result.branch = "bracket_lo";
        return result;
    }
    if (K(query.m_hi) >= 1.0)
        throw BracketError("min_mass: feasibility value stays >= 1 up to the bracket top");

    double lo = query.m_lo; // K(lo) >= 1
    double hi = query.m_hi; // K(hi) < 1
    while (hi - lo > query.rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (K(mid) < 1.0 ? hi : lo) = mid;
    }
    result.mass = hi;
    result.K_at_mass = K(hi);
    result.branch = hi < 1.0 ? "light" : "heavy";
    return result;
}

void FallParams::validate() const {
    if (!(m > 0.0) || !(g > 0.0))
        throw std::invalid_argument("FallParams: mass and gravity must be positive");
    if (!(c > 0.0))
        throw std::invalid_argument("FallParams: drag amplitude must be positive");
    if (sigma < 0.0)
        throw std::invalid_argument("FallParams: drag exponent must be nonnegative");
    if (!(h0 > 0.0))
        throw std::invalid_argument("FallParams: initial height must be positive");
}

FallTrajectory fall_demo(const FallParams& params, const FallControl& control) {
    params.validate();
    if (!(control.dt_frac > 0.0) || !(control.dt_frac < 0.5))
        throw std::invalid_argument("fall_demo: dt_frac must lie in (0, 0.5)");

    const double rate = params.m * params.g / params.c; // hdot = -rate * h^sigma
    auto f = [&](double h) { return -rate * std::pow(std::max(h, 0.0), params.sigma); };

    const double floor =
        params.sigma < 1.0 ? control.floor_ratio * params.h0 : control.cutoff;

    FallTrajectory traj;
    double t = 0.0;
    double h = params.h0;
    traj.t.push_back(t);
    traj.h.push_back(h);

    std::size_t step = 0;
    bool stalled = false;
    while (h > floor && step < control.max_steps) {
        const double dt = control.dt_frac * h / (rate * std::pow(h, params.sigma));
        if (t + dt == t) {
            // the remaining approach time fell below time resolution,
            // eps * t / (dt_frac (1-sigma)) relative to the total
            stalled = true;
            break;
        }
        const double k1 = f(h);
        const double k2 = f(h + 0.5 * dt * k1);
        const double k3 = f(h + 0.5 * dt * k2);
        const double k4 = f(h + dt * k3);
        h += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += dt;
        ++step;
        if (step % control.record_stride == 0 || h <= floor)
            { traj.t.push_back(t); traj.h.push_back(std::max(h, 0.0)); }
    }

    // tail below the floor contributes O(floor_ratio^(1-sigma)) of the total
    if (params.sigma < 1.0 && (h <= floor || stalled))
        traj.touchdown = t;
    return traj;
}

} // namespace cuspcollide
