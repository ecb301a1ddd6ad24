#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cuspcollide/collision.hpp"

#include <cmath>

using namespace cuspcollide;

namespace {

CollisionBudget zero_motion_budget(double fluid_energy, double C0) {
    CollisionBudget b;
    b.fluid_energy = fluid_energy;
    b.C0 = C0;
    return b;
}

struct SplitMix {
    unsigned long long s;
    double uniform() {
        unsigned long long z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return static_cast<double>((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// closed-form threshold: K(m) = C0 max(m^-1/2, m^-3/2) F with
// F = 1 + E0^(1/2+1/gamma+1/p); root at (C0 F)^2 when C0 F >= 1,
// else (C0 F)^(2/3)
double min_mass_oracle(double C0, double E0, double gamma, double p) {
    const double F = 1.0 + std::pow(E0, 0.5 + 1.0 / gamma + 1.0 / p);
    const double cf = C0 * F;
    return cf >= 1.0 ? cf * cf : std::pow(cf, 2.0 / 3.0);
}

} // namespace

TEST_CASE("energy budget assembly") {
    CollisionBudget b = zero_motion_budget(2.0, 0.5);
    CHECK(energy_budget(b) == 2.0);

    b.fluid_energy = 1.0;
    b.m = 4.0;
    b.V0 = 0.5;
    b.J0 = 2.0;
    b.omega0 = 1.0;
    CHECK(energy_budget(b) == doctest::Approx(2.5).epsilon(1e-15));

    // V0 = c/sqrt(m): the translational term is mass independent
    for (double m : {1.0, 10.0, 1e4}) {
        CollisionBudget s = zero_motion_budget(0.0, 0.5);
        s.m = m;
        s.V0 = 3.0 / std::sqrt(m);
        CHECK(energy_budget(s) == doctest::Approx(4.5).epsilon(1e-14));
    }

    b.fluid_energy = -1.0;
    CHECK_THROWS_AS(energy_budget(b), std::invalid_argument);
    b.fluid_energy = 1.0;
    b.m = 0.0;
    CHECK_THROWS_AS(energy_budget(b), std::invalid_argument);
}

TEST_CASE("energy budget is linear in each component") {
    CollisionBudget b;
    b.fluid_energy = 1.25;
    b.m = 2.0;
    b.V0 = 0.7;
    b.J0 = 3.0;
    b.omega0 = 0.4;
    const double base = energy_budget(b);
    CollisionBudget b2 = b;
    b2.fluid_energy += 1.0;
    CHECK(energy_budget(b2) - base == doctest::Approx(1.0).epsilon(1e-13));
    b2 = b;
    b2.J0 *= 2.0;
    CHECK(energy_budget(b2) - base ==
          doctest::Approx(0.5 * b.J0 * b.omega0 * b.omega0).epsilon(1e-13));
}

TEST_CASE("feasibility value and time bound") {
    // K = 1/2 gives the time bound exactly 1
    const FeasibilityReport half = feasibility(zero_motion_budget(0.0, 0.5));
    CHECK(half.K == 0.5);
    CHECK(half.collides);
    CHECK(half.time_bound.has_value());
    CHECK(*half.time_bound == 1.0);

    // worked example: C0=0.1, m=1, E0=2.5, gamma=3, p=2.
    // goldens recomputed at 50 digits: K = 0.43930220207436332,
    // T = 0.78349193397871412
    CollisionBudget b = zero_motion_budget(2.5, 0.1);
    b.gamma = 3.0;
    b.p = 2.0;
    const FeasibilityReport rep = feasibility(b);
    CHECK(rep.E0 == 2.5);
    CHECK(rep.K == doctest::Approx(0.43930220207436332).epsilon(1e-12));
    CHECK(rep.collides);
    CHECK(*rep.time_bound == doctest::Approx(0.78349193397871412).epsilon(1e-12));

    // K >= 1 means no conclusion and no time bound
    const FeasibilityReport stuck = feasibility(zero_motion_budget(0.0, 1.5));
    CHECK_FALSE(stuck.collides);
    CHECK_FALSE(stuck.time_bound.has_value());
}

TEST_CASE("K decreases with mass; heavy bodies collide") {
    CollisionBudget b = zero_motion_budget(2.0, 2.0);
    b.V0 = 0.0;
    double prev = 1e300;
    for (double m : {0.5, 1.0, 4.0, 100.0, 1e6}) {
        b.m = m;
        const FeasibilityReport rep = feasibility(b);
        CHECK(rep.K < prev);
        prev = rep.K;
    }
    b.m = 1e12;
    CHECK(feasibility(b).collides);
}

TEST_CASE("time bound grows with K and diverges toward K = 1") {
    double prev = 0.0;
    for (double K : {0.1, 0.3, 0.6, 0.9, 0.999}) {
        const FeasibilityReport rep = feasibility(zero_motion_budget(0.0, K));
        CHECK(rep.time_bound.has_value());
        CHECK(*rep.time_bound > prev);
        prev = *rep.time_bound;
    }
    CHECK(prev > 998.0); // K = 0.999 -> T <= 999
}

TEST_CASE("minimal mass: closed-form inversions") {
    // C0 = 0.5 and F = 4 (choose E0 with exponent sum 1: E0^1 = 3): m* = 4
    MinMassQuery q;
    q.C0 = 0.5;
    q.fluid_energy = 3.0;
    q.gamma = 4.0;
    q.p = 4.0; // 1/2 + 1/4 + 1/4 = 1
    const MinMassResult res = min_mass(q);
    CHECK(res.mass == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(res.branch == "heavy");
    CHECK(res.K_at_mass <= 1.0);

    // light branch: C0 = 0.1, F = 2 -> m* = 0.2^(2/3)
    MinMassQuery small;
    small.C0 = 0.1;
    small.fluid_energy = 1.0;
    small.gamma = 4.0;
    small.p = 4.0;
    const MinMassResult light = min_mass(small);
    CHECK(light.mass == doctest::Approx(std::pow(0.2, 2.0 / 3.0)).epsilon(1e-9));
    CHECK(light.branch == "light");
}

TEST_CASE("minimal mass matches the oracle on randomized budgets") {
    SplitMix rng{777};
    for (int i = 0; i < 20; ++i) {
        MinMassQuery q;
        q.C0 = rng.uniform(0.05, 5.0);
        q.fluid_energy = rng.uniform(0.0, 10.0);
        q.gamma = rng.uniform(1.6, 6.0);
        q.p = rng.uniform(1.1, 3.0);
        const double expected = min_mass_oracle(q.C0, q.fluid_energy, q.gamma, q.p);
        if (expected <= q.m_lo)
            continue;
        const MinMassResult res = min_mass(q);
        CHECK(std::abs(res.mass - expected) / expected <= 1e-8);
        CHECK(res.K_at_mass < 1.0);
    }
}

TEST_CASE("minimal mass brackets the K = 1 crossing") {
    MinMassQuery q;
    q.C0 = 0.8;
    q.fluid_energy = 2.0;
    const MinMassResult res = min_mass(q);
    auto K_at = [&](double m) {
        CollisionBudget b;
        b.C0 = q.C0;
        b.fluid_energy = q.fluid_energy;
        b.gamma = q.gamma;
        b.p = q.p;
        b.m = m;
        return feasibility(b).K;
    };
    CHECK(K_at(res.mass * (1.0 + 1e-6)) < 1.0);
    CHECK(K_at(res.mass * (1.0 - 1e-6)) >= 1.0);
}

TEST_CASE("minimal mass failure and degenerate bracket cases") {
    MinMassQuery q;
    q.C0 = 1e6;
    q.fluid_energy = 10.0;
    q.m_hi = 1e4; // K(m_hi) still > 1
    CHECK_THROWS_AS(min_mass(q), BracketError);

    MinMassQuery tiny;
    tiny.C0 = 1e-6;
    tiny.fluid_energy = 0.0;
    const MinMassResult res = min_mass(tiny); // K < 1 over the whole bracket
    CHECK(res.branch == "bracket_lo");
    CHECK(res.mass == tiny.m_lo);

    MinMassQuery bad;
    bad.C0 = -1.0;
    CHECK_THROWS_AS(min_mass(bad), std::invalid_argument);
}

TEST_CASE("scaled initial speeds keep E0 mass independent in min_mass") {
    MinMassQuery q;
    q.C0 = 0.5;
    q.v0_coeff = 2.0;
    q.omega0_coeff = 1.0;
    q.j0 = 3.0;
    q.fluid_energy = 1.0;
    const MinMassResult res = min_mass(q);
    CHECK(res.E0 == doctest::Approx(1.0 + 0.5 * 4.0 + 0.5 * 3.0).epsilon(1e-14));
}

TEST_CASE("settling times match the closed form") {
    for (double sigma : {0.0, 0.25, 0.5, 0.9}) {
        FallParams params;
        params.sigma = sigma;
        const FallTrajectory traj = fall_demo(params);
        REQUIRE(traj.touchdown.has_value());
        const double exact = std::pow(params.h0, 1.0 - sigma) /
                             (params.m * params.g / params.c) / (1.0 - sigma);
        CHECK(*traj.touchdown == doctest::Approx(exact).epsilon(1e-3));
    }
    // spot values: sigma=0 -> 1, sigma=0.5 -> 2
    FallParams p0;
    p0.sigma = 0.0;
    CHECK(*fall_demo(p0).touchdown == doctest::Approx(1.0).epsilon(1e-3));
    p0.sigma = 0.5;
    CHECK(*fall_demo(p0).touchdown == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("critical drag exponent: no touchdown at sigma = 1") {
    FallParams params;
    params.sigma = 1.0;
    const FallTrajectory traj = fall_demo(params);
    CHECK_FALSE(traj.touchdown.has_value());
    CHECK(traj.h.back() > 0.0);
    CHECK(traj.h.back() <= 1.1e-12); // integrated down to the cutoff
    for (std::size_t i = 1; i < traj.h.size(); ++i)
        CHECK(traj.h[i] < traj.h[i - 1]);
}

TEST_CASE("trajectory is monotone with positive times") {
    FallParams params;
    params.sigma = 0.25;
    params.h0 = 2.0;
    FallControl control;
    control.record_stride = 16;
    const FallTrajectory traj = fall_demo(params, control);
    CHECK(traj.t.front() == 0.0);
    CHECK(traj.h.front() == 2.0);
    for (std::size_t i = 1; i < traj.t.size(); ++i) {
        CHECK(traj.t[i] > traj.t[i - 1]);
        CHECK(traj.h[i] < traj.h[i - 1]);
    }

    FallParams bad;
    bad.c = 0.0;
    CHECK_THROWS_AS(fall_demo(bad), std::invalid_argument);
    bad = FallParams{};
    bad.sigma = -0.5;
    CHECK_THROWS_AS(fall_demo(bad), std::invalid_argument);
}
