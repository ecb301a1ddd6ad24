#pragma once

#include <cstdint>
#include <functional>

namespace cuspcollide {

// Symmetric 3x3 matrix, Frobenius convention |M|^2 = M : M (off-diagonal
// entries count twice).
struct SymMat3 {
    double xx = 0.0, yy = 0.0, zz = 0.0;
    double xy = 0.0, xz = 0.0, yz = 0.0;

    double inner(const SymMat3& o) const; // Frobenius double contraction
    double frobenius() const;

    SymMat3 operator+(const SymMat3& o) const;
    SymMat3 operator-(const SymMat3& o) const;
    SymMat3 operator*(double s) const;
};

using StressModel = std::function<SymMat3(const SymMat3&)>;

// S(M) = |M|^(p-2) M, S(0) = 0
SymMat3 power_law(const SymMat3& M, double p);
// S(M) = max(|M| - delta0, 0) |M|^(-1) M
SymMat3 activated_euler(const SymMat3& M, double delta0);

StressModel make_power_law(double p);
StressModel make_activated_euler(double delta0);

double dissipation(const SymMat3& S, const SymMat3& M); // S : M

// c0 |M|^p - delta <= S(M):M <= c1 |M|^p
struct GrowthEnvelope {
    double p = 2.0;
    double c0 = 1.0;
    double c1 = 1.0;
    double delta = 0.0;

    void validate() const;
};

// Both property checks draw reproducible samples from a documented
// 64-bit generator; a fixed seed gives a fixed sample stream regardless
// of platform. Violation slack 1e-12 absorbs rounding in the linear case.
inline constexpr double kMonotoneSlack = 1e-12;
inline constexpr std::uint64_t kDefaultStressSeed = 20240801;

struct MonotoneReport {
    int samples = 0;
    int violations = 0;
    double min_value = 0.0; // min over samples of [S(M)-S(N)] : (M-N)
    SymMat3 witness_m, witness_n; // pair achieving the minimum
    bool pass = false;
};

// Pairs of symmetric matrices with entries uniform in [-1, 1].
MonotoneReport check_monotone(const StressModel& model, int sample_count,
                              std::uint64_t seed = kDefaultStressSeed);

struct GrowthReport {
    int samples = 0;
    int violations = 0;
    double worst_lower_margin = 0.0; // min of S:M - (c0 |M|^p - delta)
    double worst_upper_margin = 0.0; // min of c1 |M|^p - S:M
    SymMat3 witness;
    bool pass = false;
};

// Unit-norm random directions scaled log-uniformly over |M| in [1e-3, 1e3].
GrowthReport check_growth(const StressModel& model, const GrowthEnvelope& envelope,
                          int sample_count, std::uint64_t seed = kDefaultStressSeed);

} // namespace cuspcollide
