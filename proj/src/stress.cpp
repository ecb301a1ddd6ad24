#include "cuspcollide/stress.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cuspcollide {

double SymMat3::inner(const SymMat3& o) const {
    return xx * o.xx + yy * o.yy + zz * o.zz + 2.0 * (xy * o.xy + xz * o.xz + yz * o.yz);
}

double SymMat3::frobenius() const { return std::sqrt(inner(*this)); }

SymMat3 SymMat3::operator+(const SymMat3& o) const {
    return {xx + o.xx, yy + o.yy, zz + o.zz, xy + o.xy, xz + o.xz, yz + o.yz};
}

SymMat3 SymMat3::operator-(const SymMat3& o) const {
    return {xx - o.xx, yy - o.yy, zz - o.zz, xy - o.xy, xz - o.xz, yz - o.yz};
}

SymMat3 SymMat3::operator*(double s) const {
    return {xx * s, yy * s, zz * s, xy * s, xz * s, yz * s};
}

SymMat3 power_law(const SymMat3& M, double p) {
    if (!(p > 1.0))
        throw std::invalid_argument("power_law: exponent p must exceed 1");
    const double norm = M.frobenius();
    if (norm == 0.0)
        return SymMat3{};
    return M * std::pow(norm, p - 2.0);
}

SymMat3 activated_euler(const SymMat3& M, double delta0) {
    if (!(delta0 > 0.0))
        throw std::invalid_argument("activated_euler: activation threshold must be positive");
    const double norm = M.frobenius();
    if (norm <= delta0)
        return SymMat3{};
    return M * ((norm - delta0) / norm);
}

StressModel make_power_law(double p) {
    if (!(p > 1.0))
        throw std::invalid_argument("make_power_law: exponent p must exceed 1");
    return [p](const SymMat3& M) { return power_law(M, p); };
}

StressModel make_activated_euler(double delta0) {
    if (!(delta0 > 0.0))
        throw std::invalid_argument("make_activated_euler: threshold must be positive");
    return [delta0](const SymMat3& M) { return activated_euler(M, delta0); };
}

double dissipation(const SymMat3& S, const SymMat3& M) { return S.inner(M); }

void GrowthEnvelope::validate() const {
    if (!(p > 1.0))
        throw std::invalid_argument("GrowthEnvelope: p must exceed 1");
    if (!(c0 > 0.0) || !(c0 <= c1))
        throw std::invalid_argument("GrowthEnvelope: need 0 < c0 <= c1");
    if (delta < 0.0)
        throw std::invalid_argument("GrowthEnvelope: delta must be nonnegative");
}

namespace {

// splitmix64; fixed stream for a fixed seed on every platform
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

SymMat3 random_sym(Rng& rng) {
    SymMat3 m;
    m.xx = rng.uniform(-1.0, 1.0);
    m.yy = rng.uniform(-1.0, 1.0);
    m.zz = rng.uniform(-1.0, 1.0);
    m.xy = rng.uniform(-1.0, 1.0);
    m.xz = rng.uniform(-1.0, 1.0);
    m.yz = rng.uniform(-1.0, 1.0);
    return m;
}

} // namespace

MonotoneReport check_monotone(const StressModel& model, int sample_count, std::uint64_t seed) {
    if (sample_count < 1)
        throw std::invalid_argument("check_monotone: sample count must be >= 1");
    Rng rng(seed);
    MonotoneReport report;
    report.samples = sample_count;
    report.min_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < sample_count; ++i) {
        const SymMat3 M = random_sym(rng);
        const SymMat3 N = random_sym(rng);
        const double v = dissipation(model(M) - model(N), M - N);
        if (v < report.min_value) {
            report.min_value = v;
            report.witness_m = M;
            report.witness_n = N;
        }
        if (v < -kMonotoneSlack)
            ++report.violations;
    }
    report.pass = report.violations == 0;
    return report;
}

GrowthReport check_growth(const StressModel& model, const GrowthEnvelope& envelope,
                          int sample_count, std::uint64_t seed) {
    if (sample_count < 1)
        throw std::invalid_argument("check_growth: sample count must be >= 1");
    envelope.validate();
    Rng rng(seed);
    GrowthReport report;
    report.samples = sample_count;
    report.worst_lower_margin = std::numeric_limits<double>::infinity();
    report.worst_upper_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < sample_count; ++i) {
        SymMat3 dir = random_sym(rng);
        const double n = dir.frobenius();
        if (n == 0.0)
            continue;
        const double mag = std::pow(10.0, rng.uniform(-3.0, 3.0));
        const SymMat3 M = dir * (mag / n);
        const double diss = dissipation(model(M), M);
        const double pw = std::pow(M.frobenius(), envelope.p);
        const double lower = diss - (envelope.c0 * pw - envelope.delta);
        const double upper = envelope.c1 * pw - diss;
        const double slack = kMonotoneSlack * std::max(1.0, pw);
        if (lower < report.worst_lower_margin || upper < report.worst_upper_margin)
            report.witness = M;
        report.worst_lower_margin = std::min(report.worst_lower_margin, lower);
        report.worst_upper_margin = std::min(report.worst_upper_margin, upper);
        if (lower < -slack || upper < -slack)
            ++report.violations;
    }
    report.pass = report.violations == 0;
    return report;
}

} // namespace cuspcollide
