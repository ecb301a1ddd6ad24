#include "cuspcollide/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace cuspcollide {

void SolidProfile::validate() const {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("SolidProfile: alpha must lie in (0, 1]");
    if (!(h > 0.0))
        throw std::invalid_argument("SolidProfile: gap height h must be positive");
    if (!(d0 > 0.0) || !(d0 < r0))
        throw std::invalid_argument("SolidProfile: need 0 < d0 < r0");
}

bool SolidProfile::cutoff_consistent() const {
    return h + std::pow(r0, 1.0 + alpha) <= d0 && d0 < r0;
}

double gap(const SolidProfile& profile, double r) {
    if (r < 0.0)
        throw std::invalid_argument("gap: radius must be nonnegative");
    return profile.h + std::pow(r, 1.0 + profile.alpha);
}

double gap_dr(const SolidProfile& profile, double r) {
    if (r < 0.0)
        throw std::invalid_argument("gap_dr: radius must be nonnegative");
    return (1.0 + profile.alpha) * std::pow(r, profile.alpha);
}

bool CuspRegion::contains(double r, double x3) const {
    if (r < 0.0 || r >= profile.r0)
        return false;
    return x3 >= 0.0 && x3 <= gap(profile, r);
}

} // namespace cuspcollide
