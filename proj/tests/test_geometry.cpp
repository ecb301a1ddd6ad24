#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cuspcollide/config.hpp"
#include "cuspcollide/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

using namespace cuspcollide;

TEST_CASE("gap evaluates h + r^(1+alpha)") {
    SolidProfile p{1.0, 0.1, 0.5, 0.25};
    CHECK(gap(p, 0.0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(gap(p, 0.2) == doctest::Approx(0.14).epsilon(1e-15));

    SolidProfile q{0.5, 0.01, 0.5, 0.25};
    CHECK(gap(q, 0.04) == doctest::Approx(0.018).epsilon(1e-12));

    CHECK_THROWS_AS(gap(p, -0.1), std::invalid_argument);
}

TEST_CASE("gap is strictly increasing and bounded below by h") {
    SolidProfile p{0.7, 0.05, 0.5, 0.25};
    double last = gap(p, 0.0);
    CHECK(last == p.h);
    for (int i = 1; i <= 50; ++i) {
        const double r = 0.5 * i / 50.0;
        const double g = gap(p, r);
        CHECK(g > last);
        CHECK(g >= p.h);
        last = g;
    }
}

TEST_CASE("log(gap - h) is affine in log r with slope 1 + alpha") {
    for (double alpha : {0.25, 0.5, 1.0}) {
        SolidProfile p{alpha, 0.01, 0.5, 0.25};
        // regression over one decade of r
        std::vector<double> lx, ly;
        for (int i = 0; i <= 20; ++i) {
            const double r = 0.03 * std::pow(10.0, i / 20.0);
            lx.push_back(std::log(r));
            ly.push_back(std::log(gap(p, r) - p.h));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = static_cast<double>(lx.size());
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sx += lx[i];
            sy += ly[i];
            sxx += lx[i] * lx[i];
            sxy += lx[i] * ly[i];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        CHECK(slope == doctest::Approx(1.0 + alpha).epsilon(1e-6));
    }
}

TEST_CASE("cusp region membership") {
    SolidProfile p{1.0, 0.1, 0.5, 0.25};
    CuspRegion region{p};
    CHECK(region.contains(0.2, 0.12));
    CHECK_FALSE(region.contains(0.2, 0.2));  // above psi(0.2) = 0.14
    CHECK_FALSE(region.contains(0.6, 0.05)); // r >= r0
    CHECK_FALSE(region.contains(0.2, -0.01));
    CHECK(region.contains(0.0, 0.0));
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS((SolidProfile{0.0, 0.1, 0.5, 0.25}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SolidProfile{1.1, 0.1, 0.5, 0.25}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SolidProfile{1.0, 0.0, 0.5, 0.25}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SolidProfile{1.0, 0.1, 0.2, 0.25}.validate()), std::invalid_argument);
    CHECK_NOTHROW((SolidProfile{1.0, 0.1, 0.5, 0.25}.validate()));
}

TEST_CASE("cutoff consistency is reported, not enforced") {
    // default-geometry profiles violate h + r0^(1+alpha) <= d0 for any h > 0
    CHECK_FALSE((SolidProfile{1.0, 0.1, 0.5, 0.25}.cutoff_consistent()));
    CHECK((SolidProfile{1.0, 0.01, 0.2, 0.15}.cutoff_consistent()));
    CHECK_NOTHROW((SolidProfile{1.0, 0.1, 0.5, 0.25}.validate()));
}

TEST_CASE("profile parameters from key=value file") {
    const char* path = "geometry_test_config.txt";
    {
        std::ofstream out(path);
        out << "# gap profile\n";
        out << "alpha = 0.5\n";
        out << "h=0.02\n";
        out << "r0 = 0.4   # patch radius\n";
    }
    SolidProfile p = profile_from_file(path);
    CHECK(p.alpha == 0.5);
    CHECK(p.h == 0.02);
    CHECK(p.r0 == 0.4);
    CHECK(p.d0 == 0.25); // default kept
    std::remove(path);

    CHECK_THROWS(profile_from_file("no_such_file.txt"));

    {
        std::ofstream out(path);
        out << "alpha = fast\n";
    }
    CHECK_THROWS(profile_from_file(path));
    std::remove(path);
}
