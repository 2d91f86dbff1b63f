#include <doctest.h>

#include <cmath>

#include "picd/proximity.hpp"

using namespace picd;

namespace {
const Interval kUnit{0, 1, IntervalKind::Middle};
}

TEST_CASE("picd region on (0,1)")
{
    PicdParams p(2, 0.5);
    auto a = picd_region(0.3, kUnit, p);
    CHECK(a.lo == 0.0);
    CHECK(a.hi == doctest::Approx(0.6));
    auto b = picd_region(0.8, kUnit, p);
    CHECK(b.lo == doctest::Approx(0.6));
    CHECK(b.hi == 1.0);
    auto c = picd_region(0.3, kUnit, PicdParams(kInf, 0.5));
    CHECK(c.lo == 0.0);
    CHECK(c.hi == 1.0);
    // saturates at the far endpoint
    CHECK(picd_region(0.45, kUnit, PicdParams(5, 0.5)).hi == 1.0);
}

TEST_CASE("center point takes the right branch")
{
    auto g = picd_region(0.5, kUnit, PicdParams(1.5, 0.5));
    CHECK(g.hi == 1.0);
    CHECK(g.lo == doctest::Approx(0.25));
}

TEST_CASE("end interval regions")
{
    PicdParams p(2, 0.5);
    auto l = picd_region(-1, Interval{-kInf, 0, IntervalKind::LeftEnd}, p);
    CHECK(l.lo == -2.0);
    CHECK(l.hi == 0.0);
    auto r = picd_region(3, Interval{2, kInf, IntervalKind::RightEnd}, p);
    CHECK(r.lo == 2.0);
    CHECK(r.hi == 4.0);
}

TEST_CASE("region at a y point is a singleton")
{
    auto g = picd_region(0.0, kUnit, PicdParams(2, 0.5));
    CHECK(g.singleton);
    CHECK(g.contains(0.0));
    CHECK_FALSE(g.contains(0.1));
}

TEST_CASE("cicd region")
{
    CicdParams p(1, 0.5);
    auto a = cicd_region(0.3, kUnit, p);
    CHECK(a.lo == doctest::Approx(0.0));
    CHECK(a.hi == doctest::Approx(0.6));
    auto b = cicd_region(0.8, kUnit, p);
    CHECK(b.lo == doctest::Approx(0.6));
    CHECK(b.hi == doctest::Approx(1.0));
    auto c = cicd_region(0.55, kUnit, p);
    CHECK(c.contains(0.3));
    auto big = cicd_region(0.49, kUnit, CicdParams(1e6, 0.5));
    CHECK(big.lo == 0.0);
    CHECK(big.hi == 1.0);
}

TEST_CASE("transformed region")
{
    auto id = [](double x) { return x; };
    PicdParams p(2, 0.5);
    for (double x : {0.1, 0.3, 0.7, 0.95}) {
        auto t = transformed_region(x, id, id, p);
        auto d = picd_region(x, kUnit, p);
        CHECK(t.lo == doctest::Approx(d.lo));
        CHECK(t.hi == doctest::Approx(d.hi));
    }
    auto sq = [](double x) { return x * x; };
    auto rt = [](double u) { return std::sqrt(u); };
    auto a = transformed_region(0.5, sq, rt, p);
    CHECK(a.lo == doctest::Approx(0.0));
    CHECK(a.hi == doctest::Approx(std::sqrt(0.5)));
    auto b = transformed_region(0.9, sq, rt, PicdParams(2, 0.25));
    CHECK(b.lo == doctest::Approx(std::sqrt(0.62)));
    CHECK(b.hi == doctest::Approx(1.0));
}
