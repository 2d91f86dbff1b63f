#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "picd/parallel.hpp"
#include "picd/sampling.hpp"

using namespace picd;

namespace {

double mean(const std::vector<double>& v)
{
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double frac_in(const std::vector<double>& v, double a, double b)
{
    return static_cast<double>(std::count_if(v.begin(), v.end(), [&](double x) { return a < x && x < b; }))
         / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("streams are deterministic and distinct")
{
    RngStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
    for (int i = 0; i < 100; ++i) {
        auto va = a();
        CHECK(va == b());
        CHECK(va != c());
        CHECK(va != d());
    }
    RngStream u(1, 0);
    for (int i = 0; i < 100000; ++i) {
        double x = u.uniform();
        REQUIRE(x > 0.0);
        REQUIRE(x < 1.0);
    }
}

TEST_CASE("parallel_for result does not depend on thread count")
{
    std::vector<double> one(500), many(500);
    parallel_for(500, [&](std::size_t i) { RngStream r(7, i); one[i] = r.uniform(); }, 1);
    parallel_for(500, [&](std::size_t i) { RngStream r(7, i); many[i] = r.uniform(); }, 8);
    CHECK(one == many);
    CHECK_THROWS(parallel_for(10, [](std::size_t i) { if (i == 5) throw std::runtime_error("x"); }, 4));
}

TEST_CASE("f1")
{
    CHECK(inv_cdf_f1(1.0, 0.8) == doctest::Approx(1.0));
    CHECK(inv_cdf_f1(0.37, 0.0) == doctest::Approx(0.37));
    for (double u : {1e-9, 0.1, 0.5, 0.93}) CHECK(cdf_f1(inv_cdf_f1(u, 0.6), 0.6) == doctest::Approx(u));
    RngStream rng(3, 0);
    auto v = sample_f1(1000000, 0.8, rng);
    // variance of 1.6x + 0.2 density
    double m = 0.5 + 0.8 / 6, ex2 = 0.8 * 2 / 4 + 0.2 / 3, se = std::sqrt((ex2 - m * m) / 1e6);
    CHECK(std::fabs(mean(v) - m) < 3 * se);
}

TEST_CASE("f2")
{
    RngStream rng(4, 0);
    auto v = sample_f2(200000, 0.2, rng);
    CHECK(std::all_of(v.begin(), v.end(), [](double x) { return 0 < x && x < 1; }));
    CHECK(std::fabs(mean(v) - 0.5) < 3 * 0.2 / std::sqrt(2e5));
    auto w = sample_f2(1000, 0.1, rng);
    CHECK(w.size() == 1000);
}

TEST_CASE("f3")
{
    for (double d : {0.0, 3.0, 8.0}) CHECK(inv_cdf_f3(0.5, d) == doctest::Approx(0.5).epsilon(1e-9));
    // density vanishes at 1/2 when delta = 12, so the inverse is cube-root conditioned there
    CHECK(std::fabs(inv_cdf_f3(0.5, 12) - 0.5) < 1e-4);
    CHECK(inv_cdf_f3(0.3, 0.0) == doctest::Approx(0.3));
    RngStream rng(5, 0);
    auto v = sample_f3(200000, 8, rng);
    // integral of 8(x-1/2)^2 + 1/3 over (0.4,0.6)
    double p = 8 * 2 * 0.001 / 3 + 0.2 / 3;
    CHECK(std::fabs(frac_in(v, 0.4, 0.6) - p) < 3 * std::sqrt(p * (1 - p) / 2e5));
}

TEST_CASE("f4 and f5 support")
{
    RngStream rng(6, 0);
    auto v = sample_f4(100000, 0.04, 5, rng);
    double worst = 1;
    for (double x : v)
        for (int j = 0; j <= 5; ++j) worst = std::min(worst, std::fabs(x - j / 5.0));
    CHECK(worst >= 0.04);
    auto w = sample_f4(200000, 0.1, 2, rng);
    CHECK(std::fabs(frac_in(w, 0.1, 0.4) - 0.5) < 3 * std::sqrt(0.25 / 2e5));
    auto z = sample_f4(100000, 1e-12, 4, rng);
    CHECK(std::fabs(mean(z) - 0.5) < 3 * std::sqrt(1.0 / 12 / 1e5));
    auto f5 = sample_f5(100000, 0.02, 5, rng);
    for (double x : f5) {
        double d = 1;
        for (int j = 0; j <= 5; ++j) d = std::min(d, std::fabs(x - j / 5.0));
        REQUIRE(d < 0.02);
    }
    CHECK_THROWS(sample_f4(10, 0.3, 2, rng));
}

TEST_CASE("alternative spec parsing")
{
    auto a = AlternativeSpec::parse("f4:eps=0.2,k=7");
    CHECK(a.dist == Dist::F4);
    CHECK(a.k == 7);
    CHECK(a.half_width(7) == doctest::Approx(0.2 / 7));
    auto b = AlternativeSpec::parse("f5:hw=0.01");
    CHECK(b.absolute);
    CHECK(b.half_width(32) == doctest::Approx(0.01));
    CHECK(AlternativeSpec::parse("uniform").dist == Dist::Uniform);
    CHECK(AlternativeSpec::parse("f1:delta=0.4").param == 0.4);
    CHECK(AlternativeSpec::parse(a.str()).str() == a.str());
    CHECK_THROWS(AlternativeSpec::parse("f4:eps=0.6"));
    CHECK_THROWS(AlternativeSpec::parse("f9"));
    CHECK_THROWS(AlternativeSpec::parse("f4:eps=0.1,hw=0.01"));
    RngStream r1(8, 2), r2(8, 2);
    CHECK(a.draw(30, 7, r1) == a.draw(30, 7, r2));
}
