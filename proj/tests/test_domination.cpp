#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "picd/digraph.hpp"
#include "picd/domination.hpp"
#include "picd/sampling.hpp"

using namespace picd;

namespace {
const Interval kUnit{0, 1, IntervalKind::Middle};
}

TEST_CASE("gamma one region")
{
    std::vector<double> xs{0.2, 0.45};
    auto g = gamma_one_region(xs, kUnit, PicdParams(2, 0.5));
    CHECK(g.a == doctest::Approx(0.225));
    CHECK(g.m == 0.5);
    CHECK(g.b == doctest::Approx(0.6));
    CHECK(g.contains(0.45));
    CHECK(g.contains(0.5));
    CHECK_FALSE(g.contains(0.2));

    std::vector<double> far{0.1, 0.9};
    auto e = gamma_one_region(far, kUnit, PicdParams(1.1, 0.5));
    CHECK(e.left_empty());
    CHECK(e.right_empty());

    std::vector<double> one{0.3};
    auto f = gamma_one_region(one, kUnit, PicdParams(kInf, 0.5));
    CHECK(f.a == 0.0);
    CHECK(f.b == 1.0);
}

TEST_CASE("interval gamma")
{
    std::vector<double> xs{0.2, 0.45};
    auto g = interval_gamma(xs, kUnit, PicdParams(2, 0.5));
    CHECK(g.gamma == 1);
    CHECK(g.witness == std::vector<std::size_t>{1});

    std::vector<double> far{0.1, 0.9};
    auto h = interval_gamma(far, kUnit, PicdParams(1.1, 0.5));
    CHECK(h.gamma == 2);
    CHECK(h.witness == std::vector<std::size_t>{0, 1});

    std::vector<double> halves{0.2, 0.8};
    CHECK(interval_gamma(halves, kUnit, PicdParams(1, 0.5)).gamma == 2);
    std::vector<double> left{0.2, 0.3};
    CHECK(interval_gamma(left, kUnit, PicdParams(1, 0.5)).gamma == 1);
}

TEST_CASE("domination number examples")
{
    auto a = domination_number(TwoClassSample({0.2, 0.45}, {0, 1}), PicdParams(2, 0.5));
    CHECK(a.gamma == 1);
    CHECK(a.witness == std::vector<std::size_t>{1});
    CHECK(a.statistic() == 0);
    for (double r : {1.0, 2.0, 7.0, kInf}) {
        auto b = domination_number(TwoClassSample({-1, 0.5, 2}, {0, 1}), PicdParams(r, 0.5));
        CHECK(b.gamma == 3);
        CHECK(b.per_interval == std::vector<int>{1, 1, 1});
    }
    CHECK(domination_number(TwoClassSample({0.7}, {0, 1}), PicdParams(3, 0.2)).gamma == 1);
    CHECK(domination_number(TwoClassSample({}, {0, 1}), PicdParams(3, 0.2)).gamma == 0);
}

TEST_CASE("end interval witness is the farthest point")
{
    auto d = domination_number(TwoClassSample({-3, -1, 4, 2}, {0, 1}), PicdParams(2, 0.5));
    CHECK(d.gamma == 2);
    CHECK(d.witness == std::vector<std::size_t>{0, 3});
}

TEST_CASE("fast path agrees with brute force and with the naive oracle")
{
    RngStream rng(5, 1);
    const double rs[] = {1.0, 1.3, 2.0, 5.0, kInf};
    const double cs[] = {0.0, 0.3, 0.5, 0.7, 1.0};
    int mismatches = 0;
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 1 + t % 12, m = 1 + t % 4;
        std::vector<double> x(n), y(m);
        for (auto& v : x) v = 1.6 * rng.uniform() - 0.3;
        for (auto& v : y) v = rng.uniform();
        double r = rs[t % 5], c = cs[(t / 5) % 5];
        TwoClassSample s(x, y);
        auto fast = domination_number(s, PicdParams(r, c));
        auto d = build_picd(s, PicdParams(r, c));
        if (fast.gamma != brute_force_domination(d).gamma) ++mismatches;
        if (!dominates(d, fast.witness)) ++mismatches;
        if (fast.witness.size() != fast.gamma) ++mismatches;
        if (static_cast<int>(fast.gamma) != oracle::naive_gamma(x, y, r, c)) ++mismatches;
        if (!oracle::naive_dominates(x, y, r, c, fast.witness)) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("unit grid fast path")
{
    RngStream rng(9, 0);
    for (int t = 0; t < 100; ++t) {
        std::size_t k = 1 + t % 6;
        std::vector<double> u(20);
        for (auto& v : u) v = rng.uniform();
        std::sort(u.begin(), u.end());
        PicdParams p(1 + 0.05 * t, 0.1 + 0.008 * t);
        auto full = domination_number(TwoClassSample(u, unit_grid(k)), p);
        CHECK(gamma_unit_grid(u, k, p) == full.gamma);
    }
}
