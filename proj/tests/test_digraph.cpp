#include <doctest.h>

#include "oracles.hpp"
#include "picd/digraph.hpp"
#include "picd/sampling.hpp"

using namespace picd;

TEST_CASE("picd arcs")
{
    auto d = build_picd(TwoClassSample({0.2, 0.8}, {0, 1}), PicdParams(2, 0.5));
    CHECK(d.arc_count() == 0);
    auto e = build_picd(TwoClassSample({0.4, 0.45}, {0, 1}), PicdParams(2, 0.5));
    CHECK(e.arc_count() == 2);
    CHECK(e.has_arc(0, 1));
    CHECK(e.has_arc(1, 0));
    CHECK(arc_density(e) == 1.0);
    CHECK(edge_list(e) == "0 1\n1 0\n");
}

TEST_CASE("r infinite gives complete digraphs per interval")
{
    auto d = build_picd(TwoClassSample({0.1, 0.2, 0.3, 0.6, 0.7}, {0, 0.5, 1}), PicdParams(kInf, 0.5));
    CHECK(d.arc_count() == 3 * 2 + 2 * 1);
    CHECK_FALSE(d.has_arc(0, 3));
    CHECK(d.components.size() == 2);
    auto b = brute_force_domination(d);
    CHECK(b.gamma == 2);
}

TEST_CASE("cicd arcs")
{
    auto d = build_cicd(TwoClassSample({0.3, 0.55}, {0, 1}), CicdParams(1, 0.5));
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 0));
    auto e = build_cicd(TwoClassSample({0.1, 0.9}, {0, 1}), CicdParams(0.1, 0.5));
    CHECK(e.arc_count() == 0);
    auto f = build_cicd(TwoClassSample({0.4}, {0, 1}), CicdParams(1, 0.5));
    CHECK(f.arc_count() == 0);
}

TEST_CASE("density edge cases")
{
    Digraph empty;
    empty.n = 5;
    empty.out.assign(5, {});
    CHECK(arc_density(empty) == 0.0);
    Digraph full;
    full.n = 3;
    full.out = {{1, 2}, {0, 2}, {0, 1}};
    CHECK(arc_density(full) == 1.0);
    auto bf = brute_force_domination(full);
    CHECK(bf.gamma == 1);
    CHECK(bf.witness == std::vector<std::size_t>{0});
}

TEST_CASE("brute force domination")
{
    Digraph empty;
    empty.n = 4;
    empty.out.assign(4, {});
    CHECK(brute_force_domination(empty).gamma == 4);
    Digraph full;
    full.n = 4;
    full.out = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    CHECK(brute_force_domination(full).gamma == 1);
    auto d = build_picd(TwoClassSample({0.1, 0.9}, {0, 1}), PicdParams(1.1, 0.5));
    auto b = brute_force_domination(d);
    CHECK(b.gamma == 2);
    CHECK(dominates(d, b.witness));
    CHECK_FALSE(dominates(d, {0}));
    Digraph big;
    big.n = 17;
    big.out.assign(17, {});
    CHECK_THROWS(brute_force_domination(big));
}

TEST_CASE("brute force matches the naive oracle")
{
    RngStream rng(11, 0);
    const double rs[] = {1.0, 1.4, 2.0, 3.5, kInf};
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + t % 9;
        std::vector<double> x(n), y{0, 0.4 + 0.2 * rng.uniform(), 1};
        for (auto& v : x) v = 1.4 * rng.uniform() - 0.2;
        double r = rs[t % 5];
        double c = 0.2 + 0.6 * rng.uniform();
        auto d = build_picd(TwoClassSample(x, y), PicdParams(r, c));
        CHECK(brute_force_domination(d).gamma == static_cast<std::size_t>(oracle::naive_gamma(x, y, r, c)));
    }
}
