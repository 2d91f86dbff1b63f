#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "picd/core.hpp"

using namespace picd;

TEST_CASE("intervalize assigns points to open intervals")
{
    {
        TwoClassSample s({0.2, 0.8}, {0, 1});
        auto iz = intervalize(s);
        REQUIRE(iz.size() == 3);
        CHECK(iz.counts == std::vector<std::size_t>{0, 2, 0});
        CHECK(iz.intervals[1].lo == 0.0);
        CHECK(iz.intervals[1].hi == 1.0);
        CHECK(iz.intervals[0].kind == IntervalKind::LeftEnd);
        CHECK(iz.bounded_count() == 1);
    }
    {
        TwoClassSample s({2, -1, 0.5}, {1, 0});
        CHECK(intervalize(s).counts == std::vector<std::size_t>{1, 1, 1});
    }
    {
        TwoClassSample s({0.1, 0.4, 0.9}, {0, 0.5, 1});
        auto iz = intervalize(s);
        CHECK(iz.counts == std::vector<std::size_t>{0, 2, 1, 0});
        CHECK(iz.members[1] == std::vector<std::size_t>{0, 1});
    }
}

TEST_CASE("members partition the x indices")
{
    TwoClassSample s({-3, 0.1, 0.2, 0.7, 1.4, 2.5, 9}, {0, 0.5, 1, 2});
    auto iz = intervalize(s);
    std::vector<int> seen(s.n(), 0);
    for (const auto& mem : iz.members)
        for (auto j : mem) seen[j]++;
    for (int v : seen) CHECK(v == 1);
}

TEST_CASE("affine maps keep counts")
{
    std::vector<double> x{0.05, 0.3, 0.31, 0.62, 0.99, 1.7};
    std::vector<double> y{0, 0.25, 0.6, 1};
    auto base = intervalize(TwoClassSample(x, y)).counts;
    for (auto& v : x) v = 4 * v - 7;
    for (auto& v : y) v = 4 * v - 7;
    CHECK(intervalize(TwoClassSample(x, y)).counts == base);
}

TEST_CASE("sample validation")
{
    CHECK_THROWS_AS(TwoClassSample({0.5}, {}), std::invalid_argument);
    CHECK_THROWS_AS(TwoClassSample({0.5}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_WITH(TwoClassSample({0.0}, {0, 1}), doctest::Contains("coincides"));
    CHECK_THROWS_AS(TwoClassSample({std::nan("")}, {0, 1}), std::invalid_argument);
    CHECK_NOTHROW(TwoClassSample({}, {0, 1}));
}

TEST_CASE("parameter guards")
{
    CHECK_THROWS_WITH(PicdParams(0.5, 0.5), "r must be >= 1");
    CHECK_THROWS(PicdParams(2, 1.2));
    CHECK(PicdParams(kInf, 0.3).r_infinite());
    CHECK_THROWS(CicdParams(0, 0.5));
    CHECK_THROWS(CicdParams(1, 0));
}

TEST_CASE("r_star and grid")
{
    CHECK(r_star(0.5) == 2.0);
    CHECK(r_star(0.3) == doctest::Approx(1 / 0.7));
    CHECK(r_star(0.7) == doctest::Approx(1 / 0.7));
    auto g = unit_grid(4);
    CHECK(g == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
    CHECK_THROWS(unit_grid(0));
}

TEST_CASE("float parsing")
{
    CHECK(parse_floats("0.1, 0.2\n0.3;4e-1 ") == std::vector<double>{0.1, 0.2, 0.3, 0.4});
    CHECK(parse_floats("").empty());
    CHECK_THROWS(parse_floats("0.1 abc"));
    CHECK_THROWS(read_floats_file("/nonexistent/file"));
}
